#ifndef SYZKIT_ADMISSIBLE_HPP
#define SYZKIT_ADMISSIBLE_HPP

#include <string>
#include <variant>
#include <vector>

#include "syzkit/multipoly.hpp"

namespace syzkit {

// Integer tuple (s_1..s_{m-1}) encoding the curve class
// alpha = sum_k s_k [D_k], together with its center l.
struct AdmissibleSequence {
  std::vector<int> s;
  int center = 0;
  int m = 0;

  bool operator==(const AdmissibleSequence& o) const = default;
};

// Disk class beta_l + alpha; invariant queries require 1 <= l <= m-1.
struct DiskClass {
  int l = 0;
  std::vector<int> alpha;
};

// The four admissibility conditions.  Individual conditions can be switched
// off by the verification harness (mutation testing); library callers always
// go through the full set.
struct ConditionSet {
  bool nonnegative = true;      // (1) s_k >= 0
  bool ascent_below = true;     // (2) s_i <= s_{i+1} <= s_i + 1 for i < l
  bool descent_above = true;    // (3) s_i >= s_{i+1} >= s_i - 1 for i >= l
  bool ends_at_most_one = true; // (4) s_1, s_{m-1} <= 1

  static ConditionSet all() { return {}; }
  static ConditionSet drop(int condition);  // condition in 1..4
};

// Admissibility with center l.  For l <= m-1 this is the literal conjunction
// of conditions (1)-(4); for l = m the admissible set degenerates to the
// zero tuple (the z^m coefficient carries a single class), which is also
// what the greedy decomposition with m strips produces.
bool is_admissible(const std::vector<int>& s, int l, int m);

// Variant with a condition mask; behaves like is_admissible when all four
// conditions are on.  Only meaningful for l <= m-1.
bool is_admissible_with(const ConditionSet& conds, const std::vector<int>& s, int l, int m);

// Open Gromov-Witten invariant n_{beta_l + alpha} of a Lagrangian toric
// fiber: 1 when alpha is admissible with center l, else 0.
int open_gw(int m, int l, const std::vector<int>& alpha);
int open_gw(int m, const DiskClass& beta);

// All admissible sequences with center l, in lexicographic order.  The
// search box 0 <= s_k <= min(k, m-k) is implied by the conditions:
// s_k <= s_1 + (k-1) <= k from the ascent side and
// s_k <= s_{m-1} + (m-1-k) <= m-k from the descent side.
std::vector<AdmissibleSequence> enumerate_admissible(int m, int l);

// Same search with a condition mask.  Dropped conditions enlarge the box:
// ceiling +1 beyond the derived bound, floor -1 when (1) is off (a finite
// window of the then-infinite admissible set; any extra term already
// falsifies the gluing identity).
std::vector<AdmissibleSequence> enumerate_admissible_with(const ConditionSet& conds, int m, int l);

// Decomposition of alpha into intervals D_j + ... + D_{k_j}, j = 1..l, with
// k_1 < ... < k_l and k_j = j-1 encoding an empty interval.
struct IntervalDecomposition {
  std::vector<int> k;

  // Sequence reproduced by summing the intervals.
  std::vector<int> reconstruct(int m) const;
};

struct DecomposeFailure {
  int step = 0;                // 1-based strip count at failure
  std::vector<int> residual;   // residual at the start of the failing step
  std::string reason;
};

// Greedy interval stripping with exactly l strips: for j = l down to 1 the
// interval [j, k_j] is removed, k_j being the greatest index with a nonzero
// residual entry (j-1 when the residual vanishes).  Succeeds iff every strip
// keeps the residual nonnegative, the k_j come out strictly increasing and
// the residual ends at zero.  Success is equivalent to admissibility with
// center l; the two are checked against each other exhaustively.
std::variant<IntervalDecomposition, DecomposeFailure> decompose_intervals(
    const std::vector<int>& s, int l, int m);

// Correction series delta_i = sum over nonzero admissible alpha with center
// i of q^alpha, as an exact polynomial in q_1..q_{m-1}; delta_m = 0.
MultiPoly delta_series(int m, int i);

MultiPoly delta_series_with(const ConditionSet& conds, int m, int i);

}  // namespace syzkit

#endif
