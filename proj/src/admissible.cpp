#include "syzkit/admissible.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace syzkit {

namespace {

void check_args(const std::vector<int>& s, int l, int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (s.size() != static_cast<std::size_t>(m) - 1)
    throw std::invalid_argument("sequence length must be m-1");
  if (l < 1 || l > m) throw std::invalid_argument("center must satisfy 1 <= l <= m");
}

bool all_zero(const std::vector<int>& s) {
  return std::all_of(s.begin(), s.end(), [](int v) { return v == 0; });
}

}  // namespace

ConditionSet ConditionSet::drop(int condition) {
  ConditionSet c;
  switch (condition) {
    case 1: c.nonnegative = false; break;
    case 2: c.ascent_below = false; break;
    case 3: c.descent_above = false; break;
    case 4: c.ends_at_most_one = false; break;
    default: throw std::invalid_argument("condition must be in 1..4");
  }
  return c;
}

bool is_admissible_with(const ConditionSet& conds, const std::vector<int>& s, int l, int m) {
  check_args(s, l, m);
  const int n = m - 1;  // entries s_1..s_n
  if (conds.nonnegative) {
    for (int v : s)
      if (v < 0) return false;
  }
  // Pairs (s_i, s_{i+1}) for i = 1..m-2.
  for (int i = 1; i <= n - 1; ++i) {
    int a = s[i - 1], b = s[i];
    if (i < l) {
      if (conds.ascent_below && !(a <= b && b <= a + 1)) return false;
    } else {
      if (conds.descent_above && !(a >= b && b >= a - 1)) return false;
    }
  }
  if (conds.ends_at_most_one && n >= 1) {
    if (s[0] > 1 || s[n - 1] > 1) return false;
  }
  return true;
}

bool is_admissible(const std::vector<int>& s, int l, int m) {
  check_args(s, l, m);
  // Center m: the interval bijection forces all m strips empty, so only the
  // zero class qualifies (and delta_m = 0 follows).
  if (l == m) return all_zero(s);
  return is_admissible_with(ConditionSet::all(), s, l, m);
}

int open_gw(int m, int l, const std::vector<int>& alpha) {
  if (l < 1 || l > m - 1)
    throw std::invalid_argument("open_gw: center must satisfy 1 <= l <= m-1");
  return is_admissible(alpha, l, m) ? 1 : 0;
}

int open_gw(int m, const DiskClass& beta) { return open_gw(m, beta.l, beta.alpha); }

namespace {

std::vector<AdmissibleSequence> enumerate_box(const ConditionSet& conds, int m, int l,
                                              bool center_m_convention) {
  const int n = m - 1;
  std::vector<int> lo(n), hi(n);
  const bool full = conds.nonnegative && conds.ascent_below && conds.descent_above &&
                    conds.ends_at_most_one;
  for (int k = 1; k <= n; ++k) {
    int bound = std::min(k, m - k);
    lo[k - 1] = conds.nonnegative ? 0 : -1;
    hi[k - 1] = full ? bound : bound + 1;
  }
  std::vector<AdmissibleSequence> out;
  std::vector<int> s(lo);
  while (true) {
    bool ok = center_m_convention ? all_zero(s) : is_admissible_with(conds, s, l, m);
    if (ok) out.push_back({s, l, m});
    int k = 0;
    while (k < n) {
      if (s[k] < hi[k]) {
        ++s[k];
        for (int r = 0; r < k; ++r) s[r] = lo[r];
        break;
      }
      ++k;
    }
    if (k == n) break;  // m = 1 (empty sequence) exits here after one pass
  }
  // Lexicographic order (the odometer above increments the first coordinate
  // fastest, so re-sort canonically).
  std::sort(out.begin(), out.end(),
            [](const AdmissibleSequence& a, const AdmissibleSequence& b) { return a.s < b.s; });
  return out;
}

}  // namespace

std::vector<AdmissibleSequence> enumerate_admissible(int m, int l) {
  check_args(std::vector<int>(m - 1, 0), l, m);
  return enumerate_box(ConditionSet::all(), m, l, /*center_m_convention=*/l == m);
}

std::vector<AdmissibleSequence> enumerate_admissible_with(const ConditionSet& conds, int m, int l) {
  check_args(std::vector<int>(m - 1, 0), l, m);
  return enumerate_box(conds, m, l, /*center_m_convention=*/l == m);
}

std::vector<int> IntervalDecomposition::reconstruct(int m) const {
  std::vector<int> s(m - 1, 0);
  for (std::size_t j = 1; j <= k.size(); ++j) {
    for (int idx = static_cast<int>(j); idx <= k[j - 1]; ++idx) {
      if (idx < 1 || idx > m - 1) throw std::invalid_argument("interval end out of range");
      s[idx - 1] += 1;
    }
  }
  return s;
}

std::variant<IntervalDecomposition, DecomposeFailure> decompose_intervals(
    const std::vector<int>& s, int l, int m) {
  check_args(s, l, m);
  for (int v : s)
    if (v < 0) throw std::invalid_argument("decompose_intervals: entries must be >= 0");

  std::vector<int> r = s;
  std::vector<int> k(l, 0);
  int prev_k = m;  // k_j must decrease strictly as j goes l -> 1
  for (int j = l; j >= 1; --j) {
    const int step = l - j + 1;
    int gmax = 0;  // greatest index with nonzero residual, 0 if none
    for (int idx = m - 1; idx >= 1; --idx) {
      if (r[idx - 1] != 0) {
        gmax = idx;
        break;
      }
    }
    int kj;
    if (gmax == 0) {
      kj = j - 1;  // empty interval
    } else if (gmax < j) {
      return DecomposeFailure{step, r,
                              "residual supported below the strip start D_" + std::to_string(j)};
    } else {
      kj = gmax;
    }
    if (kj >= prev_k)
      return DecomposeFailure{step, r, "interval ends not strictly increasing"};
    if (gmax != 0) {
      for (int idx = j; idx <= kj; ++idx)
        if (r[idx - 1] == 0)
          return DecomposeFailure{step, r,
                                  "interval [" + std::to_string(j) + "," + std::to_string(kj) +
                                      "] hits a zero entry"};
      for (int idx = j; idx <= kj; ++idx) r[idx - 1] -= 1;
    }
    prev_k = kj;
    k[j - 1] = kj;
  }
  if (!all_zero(r))
    return DecomposeFailure{l, r, "residual nonzero after " + std::to_string(l) + " strips"};
  return IntervalDecomposition{std::move(k)};
}

MultiPoly delta_series_with(const ConditionSet& conds, int m, int i) {
  if (i < 1 || i > m) throw std::invalid_argument("delta_series: need 1 <= i <= m");
  const int nvars = m - 1;
  MultiPoly d(nvars);
  if (i == m) return d;  // delta_m = 0
  for (const auto& seq : enumerate_admissible_with(conds, m, i)) {
    if (all_zero(seq.s)) continue;
    d += MultiPoly::monomial(Exponents(seq.s.begin(), seq.s.end()));
  }
  return d;
}

MultiPoly delta_series(int m, int i) { return delta_series_with(ConditionSet::all(), m, i); }

}  // namespace syzkit
