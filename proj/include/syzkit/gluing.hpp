#ifndef SYZKIT_GLUING_HPP
#define SYZKIT_GLUING_HPP

#include <optional>
#include <string>
#include <vector>

#include "syzkit/admissible.hpp"
#include "syzkit/multipoly.hpp"

namespace syzkit {

// Gluing function g(z) of the SYZ mirror { uv = g(z) }: a degree-m
// polynomial in z whose z^i coefficient is an exact polynomial in the
// Kahler parameters q_1..q_{m-1}.  Always g(0) = 1 and the leading
// coefficient is prod_j q_j^{m-j}.
struct GluingPolynomial {
  int m = 0;
  std::vector<MultiPoly> coeff;  // index = power of z, size m+1

  bool operator==(const GluingPolynomial& o) const = default;
};

// Route one: quantum corrections from the open Gromov-Witten invariants,
// coeff[i] = (prod_{j<i} q_j^{i-j}) (1 + delta_i).
GluingPolynomial g_from_invariants(int m);

// Same construction with mutated admissibility conditions (verification
// harness only).
GluingPolynomial g_from_invariants_with(const ConditionSet& conds, int m);

// Route two: the factored form
// (1+z)(1+q_1 z)(1+q_1 q_2 z)...(1+q_1...q_{m-1} z), expanded exactly.
GluingPolynomial g_from_product(int m);

struct CoefficientMismatch {
  int i = 0;            // z-power of the first differing coefficient
  Exponents exps;       // first differing exponent vector
  std::string lhs;      // invariant-route coefficient (decimal)
  std::string rhs;      // product-route coefficient (decimal)
};

struct VerifyReport {
  bool ok = false;
  std::optional<CoefficientMismatch> mismatch;
};

// Coefficient-by-coefficient equality of the two routes, as exact integers.
VerifyReport verify_identity(int m);

// The mutated comparison: invariant route under `conds` against the
// unmutated product route.
VerifyReport verify_identity_with(const ConditionSet& conds, int m);

}  // namespace syzkit

#endif
