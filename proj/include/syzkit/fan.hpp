#ifndef SYZKIT_FAN_HPP
#define SYZKIT_FAN_HPP

#include <optional>
#include <variant>
#include <vector>

#include "syzkit/lattice.hpp"

namespace syzkit {

// A 2D fan given by its ordered primitive ray generators.  Rays are kept in
// clockwise angular order (the labeling v_0, v_1, ... used throughout); for
// the CY fans Sigma_m this is exactly (0,1), (1,1), ..., (m,1).  Complete
// fans are cyclic, with index arithmetic wrapping around.
class Fan2D {
 public:
  // Validates: nonempty, all rays primitive and pairwise distinct, order
  // consistent (clockwise; cyclic cover when complete).  Throws
  // std::invalid_argument on violation.
  static Fan2D make(std::vector<LatticeVec> rays, bool complete);

  const std::vector<LatticeVec>& rays() const { return rays_; }
  const LatticeVec& ray(std::size_t i) const { return rays_[i]; }
  std::size_t size() const { return rays_.size(); }
  bool complete() const { return complete_; }

  // det [v_{i+1} v_i] of the cone spanned by rays i, i+1 (cyclic when
  // complete); equals +1 exactly when the cone is smooth.
  mpz_class adjacent_determinant(std::size_t i) const;

  bool is_smooth() const;

 private:
  Fan2D() = default;
  std::vector<LatticeVec> rays_;
  bool complete_ = false;
};

// Sorts arbitrary primitive rays: cyclically (clockwise from north) when
// `complete`, else linearly within the open half-plane spanned by the cone.
// Throws std::invalid_argument if a half-plane order does not exist.
std::vector<LatticeVec> sort_rays(std::vector<LatticeVec> rays, bool complete);

// The fan Sigma_m with rays (i,1) for i = 0..m.  X_{Sigma_m} is the toric
// resolution of the A_{m-1} singularity C^2/Z_m.
Fan2D build_cy_fan(int m);

// Calabi-Yau witness: nu in M with <nu, v_i> = 1 for every ray, if one
// exists.  Determined by any two independent rays and verified on the rest.
std::optional<LatticeVec> is_calabi_yau(const Fan2D& fan);

// Same solve on a raw ray list (no ordering required).
std::optional<LatticeVec> calabi_yau_witness(const std::vector<LatticeVec>& rays);

struct Classification {
  int m = 0;
  Mat2 transform;  // unimodular A with A * (rays in angular order) = rays of Sigma_m
};

enum class ClassifyError { not_cy, non_simplicial, not_smooth };

// Normalizes a toric CY surface fan onto Sigma_m by mapping the first two
// rays (in clockwise order) to (0,1), (1,1).
std::variant<Classification, ClassifyError> classify(const Fan2D& fan);

// Self-intersection number of the divisor of ray i, from the smooth-surface
// relation v_{i-1} + v_{i+1} = -(D_i . D_i) v_i.  Throws MathError
// (BoundaryRay / NonProportional).
mpz_class self_intersection(const Fan2D& fan, std::size_t i);

// Toric compactification of X_{Sigma_m} along the v_l direction: adds rays
// (1,0), (-1,0) and -v_l.  Complete and smooth for 1 <= l <= m-1.
Fan2D compactify(int m, int l);

// Formal sum of toric divisors, one coefficient per ray of a fixed fan.
struct DivisorClass {
  std::vector<mpz_class> coefficients;
};

// a ~ b iff a - b = sum_j <nu, v_j> D_j for some nu in M.
bool linearly_equivalent(const Fan2D& fan, const DivisorClass& a, const DivisorClass& b);

// Curve class recorded by its intersection numbers with the toric divisors.
struct CurveClass {
  std::vector<mpz_class> pairings;  // c . D_j per ray j
};

// Checks the two consistency relations sum_j <nu, v_j> t_j = 0 (nu = (1,0),
// (0,1)) and returns the class, or nullopt when no such class exists.
std::optional<CurveClass> solve_curve_class(const Fan2D& fan, const std::vector<mpz_class>& targets);

}  // namespace syzkit

#endif
