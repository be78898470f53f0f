#ifndef SYZKIT_MIRROR_MAP_HPP
#define SYZKIT_MIRROR_MAP_HPP

#include <complex>
#include <variant>
#include <vector>

#include "syzkit/errors.hpp"

namespace syzkit {

using cplx = std::complex<double>;

// Point of the Kahler moduli in canonical coordinates q_1..q_{m-1}; real
// points must lie in (0,1) (large-volume side), complex ones in the
// punctured unit disk.
class KahlerPoint {
 public:
  static KahlerPoint make(std::vector<cplx> q);
  static KahlerPoint make_real(const std::vector<double>& q);

  const std::vector<cplx>& q() const { return q_; }
  std::size_t size() const { return q_.size(); }
  int m() const { return static_cast<int>(q_.size()) + 1; }

  bool all_real() const;
  std::vector<double> real_values() const;

 private:
  std::vector<cplx> q_;
};

// Hori-Vafa family coefficients: uv = sum_i C_i z^i, C_0 = 1.
struct MirrorCoefficients {
  std::vector<cplx> C;  // size m+1
};

// Point of the mirror surface with its on-surface defect tracked.
struct MirrorPoint {
  cplx z, u, v;
  cplx residual;  // uv - g(z)
};

// g(z) = prod_{i=0}^{m-1} (1 + q_1...q_i z) evaluated numerically.
cplx gluing_eval(const KahlerPoint& q, cplx z);
double gluing_eval(const std::vector<double>& q, double z);

// Numeric coefficients of the mirror map at q; the product form is expanded
// by convolution (identical to the invariant series by the gluing identity).
MirrorCoefficients mirror_map(int m, const KahlerPoint& q);

struct InverseMapFailure {
  errc code;
  std::string message;
};

struct InverseMapOptions {
  double ratio_tolerance = 1e-8;  // minimal relative gap between root moduli
};

// Recovers q from the coefficients: roots r_1..r_m sorted by increasing
// modulus give q_l = r_l / r_{l+1}.  On the image of mirror_map with real
// q in (0,1) the roots are the negative reals -prod_{i<l} q_i^{-1}.
std::variant<KahlerPoint, InverseMapFailure> inverse_mirror_map(
    const MirrorCoefficients& C, const InverseMapOptions& opts = {});

// All roots of sum_i C_i z^i, sorted by increasing modulus.
// Aberth-Ehrlich iteration in extended precision with Newton-polygon
// initial radii; accurate to ~1e-15 relative for simple well-separated
// roots of the degrees used here.
std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs);

enum class Side { plus, minus };

// Chart maps iota_+(z1,z2) = (z1, z2 g(z1), z2^{-1}) and
// iota_-(z1,z2) = (z1, z2, z2^{-1} g(z1)) into { uv = g(z) }.
MirrorPoint chart_embed(Side side, cplx z1, cplx z2, const KahlerPoint& q);

// Superpotential: z2 g(z1) on the + piece, z2 on the - piece; glues to the
// u coordinate of the mirror.
cplx superpotential(Side side, cplx z1, cplx z2, const KahlerPoint& q);

}  // namespace syzkit

#endif
