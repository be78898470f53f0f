#ifndef SYZKIT_CYCLES_HPP
#define SYZKIT_CYCLES_HPP

#include <complex>
#include <vector>

#include "syzkit/mirror_map.hpp"
#include "syzkit/quadrature.hpp"

namespace syzkit {

// The cycle S_l = { |u| = |v|, z in [-prod_{i<=l} q_i^{-1},
// -prod_{i<=l-1} q_i^{-1}] } of the mirror surface of X_{Sigma_m}.  Only
// real q in (0,1) is supported; the interval endpoints are consecutive
// negative real roots of g.
struct CycleSpec {
  int m = 0;
  int l = 0;                // 1..m-1
  std::vector<double> q;   // m-1 values in (0,1)

  // Validates ranges; q_j = 1 is reported as DegenerateInterval.
  static CycleSpec make(int m, int l, std::vector<double> q);

  double z_outer() const;  // -prod_{i<=l} q_i^{-1}   (t = 0)
  double z_inner() const;  // -prod_{i<=l-1} q_i^{-1} (t = 1)
};

// Point of S_l: |z| interpolates the endpoints geometrically (log-uniform
// in t, matching the d log z measure), u = |g(z)|^{1/2} e^{i theta},
// v = g(z) e^{-i theta} / |g(z)|^{1/2}.  At the endpoints g vanishes and
// the fiber circle collapses: u = v = 0.
MirrorPoint cycle_point(const CycleSpec& spec, double t, double theta);

struct PeriodResult {
  cplx value;
  double error_estimate = 0.0;  // difference between successive grid refinements
  QuadratureParams grid;        // the refined grid that produced value
};

// Integrates the pullback of Omega = (1/2 pi i) dlog z ^ dlog u over the
// (t, theta) parametrization of S_l; the value is log q_l.  All partial
// derivatives are fourth-order central differences of the parametrization
// with steps tied to the grid spacing, so the error contracts ~16x per grid
// doubling; error_estimate comes from one such doubling.  Throws MathError
// (QuadratureDivergence) when the estimate exceeds `tolerance`.
PeriodResult period_quadrature(const CycleSpec& spec, QuadratureParams params = {},
                               double tolerance = 1e-6);

// log q_l evaluated from the interval endpoint ratio.
cplx period_closed_form(const CycleSpec& spec);

struct LagrangianResidual {
  double omega_max = 0.0;      // max |pullback of the ambient Kahler form|
  double im_volume_max = 0.0;  // max |Im (pullback of Omega)|
};

// Special-Lagrangian check: the restriction of the standard form
// (i/2)(du^dubar + dv^dvbar + dlog z^dlog zbar) and Im Omega both vanish on
// S_l.  Densities are evaluated by central differences (step 1e-5) on a grid
// that excludes a 1e-3 neighborhood of each endpoint, where u, v behave like
// sqrt(g); the Kahler-form residual is reported relative to the cycle's
// amplitude scale max(1, sup_t |g|).  `perturbation` != 0 replaces S_l by
// the torus with |u|^2 - |v|^2 = perturbation * scale * (2t - 1), still
// inside { uv = g(z) }; a constant offset would stay Lagrangian (it is a
// moment-map level set), so the negative control varies the offset along
// the interval.
LagrangianResidual lagrangian_residual(const CycleSpec& spec, QuadratureParams params = {},
                                       double perturbation = 0.0);

// Hyper-Kahler periods over the basis Theta_1..Theta_{m-1}.
struct HKPeriods {
  std::vector<double> Pi_I, Pi_J, Pi_K;
};

struct HKCheckResult {
  HKPeriods mirror;  // Pi_I ~ 0, Pi_J ~ 0, Pi_K[l] ~ -log q_l
  HKPeriods base;    // Pi_I[l] = -log q_l, Pi_J = Pi_K = 0 (analytic)
  double max_deviation = 0.0;
  bool pass = false;
};

// Checks the hyper-Kahler twist identities Pi^mirror_I = Pi_K = 0,
// Pi^mirror_J = Pi_J = 0 and Pi^mirror_K = Pi_I (the I <-> K swap).
HKCheckResult hk_period_check(int m, const std::vector<double>& q, QuadratureParams params = {},
                              double tolerance = 1e-5);

}  // namespace syzkit

#endif
