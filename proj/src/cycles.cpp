#include "syzkit/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "syzkit/errors.hpp"

namespace syzkit {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kEndpointBand = 1e-3;  // residual grid keeps clear of the sqrt(g) corners
constexpr double kResidualStep = 1e-5;  // fixed central-difference step for densities

double fd4(double fm2, double fm1, double fp1, double fp2, double h) {
  return (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
}

cplx fd4(cplx fm2, cplx fm1, cplx fp1, cplx fp2, double h) {
  return (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
}

// Parametrization of the (possibly perturbed) cycle, defined on a
// neighborhood of t in [0,1] so that difference stencils can reach past the
// endpoints.  The offset p(t) = pert * (2t-1) deforms |u|^2 - |v|^2 away
// from zero while keeping uv = g(z).
struct CycleEval {
  const CycleSpec* spec;
  double pert = 0.0;
  double log_outer = 0.0, log_inner = 0.0;  // log|z| at t = 0, 1

  explicit CycleEval(const CycleSpec& s, double perturbation = 0.0)
      : spec(&s),
        pert(perturbation),
        log_outer(std::log(-s.z_outer())),
        log_inner(std::log(-s.z_inner())) {}

  double z(double t) const { return -std::exp((1.0 - t) * log_outer + t * log_inner); }
  double g(double t) const { return gluing_eval(spec->q, z(t)); }

  // |u| solving |u|^2 - |v|^2 = p, |u||v| = |g|.
  double amp_from(double gg, double t) const {
    double p = pert * (2.0 * t - 1.0);
    return std::sqrt(0.5 * (p + std::sqrt(p * p + 4.0 * gg * gg)));
  }
  double amp(double t) const { return amp_from(g(t), t); }

  cplx u(double t, double theta) const { return amp(t) * std::polar(1.0, theta); }
  cplx v(double t, double theta) const {
    double a = amp(t);
    if (a == 0.0) return {0.0, 0.0};
    return g(t) * std::polar(1.0, -theta) / a;
  }
};

void check_params(const QuadratureParams& p) {
  if (p.n_t < 8 || p.n_theta < 8)
    throw std::invalid_argument("QuadratureParams: need n_t >= 8 and n_theta >= 8");
}

// One pass of the holomorphic-volume quadrature.  The fiber phase and the
// base coordinate separate in the parametrization, so the log-derivative
// ratios are row constants (t stencil) and column constants (theta stencil).
cplx omega_pass(const CycleEval& ev, int n_t, int n_theta) {
  GaussLegendreRule rule = gauss_legendre_01(n_t);
  const double h_t = 0.5 / n_t;
  const double h_th = M_PI / n_theta;

  std::vector<cplx> ratio_theta(n_theta);  // dlog u in the theta direction
  for (int j = 0; j < n_theta; ++j) {
    double th = kTwoPi * j / n_theta;
    cplx p0 = std::polar(1.0, th);
    cplx dp = fd4(std::polar(1.0, th - 2.0 * h_th), std::polar(1.0, th - h_th),
                  std::polar(1.0, th + h_th), std::polar(1.0, th + 2.0 * h_th), h_th);
    ratio_theta[j] = dp / p0;
  }

  const cplx inv_2pii = 1.0 / (cplx(0.0, 1.0) * kTwoPi);
  KahanSum<cplx> acc;
  for (int i = 0; i < n_t; ++i) {
    double t = rule.nodes[i];
    double z0 = ev.z(t);
    double dz = fd4(ev.z(t - 2.0 * h_t), ev.z(t - h_t), ev.z(t + h_t), ev.z(t + 2.0 * h_t), h_t);
    double a0 = ev.amp(t);
    double da = fd4(ev.amp(t - 2.0 * h_t), ev.amp(t - h_t), ev.amp(t + h_t), ev.amp(t + 2.0 * h_t),
                    h_t);
    cplx dlogz_dt = dz / z0;
    cplx dlogz_dth = 0.0;  // z is a function of t alone
    cplx dlogu_dt = da / a0;
    for (int j = 0; j < n_theta; ++j) {
      cplx density = (dlogz_dt * ratio_theta[j] - dlogz_dth * dlogu_dt) * inv_2pii;
      acc.add(rule.weights[i] * (kTwoPi / n_theta) * density);
    }
  }
  return acc.value();
}

struct PointDerivs {
  cplx du_t, du_th, dv_t, dv_th, dlz_t, dlz_th;
};

// Central differences of the full parametrization at fixed step.
PointDerivs derivs_at(const CycleEval& ev, double t, double theta, double dt, double dth) {
  PointDerivs d;
  d.du_t = (ev.u(t + dt, theta) - ev.u(t - dt, theta)) / (2.0 * dt);
  d.du_th = (ev.u(t, theta + dth) - ev.u(t, theta - dth)) / (2.0 * dth);
  d.dv_t = (ev.v(t + dt, theta) - ev.v(t - dt, theta)) / (2.0 * dt);
  d.dv_th = (ev.v(t, theta + dth) - ev.v(t, theta - dth)) / (2.0 * dth);
  double z0 = ev.z(t);
  d.dlz_t = (ev.z(t + dt) - ev.z(t - dt)) / (2.0 * dt) / z0;
  d.dlz_th = 0.0;
  return d;
}

// (t,theta) component of the restriction of
// (i/2)(du^dubar + dv^dvbar + dlogz^dlogzbar).
double ambient_form_density(const PointDerivs& d) {
  double s = std::imag(d.du_t * std::conj(d.du_th)) + std::imag(d.dv_t * std::conj(d.dv_th)) +
             std::imag(d.dlz_t * std::conj(d.dlz_th));
  return -s;
}

cplx volume_form_density(const CycleEval& ev, double t, double theta, const PointDerivs& d) {
  cplx u0 = ev.u(t, theta);
  cplx dlu_t = d.du_t / u0;
  cplx dlu_th = d.du_th / u0;
  return (d.dlz_t * dlu_th - d.dlz_th * dlu_t) / (cplx(0.0, 1.0) * kTwoPi);
}

// Residual maxima over the endpoint-avoiding grid; optionally accumulates
// the integral of the ambient-form density (the omega_I period).  The
// omega residual is reported relative to the cycle's amplitude scale
// max(1, sup_t |g|), which also sets the size of the control perturbation,
// so the thresholds mean the same thing across the moduli.
LagrangianResidual residual_pass(const CycleSpec& spec, const QuadratureParams& params,
                                 double perturbation, double* omega_integral) {
  check_params(params);
  const double lo = kEndpointBand, hi = 1.0 - kEndpointBand;
  double scale = 1.0;
  {
    CycleEval probe(spec);
    for (int i = 0; i < params.n_t; ++i) {
      double t = lo + (hi - lo) * (i + 0.5) / params.n_t;
      scale = std::max(scale, std::abs(probe.g(t)));
    }
  }
  CycleEval ev(spec, perturbation * scale);
  LagrangianResidual r;
  KahanSum<double> acc;
  for (int i = 0; i < params.n_t; ++i) {
    double t = lo + (hi - lo) * (i + 0.5) / params.n_t;
    for (int j = 0; j < params.n_theta; ++j) {
      double theta = kTwoPi * j / params.n_theta;
      PointDerivs d = derivs_at(ev, t, theta, kResidualStep, kResidualStep);
      double omega = ambient_form_density(d);
      r.omega_max = std::max(r.omega_max, std::abs(omega) / scale);
      r.im_volume_max =
          std::max(r.im_volume_max, std::abs(std::imag(volume_form_density(ev, t, theta, d))));
      if (omega_integral) acc.add(omega * ((hi - lo) / params.n_t) * (kTwoPi / params.n_theta));
    }
  }
  if (omega_integral) *omega_integral = acc.value();
  return r;
}

}  // namespace

CycleSpec CycleSpec::make(int m, int l, std::vector<double> q) {
  if (m < 2) throw std::invalid_argument("CycleSpec: m must be >= 2");
  if (l < 1 || l > m - 1) throw std::invalid_argument("CycleSpec: need 1 <= l <= m-1");
  if (q.size() != static_cast<std::size_t>(m) - 1)
    throw std::invalid_argument("CycleSpec: q must have m-1 entries");
  for (double v : q) {
    if (v == 1.0)
      throw MathError(errc::degenerate_interval,
                      "q_j = 1 collapses consecutive roots of the gluing function");
    if (!(v > 0.0 && v < 1.0))
      throw std::invalid_argument("CycleSpec: q values must lie in (0,1)");
  }
  CycleSpec s;
  s.m = m;
  s.l = l;
  s.q = std::move(q);
  return s;
}

double CycleSpec::z_outer() const {
  double p = 1.0;
  for (int i = 1; i <= l; ++i) p /= q[i - 1];
  return -p;
}

double CycleSpec::z_inner() const {
  double p = 1.0;
  for (int i = 1; i <= l - 1; ++i) p /= q[i - 1];
  return -p;
}

MirrorPoint cycle_point(const CycleSpec& spec, double t, double theta) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("cycle_point: t must lie in [0,1]");
  CycleEval ev(spec);
  MirrorPoint p;
  if (t == 0.0 || t == 1.0) {
    // Interval endpoints are roots of g: the fiber circle collapses.
    p.z = (t == 0.0) ? spec.z_outer() : spec.z_inner();
    p.u = 0.0;
    p.v = 0.0;
    p.residual = -gluing_eval(spec.q, p.z.real());
    return p;
  }
  p.z = ev.z(t);
  p.u = ev.u(t, theta);
  p.v = ev.v(t, theta);
  p.residual = p.u * p.v - ev.g(t);
  return p;
}

cplx period_closed_form(const CycleSpec& spec) {
  return std::log(spec.z_inner() / spec.z_outer());
}

PeriodResult period_quadrature(const CycleSpec& spec, QuadratureParams params, double tolerance) {
  check_params(params);
  CycleEval ev(spec);
  cplx coarse = omega_pass(ev, params.n_t, params.n_theta);
  QuadratureParams fine{2 * params.n_t, 2 * params.n_theta};
  cplx refined = omega_pass(ev, fine.n_t, fine.n_theta);
  PeriodResult res;
  res.value = refined;
  res.error_estimate = std::abs(refined - coarse);
  res.grid = fine;
  if (!(res.error_estimate <= tolerance))
    throw MathError(errc::quadrature_divergence,
                    "refinement estimate " + std::to_string(res.error_estimate) +
                        " exceeds tolerance " + std::to_string(tolerance));
  return res;
}

LagrangianResidual lagrangian_residual(const CycleSpec& spec, QuadratureParams params,
                                       double perturbation) {
  return residual_pass(spec, params, perturbation, nullptr);
}

HKCheckResult hk_period_check(int m, const std::vector<double>& q, QuadratureParams params,
                              double tolerance) {
  HKCheckResult res;
  const int n = m - 1;
  res.mirror.Pi_I.resize(n);
  res.mirror.Pi_J.resize(n);
  res.mirror.Pi_K.resize(n);
  res.base.Pi_I.resize(n);
  res.base.Pi_J.assign(n, 0.0);  // theta_i are holomorphic curves: int Omega = 0
  res.base.Pi_K.assign(n, 0.0);
  for (int l = 1; l <= n; ++l) {
    CycleSpec spec = CycleSpec::make(m, l, q);
    PeriodResult p =
        period_quadrature(spec, params, std::numeric_limits<double>::infinity());
    res.mirror.Pi_K[l - 1] = -p.value.real();
    res.mirror.Pi_J[l - 1] = p.value.imag();
    double omega_int = 0.0;
    residual_pass(spec, params, 0.0, &omega_int);
    res.mirror.Pi_I[l - 1] = omega_int;
    res.base.Pi_I[l - 1] = -std::log(q[l - 1]);
  }
  double dev = 0.0;
  for (int i = 0; i < n; ++i) {
    dev = std::max(dev, std::abs(res.mirror.Pi_I[i] - res.base.Pi_K[i]));
    dev = std::max(dev, std::abs(res.mirror.Pi_J[i] - res.base.Pi_J[i]));
    dev = std::max(dev, std::abs(res.mirror.Pi_K[i] - res.base.Pi_I[i]));
  }
  res.max_deviation = dev;
  res.pass = dev < tolerance;
  return res;
}

}  // namespace syzkit
