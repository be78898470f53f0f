#include "syzkit/mirror_map.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <stdexcept>

namespace syzkit {

KahlerPoint KahlerPoint::make(std::vector<cplx> q) {
  for (const cplx& v : q) {
    double a = std::abs(v);
    if (!(a > 0.0 && a < 1.0))
      throw std::invalid_argument("KahlerPoint: need 0 < |q_j| < 1");
  }
  KahlerPoint p;
  p.q_ = std::move(q);
  return p;
}

KahlerPoint KahlerPoint::make_real(const std::vector<double>& q) {
  std::vector<cplx> c;
  c.reserve(q.size());
  for (double v : q) {
    if (!(v > 0.0 && v < 1.0))
      throw std::invalid_argument("KahlerPoint: real values must lie in (0,1)");
    c.emplace_back(v, 0.0);
  }
  KahlerPoint p;
  p.q_ = std::move(c);
  return p;
}

bool KahlerPoint::all_real() const {
  return std::all_of(q_.begin(), q_.end(), [](const cplx& v) { return v.imag() == 0.0; });
}

std::vector<double> KahlerPoint::real_values() const {
  std::vector<double> out;
  out.reserve(q_.size());
  for (const cplx& v : q_) out.push_back(v.real());
  return out;
}

cplx gluing_eval(const KahlerPoint& q, cplx z) {
  cplx big_q = 1.0;
  cplx g = 1.0 + z;  // factor i = 0
  for (const cplx& qi : q.q()) {
    big_q *= qi;
    g *= 1.0 + big_q * z;
  }
  return g;
}

double gluing_eval(const std::vector<double>& q, double z) {
  double big_q = 1.0;
  double g = 1.0 + z;
  for (double qi : q) {
    big_q *= qi;
    g *= 1.0 + big_q * z;
  }
  return g;
}

MirrorCoefficients mirror_map(int m, const KahlerPoint& q) {
  if (m < 1) throw std::invalid_argument("mirror_map: m must be >= 1");
  if (q.m() != m) throw std::invalid_argument("mirror_map: q must have m-1 entries");
  std::vector<cplx> coeff{1.0};
  cplx big_q = 1.0;
  for (int i = 0; i <= m - 1; ++i) {
    if (i > 0) big_q *= q.q()[i - 1];
    std::vector<cplx> next(coeff.size() + 1, 0.0);
    for (std::size_t p = 0; p < coeff.size(); ++p) {
      next[p] += coeff[p];
      next[p + 1] += coeff[p] * big_q;
    }
    coeff = std::move(next);
  }
  return MirrorCoefficients{std::move(coeff)};
}

namespace {

using lcplx = std::complex<long double>;

lcplx horner(const std::vector<lcplx>& c, lcplx z) {
  lcplx v = 0.0L;
  for (std::size_t i = c.size(); i-- > 0;) v = v * z + c[i];
  return v;
}

lcplx horner_deriv(const std::vector<lcplx>& c, lcplx z) {
  lcplx v = 0.0L;
  for (std::size_t i = c.size(); i-- > 1;) v = v * z + c[i] * static_cast<long double>(i);
  return v;
}

// Initial radii from the upper convex hull of (i, log|C_i|) (the Newton
// polygon of the polynomial): hull segment from i1 to i2 supplies i2-i1
// guesses of modulus exp((log|C_{i1}| - log|C_{i2}|)/(i2-i1)).
std::vector<lcplx> initial_guesses(const std::vector<lcplx>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<std::pair<int, long double>> pts;
  for (int i = 0; i <= n; ++i) {
    long double a = std::abs(c[i]);
    if (a > 0.0L) pts.emplace_back(i, std::log(a));
  }
  std::vector<std::pair<int, long double>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // keep hull upper-convex: slope(a,b) must exceed slope(b,p)
      if ((b.second - a.second) * (p.first - b.first) <=
          (p.second - b.second) * (b.first - a.first))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  std::vector<lcplx> z;
  z.reserve(n);
  int produced = 0;
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    int i1 = hull[s].first, i2 = hull[s + 1].first;
    long double r = std::exp((hull[s].second - hull[s + 1].second) / (i2 - i1));
    int count = i2 - i1;
    for (int k = 0; k < count; ++k) {
      long double angle = 2.0L * M_PIl * (k + 0.5L) / count + 0.3L * static_cast<long double>(s + 1);
      z.push_back(lcplx(r * std::cos(angle), r * std::sin(angle)));
      ++produced;
    }
  }
  // Degenerate hull (leading/trailing zeros trimmed earlier): pad on a circle.
  while (produced < n) {
    long double angle = 2.0L * M_PIl * (produced + 0.5L) / n;
    z.push_back(lcplx(std::cos(angle), std::sin(angle)));
    ++produced;
  }
  return z;
}

}  // namespace

std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs) {
  if (coeffs.size() < 2) throw std::invalid_argument("poly_roots: degree must be >= 1");
  if (coeffs.back() == cplx(0.0, 0.0))
    throw std::invalid_argument("poly_roots: leading coefficient is zero");
  const int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<lcplx> c(coeffs.begin(), coeffs.end());
  std::vector<lcplx> z = initial_guesses(c);

  const long double tol = 1e-18L;
  for (int iter = 0; iter < 300; ++iter) {
    long double worst = 0.0L;
    for (int k = 0; k < n; ++k) {
      lcplx p = horner(c, z[k]);
      lcplx dp = horner_deriv(c, z[k]);
      if (dp == lcplx(0.0L, 0.0L)) {
        z[k] += lcplx(1e-6L, 1e-6L);
        worst = 1.0L;
        continue;
      }
      lcplx ratio = p / dp;
      lcplx sum = 0.0L;
      for (int j = 0; j < n; ++j)
        if (j != k) sum += lcplx(1.0L, 0.0L) / (z[k] - z[j]);
      lcplx w = ratio / (lcplx(1.0L, 0.0L) - ratio * sum);
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / (1.0L + std::abs(z[k])));
    }
    if (worst < tol) break;
  }

  std::vector<cplx> out;
  out.reserve(n);
  for (const lcplx& r : z) out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  std::sort(out.begin(), out.end(), [](const cplx& a, const cplx& b) {
    double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma < mb;
    return std::arg(a) < std::arg(b);
  });
  return out;
}

std::variant<KahlerPoint, InverseMapFailure> inverse_mirror_map(const MirrorCoefficients& C,
                                                                const InverseMapOptions& opts) {
  if (C.C.size() < 2) throw std::invalid_argument("inverse_mirror_map: need degree >= 1");
  if (std::abs(C.C[0] - cplx(1.0, 0.0)) > 1e-12)
    return InverseMapFailure{errc::not_normalized, "C_0 must equal 1 in the SYZ normalization"};
  if (C.C.back() == cplx(0.0, 0.0))
    return InverseMapFailure{errc::root_separation, "leading coefficient vanishes (degree drop)"};

  std::vector<cplx> roots = poly_roots(C.C);
  const int m = static_cast<int>(roots.size());
  for (int l = 0; l + 1 < m; ++l) {
    double lo = std::abs(roots[l]), hi = std::abs(roots[l + 1]);
    if ((hi - lo) / hi < opts.ratio_tolerance) {
      char msg[160];
      std::snprintf(msg, sizeof(msg),
                    "root moduli %.6g and %.6g are not separated at relative tolerance %.1g", lo,
                    hi, opts.ratio_tolerance);
      return InverseMapFailure{errc::root_separation, msg};
    }
  }
  std::vector<cplx> q(m - 1);
  for (int l = 0; l + 1 < m; ++l) q[l] = roots[l] / roots[l + 1];
  // Ratios of strictly increasing moduli lie in the punctured unit disk, so
  // this cannot throw; complex values are the analytic continuation of the
  // mirror map (no positivity check by design).
  return KahlerPoint::make(std::move(q));
}

MirrorPoint chart_embed(Side side, cplx z1, cplx z2, const KahlerPoint& q) {
  if (z1 == cplx(0.0, 0.0)) throw std::invalid_argument("chart_embed: z1 must be nonzero");
  if (z2 == cplx(0.0, 0.0))
    throw MathError(errc::zero_fiber_coordinate, "chart maps invert the fiber coordinate z2");
  cplx g = gluing_eval(q, z1);
  MirrorPoint p;
  p.z = z1;
  if (side == Side::plus) {
    p.u = z2 * g;
    p.v = 1.0 / z2;
  } else {
    p.u = z2;
    p.v = g / z2;
  }
  p.residual = p.u * p.v - g;
  return p;
}

cplx superpotential(Side side, cplx z1, cplx z2, const KahlerPoint& q) {
  return chart_embed(side, z1, z2, q).u;
}

}  // namespace syzkit
