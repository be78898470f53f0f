#include "syzkit/fan.hpp"

#include <algorithm>
#include <stdexcept>

#include "syzkit/errors.hpp"

namespace syzkit {

namespace {

void check_rays(const std::vector<LatticeVec>& rays) {
  if (rays.empty()) throw std::invalid_argument("fan has no rays");
  for (const auto& r : rays) {
    if (!r.is_primitive()) throw std::invalid_argument("ray " + r.str() + " is not primitive");
  }
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = i + 1; j < rays.size(); ++j)
      if (rays[i] == rays[j]) throw std::invalid_argument("duplicate ray " + rays[i].str());
}

}  // namespace

std::vector<LatticeVec> sort_rays(std::vector<LatticeVec> rays, bool complete) {
  check_rays(rays);
  if (complete) {
    std::sort(rays.begin(), rays.end(), clockwise_from_north_less);
    return rays;
  }
  // Convex case: pick the most-counterclockwise ray (everything else lies
  // clockwise of it), then order by the pairwise cross sign.
  std::size_t first = rays.size();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < rays.size() && ok; ++j)
      if (j != i && cross(rays[i], rays[j]) >= 0) ok = false;
    if (ok) {
      first = i;
      break;
    }
  }
  if (first == rays.size() && rays.size() > 1)
    throw std::invalid_argument("rays do not span a strictly convex cone");
  std::sort(rays.begin(), rays.end(),
            [](const LatticeVec& a, const LatticeVec& b) { return cross(a, b) < 0; });
  return rays;
}

Fan2D Fan2D::make(std::vector<LatticeVec> rays, bool complete) {
  check_rays(rays);
  if (complete) {
    if (rays.size() < 3) throw std::invalid_argument("complete fan needs at least 3 rays");
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (cross(rays[i], rays[(i + 1) % rays.size()]) >= 0)
        throw std::invalid_argument("rays are not in clockwise cyclic order");
  } else {
    for (std::size_t i = 0; i + 1 < rays.size(); ++i)
      if (cross(rays[i], rays[i + 1]) >= 0)
        throw std::invalid_argument("rays are not in clockwise order");
  }
  Fan2D f;
  f.rays_ = std::move(rays);
  f.complete_ = complete;
  return f;
}

mpz_class Fan2D::adjacent_determinant(std::size_t i) const {
  std::size_t n = rays_.size();
  if (complete_ ? i >= n : i + 1 >= n) throw std::out_of_range("cone index out of range");
  const LatticeVec& a = rays_[i];
  const LatticeVec& b = rays_[(i + 1) % n];
  return cross(b, a);
}

bool Fan2D::is_smooth() const {
  std::size_t cones = complete_ ? rays_.size() : rays_.size() - 1;
  for (std::size_t i = 0; i < cones; ++i)
    if (adjacent_determinant(i) != 1) return false;
  return true;
}

Fan2D build_cy_fan(int m) {
  if (m < 0) throw std::invalid_argument("build_cy_fan: m must be >= 0");
  std::vector<LatticeVec> rays;
  rays.reserve(m + 1);
  for (int i = 0; i <= m; ++i) rays.emplace_back(i, 1);
  return Fan2D::make(std::move(rays), /*complete=*/false);
}

std::optional<LatticeVec> is_calabi_yau(const Fan2D& fan) {
  return calabi_yau_witness(fan.rays());
}

std::optional<LatticeVec> calabi_yau_witness(const std::vector<LatticeVec>& rays) {
  if (rays.empty()) throw std::invalid_argument("fan has no rays");
  if (rays.size() == 1) {
    // <nu, v> = 1 solvable by extended gcd since v is primitive.
    const LatticeVec& v = rays[0];
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), v.x.get_mpz_t(), v.y.get_mpz_t());
    return LatticeVec{s, t};  // g == 1 by primitivity
  }
  // Find two independent rays and solve the 2x2 system <nu, v_i> = 1.
  std::size_t j = 1;
  while (j < rays.size() && cross(rays[0], rays[j]) == 0) ++j;
  if (j == rays.size()) return std::nullopt;  // all parallel: v and -v, no witness
  const LatticeVec& u = rays[0];
  const LatticeVec& w = rays[j];
  mpz_class det = cross(u, w);
  // nu = [v0 v1]^{-T} (1,1); integrality required.
  mpz_class nx = w.y - u.y;
  mpz_class ny = u.x - w.x;
  if (nx % det != 0 || ny % det != 0) return std::nullopt;
  LatticeVec nu{nx / det, ny / det};
  for (const auto& r : rays)
    if (dot(nu, r) != 1) return std::nullopt;
  return nu;
}

std::variant<Classification, ClassifyError> classify(const Fan2D& fan) {
  auto nu = is_calabi_yau(fan);
  if (!nu) return ClassifyError::not_cy;

  // CY rays lie on the affine line <nu, .> = 1, so the convex sort applies.
  std::vector<LatticeVec> sorted = sort_rays(fan.rays(), /*complete=*/false);

  Mat2 transform;
  if (sorted.size() == 1) {
    // Complete v_0 to a basis: rows (s,t), (-y, x) map v_0 to (1, 0)... we
    // want v_0 -> (0,1), so put the gcd witness in the second row.
    const LatticeVec& v = sorted[0];
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), v.x.get_mpz_t(), v.y.get_mpz_t());
    transform = Mat2{v.y, -v.x, s, t};
  } else {
    const LatticeVec& v0 = sorted[0];
    const LatticeVec& v1 = sorted[1];
    mpz_class det = cross(v0, v1);
    if (det == 0) return ClassifyError::non_simplicial;
    // A [v0 v1] = [(0,1) (1,1)]  =>  A = B adj([v0 v1]) / det.
    Mat2 b{0, 1, 1, 1};
    Mat2 adj{v1.y, -v1.x, -v0.y, v0.x};
    Mat2 num = b * adj;
    if (num.a % det != 0 || num.b % det != 0 || num.c % det != 0 || num.d % det != 0)
      return ClassifyError::not_smooth;
    transform = Mat2{num.a / det, num.b / det, num.c / det, num.d / det};
  }
  if (!transform.is_unimodular()) return ClassifyError::not_smooth;

  for (std::size_t i = 0; i < sorted.size(); ++i) {
    LatticeVec img = transform.apply(sorted[i]);
    if (img.x != mpz_class(static_cast<long>(i)) || img.y != 1)
      return ClassifyError::not_smooth;
  }
  Classification res;
  res.m = static_cast<int>(sorted.size()) - 1;
  res.transform = transform;
  return res;
}

mpz_class self_intersection(const Fan2D& fan, std::size_t i) {
  std::size_t n = fan.size();
  if (i >= n) throw std::out_of_range("ray index out of range");
  if (!fan.complete() && (i == 0 || i + 1 == n))
    throw MathError(errc::boundary_ray, "ray " + fan.ray(i).str() + " has no angular neighbor");
  const LatticeVec& prev = fan.ray((i + n - 1) % n);
  const LatticeVec& next = fan.ray((i + 1) % n);
  const LatticeVec& v = fan.ray(i);
  LatticeVec sum = prev + next;
  // sum = -a * v with a integer
  mpz_class a;
  if (v.x != 0) {
    if (sum.x % v.x != 0)
      throw MathError(errc::non_proportional, "v_{i-1}+v_{i+1} not proportional to v_i");
    a = -sum.x / v.x;
  } else {
    if (sum.y % v.y != 0)
      throw MathError(errc::non_proportional, "v_{i-1}+v_{i+1} not proportional to v_i");
    a = -sum.y / v.y;
  }
  if (sum.x != -a * v.x || sum.y != -a * v.y)
    throw MathError(errc::non_proportional, "v_{i-1}+v_{i+1} not proportional to v_i");
  return a;
}

Fan2D compactify(int m, int l) {
  if (m < 1) throw std::invalid_argument("compactify: m must be >= 1");
  if (l < 1 || l > m - 1) throw std::invalid_argument("compactify: l must satisfy 1 <= l <= m-1");
  std::vector<LatticeVec> rays;
  for (int i = 0; i <= m; ++i) rays.emplace_back(i, 1);
  rays.emplace_back(1, 0);
  rays.emplace_back(-1, 0);
  rays.emplace_back(-l, -1);  // v_infinity = -v_l
  return Fan2D::make(sort_rays(std::move(rays), /*complete=*/true), /*complete=*/true);
}

bool linearly_equivalent(const Fan2D& fan, const DivisorClass& a, const DivisorClass& b) {
  const auto& rays = fan.rays();
  if (a.coefficients.size() != rays.size() || b.coefficients.size() != rays.size())
    throw std::invalid_argument("divisor class size does not match fan");
  std::vector<mpz_class> d(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) d[i] = a.coefficients[i] - b.coefficients[i];
  // Solve <nu, v_j> = d_j from two independent rays, verify the rest.
  std::size_t j = 1;
  while (j < rays.size() && cross(rays[0], rays[j]) == 0) ++j;
  if (j == rays.size()) return true;  // single primitive ray: <nu, v> hits any integer
  mpz_class det = cross(rays[0], rays[j]);
  mpz_class nx = d[0] * rays[j].y - d[j] * rays[0].y;
  mpz_class ny = d[j] * rays[0].x - d[0] * rays[j].x;
  if (nx % det != 0 || ny % det != 0) return false;
  LatticeVec nu{nx / det, ny / det};
  for (std::size_t k = 0; k < rays.size(); ++k)
    if (dot(nu, rays[k]) != d[k]) return false;
  return true;
}

std::optional<CurveClass> solve_curve_class(const Fan2D& fan, const std::vector<mpz_class>& targets) {
  if (targets.size() != fan.size())
    throw std::invalid_argument("targets size does not match fan");
  mpz_class sx = 0, sy = 0;
  for (std::size_t j = 0; j < fan.size(); ++j) {
    sx += fan.ray(j).x * targets[j];
    sy += fan.ray(j).y * targets[j];
  }
  if (sx != 0 || sy != 0) return std::nullopt;
  return CurveClass{targets};
}

}  // namespace syzkit
