#include "syzkit/lattice.hpp"

#include "syzkit/errors.hpp"

namespace syzkit {

const char* errc_name(errc c) {
  switch (c) {
    case errc::boundary_ray: return "BoundaryRay";
    case errc::non_proportional: return "NonProportional";
    case errc::empty_polytope: return "EmptyPolytope";
    case errc::redundant_facet: return "RedundantFacet";
    case errc::kahler_mismatch: return "KahlerMismatch";
    case errc::degenerate_interval: return "DegenerateInterval";
    case errc::quadrature_divergence: return "QuadratureDivergence";
    case errc::zero_fiber_coordinate: return "ZeroFiberCoordinate";
    case errc::not_normalized: return "NotNormalized";
    case errc::root_separation: return "RootSeparationFailure";
  }
  return "Unknown";
}

bool LatticeVec::is_primitive() const {
  if (is_zero()) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g == 1;
}

std::string LatticeVec::str() const {
  return "(" + x.get_str() + "," + y.get_str() + ")";
}

mpz_class dot(const LatticeVec& a, const LatticeVec& b) { return a.x * b.x + a.y * b.y; }

mpz_class cross(const LatticeVec& a, const LatticeVec& b) { return a.x * b.y - a.y * b.x; }

namespace {

// Clockwise sectors starting at north: [north, east), [east, south),
// [south, west), [west, north).
int sector(const LatticeVec& v) {
  if (v.y > 0 && v.x >= 0) return 0;
  if (v.x > 0 && v.y <= 0) return 1;
  if (v.y < 0 && v.x <= 0) return 2;
  return 3;  // v.x < 0 && v.y >= 0
}

}  // namespace

bool clockwise_from_north_less(const LatticeVec& a, const LatticeVec& b) {
  int sa = sector(a), sb = sector(b);
  if (sa != sb) return sa < sb;
  return cross(a, b) < 0;
}

}  // namespace syzkit
