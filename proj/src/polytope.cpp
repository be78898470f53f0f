#include "syzkit/polytope.hpp"

#include <cmath>
#include <stdexcept>

#include "syzkit/errors.hpp"

namespace syzkit {

MomentPolytope moment_polytope(int m, const std::vector<double>& c) {
  if (m < 0) throw std::invalid_argument("moment_polytope: m must be >= 0");
  if (c.size() != static_cast<std::size_t>(m) + 1)
    throw std::invalid_argument("moment_polytope: need m+1 offsets");
  for (double cj : c)
    if (!std::isfinite(cj)) throw std::invalid_argument("moment_polytope: offsets must be finite");

  // Facet j is supporting iff the envelope breakpoints x_j = c_j - c_{j-1}
  // are strictly increasing left to right (j = m down to 1), i.e. the
  // offsets are strictly concave in j.
  for (int j = 1; j + 1 <= m; ++j) {
    if (!(2.0 * c[j] > c[j - 1] + c[j + 1]))
      throw MathError(errc::redundant_facet, "facet " + std::to_string(j) + " is not supporting");
  }

  MomentPolytope p;
  p.m = m;
  for (int j = 0; j <= m; ++j) p.facets.push_back({LatticeVec(j, 1), c[j]});
  // Vertex between facets j and j-1: x = c_j - c_{j-1}, y = c_j - j x.
  for (int j = m; j >= 1; --j) {
    double x = c[j] - c[j - 1];
    double y = c[j] - j * x;
    p.vertices.push_back({x, y});
  }
  return p;
}

double MomentPolytope::edge_length(int j) const {
  if (j < 1 || j > m - 1) throw std::invalid_argument("edge_length: need 1 <= j <= m-1");
  // Edge T_j runs between the vertices shared with facets j+1 and j-1; its
  // primitive direction is (1, -j), so the lattice length is the x-extent.
  double cjm1 = facets[j - 1].offset, cj = facets[j].offset, cjp1 = facets[j + 1].offset;
  return 2.0 * cj - cjm1 - cjp1;
}

std::vector<double> MomentPolytope::kahler_q() const {
  std::vector<double> q;
  for (int j = 1; j <= m - 1; ++j) q.push_back(std::exp(-edge_length(j)));
  return q;
}

}  // namespace syzkit
