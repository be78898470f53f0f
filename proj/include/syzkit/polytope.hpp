#ifndef SYZKIT_POLYTOPE_HPP
#define SYZKIT_POLYTOPE_HPP

#include <array>
#include <vector>

#include "syzkit/lattice.hpp"

namespace syzkit {

// Moment polytope of X_{Sigma_m}: P = { x : <v_j, x> >= c_j, j = 0..m } with
// v_j = (j, 1).  P is the region above the concave upper envelope of the
// lines <v_j, x> = c_j; all facets are supporting exactly when j -> c_j is
// strictly concave.
struct MomentPolytope {
  struct Facet {
    LatticeVec normal;  // (j, 1)
    double offset;      // c_j
  };

  int m = 0;
  std::vector<Facet> facets;                  // j = 0..m
  std::vector<std::array<double, 2>> vertices;  // T_{j-1,j}, ordered left to right

  // Lattice length of the compact edge T_j (j = 1..m-1); equals the
  // symplectic area int_{D_j} omega in the class-level normalization, so
  // q_j = exp(-edge_length(j)).
  double edge_length(int j) const;

  // Kahler parameters q_1..q_{m-1} derived from the edge lengths.
  std::vector<double> kahler_q() const;
};

// Builds the polytope from the offsets c (size m+1).  Throws MathError
// (RedundantFacet) when some facet is not supporting, std::invalid_argument
// on malformed input.
MomentPolytope moment_polytope(int m, const std::vector<double>& c);

}  // namespace syzkit

#endif
