#ifndef SYZKIT_LATTICE_HPP
#define SYZKIT_LATTICE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace syzkit {

// Element of the rank-2 lattice N (or of its dual M).  All arithmetic is
// exact; unimodular products can grow, so entries are arbitrary precision.
struct LatticeVec {
  mpz_class x = 0;
  mpz_class y = 0;

  LatticeVec() = default;
  LatticeVec(mpz_class px, mpz_class py) : x(std::move(px)), y(std::move(py)) {}
  LatticeVec(long px, long py) : x(px), y(py) {}

  bool operator==(const LatticeVec& o) const { return x == o.x && y == o.y; }
  bool operator!=(const LatticeVec& o) const { return !(*this == o); }

  LatticeVec operator+(const LatticeVec& o) const { return {x + o.x, y + o.y}; }
  LatticeVec operator-(const LatticeVec& o) const { return {x - o.x, y - o.y}; }
  LatticeVec operator-() const { return {-x, -y}; }

  bool is_zero() const { return x == 0 && y == 0; }

  // primitive = nonzero and gcd(|x|,|y|) == 1
  bool is_primitive() const;

  std::string str() const;
};

// <a, b> pairing between M and N (and the standard inner product on Z^2).
mpz_class dot(const LatticeVec& a, const LatticeVec& b);

// cross(a, b) = a.x*b.y - a.y*b.x; negative iff b lies clockwise of a
// (within an angle of pi).
mpz_class cross(const LatticeVec& a, const LatticeVec& b);

// Comparator for clockwise cyclic order starting at (0,1) ("12 o'clock").
// Total order on pairwise non-parallel vectors.
bool clockwise_from_north_less(const LatticeVec& a, const LatticeVec& b);

// 2x2 integer matrix acting on N; used for GL(2,Z) changes of basis.
struct Mat2 {
  mpz_class a = 1, b = 0;  // row 1
  mpz_class c = 0, d = 1;  // row 2

  static Mat2 identity() { return {}; }

  LatticeVec apply(const LatticeVec& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  mpz_class det() const { return a * d - b * c; }
  bool is_unimodular() const {
    mpz_class dt = det();
    return dt == 1 || dt == -1;
  }
  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

}  // namespace syzkit

#endif
