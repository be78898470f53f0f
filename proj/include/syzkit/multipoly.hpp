#ifndef SYZKIT_MULTIPOLY_HPP
#define SYZKIT_MULTIPOLY_HPP

#include <gmpxx.h>

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace syzkit {

// Exponent vector in the variables q_1..q_n.  Exponents are signed so that
// the mutation harness can form Laurent terms; everything produced by the
// unmutated pipeline stays nonnegative.
using Exponents = std::vector<int>;

// Graded lexicographic term order (total degree first, then lex).
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Exact sparse polynomial with arbitrary-precision integer coefficients.
// Immutable value semantics; no zero coefficients are ever stored and terms
// sit in canonical graded-lex order, so operator== is exact equality.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, mpz_class, GradedLexLess>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
  static MultiPoly constant(int nvars, mpz_class c);
  static MultiPoly monomial(Exponents exps, mpz_class coeff = 1);
  // q_i (1-based), as a polynomial in nvars variables.
  static MultiPoly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Coefficient of the given exponent vector (zero when absent).
  mpz_class coefficient(const Exponents& exps) const;

  // Sum of all coefficients = evaluation at q = (1,...,1), exact.
  mpz_class coefficient_sum() const;

  bool has_negative_exponent() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o);

  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  std::complex<double> evaluate(std::span<const std::complex<double>> q) const;
  double evaluate(std::span<const double> q) const;

  // Human-readable form, e.g. "q2 + q1*q2" (canonical term order).
  std::string str() const;

 private:
  void insert_term(const Exponents& exps, const mpz_class& coeff);

  int nvars_;
  TermMap terms_;
};

}  // namespace syzkit

#endif
