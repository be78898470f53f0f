#include "syzkit/multipoly.hpp"

#include <numeric>
#include <stdexcept>

namespace syzkit {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a > b;  // within a grade, terms dominated by earlier variables first
}

MultiPoly MultiPoly::constant(int nvars, mpz_class c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_.emplace(Exponents(nvars, 0), std::move(c));
  return p;
}

MultiPoly MultiPoly::monomial(Exponents exps, mpz_class coeff) {
  MultiPoly p(static_cast<int>(exps.size()));
  if (coeff != 0) p.terms_.emplace(std::move(exps), std::move(coeff));
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::invalid_argument("variable index out of range");
  Exponents e(nvars, 0);
  e[i - 1] = 1;
  return monomial(std::move(e));
}

mpz_class MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class MultiPoly::coefficient_sum() const {
  mpz_class s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool MultiPoly::has_negative_exponent() const {
  for (const auto& [e, c] : terms_)
    for (int k : e)
      if (k < 0) return true;
  return false;
}

void MultiPoly::insert_term(const Exponents& exps, const mpz_class& coeff) {
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  } else if (it->second == 0) {
    terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) insert_term(e, c);
  return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.insert_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  MultiPoly r(nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
      r.insert_term(e, ca * cb);
    }
  }
  return r;
}

namespace {

template <typename Scalar>
Scalar eval_impl(const MultiPoly::TermMap& terms, std::span<const Scalar> q, int nvars) {
  if (static_cast<int>(q.size()) != nvars) throw std::invalid_argument("evaluation point size mismatch");
  Scalar total{};
  for (const auto& [e, c] : terms) {
    Scalar t = static_cast<Scalar>(c.get_d());
    for (int k = 0; k < nvars; ++k) {
      int p = e[k];
      if (p == 0) continue;
      Scalar base = q[k];
      if (p < 0) {
        base = Scalar(1.0) / base;
        p = -p;
      }
      for (int r = 0; r < p; ++r) t *= base;
    }
    total += t;
  }
  return total;
}

}  // namespace

std::complex<double> MultiPoly::evaluate(std::span<const std::complex<double>> q) const {
  return eval_impl<std::complex<double>>(terms_, q, nvars_);
}

double MultiPoly::evaluate(std::span<const double> q) const {
  return eval_impl<double>(terms_, q, nvars_);
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    mpz_class a = c;
    if (!out.empty()) {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    } else if (a < 0) {
      out += "-";
      a = -a;
    }
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "q" + std::to_string(k + 1);
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      out += mono;
    } else {
      out += a.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace syzkit
