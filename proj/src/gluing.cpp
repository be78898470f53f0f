#include "syzkit/gluing.hpp"

#include <stdexcept>

namespace syzkit {

GluingPolynomial g_from_invariants_with(const ConditionSet& conds, int m) {
  if (m < 1) throw std::invalid_argument("g_from_invariants: m must be >= 1");
  const int nvars = m - 1;
  GluingPolynomial g;
  g.m = m;
  g.coeff.resize(m + 1, MultiPoly::zero(nvars));
  g.coeff[0] = MultiPoly::constant(nvars, 1);
  for (int i = 1; i <= m; ++i) {
    Exponents pre(nvars, 0);
    for (int j = 1; j <= i - 1; ++j) pre[j - 1] = i - j;
    MultiPoly delta = delta_series_with(conds, m, i);
    g.coeff[i] = MultiPoly::monomial(std::move(pre)) *
                 (MultiPoly::constant(nvars, 1) + delta);
  }
  return g;
}

GluingPolynomial g_from_invariants(int m) {
  GluingPolynomial g = g_from_invariants_with(ConditionSet::all(), m);
  for (const auto& c : g.coeff)
    if (c.has_negative_exponent())
      throw std::logic_error("gluing coefficients must be polynomial in q");
  return g;
}

GluingPolynomial g_from_product(int m) {
  if (m < 1) throw std::invalid_argument("g_from_product: m must be >= 1");
  const int nvars = m - 1;
  GluingPolynomial g;
  g.m = m;
  // Multiply out the factors 1 + Q_i z, Q_i = q_1...q_i (Q_0 = 1).
  g.coeff.assign(1, MultiPoly::constant(nvars, 1));
  for (int i = 0; i <= m - 1; ++i) {
    Exponents e(nvars, 0);
    for (int j = 1; j <= i; ++j) e[j - 1] = 1;
    MultiPoly qi = MultiPoly::monomial(std::move(e));
    std::vector<MultiPoly> next(g.coeff.size() + 1, MultiPoly::zero(nvars));
    for (std::size_t p = 0; p < g.coeff.size(); ++p) {
      next[p] += g.coeff[p];
      next[p + 1] += g.coeff[p] * qi;
    }
    g.coeff = std::move(next);
  }
  return g;
}

VerifyReport verify_identity_with(const ConditionSet& conds, int m) {
  GluingPolynomial lhs = g_from_invariants_with(conds, m);
  GluingPolynomial rhs = g_from_product(m);
  VerifyReport report;
  for (int i = 0; i <= m; ++i) {
    if (lhs.coeff[i] == rhs.coeff[i]) continue;
    // First differing exponent vector in canonical order.
    const auto& a = lhs.coeff[i].terms();
    const auto& b = rhs.coeff[i].terms();
    GradedLexLess less;
    auto ita = a.begin();
    auto itb = b.begin();
    CoefficientMismatch mm;
    mm.i = i;
    while (ita != a.end() || itb != b.end()) {
      if (itb == b.end() || (ita != a.end() && less(ita->first, itb->first))) {
        mm.exps = ita->first;
        mm.lhs = ita->second.get_str();
        mm.rhs = "0";
        break;
      }
      if (ita == a.end() || less(itb->first, ita->first)) {
        mm.exps = itb->first;
        mm.lhs = "0";
        mm.rhs = itb->second.get_str();
        break;
      }
      if (ita->second != itb->second) {
        mm.exps = ita->first;
        mm.lhs = ita->second.get_str();
        mm.rhs = itb->second.get_str();
        break;
      }
      ++ita;
      ++itb;
    }
    report.ok = false;
    report.mismatch = std::move(mm);
    return report;
  }
  report.ok = true;
  return report;
}

VerifyReport verify_identity(int m) { return verify_identity_with(ConditionSet::all(), m); }

}  // namespace syzkit
