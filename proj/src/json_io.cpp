#include "syzkit/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace syzkit {

double round15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return std::strtod(buf, nullptr);
}

namespace {

long long to_ll(const mpz_class& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("lattice entry exceeds int64 in JSON output");
  return v.get_si();
}

}  // namespace

ojson to_json(const LatticeVec& v) { return ojson::array({to_ll(v.x), to_ll(v.y)}); }

ojson to_json(const Mat2& a) {
  return ojson::array({ojson::array({to_ll(a.a), to_ll(a.b)}), ojson::array({to_ll(a.c), to_ll(a.d)})});
}

ojson to_json(const Fan2D& fan) {
  ojson rays = ojson::array();
  for (const auto& r : fan.rays()) rays.push_back(to_json(r));
  return ojson{{"rays", std::move(rays)}, {"complete", fan.complete()}};
}

ojson to_json(const MomentPolytope& p) {
  ojson facets = ojson::array();
  for (const auto& f : p.facets)
    facets.push_back(ojson{{"normal", to_json(f.normal)}, {"offset", round15(f.offset)}});
  ojson vertices = ojson::array();
  for (const auto& v : p.vertices)
    vertices.push_back(ojson::array({round15(v[0]), round15(v[1])}));
  return ojson{{"facets", std::move(facets)}, {"vertices", std::move(vertices)}};
}

ojson to_json(const MultiPoly& p) {
  ojson terms = ojson::array();
  for (const auto& [e, c] : p.terms()) {
    ojson exps = ojson::array();
    for (int k : e) exps.push_back(k);
    terms.push_back(ojson{{"exps", std::move(exps)}, {"c", c.get_str()}});
  }
  return terms;
}

ojson to_json(const GluingPolynomial& g) {
  ojson coeff = ojson::array();
  for (const auto& c : g.coeff) coeff.push_back(to_json(c));
  return ojson{{"m", g.m}, {"coeff", std::move(coeff)}};
}

ojson to_json(const cplx& z) { return ojson::array({round15(z.real()), round15(z.imag())}); }

ojson to_json(const PeriodResult& r, const CycleSpec& spec) {
  ojson q = ojson::array();
  for (double v : spec.q) q.push_back(round15(v));
  return ojson{{"l", spec.l},
               {"q", std::move(q)},
               {"period", to_json(r.value)},
               {"closed_form", to_json(period_closed_form(spec))},
               {"error", round15(r.error_estimate)}};
}

std::vector<LatticeVec> parse_rays(const std::string& text) {
  std::vector<LatticeVec> rays;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string::npos) end = text.size();
    std::string part = text.substr(pos, end - pos);
    std::size_t comma = part.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("ray '" + part + "' is not of the form x,y");
    try {
      mpz_class x(part.substr(0, comma));
      mpz_class y(part.substr(comma + 1));
      rays.emplace_back(std::move(x), std::move(y));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("ray '" + part + "' is not an integer pair");
    }
    pos = end + 1;
  }
  if (rays.empty()) throw std::invalid_argument("empty ray list");
  return rays;
}

}  // namespace syzkit
