#include "cli_commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "syzkit/admissible.hpp"
#include "syzkit/cycles.hpp"
#include "syzkit/errors.hpp"
#include "syzkit/fan.hpp"
#include "syzkit/gluing.hpp"
#include "syzkit/mirror_map.hpp"
#include "syzkit/parallel.hpp"
#include "syzkit/polytope.hpp"

namespace syzkit::cli {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

ojson real_array(const std::vector<double>& v) {
  ojson a = ojson::array();
  for (double x : v) a.push_back(round15(x));
  return a;
}

// RFC 4180 quoting: fields containing separators, quotes or newlines are
// quoted, embedded quotes doubled.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return buf;
}

ConditionSet parse_mutation(const std::string& mutate) {
  if (mutate == "drop-cond-1") return ConditionSet::drop(1);
  if (mutate == "drop-cond-2") return ConditionSet::drop(2);
  if (mutate == "drop-cond-3") return ConditionSet::drop(3);
  if (mutate == "drop-cond-4") return ConditionSet::drop(4);
  throw std::invalid_argument("unknown mutation '" + mutate +
                              "' (expected drop-cond-1..drop-cond-4)");
}

std::string pretty_lines(const ojson& j, int indent = 0);

}  // namespace

std::string render(const CommandOutput& out, const std::string& format) {
  if (format == "csv" && !out.csv.empty()) return out.csv;
  if (format == "pretty") return pretty_lines(out.json);
  return out.json.dump(2) + "\n";
}

namespace {

std::string pretty_lines(const ojson& j, int indent) {
  std::string pad(indent, ' ');
  std::string out;
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out += pad + key + ":\n" + pretty_lines(value, indent + 2);
    } else {
      out += pad + key + ": " + value.dump() + "\n";
    }
  }
  return out;
}

}  // namespace

CommandOutput cmd_classify(const std::string& rays_text, const std::string& input_file) {
  CommandOutput out;
  out.json["schema"] = 1;
  out.json["command"] = "classify";
  std::vector<LatticeVec> rays;
  if (!input_file.empty()) {
    std::ifstream in(input_file);
    if (!in) throw std::invalid_argument("cannot open " + input_file);
    ojson doc = ojson::parse(in, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.contains("rays") || !doc["rays"].is_array())
      throw std::invalid_argument(input_file + " is not a fan file with a \"rays\" array");
    for (const auto& r : doc["rays"]) {
      if (!r.is_array() || r.size() != 2)
        throw std::invalid_argument("fan file rays must be [x, y] pairs");
      rays.emplace_back(r[0].get<long>(), r[1].get<long>());
    }
    if (rays.empty()) throw std::invalid_argument("empty ray list");
  } else {
    rays = parse_rays(rays_text);
  }
  {
    ojson arr = ojson::array();
    for (const auto& r : rays) arr.push_back(to_json(r));
    out.json["rays"] = std::move(arr);
  }
  for (const auto& r : rays)
    if (!r.is_primitive())
      throw std::invalid_argument("ray " + r.str() + " is not primitive");

  // The witness solve needs no angular order, so non-CY inputs (which may
  // not even fit in a half-plane) are reported before sorting.
  if (!calabi_yau_witness(rays)) {
    out.json["error"] = ojson{{"code", "NotCY"}, {"message", "no nu with <nu, v_i> = 1 exists"}};
    out.exit_code = 2;
    return out;
  }
  Fan2D fan = Fan2D::make(sort_rays(rays, /*complete=*/false), /*complete=*/false);

  auto res = classify(fan);
  if (std::holds_alternative<ClassifyError>(res)) {
    const char* reason = "NotCY";
    switch (std::get<ClassifyError>(res)) {
      case ClassifyError::not_cy: reason = "NotCY"; break;
      case ClassifyError::non_simplicial: reason = "NonSimplicial"; break;
      case ClassifyError::not_smooth: reason = "NotSmooth"; break;
    }
    out.json["error"] = ojson{{"code", reason}, {"message", "fan is not a toric CY surface fan"}};
    out.exit_code = 2;
    return out;
  }
  const auto& c = std::get<Classification>(res);
  out.json["m"] = c.m;
  out.json["nu"] = to_json(*is_calabi_yau(fan));
  out.json["transform"] = to_json(c.transform);
  return out;
}

CommandOutput cmd_invariants(int m, int l, std::optional<int> max_degree) {
  CommandOutput out;
  out.json["schema"] = 1;
  out.json["command"] = "invariants";
  out.json["m"] = m;
  out.json["center"] = l;

  std::vector<AdmissibleSequence> seqs = enumerate_admissible(m, l);
  ojson list = ojson::array();
  for (const auto& a : seqs) {
    if (max_degree) {
      int deg = 0;
      for (int v : a.s) deg += v;
      if (deg > *max_degree) continue;
    }
    ojson row = ojson::array();
    for (int v : a.s) row.push_back(v);
    list.push_back(std::move(row));
  }
  out.json["sequences"] = std::move(list);
  out.json["count"] = seqs.size();
  if (max_degree) out.json["max_degree"] = *max_degree;

  MultiPoly delta = delta_series(m, l);
  out.json["delta"] = delta.str();
  out.json["delta_terms"] = to_json(delta);
  if (l == m)
    out.json["note"] = "delta_m = 0 by convention: the z^m coefficient carries the zero class only";
  return out;
}

CommandOutput cmd_verify(int m_max, const std::string& mutate, bool timings) {
  if (m_max < 1) throw std::invalid_argument("verify: m-max must be >= 1");
  CommandOutput out;
  out.json["schema"] = 1;
  out.json["command"] = "verify";
  out.json["m_max"] = m_max;
  out.json["mutate"] = mutate.empty() ? ojson(nullptr) : ojson(mutate);

  ConditionSet conds = mutate.empty() ? ConditionSet::all() : parse_mutation(mutate);
  bool pass = true;
  ojson rows = ojson::array();
  for (int m = 1; m <= m_max; ++m) {
    auto start = std::chrono::steady_clock::now();
    VerifyReport r = verify_identity_with(conds, m);
    ojson row{{"m", m}, {"ok", r.ok}};
    if (timings) row["ms"] = round15(elapsed_ms(start));
    if (!r.ok && !out.json.contains("first_mismatch")) {
      ojson exps = ojson::array();
      for (int e : r.mismatch->exps) exps.push_back(e);
      out.json["first_mismatch"] = ojson{{"m", m},
                                         {"i", r.mismatch->i},
                                         {"exps", std::move(exps)},
                                         {"invariants_coeff", r.mismatch->lhs},
                                         {"product_coeff", r.mismatch->rhs}};
    }
    pass = pass && r.ok;
    rows.push_back(std::move(row));
  }
  out.json["results"] = std::move(rows);
  out.json["pass"] = pass;
  out.exit_code = pass ? 0 : 2;
  return out;
}

CommandOutput cmd_periods(const PeriodsArgs& args) {
  CommandOutput out;
  out.json["schema"] = 1;
  out.json["command"] = "periods";
  out.json["m"] = args.m;
  if (args.m < 1) throw std::invalid_argument("periods: m must be >= 1");

  std::vector<double> q = args.q;
  if (!args.offsets.empty()) {
    MomentPolytope p = moment_polytope(args.m, args.offsets);
    std::vector<double> derived = p.kahler_q();
    if (!q.empty()) {
      for (std::size_t j = 0; j < derived.size(); ++j) {
        double rel = std::abs(derived[j] - q[j]) / derived[j];
        if (rel > 1e-9)
          throw MathError(errc::kahler_mismatch,
                          "q derived from the moment polytope disagrees with --q at index " +
                              std::to_string(j + 1));
      }
    }
    q = derived;  // edge lengths win
    out.json["offsets"] = real_array(args.offsets);
    out.json["polytope"] = to_json(p);
  }
  if (q.size() != static_cast<std::size_t>(args.m) - 1)
    throw std::invalid_argument("periods: need m-1 Kahler values");
  out.json["q"] = real_array(q);
  out.json["grid"] = ojson{{"n_t", args.grid.n_t}, {"n_theta", args.grid.n_theta}};
  out.json["tolerance"] = round15(args.tolerance);

  bool pass = true;
  ojson rows = ojson::array();
  std::vector<int> ls;
  if (args.l) {
    ls.push_back(*args.l);
  } else {
    for (int l = 1; l <= args.m - 1; ++l) ls.push_back(l);
  }
  for (int l : ls) {
    CycleSpec spec = CycleSpec::make(args.m, l, q);
    PeriodResult r = period_quadrature(spec, args.grid, args.tolerance);
    cplx closed = period_closed_form(spec);
    double err = std::abs(r.value - closed);
    bool ok = err < args.tolerance;
    pass = pass && ok;
    ojson row = to_json(r, spec);
    row["abs_error_vs_closed_form"] = round15(err);
    row["pass"] = ok;
    rows.push_back(std::move(row));
  }
  out.json["results"] = std::move(rows);

  if (args.m >= 2) {
    HKCheckResult hk = hk_period_check(args.m, q, args.grid, std::max(args.tolerance, 1e-5));
    out.json["hyper_kahler"] = ojson{{"Pi_mirror_I", real_array(hk.mirror.Pi_I)},
                                     {"Pi_mirror_J", real_array(hk.mirror.Pi_J)},
                                     {"Pi_mirror_K", real_array(hk.mirror.Pi_K)},
                                     {"Pi_I", real_array(hk.base.Pi_I)},
                                     {"max_deviation", round15(hk.max_deviation)},
                                     {"pass", hk.pass}};
    pass = pass && hk.pass;
  } else {
    out.json["note"] = "m = 1 has no compact divisors and no cycles to integrate";
  }
  out.json["pass"] = pass;
  out.exit_code = pass ? 0 : 2;
  return out;
}

namespace {

struct SweepSpec {
  int index = 1;  // 1-based q index
  double lo = 0.1, hi = 0.9;
  int count = 9;
};

SweepSpec parse_sweep(const std::string& text, int m) {
  SweepSpec s;
  char eq = 0, c1 = 0, c2 = 0;
  std::istringstream in(text);
  std::string var;
  std::getline(in, var, '=');
  if (var.size() < 2 || var[0] != 'q')
    throw std::invalid_argument("sweep must look like q1=0.1:0.9:9");
  s.index = std::stoi(var.substr(1));
  std::string rest;
  std::getline(in, rest);
  if (std::sscanf(rest.c_str(), "%lf%c%lf%c%d", &s.lo, &c1, &s.hi, &c2, &s.count) != 5 ||
      c1 != ':' || c2 != ':')
    throw std::invalid_argument("sweep must look like q1=0.1:0.9:9");
  (void)eq;
  if (s.index < 1 || s.index > m - 1) throw std::invalid_argument("sweep index out of range");
  if (s.count < 2) throw std::invalid_argument("sweep needs at least 2 points");
  if (!(s.lo > 0.0 && s.hi < 1.0 && s.lo < s.hi))
    throw std::invalid_argument("sweep range must satisfy 0 < lo < hi < 1");
  return s;
}

}  // namespace

CommandOutput cmd_mirror_map(const MirrorMapArgs& args) {
  CommandOutput out;
  out.json["schema"] = 1;
  out.json["command"] = "mirror-map";
  out.json["m"] = args.m;

  if (args.invert) {
    if (args.coefficients.size() != static_cast<std::size_t>(args.m) + 1)
      throw std::invalid_argument("invert: need m+1 coefficients");
    MirrorCoefficients c;
    for (double v : args.coefficients) c.C.emplace_back(v, 0.0);
    out.json["C"] = real_array(args.coefficients);
    auto res = inverse_mirror_map(c);
    if (std::holds_alternative<InverseMapFailure>(res)) {
      const auto& f = std::get<InverseMapFailure>(res);
      out.json["error"] = ojson{{"code", errc_name(f.code)}, {"message", f.message}};
      out.exit_code = 2;
      return out;
    }
    const auto& q = std::get<KahlerPoint>(res);
    if (q.all_real()) {
      out.json["q"] = real_array(q.real_values());
    } else {
      ojson arr = ojson::array();
      for (const cplx& v : q.q()) arr.push_back(to_json(v));
      out.json["q"] = std::move(arr);
    }
    return out;
  }

  if (!args.sweep.empty()) {
    SweepSpec sweep = parse_sweep(args.sweep, args.m);
    std::vector<double> base = args.q;
    if (base.empty()) base.assign(args.m - 1, 0.5);
    if (base.size() != static_cast<std::size_t>(args.m) - 1)
      throw std::invalid_argument("sweep base point needs m-1 values");
    std::string csv;
    for (int j = 1; j <= args.m - 1; ++j) csv += csv_field("q" + std::to_string(j)) + ",";
    for (int i = 0; i <= args.m; ++i) {
      csv += csv_field("C" + std::to_string(i));
      csv += (i == args.m) ? "\n" : ",";
    }
    ojson rows = ojson::array();
    for (int k = 0; k < sweep.count; ++k) {
      std::vector<double> q = base;
      q[sweep.index - 1] = sweep.lo + (sweep.hi - sweep.lo) * k / (sweep.count - 1);
      MirrorCoefficients c = mirror_map(args.m, KahlerPoint::make_real(q));
      ojson row{{"q", real_array(q)}};
      ojson cs = ojson::array();
      std::string line;
      for (double v : q) line += format_double(round15(v)) + ",";
      for (int i = 0; i <= args.m; ++i) {
        double re = round15(c.C[i].real());
        cs.push_back(re);
        line += format_double(re);
        line += (i == args.m) ? "\n" : ",";
      }
      row["C"] = std::move(cs);
      rows.push_back(std::move(row));
      csv += line;
    }
    out.json["sweep"] = args.sweep;
    out.json["rows"] = std::move(rows);
    out.csv = std::move(csv);
    return out;
  }

  if (args.q.size() != static_cast<std::size_t>(args.m) - 1)
    throw std::invalid_argument("mirror-map: need m-1 Kahler values");
  KahlerPoint q = KahlerPoint::make_real(args.q);
  MirrorCoefficients c = mirror_map(args.m, q);
  out.json["q"] = real_array(args.q);
  ojson cs = ojson::array();
  for (const cplx& v : c.C) cs.push_back(round15(v.real()));
  out.json["C"] = std::move(cs);

  auto inv = inverse_mirror_map(c);
  if (std::holds_alternative<KahlerPoint>(inv)) {
    const auto& back = std::get<KahlerPoint>(inv);
    double worst = 0.0;
    for (std::size_t j = 0; j < back.size(); ++j)
      worst = std::max(worst, std::abs(back.q()[j] - cplx(args.q[j])) / args.q[j]);
    out.json["roundtrip"] =
        ojson{{"q", real_array(back.all_real() ? back.real_values() : args.q)},
              {"max_rel_error", round15(worst)}};
  }
  return out;
}

CommandOutput cmd_check_all(const CheckAllArgs& args) {
  CommandOutput out;
  out.json["schema"] = 1;
  out.json["command"] = "check-all";
  out.json["m_max"] = args.m_max;
  out.json["seed"] = args.seed;
  out.json["samples"] = args.samples;
  ojson stages = ojson::array();
  bool pass = true;

  // Stage 1: the exact gluing identity.
  {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (int m = 1; m <= std::max(args.m_max, 8) && ok; ++m) ok = verify_identity(m).ok;
    ojson stage{{"name", "verify-identity"}, {"m_max", std::max(args.m_max, 8)}, {"pass", ok}};
    if (args.timings) stage["ms"] = round15(elapsed_ms(start));
    stages.push_back(std::move(stage));
    pass = pass && ok;
  }

  std::mt19937_64 rng(args.seed);
  std::uniform_real_distribution<double> qd(0.1, 0.9);

  // Stage 2: period identity + hyper-Kahler swap over a random sweep.
  {
    auto start = std::chrono::steady_clock::now();
    struct Sample {
      int m;
      std::vector<double> q;
    };
    std::vector<Sample> samples;
    for (int m = 2; m <= args.m_max; ++m) {
      for (int s = 0; s < args.samples; ++s) {
        Sample smp;
        smp.m = m;
        smp.q.resize(m - 1);
        for (double& v : smp.q) v = qd(rng);
        samples.push_back(std::move(smp));
      }
    }
    std::vector<double> period_err(samples.size(), 0.0);
    std::vector<double> hk_dev(samples.size(), 0.0);
    std::vector<char> lagrangian_ok(samples.size(), 1);
    parallel_for(samples.size(), [&](std::size_t i) {
      const Sample& smp = samples[i];
      double worst = 0.0;
      for (int l = 1; l <= smp.m - 1; ++l) {
        CycleSpec spec = CycleSpec::make(smp.m, l, smp.q);
        PeriodResult r = period_quadrature(spec, args.grid, 1e-3);
        worst = std::max(worst, std::abs(r.value - period_closed_form(spec)));
        LagrangianResidual good = lagrangian_residual(spec, QuadratureParams{16, 16});
        LagrangianResidual bad = lagrangian_residual(spec, QuadratureParams{16, 16}, 0.1);
        if (!(good.omega_max < 1e-6 && good.im_volume_max < 1e-6 && bad.omega_max > 1e-3))
          lagrangian_ok[i] = 0;
      }
      period_err[i] = worst;
      hk_dev[i] = hk_period_check(smp.m, smp.q, args.grid, 1e-5).max_deviation;
    });
    double max_err = 0.0, max_dev = 0.0;
    bool lag_ok = true;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      max_err = std::max(max_err, period_err[i]);
      max_dev = std::max(max_dev, hk_dev[i]);
      lag_ok = lag_ok && lagrangian_ok[i];
    }
    bool ok = max_err < args.tolerance;
    bool hk_ok = max_dev < 1e-5;
    ojson stage{{"name", "periods"},
                {"samples", samples.size()},
                {"max_abs_error", round15(max_err)},
                {"pass", ok}};
    if (args.timings) stage["ms"] = round15(elapsed_ms(start));
    stages.push_back(std::move(stage));
    stages.push_back(ojson{{"name", "special-lagrangian"}, {"pass", lag_ok}});
    stages.push_back(
        ojson{{"name", "hyper-kahler"}, {"max_deviation", round15(max_dev)}, {"pass", hk_ok}});
    pass = pass && ok && hk_ok && lag_ok;
  }

  // Stage 3: mirror-map roundtrip.
  {
    auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      int m = 2 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, args.m_max - 1)));
      std::vector<double> q(m - 1);
      for (double& v : q) v = qd(rng);
      auto inv = inverse_mirror_map(mirror_map(m, KahlerPoint::make_real(q)));
      if (!std::holds_alternative<KahlerPoint>(inv)) {
        worst = 1.0;
        break;
      }
      const auto& back = std::get<KahlerPoint>(inv).q();
      for (int j = 0; j < m - 1; ++j)
        worst = std::max(worst, std::abs(back[j] - cplx(q[j])) / q[j]);
    }
    bool ok = worst < 1e-10;
    ojson stage{{"name", "mirror-roundtrip"}, {"max_rel_error", round15(worst)}, {"pass", ok}};
    if (args.timings) stage["ms"] = round15(elapsed_ms(start));
    stages.push_back(std::move(stage));
    pass = pass && ok;
  }

  out.json["stages"] = std::move(stages);
  out.json["pass"] = pass;
  out.exit_code = pass ? 0 : 2;
  return out;
}

}  // namespace syzkit::cli
