#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "cli_commands.hpp"
#include "syzkit/errors.hpp"

using namespace syzkit;
using namespace syzkit::cli;

namespace {

// Runs the installed binary (path via SYZKIT_BIN) and captures stdout.
struct RunResult {
  std::string out;
  int exit_code = -1;
};

RunResult run_binary(const std::string& args) {
  const char* bin = std::getenv("SYZKIT_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

}  // namespace

TEST_CASE("classify command") {
  CommandOutput ok = cmd_classify("0,1;1,1;2,1");
  CHECK(ok.exit_code == 0);
  CHECK(ok.json["schema"] == 1);
  CHECK(ok.json["m"] == 2);
  CHECK(ok.json["nu"] == ojson::array({0, 1}));

  CommandOutput not_cy = cmd_classify("1,0;0,1;-1,-1");
  CHECK(not_cy.exit_code == 2);
  CHECK(not_cy.json["error"]["code"] == "NotCY");

  CHECK_THROWS_AS(cmd_classify(""), std::invalid_argument);
  CHECK_THROWS_AS(cmd_classify("1,0;nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(cmd_classify("2,2"), std::invalid_argument);  // non-primitive
}

TEST_CASE("invariants command") {
  CommandOutput r = cmd_invariants(3, 2);
  CHECK(r.exit_code == 0);
  CHECK(r.json["count"] == 3);
  CHECK(r.json["delta"] == "q2 + q1*q2");
  CHECK(r.json["sequences"] ==
        ojson::array({ojson::array({0, 0}), ojson::array({0, 1}), ojson::array({1, 1})}));

  CommandOutput r2 = cmd_invariants(2, 1);
  CHECK(r2.json["sequences"] == ojson::array({ojson::array({0}), ojson::array({1})}));

  CommandOutput r5 = cmd_invariants(5, 5);
  CHECK(r5.json["delta"] == "0");
  CHECK(r5.json.contains("note"));
}

TEST_CASE("verify command") {
  CommandOutput r = cmd_verify(8);
  CHECK(r.exit_code == 0);
  CHECK(r.json["pass"] == true);
  CHECK(r.json["results"].size() == 8);

  CommandOutput r1 = cmd_verify(1);
  CHECK(r1.json["pass"] == true);

  CommandOutput mut = cmd_verify(4, "drop-cond-4");
  CHECK(mut.exit_code == 2);
  CHECK(mut.json["pass"] == false);
  REQUIRE(mut.json.contains("first_mismatch"));
  CHECK(mut.json["first_mismatch"]["invariants_coeff"] != mut.json["first_mismatch"]["product_coeff"]);

  CHECK_THROWS_AS(cmd_verify(4, "drop-cond-9"), std::invalid_argument);
}

TEST_CASE("periods command") {
  PeriodsArgs args;
  args.m = 2;
  args.q = {0.25};
  CommandOutput r = cmd_periods(args);
  CHECK(r.exit_code == 0);
  CHECK(r.json["pass"] == true);
  double re = r.json["results"][0]["period"][0].get<double>();
  CHECK(re == doctest::Approx(std::log(0.25)).epsilon(1e-6));
  CHECK(r.json["hyper_kahler"]["pass"] == true);

  // Kahler data via moment-polytope offsets: edge length 1 gives q = e^{-1}.
  PeriodsArgs via_c;
  via_c.m = 2;
  via_c.offsets = {0.0, 0.0, -1.0};
  CommandOutput rc = cmd_periods(via_c);
  CHECK(rc.exit_code == 0);
  CHECK(rc.json["q"][0].get<double>() == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));

  // Offsets win, mismatching explicit q is an error.
  PeriodsArgs clash = via_c;
  clash.q = {0.5};
  CHECK_THROWS_AS(cmd_periods(clash), MathError);

  PeriodsArgs degenerate;
  degenerate.m = 2;
  degenerate.q = {1.0};
  CHECK_THROWS_AS(cmd_periods(degenerate), MathError);
}

TEST_CASE("mirror-map command") {
  MirrorMapArgs fwd;
  fwd.m = 2;
  fwd.q = {0.5};
  CommandOutput r = cmd_mirror_map(fwd);
  CHECK(r.json["C"] == ojson::array({1.0, 1.5, 0.5}));
  CHECK(r.json["roundtrip"]["max_rel_error"].get<double>() < 1e-10);

  MirrorMapArgs inv;
  inv.m = 2;
  inv.coefficients = {1.0, 1.5, 0.5};
  inv.invert = true;
  CommandOutput ri = cmd_mirror_map(inv);
  CHECK(ri.json["q"][0].get<double>() == doctest::Approx(0.5).epsilon(1e-10));

  MirrorMapArgs dbl = inv;
  dbl.coefficients = {1.0, 2.0, 1.0};
  CommandOutput rd = cmd_mirror_map(dbl);
  CHECK(rd.exit_code == 2);
  CHECK(rd.json["error"]["code"] == "RootSeparationFailure");

  MirrorMapArgs sweep;
  sweep.m = 2;
  sweep.sweep = "q1=0.1:0.9:9";
  CommandOutput rs = cmd_mirror_map(sweep);
  REQUIRE(rs.json["rows"].size() == 9);
  // C_1 = 1 + q_1 is monotone along the sweep.
  double prev = -1.0;
  for (const auto& row : rs.json["rows"]) {
    double c1 = row["C"][1].get<double>();
    CHECK(c1 > prev);
    prev = c1;
  }
  // CSV: header + 9 rows.
  int lines = 0;
  for (char ch : rs.csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 10);

  MirrorMapArgs bad_sweep = sweep;
  bad_sweep.sweep = "q7=0.1:0.9:9";
  CHECK_THROWS_AS(cmd_mirror_map(bad_sweep), std::invalid_argument);
}

TEST_CASE("check-all composes the pipeline") {
  CheckAllArgs args;
  args.m_max = 3;
  args.samples = 3;
  CommandOutput r = cmd_check_all(args);
  CHECK(r.exit_code == 0);
  CHECK(r.json["pass"] == true);
  bool saw_verify = false, saw_periods = false, saw_roundtrip = false;
  for (const auto& stage : r.json["stages"]) {
    if (stage["name"] == "verify-identity") saw_verify = true;
    if (stage["name"] == "periods") saw_periods = true;
    if (stage["name"] == "mirror-roundtrip") saw_roundtrip = true;
    CHECK(stage["pass"] == true);
  }
  CHECK(saw_verify);
  CHECK(saw_periods);
  CHECK(saw_roundtrip);
}

TEST_CASE("reports are deterministic") {
  // Timing fields are opt-in, so default reports match byte for byte.
  CheckAllArgs args;
  args.m_max = 3;
  args.samples = 2;
  CHECK(cmd_check_all(args).json.dump() == cmd_check_all(args).json.dump());

  CheckAllArgs timed = args;
  timed.timings = true;
  CHECK(cmd_check_all(timed).json["stages"][0].contains("ms"));
  CHECK_FALSE(cmd_check_all(args).json["stages"][0].contains("ms"));

  PeriodsArgs pa;
  pa.m = 3;
  pa.q = {0.5, 0.3};
  CHECK(cmd_periods(pa).json.dump() == cmd_periods(pa).json.dump());
}

TEST_CASE("binary end-to-end: byte-identical reruns and exit codes") {
  RunResult a = run_binary("classify --rays \"0,1;1,1;2,1\"");
  RunResult b = run_binary("classify --rays \"0,1;1,1;2,1\"");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"m\": 2") != std::string::npos);

  RunResult p1 = run_binary("periods --m 3 --q 0.5,0.3 --l 2");
  RunResult p2 = run_binary("periods --m 3 --q 0.5,0.3 --l 2");
  CHECK(p1.exit_code == 0);
  CHECK(p1.out == p2.out);

  CHECK(run_binary("classify --rays \"1,0;0,1;-1,-1\"").exit_code == 2);
  CHECK(run_binary("classify --rays oops").exit_code == 1);
  CHECK(run_binary("periods --m 2 --q 1.0").exit_code == 2);
  CHECK(run_binary("nonsense-subcommand").exit_code == 1);

  RunResult csv = run_binary("mirror-map --m 2 --sweep q1=0.1:0.9:9 --csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("q1,C0,C1,C2\n", 0) == 0);
}

TEST_CASE("binary end-to-end: thread cap does not change the report") {
  RunResult one = run_binary("check-all --m-max 3 --samples 2");
  CHECK(one.exit_code == 0);
  const char* bin = std::getenv("SYZKIT_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string("SYZKIT_THREADS=1 ") + bin + " check-all --m-max 3 --samples 2";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string capped;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) capped.append(buf, n);
  pclose(pipe);
  CHECK(one.out == capped);
}

TEST_CASE("binary end-to-end: fan input file") {
  std::string path = "/tmp/syzkit_test_fan.json";
  {
    FILE* f = std::fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    std::fputs("{\"rays\": [[0,1],[1,1],[2,1],[3,1]]}", f);
    std::fclose(f);
  }
  RunResult r = run_binary("classify --input " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"m\": 3") != std::string::npos);
  std::remove(path.c_str());
}
