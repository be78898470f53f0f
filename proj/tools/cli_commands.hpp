#ifndef SYZKIT_CLI_COMMANDS_HPP
#define SYZKIT_CLI_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "syzkit/json_io.hpp"
#include "syzkit/quadrature.hpp"

namespace syzkit::cli {

// Exit codes: 0 pass, 1 usage/parse error, 2 mathematical failure.
struct CommandOutput {
  ojson json;
  std::string csv;  // set by CSV-emitting commands
  int exit_code = 0;
};

// Renders the report in the requested format (json | csv | pretty).
std::string render(const CommandOutput& out, const std::string& format);

// Accepts the shell syntax "x,y;x,y;..." or, with rays_text naming a file
// via `input_file`, a JSON object {"rays": [[x,y],...]}.
CommandOutput cmd_classify(const std::string& rays_text, const std::string& input_file = "");

CommandOutput cmd_invariants(int m, int l, std::optional<int> max_degree = std::nullopt);

// mutate: "" or "drop-cond-N" with N in 1..4.  Timing columns are volatile,
// so they enter the JSON only on request (reports must be byte-identical
// across identical invocations).
CommandOutput cmd_verify(int m_max, const std::string& mutate = "", bool timings = false);

struct PeriodsArgs {
  int m = 2;
  std::vector<double> q;        // direct Kahler values
  std::vector<double> offsets;  // moment-polytope offsets c_0..c_m (optional)
  std::optional<int> l;         // default: all l in 1..m-1
  QuadratureParams grid{32, 128};
  double tolerance = 1e-6;
};
CommandOutput cmd_periods(const PeriodsArgs& args);

struct MirrorMapArgs {
  int m = 2;
  std::vector<double> q;
  std::vector<double> coefficients;  // with --invert
  bool invert = false;
  std::string sweep;  // "qJ=LO:HI:N" emits CSV of the swept coefficients
};
CommandOutput cmd_mirror_map(const MirrorMapArgs& args);

struct CheckAllArgs {
  int m_max = 5;
  unsigned long seed = 12345;
  int samples = 10;  // q samples per m in the period sweep
  double tolerance = 1e-6;
  QuadratureParams grid{32, 128};
  bool timings = false;
};
CommandOutput cmd_check_all(const CheckAllArgs& args);

}  // namespace syzkit::cli

#endif
