// syzkit: toric Calabi-Yau surfaces, open Gromov-Witten invariants, SYZ
// mirror gluing and period checks from the command line.
#include <CLI11.hpp>

#include <iostream>

#include "cli_commands.hpp"
#include "syzkit/errors.hpp"

using namespace syzkit;

namespace {

int emit(const cli::CommandOutput& out, const std::string& format) {
  std::cout << cli::render(out, format);
  return out.exit_code;
}

int fail(const std::string& command, const std::string& code, const std::string& message,
         const std::string& format, int exit_code) {
  cli::CommandOutput out;
  out.json["schema"] = 1;
  out.json["command"] = command;
  out.json["error"] = ojson{{"code", code}, {"message", message}};
  out.exit_code = exit_code;
  return emit(out, format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"syzkit: SYZ mirrors of toric Calabi-Yau surfaces"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  std::string format = "json";
  app.add_option("--format", format, "Output format: json, csv, pretty")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));

  std::string rays;
  std::string rays_file;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a fan as X_{Sigma_m}");
  classify_cmd->add_option("--rays", rays, "Ray list, e.g. \"0,1;1,1;2,1\"");
  classify_cmd->add_option("--input", rays_file, "JSON fan file with a \"rays\" array");

  int inv_m = 3, inv_l = 1;
  int inv_maxdeg = -1;
  auto* inv_cmd = app.add_subcommand("invariants", "Admissible sequences and delta_l");
  inv_cmd->add_option("--m", inv_m, "Fan parameter m")->required();
  inv_cmd->add_option("--l", inv_l, "Center l in 1..m")->required();
  inv_cmd->add_option("--max-degree", inv_maxdeg, "List only sequences of total degree <= D");

  int verify_mmax = 8;
  std::string mutate;
  bool timings = false;
  app.add_flag("--timings", timings, "Include volatile timing fields in reports");
  auto* verify_cmd = app.add_subcommand("verify", "Check the gluing identity for m = 1..m_max");
  verify_cmd->add_option("--m-max", verify_mmax, "Largest m to verify");
  verify_cmd->add_option("--mutate", mutate, "drop-cond-1..4: rerun with one condition removed");

  cli::PeriodsArgs pargs;
  std::vector<int> grid_flat;
  auto* periods_cmd = app.add_subcommand("periods", "Quadrature vs closed-form periods");
  periods_cmd->add_option("--m", pargs.m, "Fan parameter m")->required();
  periods_cmd->add_option("--q", pargs.q, "Kahler values q_1..q_{m-1}")->delimiter(',');
  periods_cmd->add_option("--c", pargs.offsets, "Moment polytope offsets c_0..c_m")->delimiter(',');
  int periods_l = 0;
  periods_cmd->add_option("--l", periods_l, "Single cycle index (default: all)");
  periods_cmd->add_option("--grid", grid_flat, "Grid n_t,n_theta")->delimiter(',')->expected(2);
  periods_cmd->add_option("--tolerance", pargs.tolerance, "Accuracy requirement");

  cli::MirrorMapArgs margs;
  auto* mirror_cmd = app.add_subcommand("mirror-map", "Mirror map, inverse and sweeps");
  mirror_cmd->add_option("--m", margs.m, "Fan parameter m")->required();
  mirror_cmd->add_option("--q", margs.q, "Kahler values")->delimiter(',');
  mirror_cmd->add_option("--C", margs.coefficients, "Coefficients C_0..C_m")->delimiter(',');
  mirror_cmd->add_flag("--invert", margs.invert, "Recover q from C");
  mirror_cmd->add_option("--sweep", margs.sweep, "qJ=LO:HI:N coefficient sweep");
  bool csv_flag = false;
  mirror_cmd->add_flag("--csv", csv_flag, "Emit CSV (same as --format csv)");

  cli::CheckAllArgs cargs;
  auto* check_cmd = app.add_subcommand("check-all", "Full verification pipeline");
  check_cmd->add_option("--m-max", cargs.m_max, "Largest m in the sweeps");
  check_cmd->add_option("--seed", cargs.seed, "Seed for the randomized sweeps");
  check_cmd->add_option("--samples", cargs.samples, "q samples per m");
  check_cmd->add_option("--tolerance", cargs.tolerance, "Period accuracy requirement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (classify_cmd->parsed()) {
      if (rays.empty() && rays_file.empty())
        throw std::invalid_argument("classify needs --rays or --input");
      return emit(cli::cmd_classify(rays, rays_file), format);
    }
    if (inv_cmd->parsed()) {
      std::optional<int> maxdeg;
      if (inv_maxdeg >= 0) maxdeg = inv_maxdeg;
      return emit(cli::cmd_invariants(inv_m, inv_l, maxdeg), format);
    }
    if (verify_cmd->parsed()) return emit(cli::cmd_verify(verify_mmax, mutate, timings), format);
    if (periods_cmd->parsed()) {
      if (periods_l > 0) pargs.l = periods_l;
      if (!grid_flat.empty()) pargs.grid = QuadratureParams{grid_flat[0], grid_flat[1]};
      return emit(cli::cmd_periods(pargs), format);
    }
    if (mirror_cmd->parsed()) {
      if (csv_flag) format = "csv";
      return emit(cli::cmd_mirror_map(margs), format);
    }
    if (check_cmd->parsed()) {
      cargs.timings = timings;
      return emit(cli::cmd_check_all(cargs), format);
    }
  } catch (const MathError& e) {
    return fail(command, errc_name(e.code()), e.what(), format, 2);
  } catch (const std::invalid_argument& e) {
    return fail(command, "InvalidArgument", e.what(), format, 1);
  } catch (const std::out_of_range& e) {
    return fail(command, "OutOfRange", e.what(), format, 1);
  }
  return 1;
}
