// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gmicol/io.hpp"

namespace {

int emit(const gmicol::CommandResult& res) {
  if (!res.output.empty()) std::cout << res.output;
  if (!res.error.empty()) std::cerr << "error: " << res.error << "\n";
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cutting-plane solver for dual-form mixed-integer programs"};
  app.require_subcommand(1);

  std::string solve_file;
  gmicol::SolveCliOptions solve_opts;
  bool solve_lp_only = false;
  CLI::App* solve = app.add_subcommand(
      "solve", "Solve an instance to integer optimality");
  solve->add_option("file", solve_file, "instance JSON file")->required();
  solve->add_flag("--assume-integer-value", solve_opts.assume_integer_value,
                  "assert that the optimal value is integral even though the "
                  "objective touches continuous variables");
  solve->add_flag("--verify-bounded", solve_opts.verify_bounded,
                  "certify the feasible region is bounded before solving");
  solve->add_flag("--lp", solve_lp_only, "stop at the plain relaxation");
  solve->add_option("--trace", solve_opts.trace_path,
                    "write a JSONL event stream to this file");
  solve->add_option("--max-iter", solve_opts.max_iterations, "cut-iteration limit");
  solve->add_option("--max-pivots", solve_opts.max_pivots, "total pivot limit");

  std::string lp_file;
  CLI::App* lp = app.add_subcommand("lp", "Solve the relaxation only");
  lp->add_option("file", lp_file, "instance JSON file")->required();

  std::string oracle_file;
  std::string oracle_bounds_file;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Solve by bounded enumeration (independent reference)");
  oracle->add_option("file", oracle_file, "instance JSON file")->required();
  oracle->add_option("--bounds", oracle_bounds_file,
                     "JSON file with [lo, hi] ranges for the integer variables");

  std::string check_file;
  bool inject_bad_cut = false;
  CLI::App* check = app.add_subcommand(
      "check", "Solve, enumerate, and cross-validate the run");
  check->add_option("file", check_file, "instance JSON file")->required();
  check->add_flag("--inject-bad-cut", inject_bad_cut,
                  "corrupt recorded cuts to confirm the validator rejects them");

  std::string trace_file;
  gmicol::SolveCliOptions trace_opts;
  CLI::App* trace = app.add_subcommand(
      "trace", "Solve and stream per-pivot JSONL events to stdout");
  trace->add_option("file", trace_file, "instance JSON file")->required();
  trace->add_flag("--assume-integer-value", trace_opts.assume_integer_value,
                  "assert that the optimal value is integral even though the "
                  "objective touches continuous variables");
  trace->add_option("--max-iter", trace_opts.max_iterations, "cut-iteration limit");
  trace->add_option("--max-pivots", trace_opts.max_pivots, "total pivot limit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      const std::string text = gmicol::read_file(solve_file);
      if (solve_lp_only) return emit(gmicol::cmd_lp(text));
      return emit(gmicol::cmd_solve(text, solve_opts));
    }
    if (lp->parsed()) {
      return emit(gmicol::cmd_lp(gmicol::read_file(lp_file)));
    }
    if (oracle->parsed()) {
      const std::string text = gmicol::read_file(oracle_file);
      std::string bounds_text;
      if (!oracle_bounds_file.empty()) {
        bounds_text = gmicol::read_file(oracle_bounds_file);
      }
      return emit(gmicol::cmd_oracle(text, bounds_text));
    }
    if (check->parsed()) {
      return emit(gmicol::cmd_check(gmicol::read_file(check_file), inject_bad_cut));
    }
    if (trace->parsed()) {
      return emit(gmicol::cmd_trace(gmicol::read_file(trace_file), trace_opts));
    }
  } catch (const gmicol::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
