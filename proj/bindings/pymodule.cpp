// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>

#include "gmicol/io.hpp"

namespace py = pybind11;

namespace {

// The extension speaks JSON text on both sides; the python package layers
// dict conversion on top. Errors surface as ValueError with the solver's
// message.
py::dict as_dict(const gmicol::CommandResult& res) {
  if (res.exit_code == 1 && !res.error.empty()) {
    throw py::value_error(res.error);
  }
  py::dict out;
  out["exit_code"] = res.exit_code;
  out["output"] = res.output;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact cutting-plane solver for dual-form mixed-integer programs";
  m.attr("__version__") = "0.1.0";

  m.def(
      "solve",
      [](const std::string& instance_text, bool assume_integer_value,
         bool verify_bounded, long max_iterations, long max_pivots) {
        gmicol::SolveCliOptions opts;
        opts.assume_integer_value = assume_integer_value;
        opts.verify_bounded = verify_bounded;
        opts.max_iterations = max_iterations;
        opts.max_pivots = max_pivots;
        return as_dict(gmicol::cmd_solve(instance_text, opts));
      },
      py::arg("instance_text"), py::arg("assume_integer_value") = false,
      py::arg("verify_bounded") = false, py::arg("max_iterations") = 10000,
      py::arg("max_pivots") = 100000,
      "Solve an instance to integer optimality; returns exit_code and JSON text.");

  m.def(
      "lp",
      [](const std::string& instance_text) {
        return as_dict(gmicol::cmd_lp(instance_text));
      },
      py::arg("instance_text"), "Solve the plain relaxation only.");

  m.def(
      "oracle",
      [](const std::string& instance_text, const std::string& bounds_text) {
        return as_dict(gmicol::cmd_oracle(instance_text, bounds_text));
      },
      py::arg("instance_text"), py::arg("bounds_text") = "",
      "Solve by bounded enumeration (independent reference).");

  m.def(
      "check",
      [](const std::string& instance_text, bool inject_bad_cut) {
        // check reports failures through its JSON payload, so a nonzero
        // exit code is data here, not an error.
        const gmicol::CommandResult res =
            gmicol::cmd_check(instance_text, inject_bad_cut);
        if (res.exit_code == 1 && res.output.empty()) {
          throw py::value_error(res.error);
        }
        py::dict out;
        out["exit_code"] = res.exit_code;
        out["output"] = res.output;
        return out;
      },
      py::arg("instance_text"), py::arg("inject_bad_cut") = false,
      "Solve, enumerate, and cross-validate the run.");

  m.def(
      "trace",
      [](const std::string& instance_text, bool assume_integer_value,
         long max_iterations, long max_pivots) {
        gmicol::SolveCliOptions opts;
        opts.assume_integer_value = assume_integer_value;
        opts.max_iterations = max_iterations;
        opts.max_pivots = max_pivots;
        return as_dict(gmicol::cmd_trace(instance_text, opts));
      },
      py::arg("instance_text"), py::arg("assume_integer_value") = false,
      py::arg("max_iterations") = 10000, py::arg("max_pivots") = 100000,
      "Solve and return the JSONL event stream.");
}
