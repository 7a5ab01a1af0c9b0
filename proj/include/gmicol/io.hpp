// SPDX-License-Identifier: Apache-2.0
//
// Instance files, report serialization, and the command entry points shared
// by the command-line tool and the python module. Instances are JSON
// documents with integer (or integer-string) entries:
//
//   {
//     "name": "box",
//     "A": [[2,0,-1,0],[0,2,0,-1]],   // row i: variable i across constraints
//     "b": [1,1],
//     "c": [3,3,0,0],
//     "int_set": [1,2],               // 1-based variable indices
//     "assume_integer_value": false,  // optional
//     "oracle_bounds": [[0,1],[0,1]]  // optional, parallel to int_set
//   }
//
// All rational quantities in outputs are exact integer or "p/q" strings.

#pragma once

#include <string>

#include "gmicol/oracle.hpp"
#include "gmicol/reformulate.hpp"

namespace gmicol {

struct InstanceFile {
  DualFormMIP mip;
  std::string name;
  bool assume_integer_value = false;
  std::optional<std::vector<IntegerInterval>> oracle_bounds;
};

InstanceFile parse_instance_text(const std::string& text);
InstanceFile parse_instance(const std::string& path);
std::string serialize_instance(const InstanceFile& inst);

// Bounds file: JSON array of [lo, hi] integer pairs, one per int_set entry.
std::vector<IntegerInterval> parse_bounds_text(const std::string& text);

struct SolveCliOptions {
  bool assume_integer_value = false; // command-line override of the file flag
  bool verify_bounded = false;
  std::string trace_path;            // solve only: stream destination
  long max_iterations = 10000;
  long max_pivots = 100000;
};

// exit_code 0/2/3 mirror optimal/infeasible/limit-reached; 1 is any error.
// output is the command's standard output (JSON, or JSON lines for trace
// and the stream part of check); error holds the message for exit code 1.
struct CommandResult {
  int exit_code = 0;
  std::string output;
  std::string error;
};

CommandResult cmd_solve(const std::string& instance_text, const SolveCliOptions& opts);
CommandResult cmd_lp(const std::string& instance_text);
CommandResult cmd_oracle(const std::string& instance_text,
                         const std::string& bounds_text = "");
CommandResult cmd_check(const std::string& instance_text, bool inject_bad_cut = false);
CommandResult cmd_trace(const std::string& instance_text, const SolveCliOptions& opts);

std::string read_file(const std::string& path);

}  // namespace gmicol
