// SPDX-License-Identifier: Apache-2.0

#include "gmicol/io.hpp"

#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "gmicol/solver.hpp"

namespace gmicol {

namespace {

using json = nlohmann::ordered_json;

Rational entry_to_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    return Rational(static_cast<long long>(v.get<long long>()));
  }
  if (v.is_string()) {
    return parse_rational(v.get<std::string>());
  }
  throw ValidationError(where + " must be an integer or a rational string");
}

Rational integral_entry(const json& v, const std::string& where) {
  const Rational q = entry_to_rational(v, where);
  if (!is_integral(q)) {
    throw ValidationError(where + " must be integral");
  }
  return q;
}

const json& require_field(const json& doc, const std::string& key) {
  const auto it = doc.find(key);
  if (it == doc.end()) {
    throw ParseError("missing required field \"" + key + "\"");
  }
  return *it;
}

// Integer entries within long long range serialize as JSON numbers,
// anything larger as strings; both re-parse identically.
json integer_to_json(const Rational& q) {
  const Integer n = numerator(q);
  if (n >= std::numeric_limits<long long>::min() &&
      n <= std::numeric_limits<long long>::max()) {
    return json(static_cast<long long>(n));
  }
  return json(n.str());
}

json rat_to_json(const Rational& q) { return json(to_string(q)); }

json vec_to_json(const RatVector& v) {
  json arr = json::array();
  for (const Rational& x : v) arr.push_back(rat_to_json(x));
  return arr;
}

json report_to_json(const InstanceFile& inst, const SolveReport& report) {
  json out;
  if (!inst.name.empty()) out["name"] = inst.name;
  switch (report.status) {
    case SolveReportStatus::Optimal:
      out["status"] = "optimal";
      out["value"] = rat_to_json(*report.value);
      out["y"] = vec_to_json(*report.y);
      break;
    case SolveReportStatus::Infeasible:
      out["status"] = "infeasible";
      break;
    case SolveReportStatus::LimitReached:
      out["status"] = "limit_reached";
      break;
  }
  out["cut_iterations"] = report.iterations.size();
  out["total_pivots"] = report.total_pivots;
  return out;
}

json cut_to_json(const CutColumn& cut) {
  json out;
  out["i"] = cut.i;
  out["r"] = vec_to_json(cut.r);
  out["floor_yi"] = cut.floor_yi.str();
  out["f"] = rat_to_json(cut.f);
  out["column"] = vec_to_json(cut.column);
  out["cost"] = rat_to_json(cut.cost);
  return out;
}

json diag_to_json(const CutDiagnostics& d) {
  const auto line = [](const LineCoeffs& lc) {
    json out;
    out["yi_coeff"] = to_string(lc.yi);
    out["z_coeff"] = to_string(lc.z);
    out["rhs"] = to_string(lc.rhs);
    return out;
  };
  json out;
  out["alpha_i_r"] = rat_to_json(d.alpha_i_r);
  out["alpha_integral"] = d.alpha_integral;
  out["b1"] = line(d.b1_coeffs);
  out["b2"] = line(d.b2_coeffs);
  out["z1"] = rat_to_json(d.z1);
  out["z2"] = rat_to_json(d.z2);
  if (d.slope) {
    out["slope"] = rat_to_json(*d.slope);
  } else {
    out["slope"] = "infinite";
  }
  out["ystar"] = rat_to_json(d.ystar_zstar.first);
  out["zstar"] = rat_to_json(d.ystar_zstar.second);
  out["w1_beta"] = vec_to_json(d.w1_beta);
  out["w2_beta"] = vec_to_json(d.w2_beta);
  out["violation"] = rat_to_json(d.violation);
  return out;
}

json iteration_to_json(const IterationRecord& rec) {
  json out;
  out["type"] = "iteration";
  out["t"] = rec.t;
  out["frac_index"] = rec.frac_index;
  out["ybar_before"] = vec_to_json(rec.ybar_before);
  out["cut"] = cut_to_json(rec.cut);
  out["pivots"] = rec.pivots;
  if (rec.first_pivot) {
    json fp;
    fp["leaving_row"] = rec.first_pivot->leaving_row;
    fp["delta"] = rat_to_json(rec.first_pivot->delta);
    fp["ybar_after"] = vec_to_json(rec.first_pivot->ybar_after);
    out["first_pivot"] = fp;
  }
  if (rec.diag) out["diagnostics"] = diag_to_json(*rec.diag);
  return out;
}

json pivot_to_json(const PivotEvent& ev) {
  json out;
  out["type"] = "pivot";
  out["entering"] = ev.entering;
  out["leaving_row"] = ev.leaving_row;
  out["delta"] = rat_to_json(ev.delta);
  out["ybar_after"] = vec_to_json(ev.ybar_after);
  return out;
}

InstanceFile parse_instance_json(const json& doc) {
  if (!doc.is_object()) {
    throw ParseError("instance must be a JSON object");
  }
  InstanceFile inst;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("\"name\" must be a string");
    inst.name = doc["name"].get<std::string>();
  }

  const json& a = require_field(doc, "A");
  if (!a.is_array() || a.empty()) {
    throw ParseError("\"A\" must be a nonempty array of rows");
  }
  const int m = static_cast<int>(a.size());
  if (!a[0].is_array() || a[0].empty()) {
    throw ParseError("\"A\" rows must be nonempty arrays");
  }
  const int n = static_cast<int>(a[0].size());
  inst.mip.A = RatMatrix(m, n);
  for (int i = 0; i < m; ++i) {
    if (!a[i].is_array() || static_cast<int>(a[i].size()) != n) {
      throw ParseError("\"A\" row " + std::to_string(i + 1) +
                       " has a different length than row 1");
    }
    for (int j = 0; j < n; ++j) {
      inst.mip.A(i, j) = integral_entry(
          a[i][j], "A entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  }

  const json& b = require_field(doc, "b");
  if (!b.is_array() || static_cast<int>(b.size()) != m) {
    throw ParseError("\"b\" must be an array of length " + std::to_string(m));
  }
  inst.mip.b.resize(m);
  for (int i = 0; i < m; ++i) {
    inst.mip.b[i] = integral_entry(b[i], "b entry " + std::to_string(i + 1));
  }

  const json& c = require_field(doc, "c");
  if (!c.is_array() || static_cast<int>(c.size()) != n) {
    throw ParseError("\"c\" must be an array of length " + std::to_string(n));
  }
  inst.mip.c.resize(n);
  for (int j = 0; j < n; ++j) {
    inst.mip.c[j] = integral_entry(c[j], "c entry " + std::to_string(j + 1));
  }

  const json& iset = require_field(doc, "int_set");
  if (!iset.is_array()) {
    throw ParseError("\"int_set\" must be an array of 1-based indices");
  }
  for (const json& v : iset) {
    if (!v.is_number_integer()) {
      throw ParseError("\"int_set\" entries must be integers");
    }
    const long long idx = v.get<long long>();
    if (idx < 1 || idx > m) {
      throw ValidationError("int_set entry " + std::to_string(idx) +
                            " outside 1.." + std::to_string(m));
    }
    inst.mip.int_set.push_back(static_cast<int>(idx - 1));
  }
  std::sort(inst.mip.int_set.begin(), inst.mip.int_set.end());

  if (doc.contains("assume_integer_value")) {
    if (!doc["assume_integer_value"].is_boolean()) {
      throw ParseError("\"assume_integer_value\" must be a boolean");
    }
    inst.assume_integer_value = doc["assume_integer_value"].get<bool>();
  }

  if (doc.contains("oracle_bounds")) {
    const json& ob = doc["oracle_bounds"];
    if (!ob.is_array()) throw ParseError("\"oracle_bounds\" must be an array of pairs");
    std::vector<IntegerInterval> bounds;
    for (const json& pair : ob) {
      if (!pair.is_array() || pair.size() != 2) {
        throw ParseError("\"oracle_bounds\" entries must be [lo, hi] pairs");
      }
      IntegerInterval iv;
      iv.lo = floor_int(integral_entry(pair[0], "oracle_bounds lower"));
      iv.hi = floor_int(integral_entry(pair[1], "oracle_bounds upper"));
      bounds.push_back(iv);
    }
    inst.oracle_bounds = std::move(bounds);
  }

  inst.mip.validate();
  return inst;
}

// Value-integrality gate shared by the driver-backed commands.
void require_integer_value_hypothesis(const InstanceFile& inst, bool cli_flag) {
  if (check_value_integrality(inst.mip) == ValueIntegrality::Satisfied) return;
  if (cli_flag || inst.assume_integer_value) return;
  throw ValidationError(
      "the objective weights nonzero entries on continuous variables, so an "
      "integral optimal value is not guaranteed; pass --assume-integer-value "
      "to assert it");
}

void require_bounded(const DualFormMIP& mip) {
  RatVector dir;
  if (!region_bounded(mip, &dir)) {
    throw ValidationError("the region is unbounded along direction [" +
                          [&] {
                            std::string s;
                            for (size_t k = 0; k < dir.size(); ++k) {
                              if (k) s += ", ";
                              s += to_string(dir[k]);
                            }
                            return s;
                          }() +
                          "]");
  }
}

CommandResult run_guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    CommandResult res;
    res.exit_code = 1;
    res.error = e.what();
    return res;
  }
}

DriverOptions driver_options(const SolveCliOptions& opts) {
  DriverOptions dopts;
  dopts.max_iterations = opts.max_iterations;
  dopts.max_pivots = opts.max_pivots;
  return dopts;
}

int status_exit_code(SolveReportStatus status) {
  switch (status) {
    case SolveReportStatus::Optimal: return 0;
    case SolveReportStatus::Infeasible: return 2;
    case SolveReportStatus::LimitReached: return 3;
  }
  return 1;
}

CommandResult solve_with_stream(const InstanceFile& inst, const SolveCliOptions& opts,
                                std::ostream* stream, bool diagnostics) {
  require_integer_value_hypothesis(inst, opts.assume_integer_value);
  if (opts.verify_bounded) require_bounded(inst.mip);

  const LexMIP lex = to_lex(inst.mip);
  DriverOptions dopts = driver_options(opts);
  dopts.collect_diagnostics = diagnostics;
  if (stream) {
    dopts.on_pivot = [stream](const PivotEvent& ev) {
      *stream << pivot_to_json(ev).dump() << "\n";
    };
    dopts.on_iteration = [stream](const IterationRecord& rec) {
      *stream << iteration_to_json(rec).dump() << "\n";
    };
  }
  const SolveReport report = algorithm1(lex, dopts);

  CommandResult res;
  res.exit_code = status_exit_code(report.status);
  json out = report_to_json(inst, report);
  if (stream) {
    json line;
    line["type"] = "report";
    line.update(out);
    *stream << line.dump() << "\n";
  }
  res.output = out.dump(2) + "\n";
  return res;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open \"" + path + "\"");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

InstanceFile parse_instance_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("instance is not valid JSON: ") + e.what());
  }
  return parse_instance_json(doc);
}

InstanceFile parse_instance(const std::string& path) {
  return parse_instance_text(read_file(path));
}

std::string serialize_instance(const InstanceFile& inst) {
  json doc;
  if (!inst.name.empty()) doc["name"] = inst.name;
  json a = json::array();
  for (int i = 0; i < inst.mip.A.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < inst.mip.A.cols(); ++j) {
      row.push_back(integer_to_json(inst.mip.A(i, j)));
    }
    a.push_back(row);
  }
  doc["A"] = a;
  json b = json::array();
  for (const Rational& x : inst.mip.b) b.push_back(integer_to_json(x));
  doc["b"] = b;
  json c = json::array();
  for (const Rational& x : inst.mip.c) c.push_back(integer_to_json(x));
  doc["c"] = c;
  json iset = json::array();
  for (int i : inst.mip.int_set) iset.push_back(i + 1);
  doc["int_set"] = iset;
  if (inst.assume_integer_value) doc["assume_integer_value"] = true;
  if (inst.oracle_bounds) {
    json ob = json::array();
    for (const IntegerInterval& iv : *inst.oracle_bounds) {
      ob.push_back(json::array({json(iv.lo.str()), json(iv.hi.str())}));
    }
    doc["oracle_bounds"] = ob;
  }
  return doc.dump(2) + "\n";
}

std::vector<IntegerInterval> parse_bounds_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bounds file is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw ParseError("bounds must be a JSON array of [lo, hi] pairs");
  }
  std::vector<IntegerInterval> bounds;
  for (const json& pair : doc) {
    if (!pair.is_array() || pair.size() != 2) {
      throw ParseError("bounds entries must be [lo, hi] pairs");
    }
    IntegerInterval iv;
    iv.lo = floor_int(integral_entry(pair[0], "bounds lower"));
    iv.hi = floor_int(integral_entry(pair[1], "bounds upper"));
    bounds.push_back(iv);
  }
  return bounds;
}

CommandResult cmd_solve(const std::string& instance_text, const SolveCliOptions& opts) {
  return run_guarded([&] {
    const InstanceFile inst = parse_instance_text(instance_text);
    if (!opts.trace_path.empty()) {
      std::ofstream stream(opts.trace_path);
      if (!stream) {
        throw ParseError("cannot open trace file \"" + opts.trace_path + "\"");
      }
      return solve_with_stream(inst, opts, &stream, true);
    }
    return solve_with_stream(inst, opts, nullptr, false);
  });
}

CommandResult cmd_trace(const std::string& instance_text, const SolveCliOptions& opts) {
  return run_guarded([&] {
    const InstanceFile inst = parse_instance_text(instance_text);
    std::ostringstream stream;
    CommandResult res = solve_with_stream(inst, opts, &stream, true);
    res.output = stream.str();
    return res;
  });
}

CommandResult cmd_lp(const std::string& instance_text) {
  return run_guarded([&] {
    const InstanceFile inst = parse_instance_text(instance_text);
    const LpRelaxation lp = solve_lp_relaxation(inst.mip);
    json out;
    if (!inst.name.empty()) out["name"] = inst.name;
    CommandResult res;
    switch (lp.status) {
      case LpStatus::Optimal:
        out["status"] = "optimal";
        out["value"] = rat_to_json(*lp.value);
        out["y"] = vec_to_json(*lp.y);
        res.exit_code = 0;
        break;
      case LpStatus::Infeasible:
        out["status"] = "infeasible";
        res.exit_code = 2;
        break;
      case LpStatus::InfeasibleOrUnbounded:
        out["status"] = "infeasible_or_unbounded";
        res.exit_code = 2;
        break;
    }
    res.output = out.dump(2) + "\n";
    return res;
  });
}

CommandResult cmd_oracle(const std::string& instance_text, const std::string& bounds_text) {
  return run_guarded([&] {
    const InstanceFile inst = parse_instance_text(instance_text);
    std::optional<std::vector<IntegerInterval>> bounds;
    if (!bounds_text.empty()) {
      bounds = parse_bounds_text(bounds_text);
    } else if (inst.oracle_bounds) {
      bounds = inst.oracle_bounds;
    }
    const OracleResult result = oracle_solve(inst.mip, bounds);
    json out;
    if (!inst.name.empty()) out["name"] = inst.name;
    CommandResult res;
    if (result.status == OracleStatus::Optimal) {
      out["status"] = "optimal";
      out["value"] = rat_to_json(*result.value);
      out["witness"] = vec_to_json(*result.witness);
      res.exit_code = 0;
    } else {
      out["status"] = "infeasible";
      res.exit_code = 2;
    }
    res.output = out.dump(2) + "\n";
    return res;
  });
}

CommandResult cmd_check(const std::string& instance_text, bool inject_bad_cut) {
  return run_guarded([&] {
    const InstanceFile inst = parse_instance_text(instance_text);
    require_integer_value_hypothesis(inst, false);

    const LexMIP lex = to_lex(inst.mip);
    DriverOptions dopts;
    dopts.collect_snapshots = true;
    dopts.collect_diagnostics = true;
    const SolveReport report = algorithm1(lex, dopts);

    std::vector<RatVector> points;
    const OracleResult oracle = oracle_solve(inst.mip, inst.oracle_bounds, &points);

    json checks = json::array();
    bool all_pass = true;
    std::string offending;
    const auto record = [&](const std::string& name, bool pass, const std::string& detail) {
      json c;
      c["name"] = name;
      c["passed"] = pass;
      if (!detail.empty()) c["detail"] = detail;
      checks.push_back(c);
      if (!pass) all_pass = false;
    };

    // (a) statuses and values agree with the enumeration reference.
    {
      bool pass = false;
      std::string detail;
      if (report.status == SolveReportStatus::Optimal &&
          oracle.status == OracleStatus::Optimal) {
        pass = *report.value == *oracle.value;
        detail = "solver " + to_string(*report.value) + ", reference " +
                 to_string(*oracle.value);
      } else if (report.status == SolveReportStatus::Infeasible &&
                 oracle.status == OracleStatus::Infeasible) {
        pass = true;
        detail = "both infeasible";
      } else {
        detail = "status mismatch";
      }
      record("value_matches_reference", pass, detail);
    }

    // (b) every derived cut holds at every enumerated feasible point.
    {
      bool pass = true;
      long tested = 0;
      for (const IterationRecord& rec : report.iterations) {
        CutColumn cut = rec.cut;
        if (inject_bad_cut && !points.empty()) {
          // Negative control: tighten the cost below some feasible point's
          // activity so the cut provably excludes it.
          Rational lowest;
          bool first = true;
          for (const RatVector& p : points) {
            const Rational activity = dot(lift_to_lex(lex, p), cut.column);
            if (first || activity < lowest) lowest = activity;
            first = false;
          }
          cut.cost = lowest - 1;
        }
        for (const RatVector& p : points) {
          ++tested;
          if (!cut_satisfied_at(cut, lift_to_lex(lex, p))) {
            pass = false;
            if (offending.empty()) offending = iteration_to_json(rec).dump();
          }
        }
      }
      std::string detail = std::to_string(report.iterations.size()) + " cuts x " +
                           std::to_string(points.size()) + " points";
      if (inject_bad_cut) detail += " (corrupted-cut injection active)";
      record("cuts_valid_at_feasible_points", pass, detail);
    }

    // (c) run-level invariants recorded by the driver.
    {
      bool pass = report.basis_size_constant;
      std::string detail;
      if (!pass) detail = "basis size changed";
      for (const IterationRecord& rec : report.iterations) {
        if (!first_pivot_dichotomy_check(rec)) {
          pass = false;
          detail = "first-pivot dichotomy failed at iteration " + std::to_string(rec.t);
          if (offending.empty()) offending = iteration_to_json(rec).dump();
        }
      }
      if (!lex_monotonicity_check(report)) {
        pass = false;
        detail = "dual vector not strictly lex-decreasing";
      }
      record("run_invariants", pass, detail);
    }

    json out;
    if (!inst.name.empty()) out["name"] = inst.name;
    out["checks"] = checks;
    out["passed"] = all_pass;
    if (!offending.empty()) out["offending_iteration"] = json::parse(offending);

    CommandResult res;
    res.exit_code = all_pass ? 0 : 1;
    res.output = out.dump(2) + "\n";
    return res;
  });
}

}  // namespace gmicol
