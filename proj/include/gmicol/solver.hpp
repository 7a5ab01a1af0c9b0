// SPDX-License-Identifier: Apache-2.0
//
// The column-generation loop. Repeatedly: solve the lex problem to
// optimality by primal simplex, scan the leading integer-constrained dual
// coordinates for a fractional value, derive the cut column at the least
// such coordinate with the minimal admissible r, append it, and re-solve
// from the unchanged (still lex-feasible) basis. Stops when the leading
// coordinates are all integral, when a re-solve proves the integer problem
// empty, or when an operational limit trips. Each pivot strictly
// lex-decreases the dual vector, which is what makes the loop finite.

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gmicol/cuts.hpp"
#include "gmicol/reformulate.hpp"
#include "gmicol/simplex.hpp"

namespace gmicol {

struct FirstPivot {
  int leaving_row = -1;
  Rational delta;
  RatVector ybar_after;
};

struct IterationRecord {
  long t = 0;              // 1-based cut iteration counter
  RatVector ybar_before;
  int frac_index = -1;     // least fractional leading coordinate
  RatVector r;
  CutColumn cut;
  long pivots = 0;         // pivots spent in this iteration's re-solve
  // Absent only when the re-solve detects unboundedness before pivoting.
  std::optional<FirstPivot> first_pivot;
  std::optional<CutDiagnostics> diag;
};

enum class SolveReportStatus { Optimal, Infeasible, LimitReached };

struct SolveReport {
  SolveReportStatus status = SolveReportStatus::Optimal;
  std::optional<Rational> value;  // objective, set on Optimal
  std::optional<RatVector> y;     // original variable order, set on Optimal
  std::vector<IterationRecord> iterations;
  long total_pivots = 0;
  // Dual vector at phase-2 start and after every pivot; filled when
  // collect_snapshots is on.
  std::vector<RatVector> ybar_snapshots;
  bool basis_size_constant = true;
};

struct DriverOptions {
  long max_iterations = 10000; // cut derivations allowed
  long max_pivots = 100000;    // total pivots allowed, phase 2 onward
  bool collect_snapshots = false;
  bool collect_diagnostics = false;
  std::function<void(const IterationRecord&)> on_iteration;
  std::function<void(const PivotEvent&)> on_pivot;
  // Observes the optimal state each time a cut is about to be derived.
  std::function<void(const SimplexState&, int frac_index)> on_derivation;
};

SolveReport algorithm1(const LexMIP& lex, const DriverOptions& opts = {});

// After the first pivot following a cut on coordinate i, either the dual
// coordinates before i lex-decreased, or coordinate i dropped to at most
// floor of its old value. Vacuously true when no pivot happened.
bool first_pivot_dichotomy_check(const IterationRecord& record);

// Strict lex-decrease across the recorded snapshot sequence.
bool lex_monotonicity_check(const SolveReport& report);

}  // namespace gmicol
