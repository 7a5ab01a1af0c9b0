// SPDX-License-Identifier: Apache-2.0

#include "gmicol/solver.hpp"

#include <string>
#include <utility>

namespace gmicol {

namespace {

// Least leading coordinate with nonzero fractional part, or -1.
int first_fractional(const RatVector& ybar, int int_count) {
  for (int k = 0; k < int_count; ++k) {
    if (frac(ybar[k]) != 0) return k;
  }
  return -1;
}

void verify_optimal_solution(const LexMIP& lex, const Rational& value,
                             const RatVector& y) {
  const DualFormMIP& inst = lex.original;
  for (int j = 0; j < inst.num_constraints(); ++j) {
    if (dot(y, inst.A.col(j)) > inst.c[j]) {
      throw InternalError("reported solution violates constraint " + std::to_string(j));
    }
  }
  for (int i : inst.int_set) {
    if (!is_integral(y[i])) {
      throw InternalError("reported solution fractional at an integer coordinate");
    }
  }
  // The capture coordinate equals the true objective exactly when the
  // optimal value is integral. A gap here means the integral-value
  // hypothesis was asserted for an instance where it fails.
  if (dot(y, inst.b) != value) {
    throw ValidationError(
        "the witness has objective " + to_string(dot(y, inst.b)) +
        " but the integer value capture reached " + to_string(value) +
        "; the asserted integral-value hypothesis does not hold here");
  }
}

}  // namespace

SolveReport algorithm1(const LexMIP& lex, const DriverOptions& opts) {
  SolveReport report;
  const int m = lex.lp.num_rows;

  SimplexState state;
  try {
    state = SimplexState::phase1_start(lex.lp);
  } catch (const InfeasibleLPError&) {
    report.status = SolveReportStatus::Infeasible;
    return report;
  }

  if (opts.collect_snapshots) report.ybar_snapshots.push_back(state.ybar);

  const auto budget = [&]() -> long {
    if (opts.max_pivots < 0) return -1;
    return opts.max_pivots - report.total_pivots;
  };
  const auto track_basis = [&]() {
    if (static_cast<int>(state.basis.size()) != m) report.basis_size_constant = false;
  };

  FirstPivot* pending_first = nullptr;
  int pending_column = -1;
  Rational pending_expected_delta;
  const auto pivot_cb = [&](const PivotEvent& ev) {
    if (pending_first && pending_first->leaving_row < 0) {
      if (ev.entering != pending_column) {
        throw InternalError("first pivot after a cut must enter the cut column");
      }
      if (ev.delta != pending_expected_delta) {
        throw InternalError("first-pivot step size differs from its closed form");
      }
      *pending_first = {ev.leaving_row, ev.delta, ev.ybar_after};
    }
    if (opts.collect_snapshots) report.ybar_snapshots.push_back(ev.ybar_after);
    if (opts.on_pivot) opts.on_pivot(ev);
  };

  SolveOutcome outcome = state.solve(budget(), pivot_cb);
  report.total_pivots += outcome.pivots;
  track_basis();

  for (;;) {
    if (outcome.status == SolveStatus::Unbounded) {
      report.status = SolveReportStatus::Infeasible;
      return report;
    }
    if (outcome.status == SolveStatus::PivotLimit) {
      report.status = SolveReportStatus::LimitReached;
      return report;
    }

    const int i = first_fractional(state.ybar, lex.int_count);
    if (i < 0) {
      const ExtractedSolution sol = extract(lex, state.ybar);
      verify_optimal_solution(lex, sol.value, sol.y);
      report.status = SolveReportStatus::Optimal;
      report.value = sol.value;
      report.y = sol.y;
      return report;
    }
    if (static_cast<long>(report.iterations.size()) >= opts.max_iterations) {
      report.status = SolveReportStatus::LimitReached;
      return report;
    }

    if (opts.on_derivation) opts.on_derivation(state, i);

    const RatVector h_col = state.binv.col(i);
    IterationRecord rec;
    rec.t = static_cast<long>(report.iterations.size()) + 1;
    rec.ybar_before = state.ybar;
    rec.frac_index = i;
    rec.r = minimal_r(h_col);
    rec.cut = derive_cut(state, i, rec.r);
    reduced_cost_identity(rec.cut, state);
    if (opts.collect_diagnostics) rec.diag = diagnostics(state, i, rec.r);

    state.append_column(rec.cut.column, rec.cut.cost);
    pending_column = state.lp.num_cols() - 1;

    FirstPivot first;
    pending_first = &first;
    // The re-solve's first step leaves some row l; its dual step is
    // rc/d_l with rc = (f-1)f and d = r - (f-1) h_col, checked per pivot
    // once l is known. Precompute rc here; d_l below in the callback needs
    // l, so stash everything the callback requires.
    const Rational rc = (rec.cut.f - 1) * rec.cut.f;
    const auto first_cb = [&](const PivotEvent& ev) {
      if (pending_first && pending_first->leaving_row < 0) {
        pending_expected_delta =
            rc / (rec.r[ev.leaving_row] - (rec.cut.f - 1) * h_col[ev.leaving_row]);
      }
      pivot_cb(ev);
    };

    outcome = state.solve(budget(), first_cb);
    pending_first = nullptr;
    report.total_pivots += outcome.pivots;
    track_basis();

    rec.pivots = outcome.pivots;
    if (first.leaving_row >= 0) rec.first_pivot = first;
    if (opts.on_iteration) opts.on_iteration(rec);
    report.iterations.push_back(std::move(rec));
  }
}

bool first_pivot_dichotomy_check(const IterationRecord& record) {
  if (!record.first_pivot) return true;
  const int i = record.frac_index;
  const RatVector& before = record.ybar_before;
  const RatVector& after = record.first_pivot->ybar_after;
  const RatVector prefix_before(before.begin(), before.begin() + i);
  const RatVector prefix_after(after.begin(), after.begin() + i);
  if (lex_compare(prefix_after, prefix_before) == Ordering::Less) return true;
  return after[i] <= Rational(floor_int(before[i]));
}

bool lex_monotonicity_check(const SolveReport& report) {
  for (size_t k = 1; k < report.ybar_snapshots.size(); ++k) {
    if (lex_compare(report.ybar_snapshots[k], report.ybar_snapshots[k - 1]) !=
        Ordering::Less) {
      return false;
    }
  }
  return true;
}

}  // namespace gmicol
