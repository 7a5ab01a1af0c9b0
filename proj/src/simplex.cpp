// SPDX-License-Identifier: Apache-2.0

#include "gmicol/simplex.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace gmicol {

namespace {

// Lex-compares u/du against v/dv without building the scaled vectors.
// Both divisors must be positive.
Ordering scaled_lex_compare(const RatVector& u, const Rational& du,
                            const RatVector& v, const Rational& dv) {
  for (size_t k = 0; k < u.size(); ++k) {
    const Rational lhs = u[k] * dv;
    const Rational rhs = v[k] * du;
    if (lhs < rhs) return Ordering::Less;
    if (lhs > rhs) return Ordering::Greater;
  }
  return Ordering::Equal;
}

}  // namespace

bool SimplexState::is_basic(int j) const {
  return std::find(basis.begin(), basis.end(), j) != basis.end();
}

Rational SimplexState::reduced_cost(int j) const {
  if (j < 0 || j >= lp.num_cols()) {
    throw ValidationError("reduced_cost: column index out of range");
  }
  return lp.costs[j] - dot(ybar, lp.cols[j]);
}

RatVector SimplexState::direction(int j) const {
  if (j < 0 || j >= lp.num_cols()) {
    throw ValidationError("direction: column index out of range");
  }
  return binv * lp.cols[j];
}

std::optional<int> SimplexState::lex_ratio_test(const RatVector& d) const {
  const int m = num_rows();
  if (static_cast<int>(d.size()) != m) {
    throw ValidationError("lex_ratio_test: direction has wrong length");
  }
  int best = -1;
  for (int l = 0; l < m; ++l) {
    if (d[l] <= 0) continue;
    if (best < 0) {
      best = l;
      continue;
    }
    const Ordering ord =
        scaled_lex_compare(binv.row(l), d[l], binv.row(best), d[best]);
    if (ord == Ordering::Equal) {
      throw InternalError("lex ratio test tie: basis inverse rows dependent");
    }
    if (ord == Ordering::Less) best = l;
  }
  if (best < 0) return std::nullopt;
  return best;
}

PivotEvent SimplexState::pivot(int entering, int leaving_row) {
  const int m = num_rows();
  if (leaving_row < 0 || leaving_row >= m) {
    throw ValidationError("pivot: leaving row out of range");
  }
  const RatVector d = direction(entering);
  if (d[leaving_row] == 0) {
    throw InternalError("pivot: zero pivot element");
  }
  PivotEvent ev;
  ev.entering = entering;
  ev.leaving_row = leaving_row;
  ev.delta = reduced_cost(entering) / d[leaving_row];

  const RatVector old_row = binv.row(leaving_row);

  RatVector scaled(old_row);
  for (Rational& x : scaled) x /= d[leaving_row];
  binv.set_row(leaving_row, scaled);
  for (int k = 0; k < m; ++k) {
    if (k == leaving_row || d[k] == 0) continue;
    for (int j = 0; j < m; ++j) {
      binv(k, j) -= d[k] * binv(leaving_row, j);
    }
  }

  basis[leaving_row] = entering;
  add_scaled(ybar, ev.delta, old_row);
  ev.ybar_after = ybar;
  return ev;
}

SolveOutcome SimplexState::solve(long max_pivots, const PivotCallback& on_pivot) {
  return solve_restricted(lp.num_cols(), max_pivots, on_pivot);
}

SolveOutcome SimplexState::solve_restricted(int candidate_limit, long max_pivots,
                                            const PivotCallback& on_pivot) {
  SolveOutcome out;
  for (;;) {
    int entering = -1;
    Rational best_rc;
    for (int j = 0; j < candidate_limit; ++j) {
      const Rational rc = reduced_cost(j);
      if (rc < 0 && (entering < 0 || rc < best_rc)) {
        entering = j;
        best_rc = rc;
      }
    }
    if (entering < 0) {
      out.status = SolveStatus::Optimal;
      return out;
    }
    const RatVector d = direction(entering);
    const std::optional<int> leaving = lex_ratio_test(d);
    if (!leaving) {
      out.status = SolveStatus::Unbounded;
      out.entering_certificate = entering;
      return out;
    }
    if (max_pivots >= 0 && out.pivots >= max_pivots) {
      out.status = SolveStatus::PivotLimit;
      return out;
    }
    const PivotEvent ev = pivot(entering, *leaving);
    ++out.pivots;
    if (on_pivot) on_pivot(ev);
#ifndef NDEBUG
    if (out.pivots % 50 == 0) verify_consistency();
#endif
  }
}

void SimplexState::append_column(const RatVector& a, const Rational& cost) {
  lp.append_column(a, cost);
}

SimplexState SimplexState::phase1_start(const StandardFormLP& lp) {
  const int m = lp.num_rows;
  if (m < 1) {
    throw ValidationError("phase1_start: problem has no rows");
  }
  const int n = lp.num_cols();
  for (const RatVector& col : lp.cols) {
    if (static_cast<int>(col.size()) != m) {
      throw ValidationError("phase1_start: column length mismatch");
    }
  }

  SimplexState ph;
  ph.lp = lp;
  ph.lp.costs.assign(n, Rational(0));
  for (int i = 0; i < m; ++i) {
    RatVector art(m);
    art[i] = 1;
    ph.lp.append_column(art, 1);
  }
  ph.basis.resize(m);
  for (int i = 0; i < m; ++i) ph.basis[i] = n + i;
  ph.binv = RatMatrix::identity(m);
  ph.ybar.assign(m, Rational(1));

  // Artificials start basic and are barred from re-entering, so the phase
  // objective (their summed lex-positive levels) can only shrink.
  const SolveOutcome outcome = ph.solve_restricted(n, -1, {});
  if (outcome.status != SolveStatus::Optimal) {
    throw InternalError("phase 1 cannot be unbounded: objective bounded below by zero");
  }
  for (int j : ph.basis) {
    if (j >= n) {
      throw InfeasibleLPError(
          "no nonnegative solution reaches the perturbed right-hand side");
    }
  }

  SimplexState state;
  state.lp = lp;
  state.basis = std::move(ph.basis);
  state.binv = std::move(ph.binv);
  state.ybar.assign(m, Rational(0));
  for (int l = 0; l < m; ++l) {
    add_scaled(state.ybar, lp.costs[state.basis[l]], state.binv.row(l));
  }
#ifndef NDEBUG
  state.verify_consistency();
#endif
  return state;
}

RatMatrix SimplexState::basic_submatrix() const {
  const int m = num_rows();
  RatMatrix ab(m, m);
  for (int l = 0; l < m; ++l) {
    const RatVector& col = lp.cols[basis[l]];
    for (int i = 0; i < m; ++i) ab(i, l) = col[i];
  }
  return ab;
}

void SimplexState::verify_consistency() const {
  const int m = num_rows();
  if (static_cast<int>(basis.size()) != m || binv.rows() != m || binv.cols() != m ||
      static_cast<int>(ybar.size()) != m) {
    throw InternalError("simplex state dimensions inconsistent");
  }
  const RatMatrix prod = binv * basic_submatrix();
  if (!(prod == RatMatrix::identity(m))) {
    throw InternalError("basis inverse does not invert the basic submatrix");
  }
  RatVector expect(m, Rational(0));
  for (int l = 0; l < m; ++l) {
    add_scaled(expect, lp.costs[basis[l]], binv.row(l));
  }
  if (expect != ybar) {
    throw InternalError("dual vector out of sync with basis");
  }
  for (int l = 0; l < m; ++l) {
    if (!lex_positive(binv.row(l))) {
      throw InternalError("basis inverse row " + std::to_string(l) +
                          " not lexicographically positive");
    }
  }
}

}  // namespace gmicol
