// SPDX-License-Identifier: Apache-2.0
//
// Primal simplex over exact rationals for standard-form problems whose
// right-hand side is the symbolic vector (eps^0, ..., eps^(m-1))'. The
// perturbation is never materialized: the value of the l-th basic variable
// is the l-th row of the basis inverse read as coefficients of successive
// eps powers. Feasibility is lex-positivity of those rows, the ratio test
// compares scaled rows lexicographically, and ties are impossible because
// the rows are linearly independent. Column appends leave the basis alone.

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gmicol/linalg.hpp"
#include "gmicol/reformulate.hpp"

namespace gmicol {

enum class SolveStatus { Optimal, Unbounded, PivotLimit };

struct PivotEvent {
  int entering = -1;
  int leaving_row = -1;   // basis position, not column index
  Rational delta;         // reduced cost over d_l; always negative
  RatVector ybar_after;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::Optimal;
  int entering_certificate = -1; // column proving unboundedness
  long pivots = 0;
};

using PivotCallback = std::function<void(const PivotEvent&)>;

class SimplexState {
 public:
  StandardFormLP lp;
  std::vector<int> basis; // position l owns row l of binv
  RatMatrix binv;         // exact inverse of the basic column submatrix
  RatVector ybar;         // costs of basis times binv

  // Artificial-variable start: the identity basis of one artificial per row
  // is lex-feasible outright; minimizing the artificial cost sum under the
  // same lexicographic pivoting either reaches a basis of original columns
  // or proves the eps-perturbed system unreachable. A basic artificial at
  // the phase optimum always carries lex-positive value, so it certifies
  // infeasibility directly; no separate drive-out pass can be triggered.
  static SimplexState phase1_start(const StandardFormLP& lp);

  int num_rows() const { return lp.num_rows; }
  bool is_basic(int j) const;

  Rational reduced_cost(int j) const;

  // binv times column j.
  RatVector direction(int j) const;

  // Unique lex-minimizer of (row l of binv)/d_l over rows with d_l > 0, or
  // nullopt when no entry is positive (unbounded direction). A tie would
  // contradict row independence and raises InternalError.
  std::optional<int> lex_ratio_test(const RatVector& d) const;

  // Elementary row update of binv plus the dual step
  // ybar += delta * (old row l), delta = reduced_cost(entering)/d_l.
  PivotEvent pivot(int entering, int leaving_row);

  // Runs to optimality or unboundedness. Entering rule: most negative
  // reduced cost, lowest index on ties. max_pivots < 0 means no cap.
  SolveOutcome solve(long max_pivots = -1, const PivotCallback& on_pivot = {});

  void append_column(const RatVector& a, const Rational& cost);

  // Exact invariant audit: binv inverts the basic submatrix, ybar matches
  // the basic costs, every binv row is lex-positive. Throws InternalError.
  void verify_consistency() const;

 private:
  SolveOutcome solve_restricted(int candidate_limit, long max_pivots,
                                const PivotCallback& on_pivot);
  RatMatrix basic_submatrix() const;
};

}  // namespace gmicol
