// SPDX-License-Identifier: Apache-2.0
//
// Problem model and the objective-capture rewrite.
//
// A DualFormMIP is: max y'b subject to y'A <= c', with y_i integer for the
// indices in int_set. Rows of A correspond to the m variables y_1..y_m,
// columns to the n constraints.
//
// to_lex() rewrites such an instance so that a lexicographic simplex solve
// of the companion minimization problem answers it: a fresh integer variable
// carrying the objective value is adjoined in front, integer variables are
// permuted before continuous ones, and the right-hand side becomes the
// symbolic perturbation vector handled implicitly by the solver.

#pragma once

#include <utility>
#include <vector>

#include "gmicol/linalg.hpp"
#include "gmicol/rational.hpp"

namespace gmicol {

struct DualFormMIP {
  RatMatrix A;              // m x n
  RatVector b;              // length m
  RatVector c;              // length n
  std::vector<int> int_set; // 0-based, strictly increasing

  int num_vars() const { return A.rows(); }
  int num_constraints() const { return A.cols(); }

  // Checks dimensions and that int_set is sorted, unique, in range.
  void validate() const;
};

// Column-major standard form: min costs'x, [cols] x = rhs (implicit), x >= 0.
// The right-hand side is the symbolic vector (eps^0, ..., eps^(m-1))' and is
// never stored; the simplex state carries its effect through the basis
// inverse instead.
struct StandardFormLP {
  int num_rows = 0;
  std::vector<RatVector> cols; // each of length num_rows
  RatVector costs;             // one per column

  int num_cols() const { return static_cast<int>(cols.size()); }

  void append_column(const RatVector& col, const Rational& cost);
};

// Permutation of variable indices. new_to_old[k] is the original index of
// the variable sitting at position k after the rewrite.
struct Permutation {
  std::vector<int> new_to_old;

  int apply_inverse_size() const { return static_cast<int>(new_to_old.size()); }

  // Maps a vector in permuted order back to original order.
  RatVector unpermute(const RatVector& permuted) const;
};

struct LexMIP {
  StandardFormLP lp;  // m+1 rows: objective-capture row plus permuted rows
  int int_count = 0;  // leading coordinates required integral (includes row 0)
  Permutation perm;   // over the original m variables
  DualFormMIP original;
};

// Result extraction once the solver reports an optimal y-bar over the
// rewritten instance: objective value and the original-order y vector.
struct ExtractedSolution {
  Rational value;
  RatVector y; // length m, original variable order
};

enum class ValueIntegrality { Satisfied, Unverified };

// Satisfied when b vanishes on the continuous coordinates, so the objective
// is an integer combination of integer variables and the capture variable's
// integrality constraint loses nothing. Unverified instances need an explicit
// caller assertion before solving.
ValueIntegrality check_value_integrality(const DualFormMIP& inst);

// Stable two-group reorder putting integer-constrained coordinates first.
std::pair<DualFormMIP, Permutation> permute_integers(const DualFormMIP& inst);

// Builds the rewritten instance. Throws ValidationError on malformed input.
LexMIP to_lex(const DualFormMIP& inst);

// Splits ybar (length m+1, permuted order with the capture variable first)
// back into objective value and original-order solution.
ExtractedSolution extract(const LexMIP& lex, const RatVector& ybar);

// Canonical embedding of an original-order point: the capture coordinate is
// set to floor of the point's objective (the greatest integer the capture
// constraint allows), followed by the permuted coordinates. Feasible points
// of the instance lift to feasible points of the rewritten problem.
RatVector lift_to_lex(const LexMIP& lex, const RatVector& y);

}  // namespace gmicol
