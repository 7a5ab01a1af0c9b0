// SPDX-License-Identifier: Apache-2.0
//
// Cut-column derivation. Given an optimal simplex state whose dual vector
// has a fractional coordinate i, and an integral auxiliary vector r with
// r >= 0 and r >= -(i-th column of the basis inverse), the derived column
//
//   A_B r - (f - 1) e_i,    cost  c_B' r - (f - 1) floor(ybar_i),
//
// with f the fractional part of ybar_i, encodes an inequality valid for
// every point of the region that keeps coordinate i on either side of the
// open unit interval around ybar_i. The generating dual vector itself
// violates it by (f - 1) f, which is also the column's reduced cost, so
// appending the column always gives the simplex something to do.

#pragma once

#include <optional>
#include <utility>

#include "gmicol/linalg.hpp"
#include "gmicol/simplex.hpp"

namespace gmicol {

struct CutColumn {
  int i = -1;         // dual coordinate the cut separates on
  RatVector r;        // integral, nonnegative, >= -h_col
  Integer floor_yi;
  Rational f;         // in (0,1)
  RatVector column;
  Rational cost;
};

// One inequality coeff_yi * y_i + coeff_z * z <= rhs in the two variables
// (y_i, z) of the aggregated picture.
struct LineCoeffs {
  Rational yi;
  Rational z;
  Rational rhs;
};

struct CutDiagnostics {
  Rational alpha_i_r;       // i-th entry of A_B r
  bool alpha_integral = false;
  LineCoeffs b1_coeffs;     // (1 + alpha_i_r) y_i + z <= ybar_i + ybar' A_B r
  LineCoeffs b2_coeffs;     // alpha_i_r y_i + z <= ybar' A_B r
  Rational z1;              // first line at y_i = floor + 1
  Rational z2;              // second line at y_i = floor
  std::optional<Rational> slope; // 1/(z1 - z2); empty when the gap is zero
  std::pair<Rational, Rational> ystar_zstar;
  RatVector w1_beta;        // h_col + r
  RatVector w2_beta;        // r
  Rational violation;       // (1 - f) f > 0
};

// Componentwise-least integral vector satisfying the derivation conditions
// for the given basis-inverse column: r_k = max{0, -floor(h_col_k)}.
RatVector minimal_r(const RatVector& h_col);

bool validate_kappa(const RatVector& r, const RatVector& h_col);

// Derives the cut column at coordinate i. The state must be optimal (all
// reduced costs nonnegative); this is audited in checked builds.
CutColumn derive_cut(const SimplexState& state, int i, const RatVector& r);

// Returns cost - ybar'.column after asserting it equals (f-1) f exactly.
Rational reduced_cost_identity(const CutColumn& cut, const SimplexState& state);

CutDiagnostics diagnostics(const SimplexState& state, int i, const RatVector& r);

bool cut_satisfied_at(const CutColumn& cut, const RatVector& y);

}  // namespace gmicol
