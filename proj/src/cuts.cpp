// SPDX-License-Identifier: Apache-2.0

#include "gmicol/cuts.hpp"

#include <string>

namespace gmicol {

namespace {

// A_B r without forming A_B: sum of r_l times the l-th basic column.
// Its j-th entry is also (row j of A_B) dot r.
RatVector basic_combination(const SimplexState& state, const RatVector& r) {
  RatVector out(state.num_rows(), Rational(0));
  for (size_t l = 0; l < r.size(); ++l) {
    if (r[l] == 0) continue;
    add_scaled(out, r[l], state.lp.cols[state.basis[l]]);
  }
  return out;
}

Rational basic_cost(const SimplexState& state, const RatVector& r) {
  Rational acc = 0;
  for (size_t l = 0; l < r.size(); ++l) {
    acc += r[l] * state.lp.costs[state.basis[l]];
  }
  return acc;
}

void require_derivable(const SimplexState& state, int i, const RatVector& r,
                       RatVector& h_col, Rational& f) {
  const int m = state.num_rows();
  if (i < 0 || i >= m) {
    throw ValidationError("cut coordinate out of range");
  }
  if (static_cast<int>(r.size()) != m) {
    throw ValidationError("r has wrong length");
  }
  f = frac(state.ybar[i]);
  if (f == 0) {
    throw NotFractionalError("dual coordinate " + std::to_string(i) +
                             " is integral; nothing to separate");
  }
  h_col = state.binv.col(i);
  if (!validate_kappa(r, h_col)) {
    throw KappaViolatedError("r must be integral, nonnegative, and >= -h_col");
  }
#ifndef NDEBUG
  for (int j = 0; j < state.lp.num_cols(); ++j) {
    if (state.reduced_cost(j) < 0) {
      throw InternalError("cut derivation requires an optimal basis");
    }
  }
#endif
}

}  // namespace

RatVector minimal_r(const RatVector& h_col) {
  RatVector r(h_col.size());
  for (size_t k = 0; k < h_col.size(); ++k) {
    const Integer fl = floor_int(h_col[k]);
    r[k] = fl < 0 ? Rational(-fl) : Rational(0);
  }
  return r;
}

bool validate_kappa(const RatVector& r, const RatVector& h_col) {
  if (r.size() != h_col.size()) return false;
  for (size_t k = 0; k < r.size(); ++k) {
    if (!is_integral(r[k])) return false;
    if (r[k] < 0) return false;
    if (r[k] + h_col[k] < 0) return false;
  }
  return true;
}

CutColumn derive_cut(const SimplexState& state, int i, const RatVector& r) {
  RatVector h_col;
  Rational f;
  require_derivable(state, i, r, h_col, f);

  CutColumn cut;
  cut.i = i;
  cut.r = r;
  cut.f = f;
  cut.floor_yi = floor_int(state.ybar[i]);
  cut.column = basic_combination(state, r);
  cut.column[i] -= f - 1;
  cut.cost = basic_cost(state, r) - (f - 1) * Rational(cut.floor_yi);
  return cut;
}

Rational reduced_cost_identity(const CutColumn& cut, const SimplexState& state) {
  const Rational rc = cut.cost - dot(state.ybar, cut.column);
  if (rc != (cut.f - 1) * cut.f) {
    throw IdentityViolatedError("cut reduced cost differs from (f-1)f");
  }
  return rc;
}

CutDiagnostics diagnostics(const SimplexState& state, int i, const RatVector& r) {
  RatVector h_col;
  Rational f;
  require_derivable(state, i, r, h_col, f);

  const RatVector abr = basic_combination(state, r);
  const Rational ybar_abr = dot(state.ybar, abr);
  const Rational floor_yi = Rational(floor_int(state.ybar[i]));

  CutDiagnostics d;
  d.alpha_i_r = abr[i];
  d.alpha_integral = is_integral(d.alpha_i_r);
  d.b1_coeffs = {1 + d.alpha_i_r, Rational(1), state.ybar[i] + ybar_abr};
  d.b2_coeffs = {d.alpha_i_r, Rational(1), ybar_abr};
  d.z1 = d.b1_coeffs.rhs - d.b1_coeffs.yi * (floor_yi + 1);
  d.z2 = d.b2_coeffs.rhs - d.b2_coeffs.yi * floor_yi;
  if (d.z1 != d.z2) {
    d.slope = 1 / (d.z1 - d.z2);
  }
  d.ystar_zstar = {state.ybar[i], ybar_abr - d.alpha_i_r * state.ybar[i]};
  d.w1_beta = h_col;
  add_scaled(d.w1_beta, 1, r);
  d.w2_beta = r;
  d.violation = (1 - f) * f;
  return d;
}

bool cut_satisfied_at(const CutColumn& cut, const RatVector& y) {
  return dot(y, cut.column) <= cut.cost;
}

}  // namespace gmicol
