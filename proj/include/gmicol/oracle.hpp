// SPDX-License-Identifier: Apache-2.0
//
// Independent brute-force reference solver plus the LP-relaxation entry
// point. The oracle never trusts the column-generation path: it certifies
// that the region has no nonzero recession direction, derives per-coordinate
// bounds from auxiliary LP solves inside a proven enclosing box, enumerates
// every integer assignment, and completes each assignment with an exact LP
// over the continuous coordinates.

#pragma once

#include <optional>
#include <vector>

#include "gmicol/linalg.hpp"
#include "gmicol/reformulate.hpp"

namespace gmicol {

struct IntegerInterval {
  Integer lo;
  Integer hi;
};

enum class OracleStatus { Optimal, Infeasible };

struct OracleResult {
  OracleStatus status = OracleStatus::Infeasible;
  std::optional<Rational> value;
  std::optional<RatVector> witness; // original variable order
};

enum class LpStatus { Optimal, Infeasible, InfeasibleOrUnbounded };

struct LpRelaxation {
  LpStatus status = LpStatus::Infeasible;
  std::optional<Rational> value;
  std::optional<RatVector> y;
};

// max y'b over {y : y'A <= c'}, integrality dropped. Infeasible means the
// region is provably empty; InfeasibleOrUnbounded means the symbolic solve
// could not start, which happens exactly when the region is empty or admits
// an unbounded lexicographic direction.
LpRelaxation solve_lp_relaxation(const DualFormMIP& inst);

// True iff {d : d'A <= 0} = {0}, i.e. the region has no direction of
// recession, so it is bounded (possibly empty). On false, *direction (when
// given) receives a nonzero recession direction as the certificate.
bool region_bounded(const DualFormMIP& inst, RatVector* direction = nullptr);

// Exact reference solve by enumeration. Bounds, when supplied, run parallel
// to int_set and replace the derived ones. enumerated_points, when given,
// receives one feasible mixed-integer point per feasible assignment (the
// assignment completed by its LP-optimal continuous part).
// Throws BoundsUnavailableError when the region recedes.
OracleResult oracle_solve(
    const DualFormMIP& inst,
    const std::optional<std::vector<IntegerInterval>>& bounds = std::nullopt,
    std::vector<RatVector>* enumerated_points = nullptr);

// The derived enumeration intervals themselves, for reporting.
std::vector<IntegerInterval> derive_bounds(const DualFormMIP& inst);

}  // namespace gmicol
