// SPDX-License-Identifier: Apache-2.0

#include "gmicol/oracle.hpp"

#include <algorithm>
#include <utility>

#include "gmicol/simplex.hpp"

namespace gmicol {

namespace {

struct CaptureOutcome {
  bool feasible = false; // region nonempty; value and y are set
  Rational value;
  RatVector y;
};

// max y'b over {y : y'A <= c'} by adjoining a capture variable whose only
// constraint pins it under the objective, then lex-maximizing. Throws
// InfeasibleLPError when the symbolic primal cannot start (empty or
// lex-unbounded region); callers that box the region never see that.
CaptureOutcome capture_lp_max(const RatMatrix& A, const RatVector& b,
                              const RatVector& c) {
  const int m = A.rows();
  const int n = A.cols();
  StandardFormLP lp;
  lp.num_rows = m + 1;
  RatVector capture(m + 1);
  capture[0] = 1;
  for (int i = 0; i < m; ++i) capture[i + 1] = -b[i];
  lp.cols.push_back(std::move(capture));
  lp.costs.push_back(0);
  for (int j = 0; j < n; ++j) {
    RatVector col(m + 1);
    for (int i = 0; i < m; ++i) col[i + 1] = A(i, j);
    lp.cols.push_back(std::move(col));
    lp.costs.push_back(c[j]);
  }

  SimplexState state = SimplexState::phase1_start(lp);
  const SolveOutcome outcome = state.solve();
  CaptureOutcome out;
  if (outcome.status == SolveStatus::Unbounded) {
    return out; // primal unbounded: the region is empty
  }
  out.feasible = true;
  out.value = state.ybar[0];
  out.y.assign(state.ybar.begin() + 1, state.ybar.end());
  return out;
}

// A ∩-box copy of the region: columns of +-e_i with cost bound appended,
// so the auxiliary primal always has a feasible start.
void append_box(RatMatrix& A, RatVector& c, const Rational& bound) {
  const int m = A.rows();
  const int n = A.cols();
  RatMatrix wide(m, n + 2 * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) wide(i, j) = A(i, j);
    wide(i, n + i) = 1;
    wide(i, n + m + i) = -1;
  }
  c.resize(n + 2 * m);
  for (int k = 0; k < 2 * m; ++k) c[n + k] = bound;
  A = std::move(wide);
}

// Any point of a bounded region lies in the convex hull of its vertices,
// and every vertex coordinate is a ratio of integer determinants with unit
// floor on the denominator. Hadamard then caps the numerator, so this
// returns an integer strictly larger than any coordinate magnitude the
// region can reach.
Integer enclosing_box_bound(const DualFormMIP& inst) {
  const int m = inst.num_vars();
  Integer k = 1;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < inst.num_constraints(); ++j) {
      const Integer a = boost::multiprecision::abs(numerator(inst.A(i, j)));
      if (a > k) k = a;
    }
  }
  for (int j = 0; j < inst.num_constraints(); ++j) {
    const Integer a = boost::multiprecision::abs(numerator(inst.c[j]));
    if (a > k) k = a;
  }
  Integer bound = 1;
  for (int i = 0; i < m; ++i) bound *= k;
  for (int i = 0; i < (m + 1) / 2; ++i) bound *= m;
  return bound + 1;
}

struct SectionSplit {
  std::vector<int> int_coords;  // = inst.int_set
  std::vector<int> cont_coords; // complement, increasing
};

SectionSplit split_coords(const DualFormMIP& inst) {
  SectionSplit s;
  s.int_coords = inst.int_set;
  size_t next = 0;
  for (int i = 0; i < inst.num_vars(); ++i) {
    if (next < s.int_coords.size() && s.int_coords[next] == i) {
      ++next;
    } else {
      s.cont_coords.push_back(i);
    }
  }
  return s;
}

}  // namespace

LpRelaxation solve_lp_relaxation(const DualFormMIP& inst) {
  inst.validate();
  LpRelaxation out;
  try {
    const CaptureOutcome res = capture_lp_max(inst.A, inst.b, inst.c);
    if (!res.feasible) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    out.status = LpStatus::Optimal;
    out.value = res.value;
    out.y = res.y;
  } catch (const InfeasibleLPError&) {
    out.status = LpStatus::InfeasibleOrUnbounded;
  }
  return out;
}

bool region_bounded(const DualFormMIP& inst, RatVector* direction) {
  const int m = inst.num_vars();
  // Probe the recession cone intersected with the unit box; the cone is
  // nonzero iff some coordinate can recede, and scaling puts such a
  // direction inside the box.
  RatMatrix A = inst.A;
  RatVector c(inst.num_constraints(), Rational(0));
  append_box(A, c, 1);
  for (int i = 0; i < m; ++i) {
    for (int sign = 0; sign < 2; ++sign) {
      RatVector b(m, Rational(0));
      b[i] = sign == 0 ? 1 : -1;
      const CaptureOutcome res = capture_lp_max(A, b, c);
      if (!res.feasible) {
        throw InternalError("recession probe region contains the origin");
      }
      if (res.value > 0) {
        if (direction) *direction = res.y;
        return false;
      }
    }
  }
  return true;
}

std::vector<IntegerInterval> derive_bounds(const DualFormMIP& inst) {
  inst.validate();
  if (!region_bounded(inst)) {
    throw BoundsUnavailableError(
        "the region admits an unbounded direction; enumeration bounds do not exist");
  }
  RatMatrix A = inst.A;
  RatVector c = inst.c;
  append_box(A, c, Rational(enclosing_box_bound(inst)));
  const int m = inst.num_vars();

  std::vector<IntegerInterval> bounds;
  bounds.reserve(inst.int_set.size());
  for (int i : inst.int_set) {
    IntegerInterval iv;
    for (int sign = 0; sign < 2; ++sign) {
      RatVector b(m, Rational(0));
      b[i] = sign == 0 ? 1 : -1;
      const CaptureOutcome res = capture_lp_max(A, b, c);
      if (!res.feasible) {
        // Boxed region empty and recession-free, so the region itself is
        // empty; signal with an empty interval.
        iv.lo = 1;
        iv.hi = 0;
        bounds.assign(inst.int_set.size(), iv);
        return bounds;
      }
      if (sign == 0) {
        iv.hi = floor_int(res.value) + (is_integral(res.value) ? 0 : 1);
      } else {
        iv.lo = -(floor_int(res.value) + (is_integral(res.value) ? 0 : 1));
      }
    }
    bounds.push_back(iv);
  }
  return bounds;
}

OracleResult oracle_solve(const DualFormMIP& inst,
                          const std::optional<std::vector<IntegerInterval>>& bounds,
                          std::vector<RatVector>* enumerated_points) {
  inst.validate();
  std::vector<IntegerInterval> box;
  if (bounds) {
    if (bounds->size() != inst.int_set.size()) {
      throw ValidationError("bounds must give one interval per integer variable");
    }
    if (!region_bounded(inst)) {
      throw BoundsUnavailableError(
          "the region admits an unbounded direction; supplied bounds cannot make "
          "enumeration exhaustive");
    }
    box = *bounds;
  } else {
    box = derive_bounds(inst);
  }

  const SectionSplit split = split_coords(inst);
  const int m = inst.num_vars();
  const Rational big = Rational(enclosing_box_bound(inst));

  // Section data for a fixed integer assignment: continuous rows only,
  // costs shifted by the assignment's share of each constraint.
  RatMatrix a_cont(static_cast<int>(split.cont_coords.size()), inst.num_constraints());
  RatVector b_cont(split.cont_coords.size());
  for (size_t k = 0; k < split.cont_coords.size(); ++k) {
    a_cont.set_row(static_cast<int>(k), inst.A.row(split.cont_coords[k]));
    b_cont[k] = inst.b[split.cont_coords[k]];
  }
  RatMatrix a_boxed = a_cont;
  RatVector c_pad(inst.num_constraints(), Rational(0));
  if (!split.cont_coords.empty()) {
    append_box(a_boxed, c_pad, big);
  }

  OracleResult best;
  std::vector<Integer> assign(split.int_coords.size());
  for (size_t k = 0; k < assign.size(); ++k) assign[k] = box[k].lo;

  const auto consider = [&](const Rational& value, const RatVector& point) {
    if (enumerated_points) enumerated_points->push_back(point);
    if (best.status == OracleStatus::Optimal) {
      if (value < *best.value) return;
      if (value == *best.value &&
          lex_compare(point, *best.witness) != Ordering::Greater) {
        return;
      }
    }
    best.status = OracleStatus::Optimal;
    best.value = value;
    best.witness = point;
  };

  bool any_interval_empty = false;
  for (const IntegerInterval& iv : box) {
    if (iv.lo > iv.hi) any_interval_empty = true;
  }

  while (!any_interval_empty) {
    // Fixed integer part: residual cost of each constraint.
    RatVector c_res(inst.num_constraints());
    bool int_part_ok = true;
    for (int j = 0; j < inst.num_constraints(); ++j) {
      Rational used = 0;
      for (size_t k = 0; k < split.int_coords.size(); ++k) {
        used += Rational(assign[k]) * inst.A(split.int_coords[k], j);
      }
      c_res[j] = inst.c[j] - used;
      if (split.cont_coords.empty() && c_res[j] < 0) int_part_ok = false;
    }
    Rational int_value = 0;
    for (size_t k = 0; k < split.int_coords.size(); ++k) {
      int_value += Rational(assign[k]) * inst.b[split.int_coords[k]];
    }

    if (split.cont_coords.empty()) {
      if (int_part_ok) {
        RatVector point(m);
        for (size_t k = 0; k < split.int_coords.size(); ++k) {
          point[split.int_coords[k]] = Rational(assign[k]);
        }
        consider(int_value, point);
      }
    } else {
      RatVector c_boxed = c_res;
      c_boxed.resize(c_res.size() + 2 * split.cont_coords.size());
      for (size_t k = 0; k < 2 * split.cont_coords.size(); ++k) {
        c_boxed[c_res.size() + k] = big;
      }
      const CaptureOutcome res = capture_lp_max(a_boxed, b_cont, c_boxed);
      if (res.feasible) {
        RatVector point(m);
        for (size_t k = 0; k < split.int_coords.size(); ++k) {
          point[split.int_coords[k]] = Rational(assign[k]);
        }
        for (size_t k = 0; k < split.cont_coords.size(); ++k) {
          point[split.cont_coords[k]] = res.y[k];
        }
        consider(int_value + res.value, point);
      }
    }

    // Odometer step over the integer box.
    size_t k = 0;
    for (; k < assign.size(); ++k) {
      if (assign[k] < box[k].hi) {
        ++assign[k];
        for (size_t r = 0; r < k; ++r) assign[r] = box[r].lo;
        break;
      }
    }
    if (k == assign.size()) break;
  }

  return best;
}

}  // namespace gmicol
