// SPDX-License-Identifier: Apache-2.0

#include "gmicol/reformulate.hpp"

#include <algorithm>
#include <string>

namespace gmicol {

void DualFormMIP::validate() const {
  const int m = A.rows();
  const int n = A.cols();
  if (m < 1 || n < 1) {
    throw ValidationError("instance must have at least one variable and one constraint");
  }
  if (static_cast<int>(b.size()) != m) {
    throw ValidationError("b has length " + std::to_string(b.size()) +
                          ", expected " + std::to_string(m));
  }
  if (static_cast<int>(c.size()) != n) {
    throw ValidationError("c has length " + std::to_string(c.size()) +
                          ", expected " + std::to_string(n));
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!is_integral(A(i, j))) {
        throw ValidationError("A entry at row " + std::to_string(i + 1) + ", column " +
                              std::to_string(j + 1) + " must be an integer");
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    if (!is_integral(b[i])) {
      throw ValidationError("b entry " + std::to_string(i + 1) + " must be an integer");
    }
  }
  for (int j = 0; j < n; ++j) {
    if (!is_integral(c[j])) {
      throw ValidationError("c entry " + std::to_string(j + 1) + " must be an integer");
    }
  }
  if (int_set.empty()) {
    throw ValidationError("int_set must name at least one variable");
  }
  int prev = -1;
  for (int i : int_set) {
    if (i < 0 || i >= m) {
      throw ValidationError("int_set names a variable outside the instance");
    }
    if (i <= prev) {
      throw ValidationError("int_set must be strictly increasing with no duplicates");
    }
    prev = i;
  }
}

void StandardFormLP::append_column(const RatVector& col, const Rational& cost) {
  if (static_cast<int>(col.size()) != num_rows) {
    throw ValidationError("appended column has wrong length");
  }
  cols.push_back(col);
  costs.push_back(cost);
}

RatVector Permutation::unpermute(const RatVector& permuted) const {
  if (permuted.size() != new_to_old.size()) {
    throw ValidationError("unpermute: length mismatch");
  }
  RatVector out(permuted.size());
  for (size_t k = 0; k < new_to_old.size(); ++k) {
    out[new_to_old[k]] = permuted[k];
  }
  return out;
}

ValueIntegrality check_value_integrality(const DualFormMIP& inst) {
  size_t next = 0;
  for (int i = 0; i < inst.num_vars(); ++i) {
    const bool is_int = next < inst.int_set.size() && inst.int_set[next] == i;
    if (is_int) {
      ++next;
    } else if (inst.b[i] != 0) {
      return ValueIntegrality::Unverified;
    }
  }
  return ValueIntegrality::Satisfied;
}

std::pair<DualFormMIP, Permutation> permute_integers(const DualFormMIP& inst) {
  Permutation perm;
  perm.new_to_old.reserve(inst.num_vars());
  std::vector<int> order;
  order.insert(order.end(), inst.int_set.begin(), inst.int_set.end());
  size_t next = 0;
  for (int i = 0; i < inst.num_vars(); ++i) {
    if (next < inst.int_set.size() && inst.int_set[next] == i) {
      ++next;
    } else {
      order.push_back(i);
    }
  }
  // order[k] is the original index of the k-th permuted coordinate.
  DualFormMIP out;
  out.A = RatMatrix(inst.A.rows(), inst.A.cols());
  out.b.resize(inst.b.size());
  out.c = inst.c;
  for (int k = 0; k < inst.num_vars(); ++k) {
    out.A.set_row(k, inst.A.row(order[k]));
    out.b[k] = inst.b[order[k]];
  }
  out.int_set.resize(inst.int_set.size());
  for (size_t k = 0; k < inst.int_set.size(); ++k) {
    out.int_set[k] = static_cast<int>(k);
  }
  perm.new_to_old = std::move(order);
  return {std::move(out), std::move(perm)};
}

LexMIP to_lex(const DualFormMIP& inst) {
  inst.validate();
  auto [permuted, perm] = permute_integers(inst);
  const int m = permuted.num_vars();
  const int n = permuted.num_constraints();

  LexMIP lex;
  lex.perm = std::move(perm);
  lex.int_count = 1 + static_cast<int>(inst.int_set.size());
  lex.original = inst;
  lex.lp.num_rows = m + 1;

  RatVector capture(m + 1);
  capture[0] = 1;
  for (int i = 0; i < m; ++i) capture[i + 1] = -permuted.b[i];
  lex.lp.cols.push_back(std::move(capture));
  lex.lp.costs.push_back(0);

  for (int j = 0; j < n; ++j) {
    RatVector col(m + 1);
    for (int i = 0; i < m; ++i) col[i + 1] = permuted.A(i, j);
    lex.lp.cols.push_back(std::move(col));
    lex.lp.costs.push_back(permuted.c[j]);
  }
  return lex;
}

RatVector lift_to_lex(const LexMIP& lex, const RatVector& y) {
  const int m = lex.original.num_vars();
  if (static_cast<int>(y.size()) != m) {
    throw ValidationError("lift_to_lex: point has wrong length");
  }
  RatVector out(m + 1);
  out[0] = Rational(floor_int(dot(y, lex.original.b)));
  for (int k = 0; k < m; ++k) {
    out[k + 1] = y[lex.perm.new_to_old[k]];
  }
  return out;
}

ExtractedSolution extract(const LexMIP& lex, const RatVector& ybar) {
  const int m = lex.original.num_vars();
  if (static_cast<int>(ybar.size()) != m + 1) {
    throw ValidationError("extract: dual vector has wrong length");
  }
  ExtractedSolution out;
  out.value = ybar[0];
  RatVector permuted(ybar.begin() + 1, ybar.end());
  out.y = lex.perm.unpermute(permuted);
  return out;
}

}  // namespace gmicol
