// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "gmicol/rational.hpp"

namespace gmicol {

using RatVector = std::vector<Rational>;

enum class Ordering { Less, Equal, Greater };

/// Ordering of the first differing coordinate. Throws on length mismatch.
Ordering lex_compare(const RatVector& u, const RatVector& v);

/// First nonzero entry is positive (false for the zero vector).
bool lex_positive(const RatVector& v);

Rational dot(const RatVector& u, const RatVector& v);

/// dst += s * src
void add_scaled(RatVector& dst, const Rational& s, const RatVector& src);

bool all_integral(const RatVector& v);

/// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  RatVector row(int i) const;
  RatVector col(int j) const;
  void set_row(int i, const RatVector& values);

  bool operator==(const RatMatrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

RatVector operator*(const RatMatrix& m, const RatVector& v);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

/// Exact inverse by Gauss-Jordan elimination, pivoting on the first
/// nonzero entry of each column. Throws SingularMatrixError.
RatMatrix invert(const RatMatrix& m);

}  // namespace gmicol
