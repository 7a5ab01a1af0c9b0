// SPDX-License-Identifier: Apache-2.0

#include "gmicol/linalg.hpp"

#include <utility>

namespace gmicol {

Ordering lex_compare(const RatVector& u, const RatVector& v) {
  if (u.size() != v.size()) {
    throw ValidationError("lex_compare: length mismatch");
  }
  for (size_t k = 0; k < u.size(); ++k) {
    if (u[k] < v[k]) return Ordering::Less;
    if (u[k] > v[k]) return Ordering::Greater;
  }
  return Ordering::Equal;
}

bool lex_positive(const RatVector& v) {
  for (const Rational& x : v) {
    if (x != 0) return x > 0;
  }
  return false;
}

Rational dot(const RatVector& u, const RatVector& v) {
  if (u.size() != v.size()) {
    throw ValidationError("dot: length mismatch");
  }
  Rational acc = 0;
  for (size_t k = 0; k < u.size(); ++k) {
    acc += u[k] * v[k];
  }
  return acc;
}

void add_scaled(RatVector& dst, const Rational& s, const RatVector& src) {
  for (size_t k = 0; k < dst.size(); ++k) {
    dst[k] += s * src[k];
  }
}

bool all_integral(const RatVector& v) {
  for (const Rational& x : v) {
    if (!is_integral(x)) return false;
  }
  return true;
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

RatVector RatMatrix::row(int i) const {
  RatVector out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
  return out;
}

RatVector RatMatrix::col(int j) const {
  RatVector out(rows_);
  for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

void RatMatrix::set_row(int i, const RatVector& values) {
  for (int j = 0; j < cols_; ++j) (*this)(i, j) = values[j];
}

RatVector operator*(const RatMatrix& m, const RatVector& v) {
  RatVector out(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    Rational acc = 0;
    for (int j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    out[i] = std::move(acc);
  }
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

RatMatrix invert(const RatMatrix& m) {
  if (m.rows() != m.cols()) {
    throw ValidationError("invert: matrix not square");
  }
  const int n = m.rows();
  RatMatrix work = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (int colk = 0; colk < n; ++colk) {
    int pivot = -1;
    for (int r = colk; r < n; ++r) {
      if (work(r, colk) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      throw SingularMatrixError("invert: singular matrix");
    }
    if (pivot != colk) {
      for (int j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(colk, j));
        std::swap(inv(pivot, j), inv(colk, j));
      }
    }
    const Rational scale = work(colk, colk);
    for (int j = 0; j < n; ++j) {
      work(colk, j) /= scale;
      inv(colk, j) /= scale;
    }
    for (int r = 0; r < n; ++r) {
      if (r == colk || work(r, colk) == 0) continue;
      const Rational factor = work(r, colk);
      for (int j = 0; j < n; ++j) {
        work(r, j) -= factor * work(colk, j);
        inv(r, j) -= factor * inv(colk, j);
      }
    }
  }
  return inv;
}

}  // namespace gmicol
