#include <doctest.h>

#include <random>

#include "gmicol/linalg.hpp"

using namespace gmicol;

namespace {

RatVector vec(std::initializer_list<long> xs) {
  RatVector out;
  for (long x : xs) out.push_back(Rational(x));
  return out;
}

RatMatrix random_matrix(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-9, 9);
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = entry(rng);
  return m;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("lex_compare orders by the first differing entry") {
  CHECK(lex_compare(vec({1, 2}), vec({1, 3})) == Ordering::Less);
  CHECK(lex_compare(vec({2, 0}), vec({1, 9})) == Ordering::Greater);
  CHECK(lex_compare(vec({1, 2}), vec({1, 2})) == Ordering::Equal);
  CHECK(lex_compare(vec({0, 0, 1}), vec({0, 0, 0})) == Ordering::Greater);
  CHECK_THROWS_AS(lex_compare(vec({1}), vec({1, 2})), ValidationError);
}

TEST_CASE("lex_positive means nonzero with positive leading entry") {
  CHECK(lex_positive(vec({0, 0, 1})));
  CHECK(lex_positive(vec({1, -5, -5})));
  CHECK_FALSE(lex_positive(vec({0, 0, 0})));
  CHECK_FALSE(lex_positive(vec({0, -1, 9})));
}

TEST_CASE("dot and add_scaled") {
  CHECK(dot(vec({1, 2, 3}), vec({4, 5, 6})) == 32);
  RatVector d = vec({1, 1});
  add_scaled(d, Rational(-1, 2), vec({4, 2}));
  CHECK(d == vec({-1, 0}));
  CHECK_THROWS_AS(dot(vec({1}), vec({1, 2})), ValidationError);
}

TEST_CASE("all_integral") {
  CHECK(all_integral(vec({-3, 0, 7})));
  RatVector v = vec({1, 2});
  v.push_back(Rational(1, 2));
  CHECK_FALSE(all_integral(v));
}

TEST_CASE("matrix product against a hand example") {
  RatMatrix a(2, 3);
  a.set_row(0, vec({1, 2, 3}));
  a.set_row(1, vec({0, 1, -1}));
  RatMatrix b(3, 2);
  b.set_row(0, vec({1, 0}));
  b.set_row(1, vec({2, 1}));
  b.set_row(2, vec({0, 4}));
  const RatMatrix ab = a * b;
  CHECK(ab.row(0) == vec({5, 14}));
  CHECK(ab.row(1) == vec({2, -3}));
  CHECK(a * vec({1, 1, 1}) == vec({6, 0}));
}

TEST_CASE("invert reproduces a known inverse") {
  RatMatrix m(2, 2);
  m.set_row(0, vec({2, 1}));
  m.set_row(1, vec({5, 3}));
  const RatMatrix inv = invert(m);
  CHECK(inv.row(0) == vec({3, -1}));
  CHECK(inv.row(1) == vec({-5, 2}));
}

TEST_CASE("invert rejects singular input") {
  RatMatrix m(2, 2);
  m.set_row(0, vec({1, 2}));
  m.set_row(1, vec({2, 4}));
  CHECK_THROWS_AS(invert(m), SingularMatrixError);
  RatMatrix z(3, 3);
  CHECK_THROWS_AS(invert(z), SingularMatrixError);
}

TEST_CASE("invert times the input is the identity") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> size(1, 6);
  int done = 0;
  while (done < 100) {
    const int n = size(rng);
    const RatMatrix m = random_matrix(n, rng);
    RatMatrix inv;
    try {
      inv = invert(m);
    } catch (const SingularMatrixError&) {
      continue;
    }
    CHECK(inv * m == RatMatrix::identity(n));
    CHECK(m * inv == RatMatrix::identity(n));
    ++done;
  }
}

}  // TEST_SUITE
