// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace gmicol {

/// Arbitrary-precision integer (GMP-backed).
using Integer = boost::multiprecision::mpz_int;

/// Arbitrary-precision rational, always kept canonical: positive
/// denominator, gcd(|num|, den) = 1. Arithmetic on canonical values
/// stays canonical; external input must go through parse_rational or
/// make_rational, which canonicalize and validate.
using Rational = boost::multiprecision::mpq_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularMatrixError : Error {
  using Error::Error;
};
struct InfeasibleLPError : Error {
  using Error::Error;
};
struct NotFractionalError : Error {
  using Error::Error;
};
struct KappaViolatedError : Error {
  using Error::Error;
};
struct IdentityViolatedError : Error {
  using Error::Error;
};
struct BoundsUnavailableError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};
/// A proved invariant failed at runtime; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

/// Greatest integer <= q.
Integer floor_int(const Rational& q);

/// q - floor(q), in [0, 1). Zero exactly when q is integral.
Rational frac(const Rational& q);

bool is_integral(const Rational& q);

/// Canonicalizing constructor; accepts any denominator sign, rejects zero.
Rational make_rational(Integer num, Integer den);

/// Parses "p", "-p", or "p/q" decimal strings; canonicalizes the result.
Rational parse_rational(const std::string& text);

/// Canonical "p" / "p/q" form, denominator omitted when 1.
std::string to_string(const Rational& q);

}  // namespace gmicol
