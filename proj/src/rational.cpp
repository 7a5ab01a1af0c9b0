// SPDX-License-Identifier: Apache-2.0

#include "gmicol/rational.hpp"

namespace gmicol {

Integer floor_int(const Rational& q) {
  const Integer num = numerator(q);
  const Integer den = denominator(q);  // > 0 for canonical values
  Integer quot = num / den;            // truncates toward zero
  if (num % den != 0 && num < 0) {
    --quot;
  }
  return quot;
}

Rational frac(const Rational& q) { return q - Rational(floor_int(q)); }

bool is_integral(const Rational& q) { return denominator(q) == 1; }

Rational make_rational(Integer num, Integer den) {
  if (den == 0) {
    throw ParseError("rational with zero denominator");
  }
  // The (mpz, mpz) constructor canonicalizes sign and gcd.
  return Rational(std::move(num), std::move(den));
}

Rational parse_rational(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string::npos) {
    throw ParseError("empty rational literal");
  }
  const std::string body = text.substr(first, last - first + 1);
  const auto slash = body.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(body));
    }
    Integer num(body.substr(0, slash));
    Integer den(body.substr(slash + 1));
    return make_rational(std::move(num), std::move(den));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("malformed rational literal: \"" + body + "\"");
  }
}

std::string to_string(const Rational& q) { return q.str(); }

}  // namespace gmicol
