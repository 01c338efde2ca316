#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace weyrkit {

// GMP keeps every mpq_class in lowest terms with a positive denominator,
// provided values are built through its arithmetic or canonicalized after
// a raw string assignment (parse_rational does that).
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p/q", "-p/q" or an integer literal. Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

// C(n, k), zero when k < 0 or k > n.
Integer binomial(long n, long k);

Integer factorial(unsigned long n);

}  // namespace weyrkit
