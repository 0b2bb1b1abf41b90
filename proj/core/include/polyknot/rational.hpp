#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace polyknot {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q", or a decimal literal such as "-0.125" or "3e-2".
/// Decimals are read as exact decimal fractions.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

Rational pow(const Rational& base, unsigned long exponent);
Rational abs(const Rational& q);

/// Exact k-th root when `q` is a perfect k-th power of a rational.
std::optional<Rational> exact_root(const Rational& q, unsigned long k);

/// Smallest integer strictly greater than q.
Integer floor_plus_one(const Rational& q);

}  // namespace polyknot
