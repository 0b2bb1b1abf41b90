#pragma once

#include <optional>
#include <string>
#include <variant>

#include "polyknot/interval.hpp"
#include "polyknot/rational.hpp"

namespace polyknot {

/// A real coefficient: either an exact rational or a certified enclosure.
/// Arithmetic stays exact while every operand is exact.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(const Rational& q) : value_(q) { std::get<Rational>(value_).canonicalize(); }  // NOLINT(google-explicit-constructor)
  Scalar(Rational&& q) : value_(std::move(q)) { std::get<Rational>(value_).canonicalize(); }  // NOLINT(google-explicit-constructor)
  Scalar(long v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Interval& x) : value_(x) {}  // NOLINT(google-explicit-constructor)
  Scalar(Interval&& x) : value_(std::move(x)) {}  // NOLINT(google-explicit-constructor)

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& exact() const { return std::get<Rational>(value_); }
  const Interval& interval() const { return std::get<Interval>(value_); }
  /// Enclosure at the working precision (a thin interval for rationals).
  Interval enclosure() const;

  bool is_exact_zero() const { return is_exact() && sgn(exact()) == 0; }
  /// Sign when it is certain; nullopt for an interval straddling zero.
  std::optional<int> sign() const;
  bool certainly_nonzero() const { return sign().value_or(0) != 0; }

  double to_double() const;
  double radius_double() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  /// Structural equality: same mode and same value / same endpoints.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rational, Interval> value_;
};

Scalar abs(const Scalar& x);
Scalar pow(const Scalar& x, unsigned long n);

/// Certified strict comparison a < b; nullopt when the enclosures overlap.
std::optional<bool> certainly_less(const Scalar& a, const Scalar& b);
/// Maximum; exact when both are exact.
Scalar max(const Scalar& a, const Scalar& b);

/// Text form used in documents: "p/q" for rationals, "[p/q, p/q]" for intervals.
std::string to_string(const Scalar& x);
/// Human-readable form: exact rationals as "p/q", intervals as decimal brackets.
std::string to_display(const Scalar& x, int digits = 20);
/// Accepts everything `to_string` produces plus decimal literals and
/// decimal interval endpoints.
Scalar parse_scalar(std::string_view text);

/// Rational lower bound of the value (the exact value for rationals).
Rational lower_bound(const Scalar& x);
Rational upper_bound(const Scalar& x);

}  // namespace polyknot
