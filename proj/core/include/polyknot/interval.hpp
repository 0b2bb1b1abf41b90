#pragma once

#include <mpfr.h>

#include <string>

#include "polyknot/rational.hpp"

namespace polyknot {

/// Working precision (bits) used by every interval operation on this thread.
mpfr_prec_t working_precision();
void set_default_precision(mpfr_prec_t bits);
mpfr_prec_t default_precision();

/// Raises (or lowers) the working precision for the lifetime of the guard.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(mpfr_prec_t bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  mpfr_prec_t saved_;
};

/// Closed interval [lo, hi] with MPFR endpoints. Every operation rounds
/// outward, so the result always encloses the exact real result.
class Interval {
 public:
  Interval();
  explicit Interval(const Rational& q);
  Interval(const Rational& lo, const Rational& hi);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval from_double(double value);
  static Interval hull(const Interval& a, const Interval& b);

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo_mut() { return lo_; }
  mpfr_ptr hi_mut() { return hi_; }

  double lo_double() const;
  double hi_double() const;
  double mid_double() const;
  double radius_double() const;

  /// Exact dyadic endpoints.
  Rational lo_rational() const;
  Rational hi_rational() const;
  Rational mid_rational() const;

  bool contains_zero() const;
  bool contains(const Rational& q) const;
  bool certainly_positive() const;
  bool certainly_negative() const;
  bool is_point() const;
  /// True when [lo, hi] lies strictly inside (other.lo, other.hi).
  bool strictly_inside(const Interval& other) const;
  bool overlaps(const Interval& other) const;

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval& operator+=(const Interval& b) { return *this = *this + b; }
  Interval& operator-=(const Interval& b) { return *this = *this - b; }
  Interval& operator*=(const Interval& b) { return *this = *this * b; }

  /// Endpoint-wise identity (same bits), used for table equality.
  friend bool operator==(const Interval& a, const Interval& b);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

Interval abs(const Interval& x);
Interval sqr(const Interval& x);
Interval pow(const Interval& x, unsigned long n);
/// Square root of the nonnegative part of x.
Interval sqrt(const Interval& x);
/// k-th root of the nonnegative part of x.
Interval root(const Interval& x, unsigned long k);
Interval exp(const Interval& x);
/// Requires x.lo > 0.
Interval log(const Interval& x);
/// x^r for x >= 0 (negative parts are clipped) and rational r > 0.
Interval pow(const Interval& x, const Rational& r);
Interval intersect(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);

/// Outward-rounded decimal rendering "[lo, hi]" with `digits` significant digits.
std::string format_decimal(const Interval& x, int digits = 20);
/// Exact rendering "[p/q, p/q]" of the dyadic endpoints.
std::string format_exact(const Interval& x);

}  // namespace polyknot
