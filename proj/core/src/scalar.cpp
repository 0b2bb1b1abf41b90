#include "polyknot/scalar.hpp"

#include "polyknot/error.hpp"

namespace polyknot {

Interval Scalar::enclosure() const {
  if (is_exact()) return Interval(exact());
  return interval();
}

std::optional<int> Scalar::sign() const {
  if (is_exact()) return sgn(exact());
  if (interval().certainly_positive()) return 1;
  if (interval().certainly_negative()) return -1;
  if (interval().is_point()) return 0;
  return std::nullopt;
}

double Scalar::to_double() const {
  return is_exact() ? exact().get_d() : interval().mid_double();
}

double Scalar::radius_double() const {
  return is_exact() ? 0.0 : interval().radius_double();
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(Rational(-exact()));
  return Scalar(-interval());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.exact() + b.exact()));
  return Scalar(a.enclosure() + b.enclosure());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.exact() - b.exact()));
  return Scalar(a.enclosure() - b.enclosure());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.exact() * b.exact()));
  // exact zero annihilates an enclosure
  if (a.is_exact_zero() || b.is_exact_zero()) return Scalar(Rational(0));
  return Scalar(a.enclosure() * b.enclosure());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_exact_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  if (a.is_exact() && b.is_exact()) return Scalar(Rational(a.exact() / b.exact()));
  return Scalar(a.enclosure() / b.enclosure());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() != b.is_exact()) return false;
  if (a.is_exact()) return a.exact() == b.exact();
  return a.interval() == b.interval();
}

Scalar abs(const Scalar& x) {
  if (x.is_exact()) return Scalar(abs(x.exact()));
  return Scalar(abs(x.interval()));
}

Scalar pow(const Scalar& x, unsigned long n) {
  if (x.is_exact()) return Scalar(pow(x.exact(), n));
  return Scalar(pow(x.interval(), n));
}

std::optional<bool> certainly_less(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() < b.exact();
  Interval ia = a.enclosure();
  Interval ib = b.enclosure();
  if (mpfr_less_p(ia.hi(), ib.lo())) return true;
  if (mpfr_greaterequal_p(ia.lo(), ib.hi())) return false;
  return std::nullopt;
}

Scalar max(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() < b.exact() ? b : a;
  return Scalar(max(a.enclosure(), b.enclosure()));
}

std::string to_string(const Scalar& x) {
  return x.is_exact() ? to_string(x.exact()) : format_exact(x.interval());
}

std::string to_display(const Scalar& x, int digits) {
  return x.is_exact() ? to_string(x.exact()) : format_decimal(x.interval(), digits);
}

Scalar parse_scalar(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw Error(ErrorKind::InvalidArgument, "unterminated interval: '" + std::string(text) + "'");
    std::string_view body = s.substr(1, s.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string_view::npos)
      throw Error(ErrorKind::InvalidArgument, "interval needs two endpoints: '" + std::string(text) + "'");
    Rational lo = parse_rational(body.substr(0, comma));
    Rational hi = parse_rational(body.substr(comma + 1));
    if (lo > hi) throw Error(ErrorKind::InvalidArgument, "interval with lo > hi: '" + std::string(text) + "'");
    if (lo == hi) return Scalar(lo);
    return Scalar(Interval(lo, hi));
  }
  return Scalar(parse_rational(s));
}

Rational lower_bound(const Scalar& x) {
  return x.is_exact() ? x.exact() : x.interval().lo_rational();
}

Rational upper_bound(const Scalar& x) {
  return x.is_exact() ? x.exact() : x.interval().hi_rational();
}

}  // namespace polyknot
