#include "polyknot/interval.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "polyknot/error.hpp"

namespace polyknot {

namespace {

mpfr_prec_t initial_precision() {
  if (const char* env = std::getenv("POLYKNOT_PRECISION_BITS")) {
    char* end = nullptr;
    long bits = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && bits >= 32 && bits <= 65536) return bits;
  }
  return 128;
}

mpfr_prec_t& default_precision_ref() {
  static mpfr_prec_t bits = initial_precision();
  return bits;
}

thread_local mpfr_prec_t tls_precision = 0;

// Scratch value with RAII cleanup.
struct Tmp {
  mpfr_t v;
  Tmp() { mpfr_init2(v, working_precision()); }
  ~Tmp() { mpfr_clear(v); }
  Tmp(const Tmp&) = delete;
  Tmp& operator=(const Tmp&) = delete;
};

void min4(mpfr_ptr out, mpfr_srcptr a, mpfr_srcptr b, mpfr_srcptr c, mpfr_srcptr d) {
  mpfr_min(out, a, b, MPFR_RNDD);
  mpfr_min(out, out, c, MPFR_RNDD);
  mpfr_min(out, out, d, MPFR_RNDD);
}

void max4(mpfr_ptr out, mpfr_srcptr a, mpfr_srcptr b, mpfr_srcptr c, mpfr_srcptr d) {
  mpfr_max(out, a, b, MPFR_RNDU);
  mpfr_max(out, out, c, MPFR_RNDU);
  mpfr_max(out, out, d, MPFR_RNDU);
}

std::string decimal(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
  if (mpfr_zero_p(x)) return "0";
  if (mpfr_inf_p(x)) return mpfr_sgn(x) > 0 ? "inf" : "-inf";
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), x, rnd);
  std::string m(raw);
  mpfr_free_str(raw);
  bool neg = m[0] == '-';
  if (neg) m.erase(0, 1);
  while (m.size() > 1 && m.back() == '0') m.pop_back();
  std::string out;
  if (e > 0 && e <= 21) {
    if (static_cast<size_t>(e) >= m.size()) {
      out = m + std::string(static_cast<size_t>(e) - m.size(), '0');
    } else {
      out = m.substr(0, static_cast<size_t>(e)) + "." + m.substr(static_cast<size_t>(e));
    }
  } else if (e <= 0 && e > -6) {
    out = "0." + std::string(static_cast<size_t>(-e), '0') + m;
  } else {
    out = m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
  }
  return neg ? "-" + out : out;
}

Rational get_rational(mpfr_srcptr x) {
  if (!mpfr_number_p(x))
    throw Error(ErrorKind::InvalidArgument, "interval endpoint is not finite");
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

}  // namespace

mpfr_prec_t default_precision() { return default_precision_ref(); }

void set_default_precision(mpfr_prec_t bits) { default_precision_ref() = bits; }

mpfr_prec_t working_precision() {
  return tls_precision != 0 ? tls_precision : default_precision_ref();
}

PrecisionGuard::PrecisionGuard(mpfr_prec_t bits) : saved_(tls_precision) {
  tls_precision = bits;
}

PrecisionGuard::~PrecisionGuard() { tls_precision = saved_; }

Interval::Interval() {
  mpfr_init2(lo_, working_precision());
  mpfr_init2(hi_, working_precision());
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& q) {
  mpfr_init2(lo_, working_precision());
  mpfr_init2(hi_, working_precision());
  mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw Error(ErrorKind::InvalidArgument, "interval with lo > hi");
  mpfr_init2(lo_, working_precision());
  mpfr_init2(hi_, working_precision());
  mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, mpfr_get_prec(other.lo_));
  mpfr_init2(hi_, mpfr_get_prec(other.hi_));
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
  mpfr_init2(lo_, mpfr_get_prec(other.lo_));
  mpfr_init2(hi_, mpfr_get_prec(other.hi_));
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, mpfr_get_prec(other.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(other.hi_));
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_double(double value) {
  Interval r;
  mpfr_set_d(r.lo_, value, MPFR_RNDD);
  mpfr_set_d(r.hi_, value, MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_double() const {
  Tmp m;
  mpfr_add(m.v, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m.v, m.v, 1, MPFR_RNDN);
  return mpfr_get_d(m.v, MPFR_RNDN);
}

double Interval::radius_double() const {
  Tmp m;
  mpfr_sub(m.v, hi_, lo_, MPFR_RNDU);
  mpfr_div_2ui(m.v, m.v, 1, MPFR_RNDU);
  return mpfr_get_d(m.v, MPFR_RNDU);
}

Rational Interval::lo_rational() const { return get_rational(lo_); }
Rational Interval::hi_rational() const { return get_rational(hi_); }

Rational Interval::mid_rational() const {
  Rational m = (lo_rational() + hi_rational()) / 2;
  m.canonicalize();
  return m;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Interval::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::certainly_negative() const { return mpfr_sgn(hi_) < 0; }
bool Interval::is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }

bool Interval::strictly_inside(const Interval& other) const {
  return mpfr_greater_p(lo_, other.lo_) && mpfr_less_p(hi_, other.hi_);
}

bool Interval::overlaps(const Interval& other) const {
  return mpfr_lessequal_p(lo_, other.hi_) && mpfr_lessequal_p(other.lo_, hi_);
}

Interval Interval::operator-() const {
  Interval r;
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval r;
  Tmp p1, p2, p3, p4;
  mpfr_mul(p1.v, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_mul(p2.v, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_mul(p3.v, a.hi_, b.lo_, MPFR_RNDD);
  mpfr_mul(p4.v, a.hi_, b.hi_, MPFR_RNDD);
  min4(r.lo_, p1.v, p2.v, p3.v, p4.v);
  mpfr_mul(p1.v, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_mul(p2.v, a.lo_, b.hi_, MPFR_RNDU);
  mpfr_mul(p3.v, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_mul(p4.v, a.hi_, b.hi_, MPFR_RNDU);
  max4(r.hi_, p1.v, p2.v, p3.v, p4.v);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw Error(ErrorKind::InvalidArgument, "interval division by zero");
  Interval r;
  Tmp p1, p2, p3, p4;
  mpfr_div(p1.v, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_div(p2.v, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_div(p3.v, a.hi_, b.lo_, MPFR_RNDD);
  mpfr_div(p4.v, a.hi_, b.hi_, MPFR_RNDD);
  min4(r.lo_, p1.v, p2.v, p3.v, p4.v);
  mpfr_div(p1.v, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_div(p2.v, a.lo_, b.hi_, MPFR_RNDU);
  mpfr_div(p3.v, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_div(p4.v, a.hi_, b.hi_, MPFR_RNDU);
  max4(r.hi_, p1.v, p2.v, p3.v, p4.v);
  return r;
}

bool operator==(const Interval& a, const Interval& b) {
  return mpfr_equal_p(a.lo_, b.lo_) && mpfr_equal_p(a.hi_, b.hi_);
}

Interval abs(const Interval& x) {
  if (mpfr_sgn(x.lo()) >= 0) return x;
  if (mpfr_sgn(x.hi()) <= 0) return -x;
  Interval r;
  mpfr_set_zero(r.lo_mut(), 1);
  Tmp n;
  mpfr_neg(n.v, x.lo(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), n.v, x.hi(), MPFR_RNDU);
  return r;
}

Interval sqr(const Interval& x) { return pow(x, 2UL); }

Interval pow(const Interval& x, unsigned long n) {
  Interval r;
  if (n == 0) {
    mpfr_set_ui(r.lo_mut(), 1, MPFR_RNDD);
    mpfr_set_ui(r.hi_mut(), 1, MPFR_RNDU);
    return r;
  }
  if (n % 2 == 1) {
    mpfr_pow_ui(r.lo_mut(), x.lo(), n, MPFR_RNDD);
    mpfr_pow_ui(r.hi_mut(), x.hi(), n, MPFR_RNDU);
    return r;
  }
  Interval a = abs(x);
  mpfr_pow_ui(r.lo_mut(), a.lo(), n, MPFR_RNDD);
  mpfr_pow_ui(r.hi_mut(), a.hi(), n, MPFR_RNDU);
  return r;
}

Interval sqrt(const Interval& x) { return root(x, 2); }

Interval root(const Interval& x, unsigned long k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "zeroth root");
  if (x.certainly_negative()) throw Error(ErrorKind::InvalidArgument, "root of negative interval");
  Interval r;
  if (mpfr_sgn(x.lo()) <= 0) {
    mpfr_set_zero(r.lo_mut(), 1);
  } else {
    mpfr_rootn_ui(r.lo_mut(), x.lo(), k, MPFR_RNDD);
  }
  mpfr_rootn_ui(r.hi_mut(), x.hi(), k, MPFR_RNDU);
  return r;
}

Interval exp(const Interval& x) {
  Interval r;
  mpfr_exp(r.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_exp(r.hi_mut(), x.hi(), MPFR_RNDU);
  return r;
}

Interval log(const Interval& x) {
  if (mpfr_sgn(x.lo()) <= 0) throw Error(ErrorKind::InvalidArgument, "log of nonpositive interval");
  Interval r;
  mpfr_log(r.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_log(r.hi_mut(), x.hi(), MPFR_RNDU);
  return r;
}

Interval pow(const Interval& x, const Rational& r) {
  if (r <= 0) throw Error(ErrorKind::InvalidArgument, "nonpositive real exponent");
  if (x.certainly_negative()) throw Error(ErrorKind::InvalidArgument, "real power of negative interval");
  const auto& p = r.get_num();
  const auto& q = r.get_den();
  if (p.fits_ulong_p() && q.fits_ulong_p() && p <= 64 && q <= 64) {
    Interval base = x;
    if (mpfr_sgn(base.lo()) < 0) mpfr_set_zero(base.lo_mut(), 1);
    return root(pow(base, p.get_ui()), q.get_ui());
  }
  // x^r = exp(r log x) with both endpoints treated separately so a zero
  // lower endpoint maps to zero.
  Interval rr(r);
  Interval result;
  if (mpfr_sgn(x.lo()) <= 0) {
    mpfr_set_zero(result.lo_mut(), 1);
  } else {
    Interval lo_part;
    mpfr_set(lo_part.lo_mut(), x.lo(), MPFR_RNDD);
    mpfr_set(lo_part.hi_mut(), x.lo(), MPFR_RNDU);
    Interval e = exp(rr * log(lo_part));
    mpfr_set(result.lo_mut(), e.lo(), MPFR_RNDD);
  }
  if (mpfr_sgn(x.hi()) <= 0) {
    mpfr_set_zero(result.hi_mut(), 1);
  } else {
    Interval hi_part;
    mpfr_set(hi_part.lo_mut(), x.hi(), MPFR_RNDD);
    mpfr_set(hi_part.hi_mut(), x.hi(), MPFR_RNDU);
    Interval e = exp(rr * log(hi_part));
    mpfr_set(result.hi_mut(), e.hi(), MPFR_RNDU);
  }
  return result;
}

Interval intersect(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_max(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  if (mpfr_greater_p(r.lo(), r.hi())) throw Error(ErrorKind::InvalidArgument, "empty intersection");
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_max(r.lo_mut(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(r.hi_mut(), a.hi(), b.hi(), MPFR_RNDU);
  return r;
}

std::string format_decimal(const Interval& x, int digits) {
  return "[" + decimal(x.lo(), digits, MPFR_RNDD) + ", " + decimal(x.hi(), digits, MPFR_RNDU) + "]";
}

std::string format_exact(const Interval& x) {
  return "[" + to_string(x.lo_rational()) + ", " + to_string(x.hi_rational()) + "]";
}

}  // namespace polyknot
