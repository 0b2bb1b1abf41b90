#include "polyknot/metric.hpp"

#include <algorithm>

#include "polyknot/error.hpp"

namespace polyknot {

namespace {

bool small_ratio(const Rational& r) {
  return r.get_num().fits_ulong_p() && r.get_den().fits_ulong_p() && r.get_num() <= 64 && r.get_den() <= 64;
}

// x^r for x >= 0 when the result is rational.
std::optional<Rational> exact_rpow(const Rational& x, const Rational& r) {
  if (!small_ratio(r)) return std::nullopt;
  return exact_root(pow(x, r.get_num().get_ui()), r.get_den().get_ui());
}

Rational tolerance() { return Rational(1, 1000000000000L); }

}  // namespace

MetricTag MetricTag::power(const Rational& r) {
  if (r < 1) throw Error(ErrorKind::BadExponents, "metric exponent must be >= 1, got " + polyknot::to_string(r));
  MetricTag m;
  m.r = r;
  return m;
}

MetricTag parse_metric(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return MetricTag::inf();
  return MetricTag::power(parse_rational(text));
}

std::string to_string(const MetricTag& m) { return m.is_inf() ? "inf" : to_string(*m.r); }

Scalar norm(const std::vector<Scalar>& values, const MetricTag& m) {
  std::vector<Scalar> mags;
  mags.reserve(values.size());
  for (const auto& v : values)
    if (!v.is_exact_zero()) mags.push_back(abs(v));
  if (mags.empty()) return Scalar(Rational(0));

  if (m.is_inf()) {
    Scalar best = mags.front();
    for (std::size_t k = 1; k < mags.size(); ++k) best = max(best, mags[k]);
    return best;
  }

  const Rational& r = *m.r;
  if (r == 1) {
    Scalar sum(Rational(0));
    for (const auto& v : mags) sum += v;
    return sum;
  }

  bool exact = std::all_of(mags.begin(), mags.end(), [](const Scalar& v) { return v.is_exact(); });
  if (exact) {
    Rational sum = 0;
    bool rational_terms = true;
    for (const auto& v : mags) {
      auto term = exact_rpow(v.exact(), r);
      if (!term) {
        rational_terms = false;
        break;
      }
      sum += *term;
    }
    if (rational_terms) {
      Rational inv = 1 / r;
      if (auto root = exact_rpow(sum, inv)) return Scalar(*root);
      return Scalar(pow(Interval(sum), inv));
    }
  }

  Interval sum(Rational(0));
  for (const auto& v : mags) sum += pow(v.enclosure(), r);
  return Scalar(pow(sum, Rational(1 / r)));
}

Scalar distance(const CoefficientTable& a, const CoefficientTable& b, const MetricTag& m) {
  CoefficientTable diff = a - b;
  std::vector<Scalar> values;
  values.reserve(diff.size());
  for (const auto& [idx, v] : diff.entries()) values.push_back(v);
  return norm(values, m);
}

Scalar distance(const PolynomialKnot& a, const PolynomialKnot& b, const MetricTag& m) {
  return distance(a.table(), b.table(), m);
}

Scalar seq_distance(const SequencePoint& x, const SequencePoint& y, const MetricTag& m) {
  std::map<int, Scalar> diff;
  for (const auto& [i, v] : x.entries()) diff[i] = v;
  for (const auto& [i, v] : y.entries()) diff[i] = diff[i] - v;
  std::vector<Scalar> values;
  for (const auto& [i, v] : diff) values.push_back(v);
  return norm(values, m);
}

MonotonicityCheck norm_monotonicity_check(const std::vector<Scalar>& a, const Rational& r, const Rational& s) {
  if (s < 1 || r < s) throw Error(ErrorKind::BadExponents, "need r >= s >= 1");
  for (const auto& v : a)
    if (lower_bound(v) < 0) throw Error(ErrorKind::NegativeInput, "entries must be nonnegative");
  MonotonicityCheck out;
  out.lhs = norm(a, MetricTag::power(r));
  out.rhs = norm(a, MetricTag::power(s));
  out.holds = upper_bound(out.lhs) <= lower_bound(out.rhs) + tolerance();
  return out;
}

const char* to_string(Space s) {
  switch (s) {
    case Space::Knots: return "L";
    case Space::KnotsN: return "L^n";
    case Space::Sequences: return "E";
    case Space::SequencesN: return "E^n";
  }
  return "?";
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::In: return "in";
    case Membership::Out: return "out";
    case Membership::Undecidable: return "undecidable";
  }
  return "?";
}

namespace {

void check_radius(const Scalar& radius) {
  if (radius.sign().value_or(0) <= 0) throw Error(ErrorKind::InvalidArgument, "ball radius must be certainly positive");
}

bool in_space(const BallSpec& ball, const PolynomialKnot& p) {
  return ball.space != Space::KnotsN || p.table().max_component() <= ball.n;
}

bool in_space(const BallSpec& ball, const SequencePoint& p) {
  return ball.space != Space::SequencesN || p.max_index() <= ball.n;
}

template <class Dist>
Membership decide(const BallSpec& ball, Dist dist) {
  for (long bits = std::max<long>(working_precision(), 128); bits <= kMaxPrecisionBits; bits *= 2) {
    PrecisionGuard guard(bits);
    Scalar d = dist();
    auto less = certainly_less(d, ball.radius);
    if (less) return *less ? Membership::In : Membership::Out;
  }
  return Membership::Undecidable;
}

}  // namespace

BallSpec make_ball(PolynomialKnot center, Scalar radius, MetricTag metric, std::optional<int> n) {
  check_radius(radius);
  if (n && center.table().max_component() > *n)
    throw Error(ErrorKind::SpaceMismatch, "ball center lies outside the restricted space");
  Space space = n ? Space::KnotsN : Space::Knots;
  return BallSpec{std::move(center), std::move(radius), metric, space, n.value_or(0)};
}

BallSpec make_ball(SequencePoint center, Scalar radius, MetricTag metric, std::optional<int> n) {
  check_radius(radius);
  if (n && center.max_index() > *n)
    throw Error(ErrorKind::SpaceMismatch, "ball center lies outside the restricted space");
  Space space = n ? Space::SequencesN : Space::Sequences;
  return BallSpec{std::move(center), std::move(radius), metric, space, n.value_or(0)};
}

Membership ball_membership(const BallSpec& ball, const PolynomialKnot& point) {
  const auto* center = std::get_if<PolynomialKnot>(&ball.center);
  if (!center || !in_space(ball, point))
    throw Error(ErrorKind::SpaceMismatch, std::string("point is not in the ball's space ") + to_string(ball.space));
  return decide(ball, [&] { return distance(*center, point, ball.metric); });
}

Membership ball_membership(const BallSpec& ball, const SequencePoint& point) {
  const auto* center = std::get_if<SequencePoint>(&ball.center);
  if (!center || !in_space(ball, point))
    throw Error(ErrorKind::SpaceMismatch, std::string("point is not in the ball's space ") + to_string(ball.space));
  return decide(ball, [&] { return seq_distance(*center, point, ball.metric); });
}

bool ball_contains(const BallSpec& ball, const PolynomialKnot& point) {
  Membership m = ball_membership(ball, point);
  if (m == Membership::Undecidable) throw Error(ErrorKind::Undecidable, "ball membership undecided at 1024 bits");
  return m == Membership::In;
}

bool ball_contains(const BallSpec& ball, const SequencePoint& point) {
  Membership m = ball_membership(ball, point);
  if (m == Membership::Undecidable) throw Error(ErrorKind::Undecidable, "ball membership undecided at 1024 bits");
  return m == Membership::In;
}

}  // namespace polyknot
