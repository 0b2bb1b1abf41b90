#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polyknot/knot.hpp"

namespace polyknot {

/// Exponent of an l^r type metric; an empty `r` is the sup metric.
struct MetricTag {
  std::optional<Rational> r;

  static MetricTag inf() { return {}; }
  /// Throws BadExponents for r < 1.
  static MetricTag power(const Rational& r);

  bool is_inf() const { return !r.has_value(); }
  friend bool operator==(const MetricTag&, const MetricTag&) = default;
};

/// "inf" or a decimal / "p/q" exponent >= 1.
MetricTag parse_metric(std::string_view text);
std::string to_string(const MetricTag& m);

/// (sum |v|^r)^(1/r), or max |v| for the sup metric. Exact when the result is
/// rational and reachable by exact roots; otherwise an outward enclosure at
/// the working precision.
Scalar norm(const std::vector<Scalar>& values, const MetricTag& m);

/// d_r / d_inf between coefficient tables.
Scalar distance(const CoefficientTable& a, const CoefficientTable& b, const MetricTag& m);
Scalar distance(const PolynomialKnot& a, const PolynomialKnot& b, const MetricTag& m);
/// rho_r / rho_inf between sequence points.
Scalar seq_distance(const SequencePoint& x, const SequencePoint& y, const MetricTag& m);

struct MonotonicityCheck {
  Scalar lhs;
  Scalar rhs;
  bool holds = false;
};

constexpr double kMetricTolerance = 1e-12;

/// lhs = (sum a^r)^(1/r), rhs = (sum a^s)^(1/s) for r >= s >= 1; `holds`
/// when lhs <= rhs is confirmed by the enclosures up to kMetricTolerance.
MonotonicityCheck norm_monotonicity_check(const std::vector<Scalar>& a, const Rational& r, const Rational& s);

enum class Space { Knots, KnotsN, Sequences, SequencesN };

const char* to_string(Space s);

/// Open ball {p : d(center, p) < radius}. `n` is meaningful only for the
/// dimension-restricted spaces.
struct BallSpec {
  std::variant<PolynomialKnot, SequencePoint> center;
  Scalar radius;
  MetricTag metric;
  Space space = Space::Knots;
  int n = 0;
};

/// Validates radius > 0 and that the center lies in the space.
BallSpec make_ball(PolynomialKnot center, Scalar radius, MetricTag metric, std::optional<int> n = std::nullopt);
BallSpec make_ball(SequencePoint center, Scalar radius, MetricTag metric, std::optional<int> n = std::nullopt);

enum class Membership { In, Out, Undecidable };

const char* to_string(Membership m);

/// Precision is doubled from the working precision up to kMaxPrecisionBits
/// before giving up.
constexpr long kMaxPrecisionBits = 1024;

Membership ball_membership(const BallSpec& ball, const PolynomialKnot& point);
Membership ball_membership(const BallSpec& ball, const SequencePoint& point);
/// Throws Undecidable when the three-valued test cannot settle.
bool ball_contains(const BallSpec& ball, const PolynomialKnot& point);
bool ball_contains(const BallSpec& ball, const SequencePoint& point);

}  // namespace polyknot
