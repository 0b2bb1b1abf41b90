#include <doctest.h>

#include "generators.hpp"
#include "polyknot/polyknot.hpp"

using namespace polyknot;
using polyknot::testing::random_knot;
using polyknot::testing::random_sequence;

namespace {

PolynomialKnot line(int n = 1) { return make_knot(n, {{Index(1, 1), Scalar(1)}}); }

bool encloses(const Scalar& x, double v) {
  Interval e = x.enclosure();
  return e.lo_double() <= v && v <= e.hi_double();
}

// a <= b up to a tolerance, read off the enclosures
bool le(const Scalar& a, const Scalar& b, double tol = kMetricTolerance) {
  return upper_bound(a) <= lower_bound(b) + Rational(tol);
}

}  // namespace

TEST_CASE("metric tags") {
  CHECK(parse_metric("inf").is_inf());
  CHECK(parse_metric("2") == MetricTag::power(Rational(2)));
  CHECK(parse_metric("1.5") == MetricTag::power(Rational(3, 2)));
  CHECK(to_string(parse_metric("5/2")) == "5/2");
  CHECK_THROWS_AS(parse_metric("1/2"), Error);
  CHECK_THROWS_AS(MetricTag::power(Rational(0)), Error);
}

TEST_CASE("knot distances") {
  PolynomialKnot psi = make_knot(1, {{Index(1, 3), Scalar(1)}, {Index(1, 1), Scalar(1)}});
  CHECK(distance(line(), psi, MetricTag::inf()) == Scalar(1));
  CHECK(distance(psi, psi, MetricTag::power(Rational(3))) == Scalar(0));

  PolynomialKnot a = make_knot(2, {{Index(1, 1), Scalar(1)}, {Index(1, 0), Scalar(1)}, {Index(2, 3), Scalar(1)}, {Index(2, 0), Scalar(2)}});
  PolynomialKnot b = make_knot(2, {{Index(1, 1), Scalar(1)}, {Index(2, 3), Scalar(1)}});
  Scalar d = distance(a, b, MetricTag::power(Rational(2)));
  CHECK_FALSE(d.is_exact());
  CHECK(encloses(d, 2.2360679774997896));
  CHECK(d.radius_double() < 1e-30);
  CHECK(distance(a, b, MetricTag::power(Rational(1))) == Scalar(3));
}

TEST_CASE("exact roots are kept exact") {
  std::vector<Scalar> v{Scalar(3), Scalar(4)};
  CHECK(norm(v, MetricTag::power(Rational(2))) == Scalar(5));
  CHECK(norm(v, MetricTag::inf()) == Scalar(4));
  CHECK(norm({Scalar(Rational(1, 4))}, MetricTag::power(Rational(3, 2))) == Scalar(Rational(1, 4)));
}

TEST_CASE("sequence distances") {
  SequencePoint e1({Scalar(1)}), e2(SequencePoint::Map{{2, Scalar(1)}});
  CHECK(seq_distance(e1, e2, MetricTag::inf()) == Scalar(1));
  CHECK(seq_distance(SequencePoint({Scalar(2), Scalar(4)}), SequencePoint({Scalar(2)}), MetricTag::power(Rational(1))) == Scalar(4));
  SequencePoint far(SequencePoint::Map{{9, Scalar(Rational(1, 1000))}});
  Scalar d = seq_distance(SequencePoint({Scalar(3), Scalar(4)}), far, MetricTag::power(Rational(2)));
  CHECK(encloses(d, std::sqrt(25.000001)));
}

TEST_CASE("norm monotonicity examples") {
  auto c = norm_monotonicity_check({Scalar(3), Scalar(4)}, Rational(2), Rational(1));
  CHECK(c.lhs == Scalar(5));
  CHECK(c.rhs == Scalar(7));
  CHECK(c.holds);
  auto single = norm_monotonicity_check({Scalar(Rational(7, 3))}, Rational(5), Rational(2));
  CHECK(le(single.lhs, single.rhs));
  CHECK(le(single.rhs, single.lhs));
  CHECK(single.holds);
  std::vector<Scalar> ones(9, Scalar(1));
  auto k = norm_monotonicity_check(ones, Rational(2), Rational(1));
  CHECK(k.lhs == Scalar(3));
  CHECK(k.rhs == Scalar(9));
  CHECK_THROWS_AS(norm_monotonicity_check(ones, Rational(1), Rational(2)), Error);
  CHECK_THROWS_AS(norm_monotonicity_check({Scalar(-1)}, Rational(2), Rational(1)), Error);
}

TEST_CASE("metric axioms and the chain d_inf <= d_r <= d_s <= d_1") {
  Rng rng(2024);
  const std::vector<std::pair<Rational, Rational>> pairs{{Rational(2), Rational(1)}, {Rational(3), Rational(2)},
                                                         {Rational(5, 2), Rational(3, 2)}};
  for (int trial = 0; trial < 40; ++trial) {
    PolynomialKnot a = random_knot(rng, 4, 6, 5), b = random_knot(rng, 4, 6, 5), c = random_knot(rng, 4, 6, 5);
    for (const auto& [r, s] : pairs) {
      Scalar dinf = distance(a, b, MetricTag::inf());
      Scalar dr = distance(a, b, MetricTag::power(r));
      Scalar ds = distance(a, b, MetricTag::power(s));
      Scalar d1 = distance(a, b, MetricTag::power(Rational(1)));
      CHECK(le(dinf, dr));
      CHECK(le(dr, ds));
      CHECK(le(ds, d1));
      CHECK(distance(b, a, MetricTag::power(r)) == dr);
      Scalar ac = distance(a, c, MetricTag::power(r)), cb = distance(c, b, MetricTag::power(r));
      CHECK(le(dr, ac + cb));
    }
    CHECK(distance(a, a, MetricTag::power(Rational(7, 3))) == Scalar(0));
  }
}

TEST_CASE("balls") {
  PolynomialKnot phi = line(3);
  PolynomialKnot psi = make_knot(3, {{Index(1, 3), Scalar(1)}, {Index(1, 1), Scalar(1)}});
  BallSpec half = make_ball(phi, Scalar(Rational(1, 2)), MetricTag::inf(), 3);
  CHECK(ball_membership(half, psi) == Membership::Out);
  CHECK_FALSE(ball_contains(half, psi));
  CHECK(ball_contains(make_ball(phi, Scalar(Rational(1, 1000)), MetricTag::power(Rational(2))), phi));
  BallSpec one = make_ball(phi, Scalar(1), MetricTag::inf());
  CHECK_FALSE(ball_contains(one, psi));

  BallSpec seq = make_ball(SequencePoint({Scalar(1)}), Scalar(1), MetricTag::inf());
  CHECK_THROWS_AS(ball_membership(seq, phi), Error);
  CHECK_THROWS_AS(make_ball(phi, Scalar(0), MetricTag::inf()), Error);
  CHECK_THROWS_AS(make_ball(psi, Scalar(1), MetricTag::inf(), 0), Error);
  PolynomialKnot wide = make_knot(4, {{Index(4, 1), Scalar(1)}});
  CHECK_THROWS_AS(ball_membership(half, wide), Error);
}

TEST_CASE("ball membership in the sequence spaces") {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    SequencePoint x = random_sequence(rng, 6), y = random_sequence(rng, 6);
    Scalar d = seq_distance(x, y, MetricTag::power(Rational(2)));
    Rational above = upper_bound(d) + Rational(1, 100);
    CHECK(ball_contains(make_ball(x, Scalar(above), MetricTag::power(Rational(2))), y));
    Rational below = lower_bound(d) - Rational(1, 100);
    if (below > 0) CHECK_FALSE(ball_contains(make_ball(x, Scalar(below), MetricTag::power(Rational(2))), y));
  }
}
