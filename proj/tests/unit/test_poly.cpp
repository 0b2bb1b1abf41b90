#include <doctest.h>

#include "generators.hpp"
#include "polyknot/polyknot.hpp"

using namespace polyknot;
using polyknot::testing::random_knot;
using polyknot::testing::rational_in;

namespace {

bool encloses(const RootInterval& r, double x) {
  return r.lo.get_d() <= x && x <= r.hi.get_d();
}

}  // namespace

TEST_CASE("upoly arithmetic") {
  UPoly p{Rational(-1), Rational(0), Rational(1)};  // x^2 - 1
  UPoly d{Rational(-1), Rational(1)};
  auto [quot, rem] = divmod(p, d);
  CHECK(quot == UPoly{Rational(1), Rational(1)});
  CHECK(rem.is_zero());
  CHECK(gcd(p, UPoly{Rational(1), Rational(1)}) == UPoly{Rational(1), Rational(1)});
  CHECK(p.derivative() == UPoly{Rational(0), Rational(2)});
  CHECK(squarefree_part(p * p) == p);
  CHECK(p.compose(UPoly{Rational(1), Rational(1)}) == UPoly{Rational(0), Rational(2), Rational(1)});
  CHECK(cauchy_bound(UPoly{Rational(-6), Rational(1), Rational(1)}) == 7);
}

TEST_CASE("sturm isolation") {
  CHECK(sturm_real_roots(UPoly{Rational(1), Rational(0), Rational(1)}).empty());
  CHECK(sturm_real_roots(UPoly{Rational(1), Rational(0), Rational(3)}).empty());

  auto roots = sturm_real_roots(UPoly{Rational(-2), Rational(0), Rational(1)});
  REQUIRE(roots.size() == 2);
  CHECK(encloses(roots[0], -1.4142135623730951));
  CHECK(encloses(roots[1], 1.4142135623730951));
  CHECK(roots[0].hi <= roots[1].lo);
}

TEST_CASE("sturm isolation on products of known roots") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> rs;
    UPoly p{Rational(1)};
    int m = static_cast<int>(rng.uniform_int(1, 6));
    for (int i = 0; i < m; ++i) {
      Rational r = rational_in(rng, -5, 5, 4);
      if (std::find(rs.begin(), rs.end(), r) != rs.end()) continue;
      rs.push_back(r);
      p = p * UPoly{-r, Rational(1)};
    }
    p = p * UPoly{Rational(1), Rational(0), Rational(1)};
    auto roots = sturm_real_roots(p);
    REQUIRE(roots.size() == rs.size());
    std::sort(rs.begin(), rs.end());
    for (std::size_t i = 0; i < rs.size(); ++i) {
      CHECK(roots[i].lo <= rs[i]);
      CHECK(rs[i] <= roots[i].hi);
    }
    UPoly sf = squarefree_part(p);
    for (auto& r : roots) {
      refine_root(sf, r, Rational(1, 1 << 20));
      CHECK(r.width() <= Rational(1, 1 << 20));
    }
    CHECK(count_roots(sturm_chain(p), Rational(-6), Rational(6)) == static_cast<int>(rs.size()));
  }
}

TEST_CASE("sturm isolation on a range") {
  UPoly p{Rational(0), Rational(-1), Rational(0), Rational(1)};  // x^3 - x
  RealRange range{Rational(0), Rational(2)};
  auto roots = sturm_real_roots(p, range);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].lo <= 0);
  CHECK_THROWS_AS(sturm_real_roots(UPoly{}), Error);
}

TEST_CASE("bivariate resultant eliminates y") {
  BPoly a = BPoly::monomial(Rational(1), 0, 1) - BPoly::monomial(Rational(1), 1, 0);  // y - x
  BPoly b = BPoly::monomial(Rational(1), 0, 1) + BPoly::monomial(Rational(1), 1, 0) - BPoly::constant(Rational(2));
  UPoly r = resultant_y(a, b);
  CHECK(r.degree() == 1);
  CHECK(r.eval(Rational(1)) == 0);
  CHECK(determinant({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}}) == -2);
}

TEST_CASE("difference quotients in symmetric coordinates") {
  auto q_of = [](std::vector<std::pair<Index, Scalar>> entries) {
    return difference_quotients(make_knot(1, entries)).at(0).poly;
  };
  CHECK(q_of({{Index(1, 1), Scalar(1)}}) == BPoly::constant(Rational(1)));
  CHECK(q_of({{Index(1, 2), Scalar(1)}}) == BPoly::monomial(Rational(1), 1, 0));
  BPoly expected = BPoly::monomial(Rational(1), 2, 0) - BPoly::monomial(Rational(1), 0, 1) + BPoly::constant(Rational(1));
  CHECK(q_of({{Index(1, 3), Scalar(1)}, {Index(1, 1), Scalar(1)}}) == expected);
}

TEST_CASE("difference quotient identity on random knots") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    PolynomialKnot k = random_knot(rng, 3, 6, 5);
    auto qs = difference_quotients(k);
    REQUIRE(static_cast<int>(qs.size()) == k.dimension());
    for (int rep = 0; rep < 5; ++rep) {
      Rational s = rational_in(rng, -3, 3, 7), t = rational_in(rng, -3, 3, 5);
      if (s == t) continue;
      auto ps = evaluate(k, Scalar(s)), pt = evaluate(k, Scalar(t));
      auto dt = evaluate_derivative(k, Scalar(t));
      for (int i = 0; i < k.dimension(); ++i) {
        const BPoly& q = qs[i].poly;
        CHECK(Scalar(q.eval(s + t, s * t) * (s - t)) == ps[i] - pt[i]);
        CHECK(Scalar(q.eval(2 * t, t * t)) == dt[i]);
      }
    }
  }
}
