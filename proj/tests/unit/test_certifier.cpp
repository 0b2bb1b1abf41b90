#include <doctest.h>

#include "generators.hpp"
#include "polyknot/polyknot.hpp"

using namespace polyknot;
using polyknot::testing::nonzero_rational_in;
using polyknot::testing::random_knot;

namespace {

PolynomialKnot knot(int n, std::vector<std::pair<Index, Scalar>> e) { return make_knot(n, std::move(e)); }

PolynomialKnot trefoil() {
  return knot(3, {{Index(1, 3), Scalar(1)},
                  {Index(1, 1), Scalar(-3)},
                  {Index(2, 4), Scalar(1)},
                  {Index(2, 2), Scalar(-4)},
                  {Index(3, 5), Scalar(1)},
                  {Index(3, 1), Scalar(-10)}});
}

Verdict verdict_of(const PolynomialKnot& k) { return certify_embedding(k).verdict; }

}  // namespace

TEST_CASE("certifier on reference knots") {
  CHECK(std::holds_alternative<Certified>(verdict_of(knot(3, {{Index(1, 1), Scalar(1)}}))));
  CHECK(std::holds_alternative<Certified>(verdict_of(knot(2, {{Index(1, 3), Scalar(1)}, {Index(1, 1), Scalar(1)}}))));
  CHECK(std::holds_alternative<Certified>(verdict_of(trefoil())));

  PolynomialKnot sq = knot(2, {{Index(1, 2), Scalar(1)}});
  Verdict v = verdict_of(sq);
  REQUIRE(std::holds_alternative<Refuted>(v));
  CHECK(verify_refutation(sq, std::get<Refuted>(v)));

  PolynomialKnot cube = knot(2, {{Index(1, 3), Scalar(1)}});
  v = verdict_of(cube);
  REQUIRE(std::holds_alternative<Refuted>(v));
  CHECK(std::get<Refuted>(v) == Refuted{Scalar(0), Scalar(0)});
}

TEST_CASE("the even witness of t^2 re-verifies") {
  PolynomialKnot sq = knot(2, {{Index(1, 2), Scalar(1)}});
  CHECK(verify_refutation(sq, Refuted{Scalar(-1), Scalar(1)}));
  CHECK_FALSE(verify_refutation(sq, Refuted{Scalar(-1), Scalar(2)}));
}

TEST_CASE("certifier finds off-diagonal collisions") {
  // (t^2, t^3 - t) is the nodal cubic: phi(-1) = phi(1)
  PolynomialKnot node = knot(2, {{Index(1, 2), Scalar(1)}, {Index(2, 3), Scalar(1)}, {Index(2, 1), Scalar(-1)}});
  Verdict v = verdict_of(node);
  REQUIRE(std::holds_alternative<Refuted>(v));
  const auto& w = std::get<Refuted>(v);
  CHECK_FALSE(w.s == w.t);
  CHECK(verify_refutation(node, w));

  // a crossing at irrational parameters: (t^2, t^3 - 2t) meets itself at t = +-sqrt(2)
  PolynomialKnot irr = knot(2, {{Index(1, 2), Scalar(1)}, {Index(2, 3), Scalar(1)}, {Index(2, 1), Scalar(-2)}});
  v = verdict_of(irr);
  REQUIRE(std::holds_alternative<Refuted>(v));
  CHECK(verify_refutation(irr, std::get<Refuted>(v)));
}

TEST_CASE("certify attaches the verdict") {
  PolynomialKnot k = certify(trefoil());
  CHECK(k.is_certified());
  CHECK(k == trefoil());
  CHECK(std::string(verdict_name(k.verdict())) == "Certified");
}

TEST_CASE("constant knots are refuted") {
  PolynomialKnot c = knot(2, {{Index(1, 0), Scalar(3)}});
  Verdict v = verdict_of(c);
  REQUIRE(std::holds_alternative<Refuted>(v));
  CHECK(verify_refutation(c, std::get<Refuted>(v)));
}

TEST_CASE("refutations re-verify and verdicts are scale invariant") {
  Rng rng(99);
  int refuted = 0, certified = 0;
  for (int trial = 0; trial < 60; ++trial) {
    PolynomialKnot k = random_knot(rng, 3, 5, 3);
    Verdict v = verdict_of(k);
    if (const auto* w = std::get_if<Refuted>(&v)) {
      ++refuted;
      CHECK(verify_refutation(k, *w));
    }
    if (std::holds_alternative<Certified>(v)) ++certified;
    Rational c = nonzero_rational_in(rng, -4, 4, 3);
    CoefficientTable scaled;
    for (const auto& [idx, val] : k.table().entries()) scaled.set(idx, val * Scalar(c));
    Verdict w = verdict_of(make_knot(k.dimension(), scaled));
    CHECK(w.index() == v.index());
  }
  CHECK(refuted > 0);
  CHECK(certified > 0);
}

TEST_CASE("interval coefficients use the monotone rule") {
  Interval near_one(Rational(99, 100), Rational(101, 100));
  PolynomialKnot monotone = knot(2, {{Index(1, 3), Scalar(near_one)}, {Index(1, 1), Scalar(1)}, {Index(2, 2), Scalar(1)}});
  CHECK(std::holds_alternative<Certified>(verdict_of(monotone)));
  PolynomialKnot wiggly = knot(2, {{Index(1, 2), Scalar(near_one)}, {Index(2, 3), Scalar(1)}, {Index(2, 1), Scalar(-1)}});
  CHECK(std::holds_alternative<Inconclusive>(verdict_of(wiggly)));
}

TEST_CASE("evidence is recorded") {
  CertCertificate c = certify_embedding(trefoil());
  CHECK_FALSE(c.evidence.empty());
}

TEST_CASE("sampling oracle") {
  PolynomialKnot sq = knot(2, {{Index(1, 2), Scalar(1)}});
  OracleResult r = sampling_oracle(sq, OracleGrid{2, 101});
  REQUIRE(r.refuted);
  CHECK(std::abs(r.s + r.t) < 1e-12);
  PolynomialKnot line = knot(2, {{Index(1, 1), Scalar(1)}});
  CHECK_FALSE(sampling_oracle(line, OracleGrid{2, 101}).refuted);
  CHECK_FALSE(sampling_oracle(line, OracleGrid{50, 7}).refuted);
  CHECK_FALSE(sampling_oracle(trefoil()).refuted);
  CHECK(default_oracle_bound(trefoil()) == doctest::Approx(12));
}
