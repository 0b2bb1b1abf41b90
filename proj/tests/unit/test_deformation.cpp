#include <doctest.h>

#include "generators.hpp"
#include "polyknot/polyknot.hpp"

using namespace polyknot;
using polyknot::testing::random_sequence;

namespace {

PolynomialKnot trefoil() {
  return certify(make_knot(3, {{Index(1, 3), Scalar(1)},
                               {Index(1, 1), Scalar(-3)},
                               {Index(2, 4), Scalar(1)},
                               {Index(2, 2), Scalar(-4)},
                               {Index(3, 5), Scalar(1)},
                               {Index(3, 1), Scalar(-10)}}));
}

SequencePoint seq(std::initializer_list<Scalar> v) { return SequencePoint(v); }

}  // namespace

TEST_CASE("linearize homotopy") {
  PolynomialKnot psi = certify(make_knot(1, {{Index(1, 3), Scalar(1)}, {Index(1, 1), Scalar(1)}}));
  REQUIRE(psi.is_certified());
  PolynomialKnot half = linearize_homotopy(Scalar(Rational(1, 2)), psi);
  CHECK(half == make_knot(1, {{Index(1, 3), Scalar(Rational(1, 4))}, {Index(1, 1), Scalar(1)}}));
  CHECK(half.is_certified());

  PolynomialKnot t = trefoil();
  CHECK(linearize_homotopy(Scalar(1), t) == t);
  CHECK(linearize_homotopy(Scalar(0), t) == embed_linear(project_linear(t)));

  CHECK_THROWS_AS(linearize_homotopy(Scalar(2), t), Error);
  CHECK_THROWS_AS(linearize_homotopy(Scalar(-1), t), Error);
  CHECK_THROWS_AS(linearize_homotopy(Scalar(1), make_knot(1, {{Index(1, 1), Scalar(1)}})), Error);
}

TEST_CASE("constants scale by s") {
  PolynomialKnot k = certify(make_knot(2, {{Index(1, 0), Scalar(4)}, {Index(1, 1), Scalar(1)}, {Index(2, 2), Scalar(3)}}));
  REQUIRE(k.is_certified());
  PolynomialKnot h = linearize_homotopy(Scalar(Rational(1, 2)), k);
  CHECK(h.table().at(Index(1, 0)) == Scalar(2));
  CHECK(h.table().at(Index(2, 2)) == Scalar(Rational(3, 2)));
  CHECK(linearize_homotopy(Scalar(0), k).table().at(Index(1, 0)) == Scalar(0));
}

TEST_CASE("interval parameters return the interval-mode verdict") {
  PolynomialKnot t = trefoil();
  Scalar s(Interval(Rational(49, 100), Rational(51, 100)));
  PolynomialKnot h = linearize_homotopy(s, t);
  CHECK_FALSE(h.table().is_exact());
  CHECK_FALSE(std::holds_alternative<Uncertified>(h.verdict()));
  PolynomialKnot mono = certify(make_knot(2, {{Index(1, 3), Scalar(1)}, {Index(1, 1), Scalar(1)}, {Index(2, 2), Scalar(1)}}));
  CHECK(linearize_homotopy(s, mono).is_certified());
}

TEST_CASE("linearization traces") {
  HomotopyTrace tr = trace_linearization(trefoil(), 11);
  CHECK(tr.kind == TraceKind::Linearize);
  REQUIRE(tr.samples.size() == 11);
  for (const auto& s : tr.samples) CHECK(s.verdict == "Certified");
  CHECK(tr.samples.front().parameter == 0);
  CHECK(tr.samples.back().parameter == 1);
  CHECK(std::get<PolynomialKnot>(tr.samples.front().state) == embed_linear(project_linear(trefoil())));

  PolynomialKnot line = certify(make_knot(2, {{Index(1, 1), Scalar(2)}, {Index(2, 1), Scalar(-1)}}));
  HomotopyTrace flat = trace_linearization(line, 5);
  REQUIRE(flat.samples.size() == 5);
  for (const auto& s : flat.samples) CHECK(std::get<PolynomialKnot>(s.state) == line);
  CHECK_THROWS_AS(trace_linearization(line, 1), Error);
  CHECK(uniform_parameters(5) == std::vector<Rational>{0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1});
}

TEST_CASE("shift and cone homotopies") {
  SequencePoint x = seq({Scalar(2), Scalar(4)});
  CHECK(shift_homotopy(Scalar(0), x) == x);
  CHECK(shift_homotopy(Scalar(1), x) == SequencePoint(SequencePoint::Map{{2, Scalar(2)}, {3, Scalar(4)}}));
  CHECK(shift_homotopy(Scalar(Rational(1, 2)), x) == seq({Scalar(1), Scalar(3), Scalar(2)}));
  CHECK(cone_homotopy(Scalar(1), x) == seq({Scalar(1)}));
  CHECK(cone_homotopy(Scalar(0), x) == shift_homotopy(Scalar(1), x));
  CHECK(cone_homotopy(Scalar(Rational(1, 2)), x) == seq({Scalar(Rational(1, 2)), Scalar(1), Scalar(2)}));
  CHECK_THROWS_AS(shift_homotopy(Scalar(2), x), Error);
  CHECK_THROWS_AS(cone_homotopy(Scalar(-1), x), Error);
}

TEST_CASE("contraction traces") {
  HomotopyTrace tr = contract_trace(seq({Scalar(0), Scalar(0), Scalar(5)}), 11);
  CHECK(tr.kind == TraceKind::Contract);
  REQUIRE(tr.samples.size() == 22);
  CHECK(std::get<SequencePoint>(tr.samples.back().state) == seq({Scalar(1)}));
  CHECK(std::get<SequencePoint>(tr.samples[10].state) == std::get<SequencePoint>(tr.samples[11].state));
  CHECK(tr.samples[10].leg == TraceKind::ShiftContract);
  CHECK(tr.samples[11].leg == TraceKind::ConeContract);

  HomotopyTrace base = contract_trace(seq({Scalar(1)}), 3);
  CHECK(std::get<SequencePoint>(base.samples.back().state) == seq({Scalar(1)}));
}

TEST_CASE("trace states never vanish") {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    SequencePoint x = random_sequence(rng, 6);
    HomotopyTrace tr = contract_trace(x, 7);
    for (const auto& s : tr.samples) CHECK(s.verdict == "Nonzero");
  }
  CHECK(parse_trace_kind("contract") == TraceKind::Contract);
  CHECK_THROWS_AS(parse_trace_kind("spin"), Error);
}
