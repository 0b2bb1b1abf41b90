#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "polyknot/metric.hpp"
#include "polyknot/random.hpp"

namespace polyknot {

/// Open interval with optional (unbounded) endpoints.
struct OpenInterval {
  std::optional<Scalar> lo;
  std::optional<Scalar> hi;

  static OpenInterval all() { return {}; }
  static OpenInterval around(const Scalar& center, const Scalar& half_width);
};

/// lo < v < hi; nullopt when the enclosures cannot tell.
std::optional<bool> interval_contains(const OpenInterval& iv, const Scalar& v);
std::string to_string(const OpenInterval& iv);

/// Basic open set of the product topology: finitely many constrained
/// coefficients, every other coefficient free.
struct ProductOpenSpec {
  std::map<Index, OpenInterval> constraints;
};

struct AllReals {};
/// (psi_ij - delta^(4i(j+1)), psi_ij + delta^(4i(j+1))) around `center`.
struct SymmetricPowerRule {
  Rational delta;
  CoefficientTable center;
};
/// (-1, 3 / (i (j+1))).
struct HarmonicRule {};

using BoxRule = std::variant<AllReals, SymmetricPowerRule, HarmonicRule>;

/// Basic open set of the box topology: explicit intervals override a rule
/// defined at every index.
struct BoxOpenSpec {
  std::map<Index, OpenInterval> constraints;
  BoxRule rule = AllReals{};
};

/// Throws InvalidArgument when delta is outside (0, 1/2].
BoxOpenSpec symmetric_power_box(const Rational& delta, const CoefficientTable& center);

OpenInterval interval_at(const BoxOpenSpec& spec, const Index& idx);
OpenInterval interval_at(const ProductOpenSpec& spec, const Index& idx);

/// The first index whose coefficient leaves its interval. Only finitely many
/// indices need checking: the support of the knot, the explicit
/// constraints, and the support of a rule's center; every rule admits 0
/// elsewhere. Throws Undecidable if an enclosure straddles an endpoint.
std::optional<Index> first_violation(const ProductOpenSpec& spec, const CoefficientTable& table);
std::optional<Index> first_violation(const BoxOpenSpec& spec, const CoefficientTable& table);

bool open_contains(const ProductOpenSpec& spec, const PolynomialKnot& knot);
bool open_contains(const BoxOpenSpec& spec, const PolynomialKnot& knot);

// ---- inclusion witnesses -------------------------------------------------

/// delta with B_inf(phi, delta) inside U: half the smallest margin of phi to
/// a finite endpoint, or 1 when U constrains nothing. Throws NotMember.
Rational witness_product_in_inf(const ProductOpenSpec& u, const PolynomialKnot& phi);

/// delta = (eps - d_inf(phi, psi)) / 2 so that B_r(psi, delta) lies in
/// B_inf(phi, eps). Rounded down to a rational when the distance is
/// irrational. Throws NotMember, InvalidArgument for a non-sup outer ball.
Rational witness_inf_in_r(const BallSpec& outer, const PolynomialKnot& psi);

/// delta = (eps - d_r(phi, psi)) / 2 so that B_s(psi, delta) lies in
/// B_r(phi, eps). Throws BadExponents unless 1 <= s <= r.
Rational witness_r_in_s(const BallSpec& outer, const PolynomialKnot& psi, const Rational& s);

struct BoxWitness {
  Rational delta;
  BoxOpenSpec box;
};

/// delta = min(1/2, eps - d_s(phi, psi)) and the symmetric-power box
/// around psi. Throws NotMember.
BoxWitness witness_s_in_box(const BallSpec& outer, const PolynomialKnot& psi);

// ---- sampling ----------------------------------------------------------------

/// A point of the open ball (knot center): a random rational direction on the
/// center's support, sometimes one extra index, scaled to metric length
/// below the radius.
PolynomialKnot sample_ball(const BallSpec& ball, Rng& rng);

/// A point of the box: support coefficients of `center` moved uniformly
/// inside their intervals; with probability 1/4 one extra index is
/// activated inside its rule interval.
PolynomialKnot sample_box(const BoxOpenSpec& box, const PolynomialKnot& center, Rng& rng);

struct SampleTally {
  int drawn = 0;
  int passed = 0;
  int undecided = 0;
  bool all_passed() const { return drawn == passed; }
};

// ---- strictness families ------------------------------------------------

enum class StrictnessKind { ProductInf, InfR, RS, SBox };

const char* to_string(StrictnessKind k);
/// "p-inf", "inf-r", "r-s", "s-box".
StrictnessKind parse_strictness_kind(std::string_view text);

struct StrictnessParams {
  int n = 1;
  std::optional<Rational> r;
  std::optional<Rational> s;
  std::optional<Rational> delta;
  std::optional<long> k;
};

using Region = std::variant<ProductOpenSpec, BoxOpenSpec, BallSpec>;

/// The inner region is a basic neighbourhood of phi = (t, 0, ..., 0) in the
/// coarser topology, the outer region is open in the finer one, and
/// `member` lies in the first but not the second.
struct StrictnessInstance {
  StrictnessKind kind;
  StrictnessParams params;  // k resolved
  PolynomialKnot base;
  PolynomialKnot member;
  Region inner;
  Region outer;
  /// Closed-form distances from base to member in the metrics of the inner
  /// and outer regions, when those are balls.
  std::optional<Scalar> inner_distance;
  std::optional<Scalar> outer_distance;
};

/// Throws ParameterBoundViolated when the parameters break the bound for k
/// (or k's parity), BadExponents for r <= s in the r-s family.
StrictnessInstance strictness_instance(StrictnessKind kind, const StrictnessParams& params);

struct StrictnessCheck {
  bool member_certified = false;
  bool base_in_inner = false;
  bool member_in_inner = false;
  bool member_outside_outer = false;
  bool closed_forms_agree = false;
  bool ok() const {
    return member_certified && base_in_inner && member_in_inner && member_outside_outer && closed_forms_agree;
  }
};

StrictnessCheck verify_strictness(const StrictnessInstance& inst);

bool region_contains(const Region& region, const PolynomialKnot& knot);

}  // namespace polyknot
