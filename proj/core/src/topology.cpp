#include "polyknot/topology.hpp"

#include <algorithm>
#include <set>

#include "polyknot/certifier.hpp"
#include "polyknot/error.hpp"

namespace polyknot {

namespace {

const Rational kHalf(1, 2);

Scalar rational_power(const Rational& x, const Rational& e) {
  if (sgn(e) == 0) return Scalar(Rational(1));
  Rational mag = abs(e);
  std::optional<Rational> exact;
  if (mag.get_num().fits_ulong_p() && mag.get_den().fits_ulong_p() && mag.get_num() <= 64 && mag.get_den() <= 64)
    exact = exact_root(pow(x, mag.get_num().get_ui()), mag.get_den().get_ui());
  if (exact) {
    if (sgn(e) > 0) return Scalar(*exact);
    Rational inv = 1 / *exact;
    return Scalar(inv);
  }
  Interval p = pow(Interval(x), mag);
  if (sgn(e) > 0) return Scalar(p);
  return Scalar(Interval(Rational(1)) / p);
}

// Smallest integer (of the requested parity, if any) strictly above `bound`.
long smallest_above(const Scalar& bound, bool odd) {
  Integer k = floor_plus_one(upper_bound(bound));
  if (k < 1) k = 1;
  if (odd && k % 2 == 0) k += 1;
  if (!k.fits_slong_p() || k > 10000000)
    throw Error(ErrorKind::ParameterBoundViolated, "required k is too large to materialize");
  return k.get_si();
}

void require_above(long k, const Scalar& bound, const std::string& what) {
  auto less = certainly_less(bound, Scalar(Rational(k)));
  if (!less || !*less)
    throw Error(ErrorKind::ParameterBoundViolated, "k = " + std::to_string(k) + " violates " + what);
}

std::optional<bool> scalar_less(const Scalar& a, const Scalar& b) { return certainly_less(a, b); }

PolynomialKnot line_knot(int n) { return make_knot(n, {{Index(1, 1), Scalar(Rational(1))}}); }

std::set<Index> support(const CoefficientTable& t) {
  std::set<Index> out;
  for (const auto& [idx, _] : t.entries()) out.insert(idx);
  return out;
}

Scalar sample_in(const OpenInterval& iv, Rng& rng) {
  Rational u = rng.open_rational(0, 1, 1 << 16);
  if (iv.lo && iv.hi) return *iv.lo + (*iv.hi - *iv.lo) * Scalar(u);
  if (iv.lo) return *iv.lo + Scalar(Rational(1 + u));
  if (iv.hi) return *iv.hi - Scalar(Rational(1 + u));
  return Scalar(Rational(2 * u - 1));
}

}  // namespace

OpenInterval OpenInterval::around(const Scalar& center, const Scalar& half_width) {
  return OpenInterval{center - half_width, center + half_width};
}

std::optional<bool> interval_contains(const OpenInterval& iv, const Scalar& v) {
  bool undecided = false;
  if (iv.lo) {
    auto above = scalar_less(*iv.lo, v);
    if (!above) undecided = true;
    else if (!*above) return false;
  }
  if (iv.hi) {
    auto below = scalar_less(v, *iv.hi);
    if (!below) undecided = true;
    else if (!*below) return false;
  }
  if (undecided) return std::nullopt;
  return true;
}

std::string to_string(const OpenInterval& iv) {
  return "(" + (iv.lo ? to_string(*iv.lo) : std::string("-inf")) + ", " +
         (iv.hi ? to_string(*iv.hi) : std::string("inf")) + ")";
}

BoxOpenSpec symmetric_power_box(const Rational& delta, const CoefficientTable& center) {
  if (delta <= 0 || delta > kHalf) throw Error(ErrorKind::InvalidArgument, "delta must lie in (0, 1/2]");
  BoxOpenSpec spec;
  spec.rule = SymmetricPowerRule{delta, center};
  return spec;
}

OpenInterval interval_at(const ProductOpenSpec& spec, const Index& idx) {
  auto it = spec.constraints.find(idx);
  return it == spec.constraints.end() ? OpenInterval::all() : it->second;
}

OpenInterval interval_at(const BoxOpenSpec& spec, const Index& idx) {
  auto it = spec.constraints.find(idx);
  if (it != spec.constraints.end()) return it->second;
  return std::visit(
      [&](const auto& rule) -> OpenInterval {
        using R = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<R, AllReals>) {
          return OpenInterval::all();
        } else if constexpr (std::is_same_v<R, SymmetricPowerRule>) {
          unsigned long e = 4UL * static_cast<unsigned long>(idx.component) * static_cast<unsigned long>(idx.power + 1);
          return OpenInterval::around(rule.center.at(idx), Scalar(pow(rule.delta, e)));
        } else {
          Rational hi(3, static_cast<long>(idx.component) * (idx.power + 1));
          hi.canonicalize();
          return OpenInterval{Scalar(Rational(-1)), Scalar(hi)};
        }
      },
      spec.rule);
}

std::optional<Index> first_violation(const ProductOpenSpec& spec, const CoefficientTable& table) {
  for (const auto& [idx, iv] : spec.constraints) {
    auto in = interval_contains(iv, table.at(idx));
    if (!in) throw Error(ErrorKind::Undecidable, "coefficient enclosure straddles a constraint endpoint");
    if (!*in) return idx;
  }
  return std::nullopt;
}

std::optional<Index> first_violation(const BoxOpenSpec& spec, const CoefficientTable& table) {
  std::set<Index> indices = support(table);
  for (const auto& [idx, _] : spec.constraints) indices.insert(idx);
  if (const auto* rule = std::get_if<SymmetricPowerRule>(&spec.rule))
    for (const auto& idx : support(rule->center)) indices.insert(idx);
  for (const auto& idx : indices) {
    auto in = interval_contains(interval_at(spec, idx), table.at(idx));
    if (!in) throw Error(ErrorKind::Undecidable, "coefficient enclosure straddles a constraint endpoint");
    if (!*in) return idx;
  }
  return std::nullopt;
}

bool open_contains(const ProductOpenSpec& spec, const PolynomialKnot& knot) {
  return !first_violation(spec, knot.table());
}

bool open_contains(const BoxOpenSpec& spec, const PolynomialKnot& knot) {
  return !first_violation(spec, knot.table());
}

Rational witness_product_in_inf(const ProductOpenSpec& u, const PolynomialKnot& phi) {
  if (!open_contains(u, phi)) throw Error(ErrorKind::NotMember, "knot is not in the product open set");
  std::optional<Rational> margin;
  auto consider = [&margin](const Rational& m) {
    if (!margin || m < *margin) margin = m;
  };
  for (const auto& [idx, iv] : u.constraints) {
    Scalar v = phi.table().at(idx);
    if (iv.lo) consider(lower_bound(v - *iv.lo));
    if (iv.hi) consider(lower_bound(*iv.hi - v));
  }
  if (!margin) return Rational(1);
  if (*margin <= 0) throw Error(ErrorKind::NotMember, "no positive margin to the constraint endpoints");
  Rational delta = *margin / 2;
  delta.canonicalize();
  return delta;
}

namespace {

const PolynomialKnot& knot_center(const BallSpec& ball) {
  const auto* c = std::get_if<PolynomialKnot>(&ball.center);
  if (!c) throw Error(ErrorKind::SpaceMismatch, "ball is centered at a sequence point, not a knot");
  return *c;
}

// eps - d(center, psi) as a certified positive rational lower bound.
Rational slack(const BallSpec& outer, const PolynomialKnot& psi) {
  if (ball_membership(outer, psi) != Membership::In)
    throw Error(ErrorKind::NotMember, "point is not in the outer ball");
  Rational gap;
  for (long bits = std::max<long>(working_precision(), 128); bits <= kMaxPrecisionBits; bits *= 2) {
    PrecisionGuard guard(bits);
    gap = lower_bound(outer.radius) - upper_bound(distance(knot_center(outer), psi, outer.metric));
    if (gap > 0) return gap;
  }
  throw Error(ErrorKind::Undecidable, "distance to the ball boundary is not separable from 0");
}

}  // namespace

Rational witness_inf_in_r(const BallSpec& outer, const PolynomialKnot& psi) {
  if (!outer.metric.is_inf()) throw Error(ErrorKind::InvalidArgument, "outer ball must use the sup metric");
  Rational delta = slack(outer, psi) / 2;
  delta.canonicalize();
  return delta;
}

Rational witness_r_in_s(const BallSpec& outer, const PolynomialKnot& psi, const Rational& s) {
  if (outer.metric.is_inf()) throw Error(ErrorKind::InvalidArgument, "outer ball must use a finite exponent");
  if (s < 1 || s > *outer.metric.r) throw Error(ErrorKind::BadExponents, "need 1 <= s <= r");
  Rational delta = slack(outer, psi) / 2;
  delta.canonicalize();
  return delta;
}

BoxWitness witness_s_in_box(const BallSpec& outer, const PolynomialKnot& psi) {
  Rational delta = std::min(kHalf, slack(outer, psi));
  return BoxWitness{delta, symmetric_power_box(delta, psi.table())};
}

PolynomialKnot sample_ball(const BallSpec& ball, Rng& rng) {
  const PolynomialKnot& c = knot_center(ball);
  std::map<Index, Rational> dir;
  for (const auto& idx : support(c.table())) dir[idx] = rng.uniform_rational(-1, 1, 1 << 16);
  if (rng.chance(1, 4)) {
    int max_i = ball.space == Space::KnotsN ? ball.n : c.dimension() + 1;
    int i = static_cast<int>(rng.uniform_int(1, std::max(1, max_i)));
    int j = static_cast<int>(rng.uniform_int(0, c.table().max_power() + 2));
    dir[Index(i, j)] = rng.uniform_rational(-1, 1, 1 << 16);
  }
  std::vector<Scalar> values;
  for (const auto& [_, v] : dir) values.emplace_back(v);
  Rational length = upper_bound(norm(values, ball.metric));
  if (sgn(length) == 0) {
    dir.begin()->second = 1;
    length = 1;
  }
  Rational scale = lower_bound(ball.radius) * rng.open_rational(0, 1, 1 << 16) / length;
  CoefficientTable table = c.table();
  for (const auto& [idx, v] : dir) table.set(idx, table.at(idx) + Scalar(Rational(scale * v)));
  if (table.empty()) return c;
  return make_knot(std::max(c.dimension(), table.max_component()), table);
}

PolynomialKnot sample_box(const BoxOpenSpec& box, const PolynomialKnot& center, Rng& rng) {
  std::set<Index> indices = support(center.table());
  for (const auto& [idx, _] : box.constraints) indices.insert(idx);
  CoefficientTable table;
  for (const auto& idx : indices) table.set(idx, sample_in(interval_at(box, idx), rng));
  if (rng.chance(1, 4)) {
    int i = static_cast<int>(rng.uniform_int(1, center.dimension()));
    int j = static_cast<int>(rng.uniform_int(0, center.table().max_power() + 2));
    Index idx(i, j);
    if (!indices.count(idx)) table.set(idx, sample_in(interval_at(box, idx), rng));
  }
  if (table.empty()) return center;
  return make_knot(std::max(center.dimension(), table.max_component()), table);
}

const char* to_string(StrictnessKind k) {
  switch (k) {
    case StrictnessKind::ProductInf: return "p-inf";
    case StrictnessKind::InfR: return "inf-r";
    case StrictnessKind::RS: return "r-s";
    case StrictnessKind::SBox: return "s-box";
  }
  return "?";
}

StrictnessKind parse_strictness_kind(std::string_view text) {
  for (auto k : {StrictnessKind::ProductInf, StrictnessKind::InfR, StrictnessKind::RS, StrictnessKind::SBox})
    if (text == to_string(k)) return k;
  throw Error(ErrorKind::InvalidArgument, "unknown witness kind '" + std::string(text) + "'");
}

namespace {

const Rational& need(const std::optional<Rational>& v, const char* name) {
  if (!v) throw Error(ErrorKind::InvalidArgument, std::string("parameter ") + name + " is required");
  return *v;
}

void need_positive_delta(const Rational& delta) {
  if (delta <= 0) throw Error(ErrorKind::ParameterBoundViolated, "delta must be positive");
}

// t + c (t^3 + t^5 + ... + t^(2k+1)) in component 1.
PolynomialKnot odd_tail(int n, long k, const Scalar& c) {
  std::vector<std::pair<Index, Scalar>> entries{{Index(1, 1), Scalar(Rational(1))}};
  for (long m = 1; m <= k; ++m) entries.emplace_back(Index(1, static_cast<int>(2 * m + 1)), c);
  return make_knot(n, entries);
}

}  // namespace

StrictnessInstance strictness_instance(StrictnessKind kind, const StrictnessParams& params) {
  if (params.n < 1) throw Error(ErrorKind::InvalidArgument, "dimension n must be positive");
  StrictnessParams p = params;
  const int n = p.n;
  PolynomialKnot base = line_knot(n);
  switch (kind) {
    case StrictnessKind::ProductInf: {
      long k = p.k.value_or(3);
      if (k < 1 || k % 2 == 0) throw Error(ErrorKind::ParameterBoundViolated, "k must be an odd positive integer");
      p.k = k;
      ProductOpenSpec u;
      Rational quarter(1, 4);
      for (int i = 1; i <= n; ++i)
        for (int j = 0; j < k; ++j)
          u.constraints[Index(i, j)] = OpenInterval::around(base.table().at(Index(i, j)), Scalar(quarter));
      PolynomialKnot member = make_knot(n, {{Index(1, 1), Scalar(Rational(1))}, {Index(1, static_cast<int>(k)), Scalar(Rational(1))}});
      BallSpec outer = make_ball(base, Scalar(kHalf), MetricTag::inf(), n);
      return StrictnessInstance{kind, p, base, member, u, outer, std::nullopt, Scalar(Rational(1))};
    }
    case StrictnessKind::InfR: {
      const Rational& r = need(p.r, "r");
      const Rational& delta = need(p.delta, "delta");
      MetricTag mr = MetricTag::power(r);
      need_positive_delta(delta);
      Scalar bound = rational_power(delta, Rational(-r));
      long k = p.k ? *p.k : smallest_above(bound, false);
      require_above(k, bound, "k > delta^(-r)");
      p.k = k;
      Scalar c = rational_power(Rational(k), Rational(-1 / r));
      PolynomialKnot member = odd_tail(n, k, c);
      BallSpec inner = make_ball(base, Scalar(delta), MetricTag::inf(), n);
      BallSpec outer = make_ball(base, Scalar(kHalf), mr, n);
      return StrictnessInstance{kind, p, base, member, inner, outer, c, Scalar(Rational(1))};
    }
    case StrictnessKind::RS: {
      const Rational& r = need(p.r, "r");
      const Rational& s = need(p.s, "s");
      const Rational& delta = need(p.delta, "delta");
      if (s < 1 || r <= s) throw Error(ErrorKind::BadExponents, "need r > s >= 1");
      need_positive_delta(delta);
      Rational e = r * s / (s - r);
      Scalar bound = rational_power(delta, e);
      long k = p.k ? *p.k : smallest_above(bound, false);
      require_above(k, bound, "k > delta^(rs/(s-r))");
      p.k = k;
      Scalar c = rational_power(Rational(k), Rational(-1 / s));
      PolynomialKnot member = odd_tail(n, k, c);
      BallSpec inner = make_ball(base, Scalar(delta), MetricTag::power(r), n);
      BallSpec outer = make_ball(base, Scalar(kHalf), MetricTag::power(s), n);
      Scalar inner_d = rational_power(Rational(k), Rational((s - r) / (r * s)));
      return StrictnessInstance{kind, p, base, member, inner, outer, inner_d, Scalar(Rational(1))};
    }
    case StrictnessKind::SBox: {
      const Rational& delta = need(p.delta, "delta");
      need_positive_delta(delta);
      Rational s = p.s.value_or(Rational(1));
      MetricTag ms = MetricTag::power(s);
      p.s = s;
      Scalar bound(Rational((4 - delta) / delta));
      long k = p.k ? *p.k : smallest_above(bound, true);
      if (k < 1 || k % 2 == 0) throw Error(ErrorKind::ParameterBoundViolated, "k must be an odd positive integer");
      require_above(k, bound, "k > (4 - delta)/delta");
      p.k = k;
      Rational c(4, k + 1);
      c.canonicalize();
      PolynomialKnot member = make_knot(n, {{Index(1, 1), Scalar(Rational(1))}, {Index(1, static_cast<int>(k)), Scalar(c)}});
      BallSpec inner = make_ball(base, Scalar(delta), ms, n);
      BoxOpenSpec outer;
      outer.rule = HarmonicRule{};
      return StrictnessInstance{kind, p, base, member, inner, outer, Scalar(c), std::nullopt};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown strictness kind");
}

bool region_contains(const Region& region, const PolynomialKnot& knot) {
  return std::visit(
      [&](const auto& r) -> bool {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, BallSpec>) {
          return ball_contains(r, knot);
        } else {
          return open_contains(r, knot);
        }
      },
      region);
}

namespace {

// Enclosures within the tolerance of each other, and both tight.
bool agrees(const Scalar& computed, const Scalar& closed) {
  const Rational tol(1, 1000000000000L);
  auto width = [](const Scalar& x) { return Rational(upper_bound(x) - lower_bound(x)); };
  if (width(computed) > tol || width(closed) > tol) return false;
  return lower_bound(computed) - upper_bound(closed) <= tol && lower_bound(closed) - upper_bound(computed) <= tol;
}

}  // namespace

StrictnessCheck verify_strictness(const StrictnessInstance& inst) {
  StrictnessCheck check;
  check.member_certified = certify(inst.member).is_certified();
  check.base_in_inner = region_contains(inst.inner, inst.base);
  check.member_in_inner = region_contains(inst.inner, inst.member);
  check.member_outside_outer = !region_contains(inst.outer, inst.member);

  bool ok = true;
  if (const auto* ball = std::get_if<BallSpec>(&inst.inner); ball && inst.inner_distance)
    ok = ok && agrees(distance(inst.base, inst.member, ball->metric), *inst.inner_distance);
  if (const auto* ball = std::get_if<BallSpec>(&inst.outer); ball && inst.outer_distance)
    ok = ok && agrees(distance(inst.base, inst.member, ball->metric), *inst.outer_distance);
  check.closed_forms_agree = ok;
  return check;
}

}  // namespace polyknot
