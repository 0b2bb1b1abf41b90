#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "commands.hpp"

namespace polyknot::cli {
namespace {

using Json = nlohmann::ordered_json;

Json knot_json(const PolynomialKnot& knot) { return Json::parse(serialize_knot(knot)); }

std::optional<Scalar> endpoint(const std::string& text, const std::string& flag) {
  if (text == "inf" || text == "-inf" || text == "+inf") return std::nullopt;
  try {
    return parse_scalar(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::pair<Index, OpenInterval> parse_constraint(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
  const std::string flag = "--constraint " + text;
  if (parts.size() != 4) throw UsageError(flag + ": expected i,j,lo,hi");
  int i = 0, j = 0;
  try {
    i = std::stoi(parts[0]);
    j = std::stoi(parts[1]);
  } catch (const std::exception&) {
    throw UsageError(flag + ": bad index");
  }
  if (i < 1 || j < 0) throw UsageError(flag + ": need i >= 1 and j >= 0");
  OpenInterval iv{endpoint(parts[2], flag), endpoint(parts[3], flag)};
  if (parts[2] == "inf" || parts[2] == "+inf" || parts[3] == "-inf") throw UsageError(flag + ": empty interval");
  if (iv.lo && iv.hi && !certainly_less(*iv.lo, *iv.hi).value_or(false)) throw UsageError(flag + ": need lo < hi");
  return {Index(i, j), iv};
}

Json intervals_json(const std::map<Index, OpenInterval>& constraints) {
  Json out = Json::array();
  for (const auto& [idx, iv] : constraints) {
    out.push_back(Json{{"i", idx.component}, {"j", idx.power}, {"interval", to_string(iv)}});
  }
  return out;
}

Json region_json(const Region& region) {
  return std::visit(
      [](const auto& r) -> Json {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, ProductOpenSpec>) {
          return Json{{"type", "product"}, {"constraints", intervals_json(r.constraints)}};
        } else if constexpr (std::is_same_v<T, BoxOpenSpec>) {
          Json j{{"type", "box"}, {"constraints", intervals_json(r.constraints)}};
          if (const auto* rule = std::get_if<SymmetricPowerRule>(&r.rule)) {
            j["rule"] = Json{{"name", "symmetric-power"}, {"delta", to_string(rule->delta)}};
          } else if (std::holds_alternative<HarmonicRule>(r.rule)) {
            j["rule"] = Json{{"name", "harmonic"}};
          } else {
            j["rule"] = Json{{"name", "all-reals"}};
          }
          return j;
        } else {
          Json j{{"type", "ball"}, {"metric", to_string(r.metric)}, {"radius", to_string(r.radius)}};
          if (const auto* k = std::get_if<PolynomialKnot>(&r.center)) j["center"] = knot_json(*k);
          return j;
        }
      },
      region);
}

Json tally_json(const SampleTally& t) {
  return Json{{"drawn", t.drawn}, {"passed", t.passed}, {"failed", t.drawn - t.passed - t.undecided},
              {"undecided", t.undecided}};
}

void count(SampleTally& tally, std::optional<bool> verdict) {
  ++tally.drawn;
  if (!verdict) ++tally.undecided;
  else if (*verdict) ++tally.passed;
}

std::optional<bool> in_ball(const BallSpec& ball, const PolynomialKnot& p) {
  switch (ball_membership(ball, p)) {
    case Membership::In: return true;
    case Membership::Out: return false;
    default: return std::nullopt;
  }
}

std::optional<bool> in_open(const ProductOpenSpec& u, const PolynomialKnot& p) {
  try {
    return open_contains(u, p);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Undecidable) return std::nullopt;
    throw;
  }
}

PolynomialKnot line_knot(int n) { return make_knot(n, {{Index(1, 1), Scalar(1)}}); }

int inclusion(const WitnessOptions& o, std::ostream& out) {
  StrictnessKind kind = parse_strictness_kind(o.kind);
  PolynomialKnot phi = o.knot_path.empty() ? line_knot(o.n) : parse_knot(load(o.knot_path));
  PolynomialKnot psi = o.point_path.empty() ? phi : parse_knot(load(o.point_path));
  int n = std::max(phi.dimension(), psi.dimension());
  phi = phi.with_dimension(n);
  psi = psi.with_dimension(n);
  Rational eps = o.epsilon ? number_flag(*o.epsilon, "--epsilon") : Rational(1);
  Rational r = o.r ? number_flag(*o.r, "--r") : Rational(2);
  Rational s = o.s ? number_flag(*o.s, "--s") : Rational(1);
  if (sgn(eps) <= 0) throw UsageError("--epsilon must be positive");

  Rng rng(o.seed);
  SampleTally tally;
  Json params{{"n", n}};
  Json report{{"mode", "inclusion"}, {"kind", o.kind}};
  Rational delta;
  bool member_in_outer = false;
  bool d1_bound = true;
  Region inner, outer;

  switch (kind) {
    case StrictnessKind::ProductInf: {
      ProductOpenSpec u;
      for (const auto& c : o.constraints) {
        auto [idx, iv] = parse_constraint(c);
        if (!u.constraints.emplace(idx, iv).second) throw UsageError("duplicate --constraint index");
      }
      member_in_outer = in_open(u, psi).value_or(false);
      delta = witness_product_in_inf(u, psi);
      BallSpec ball = make_ball(psi, Scalar(delta), MetricTag::inf(), n);
      for (int i = 0; i < o.samples; ++i) count(tally, in_open(u, sample_ball(ball, rng)));
      inner = ball;
      outer = u;
      break;
    }
    case StrictnessKind::InfR:
    case StrictnessKind::RS: {
      bool sup = kind == StrictnessKind::InfR;
      MetricTag outer_metric = sup ? MetricTag::inf() : MetricTag::power(r);
      MetricTag inner_metric = sup ? MetricTag::power(r) : MetricTag::power(s);
      BallSpec big = make_ball(phi, Scalar(eps), outer_metric, n);
      member_in_outer = in_ball(big, psi).value_or(false);
      delta = sup ? witness_inf_in_r(big, psi) : witness_r_in_s(big, psi, s);
      BallSpec small = make_ball(psi, Scalar(delta), inner_metric, n);
      for (int i = 0; i < o.samples; ++i) count(tally, in_ball(big, sample_ball(small, rng)));
      params["epsilon"] = to_string(eps);
      params["r"] = to_string(r);
      if (!sup) params["s"] = to_string(s);
      inner = small;
      outer = big;
      break;
    }
    case StrictnessKind::SBox: {
      BallSpec big = make_ball(phi, Scalar(eps), MetricTag::power(s), n);
      member_in_outer = in_ball(big, psi).value_or(false);
      BoxWitness w = witness_s_in_box(big, psi);
      delta = w.delta;
      Rational bound = delta * delta;
      for (int i = 0; i < o.samples; ++i) {
        PolynomialKnot omega = sample_box(w.box, psi, rng);
        count(tally, in_ball(big, omega));
        if (upper_bound(distance(psi, omega, MetricTag::power(Rational(1)))) > bound) d1_bound = false;
      }
      params["epsilon"] = to_string(eps);
      params["s"] = to_string(s);
      inner = w.box;
      outer = big;
      break;
    }
  }

  bool ok = member_in_outer && tally.all_passed() && d1_bound;
  report["parameters"] = params;
  report["center"] = knot_json(phi);
  report["member"] = knot_json(psi);
  report["delta"] = to_string(delta);
  report["inner"] = region_json(inner);
  report["outer"] = region_json(outer);
  report["member_in_outer"] = member_in_outer;
  report["seed"] = o.seed;
  report["samples"] = tally_json(tally);
  if (kind == StrictnessKind::SBox) report["d1_within_delta_squared"] = d1_bound;
  report["ok"] = ok;
  emit(report.dump(2) + "\n", o.out, out);
  return ok ? kOk : kFailure;
}

int strictness(const WitnessOptions& o, std::ostream& out) {
  StrictnessParams p;
  p.n = o.n;
  if (o.r) p.r = number_flag(*o.r, "--r");
  if (o.s) p.s = number_flag(*o.s, "--s");
  if (o.delta) p.delta = number_flag(*o.delta, "--delta");
  p.k = o.k;
  StrictnessInstance inst = strictness_instance(parse_strictness_kind(o.kind), p);
  StrictnessCheck check = verify_strictness(inst);

  Json params{{"n", inst.params.n}};
  if (inst.params.r) params["r"] = to_string(*inst.params.r);
  if (inst.params.s) params["s"] = to_string(*inst.params.s);
  if (inst.params.delta) params["delta"] = to_string(*inst.params.delta);
  if (inst.params.k) params["k"] = *inst.params.k;

  Json report{{"mode", "strictness"}, {"kind", o.kind}, {"parameters", params}};
  report["base"] = knot_json(inst.base);
  report["member"] = knot_json(inst.member);
  report["inner"] = region_json(inst.inner);
  report["outer"] = region_json(inst.outer);
  report["inner_distance"] = inst.inner_distance ? Json(to_display(*inst.inner_distance)) : Json(nullptr);
  report["outer_distance"] = inst.outer_distance ? Json(to_display(*inst.outer_distance)) : Json(nullptr);
  report["checks"] = Json{{"member_certified", check.member_certified},
                          {"base_in_inner", check.base_in_inner},
                          {"member_in_inner", check.member_in_inner},
                          {"member_outside_outer", check.member_outside_outer},
                          {"closed_forms_agree", check.closed_forms_agree}};
  report["ok"] = check.ok();
  emit(report.dump(2) + "\n", o.out, out);
  return check.ok() ? kOk : kFailure;
}

}  // namespace

int cmd_witness(const WitnessOptions& o, std::ostream& out, std::ostream&) {
  bool inclusion_mode = o.epsilon || !o.constraints.empty() || !o.knot_path.empty() || !o.point_path.empty();
  if (inclusion_mode && (o.delta || o.k)) throw UsageError("--delta/--k select a strictness instance; drop --epsilon/--constraint/--knot/--point");
  return inclusion_mode ? inclusion(o, out) : strictness(o, out);
}

}  // namespace polyknot::cli
