#include "polyknot/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polyknot/error.hpp"

namespace polyknot {

namespace {

enum class SearchStatus { None, Found, Undecided };

struct SearchResult {
  SearchStatus status = SearchStatus::None;
  std::optional<Refuted> witness;
};

SearchResult found(Refuted w) { return {SearchStatus::Found, std::move(w)}; }

Rational two_pow_neg(unsigned long bits) {
  Integer d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, bits);
  return Rational(Integer(1), d);
}

const Rational& witness_width() {
  static const Rational w = two_pow_neg(100);
  return w;
}

Scalar scalar_of(const RootInterval& r) {
  if (r.exact()) return Scalar(r.lo);
  return Scalar(to_interval(r));
}

// s, t = (e1 +- sqrt(e1^2 - 4 e2)) / 2 for e1^2 > 4 e2.
Refuted witness_from_symmetric(const Interval& e1, const Interval& e2) {
  Interval root = sqrt(sqr(e1) - Interval(Rational(4)) * e2);
  Interval two(Rational(2));
  return Refuted{Scalar((e1 + root) / two), Scalar((e1 - root) / two)};
}

Refuted witness_from_symmetric(const Rational& e1, const Rational& e2) {
  Rational disc = e1 * e1 - 4 * e2;
  if (auto r = exact_root(disc, 2)) {
    Rational s = (e1 + *r) / 2, t = (e1 - *r) / 2;
    s.canonicalize();
    t.canonicalize();
    return Refuted{Scalar(s), Scalar(t)};
  }
  return witness_from_symmetric(Interval(e1), Interval(e2));
}

std::vector<RootInterval> isolate_refined(const UPoly& p, const RealRange& range = {}) {
  return sturm_real_roots(p, range);
}

// ---- Krawczyk test for the square system (A, B) -------------------------

struct SquareSystem {
  BPoly a, b, ax, ay, bx, by;
  explicit SquareSystem(BPoly a_, BPoly b_)
      : a(std::move(a_)), b(std::move(b_)), ax(a.dx()), ay(a.dy()), bx(b.dx()), by(b.dy()) {}
};

bool krawczyk_operator(const SquareSystem& sys, const Interval& x, const Interval& y, Interval& kx,
                       Interval& ky) {
  Interval cx(x.mid_rational()), cy(y.mid_rational());
  Interval fa = sys.a.eval(cx, cy);
  Interval fb = sys.b.eval(cx, cy);
  Interval j11 = sys.ax.eval(x, y), j12 = sys.ay.eval(x, y);
  Interval j21 = sys.bx.eval(x, y), j22 = sys.by.eval(x, y);
  double m11 = j11.mid_double(), m12 = j12.mid_double();
  double m21 = j21.mid_double(), m22 = j22.mid_double();
  double det = m11 * m22 - m12 * m21;
  if (!std::isfinite(det) || det == 0.0) return false;
  double p11 = m22 / det, p12 = -m12 / det, p21 = -m21 / det, p22 = m11 / det;
  if (!std::isfinite(p11) || !std::isfinite(p12) || !std::isfinite(p21) || !std::isfinite(p22))
    return false;
  Interval y11 = Interval::from_double(p11), y12 = Interval::from_double(p12);
  Interval y21 = Interval::from_double(p21), y22 = Interval::from_double(p22);
  Interval one(Rational(1));
  Interval dx = x - cx, dy = y - cy;
  Interval n11 = one - (y11 * j11 + y12 * j21);
  Interval n12 = -(y11 * j12 + y12 * j22);
  Interval n21 = -(y21 * j11 + y22 * j21);
  Interval n22 = one - (y21 * j12 + y22 * j22);
  kx = cx - (y11 * fa + y12 * fb) + n11 * dx + n12 * dy;
  ky = cy - (y21 * fa + y22 * fb) + n21 * dx + n22 * dy;
  return true;
}

Interval inflate(const Interval& v) {
  if (!v.is_point()) return v;
  static const Rational pad = two_pow_neg(60);
  return Interval(Rational(v.lo_rational() - pad), Rational(v.hi_rational() + pad));
}

// Proves a unique zero of the system inside (x, y) and contracts the box
// around it.
bool krawczyk_tighten(const SquareSystem& sys, Interval& x, Interval& y) {
  Interval bx = inflate(x), by = inflate(y);
  Interval kx, ky;
  if (!krawczyk_operator(sys, bx, by, kx, ky)) return false;
  if (!kx.strictly_inside(bx) || !ky.strictly_inside(by)) return false;
  x = kx;
  y = ky;
  for (int iter = 0; iter < 80; ++iter) {
    if (x.radius_double() < 1e-32 && y.radius_double() < 1e-32) break;
    if (!krawczyk_operator(sys, x, y, kx, ky)) break;
    double before = x.radius_double() + y.radius_double();
    x = intersect(x, kx);
    y = intersect(y, ky);
    if (x.radius_double() + y.radius_double() >= before) break;
  }
  return true;
}

bool all_contain_zero(const std::vector<BPoly>& polys, const Interval& x, const Interval& y) {
  return std::all_of(polys.begin(), polys.end(),
                     [&](const BPoly& p) { return p.eval(x, y).contains_zero(); });
}

// ---- finitely many candidate points ---------------------------------------

SearchResult decide_box(const std::vector<BPoly>& polys, const SquareSystem& sys, const UPoly& r_sf,
                        const UPoly& s_sf, RootInterval alpha, RootInterval beta, int depth,
                        std::vector<EvidenceItem>& evidence) {
  const Interval four(Rational(4));
  // Depth counts halvings below unit width.
  refine_root(r_sf, alpha, Rational(1));
  refine_root(s_sf, beta, Rational(1));
  for (int level = 0; level <= depth; ++level) {
    Interval x = to_interval(alpha), y = to_interval(beta);
    if (!all_contain_zero(polys, x, y)) return {};
    Interval region = sqr(x) - four * y;
    if (region.certainly_negative()) return {};
    if (alpha.exact() && beta.exact()) {
      bool zero = std::all_of(polys.begin(), polys.end(),
                              [&](const BPoly& p) { return sgn(p.eval(alpha.lo, beta.lo)) == 0; });
      if (!zero || alpha.lo * alpha.lo - 4 * beta.lo <= 0) return {};
      evidence.push_back({"common-zero", "exact rational common zero in e1^2 > 4 e2", {alpha, beta}});
      return found(witness_from_symmetric(alpha.lo, beta.lo));
    }
    if (region.certainly_positive()) {
      Interval tx = x, ty = y;
      if (krawczyk_tighten(sys, tx, ty)) {
        if (!all_contain_zero(polys, tx, ty)) return {};
        evidence.push_back({"common-zero", "Krawczyk-verified zero in e1^2 > 4 e2",
                            {RootInterval{tx.lo_rational(), tx.hi_rational()},
                             RootInterval{ty.lo_rational(), ty.hi_rational()}}});
        return found(witness_from_symmetric(tx, ty));
      }
    }
    bisect_root(r_sf, alpha);
    bisect_root(s_sf, beta);
  }
  evidence.push_back({"undecided-box", "candidate box not resolved at depth " + std::to_string(depth),
                      {alpha, beta}});
  return {SearchStatus::Undecided, std::nullopt};
}

// Deterministic small coefficients for random-looking combinations.
long combo_coefficient(int attempt, std::size_t i, int salt) {
  long v = static_cast<long>((attempt * 7919 + static_cast<int>(i) * 104729 + salt * 1299709) % 13) - 6;
  return v == 0 ? 7 : v;
}

// Common zeros of `polys` (which have no common factor) in e1^2 >= 4 e2.
SearchResult finite_part(std::vector<BPoly> polys, int depth, std::vector<EvidenceItem>& evidence) {
  polys.erase(std::remove_if(polys.begin(), polys.end(), [](const BPoly& p) { return p.is_zero(); }),
              polys.end());
  if (polys.empty()) return {SearchStatus::Undecided, std::nullopt};
  for (const auto& p : polys)
    if (p.is_constant()) return {};
  if (polys.size() < 2) return {SearchStatus::Undecided, std::nullopt};

  BPoly a, b;
  if (polys.size() == 2) {
    a = polys[0];
    b = polys[1];
  } else {
    bool ok = false;
    for (int attempt = 0; attempt < 32 && !ok; ++attempt) {
      a = BPoly();
      b = BPoly();
      for (std::size_t i = 0; i < polys.size(); ++i) {
        a = a + Rational(combo_coefficient(attempt, i, 1)) * polys[i];
        b = b + Rational(combo_coefficient(attempt, i, 2)) * polys[i];
      }
      ok = !a.is_zero() && !b.is_zero() && gcd(a, b).is_constant();
    }
    if (!ok) return {SearchStatus::Undecided, std::nullopt};
  }

  UPoly r = resultant_y(a, b);
  UPoly s = resultant_y(a.swapped(), b.swapped());
  if (r.is_zero() || s.is_zero()) return {SearchStatus::Undecided, std::nullopt};
  if (r.degree() < 1 || s.degree() < 1) return {};
  auto alphas = isolate_refined(r);
  auto betas = isolate_refined(s);
  evidence.push_back({"e1-roots", "real roots of Res_e2", alphas});
  evidence.push_back({"e2-roots", "real roots of Res_e1", betas});
  if (alphas.empty() || betas.empty()) return {};

  UPoly r_sf = squarefree_part(r), s_sf = squarefree_part(s);
  SquareSystem sys(a, b);
  bool undecided = false;
  for (const auto& alpha : alphas) {
    for (const auto& beta : betas) {
      SearchResult res = decide_box(polys, sys, r_sf, s_sf, alpha, beta, depth, evidence);
      if (res.status == SearchStatus::Found) return res;
      if (res.status == SearchStatus::Undecided) undecided = true;
    }
  }
  return {undecided ? SearchStatus::Undecided : SearchStatus::None, std::nullopt};
}

// ---- the common curve of all quotients -------------------------------------

// Moves apart adjacent isolating intervals until a rational fits between them.
void separate(const UPoly& sf, std::vector<RootInterval>& roots) {
  for (std::size_t k = 0; k + 1 < roots.size(); ++k) {
    while (roots[k].hi >= roots[k + 1].lo) {
      if (!roots[k].exact()) bisect_root(sf, roots[k]);
      if (!roots[k + 1].exact()) bisect_root(sf, roots[k + 1]);
    }
  }
}

SearchResult curve_part(const BPoly& g, int depth, std::vector<EvidenceItem>& evidence) {
  // Vertical lines e1 = alpha always meet the region.
  UPoly content = g.content_y();
  if (content.degree() >= 1) {
    auto roots = sturm_real_roots(content);
    if (!roots.empty()) {
      RootInterval alpha = roots.front();
      evidence.push_back({"vertical-line", "content of the common factor vanishes at e1", {alpha}});
      if (alpha.exact()) return found(witness_from_symmetric(alpha.lo, Rational(alpha.lo * alpha.lo / 4 - 1)));
      refine_root(squarefree_part(content), alpha, witness_width());
      if (alpha.exact()) return found(witness_from_symmetric(alpha.lo, Rational(alpha.lo * alpha.lo / 4 - 1)));
      Interval x = to_interval(alpha);
      Interval half(Rational(1, 2)), one(Rational(1));
      return found(Refuted{Scalar(x * half + one), Scalar(x * half - one)});
    }
  }

  BPoly curve = squarefree_y(g);
  if (curve.degree_y() <= 0) return {};

  const UPoly e1{Rational(0), Rational(1)};
  const UPoly parabola{Rational(0), Rational(0), Rational(1, 4)};
  UPoly on_parabola = curve.substitute(e1, parabola);
  if (on_parabola.is_zero()) {
    // The whole diagonal is singular.
    return found(Refuted{Scalar(Rational(0)), Scalar(Rational(0))});
  }
  UPoly disc = resultant_y(curve, curve.dy());
  UPoly critical = squarefree_part(curve.leading_y() * disc * on_parabola);
  std::vector<RootInterval> roots;
  if (critical.degree() >= 1) roots = sturm_real_roots(critical);
  separate(critical, roots);
  evidence.push_back({"curve-critical-e1", "projection boundary of the common curve", roots});

  std::vector<Rational> samples;
  if (roots.empty()) {
    samples.emplace_back(0);
  } else {
    samples.emplace_back(roots.front().lo - 1);
    for (std::size_t k = 0; k + 1 < roots.size(); ++k) {
      Rational m = (roots[k].hi + roots[k + 1].lo) / 2;
      m.canonicalize();
      samples.push_back(m);
    }
    samples.emplace_back(roots.back().hi + 1);
  }
  for (const Rational& a : samples) {
    UPoly fiber = curve.eval_x(a);
    if (fiber.degree() < 1) continue;
    Rational limit = a * a / 4;
    auto fiber_roots = sturm_real_roots(fiber, RealRange{std::nullopt, limit});
    if (fiber_roots.empty()) continue;
    RootInterval beta = fiber_roots.front();
    evidence.push_back({"curve-point", "common curve meets e1^2 > 4 e2 at e1 = " + to_string(a), {beta}});
    if (!beta.exact()) refine_root(squarefree_part(fiber), beta, witness_width());
    if (beta.exact()) return found(witness_from_symmetric(a, beta.lo));
    return found(witness_from_symmetric(Interval(a), to_interval(beta)));
  }

  // Only isolated real points of the curve can remain.
  return finite_part({curve, curve.dx(), curve.dy()}, depth, evidence);
}

// ---- interval-coefficient criteria -------------------------------------------

bool monotone_by_signs(const std::vector<Scalar>& row) {
  if (row.size() < 2) return false;
  auto sign1 = row[1].sign();
  if (!sign1 || *sign1 == 0) return false;
  for (std::size_t j = 2; j < row.size(); ++j) {
    if (row[j].is_exact_zero()) continue;
    if (j % 2 == 0) return false;
    auto sj = row[j].sign();
    if (!sj || *sj != *sign1) return false;
  }
  return true;
}

CertCertificate certify_interval_mode(const PolynomialKnot& knot) {
  CertCertificate cert;
  for (int i = 1; i <= knot.dimension(); ++i) {
    auto row = knot.table().component(i);
    if (monotone_by_signs(row)) {
      cert.verdict = Certified{};
      cert.evidence.push_back({"monotone-signs",
                               "component " + std::to_string(i) +
                                   ": odd powers share the sign of the linear coefficient, no even powers",
                               {}});
      return cert;
    }
  }
  cert.verdict = Inconclusive{0};
  cert.evidence.push_back({"interval-coefficients", "no robust criterion applies", {}});
  return cert;
}

}  // namespace

UPoly component_polynomial(const PolynomialKnot& knot, int i) {
  auto row = knot.table().component(i);
  std::vector<Rational> c;
  c.reserve(row.size());
  for (const auto& v : row) {
    if (!v.is_exact()) throw Error(ErrorKind::InvalidArgument, "component has interval coefficients");
    c.push_back(v.exact());
  }
  return UPoly(std::move(c));
}

std::vector<BivariateSymmetricPoly> difference_quotients(const PolynomialKnot& knot) {
  const BPoly e1 = BPoly::monomial(1, 1, 0);
  const BPoly e2 = BPoly::monomial(1, 0, 1);
  std::vector<BPoly> h{BPoly::constant(1), e1};
  std::vector<BivariateSymmetricPoly> out;
  for (int i = 1; i <= knot.dimension(); ++i) {
    UPoly phi = component_polynomial(knot, i);
    while (static_cast<int>(h.size()) < phi.degree()) {
      std::size_t m = h.size();
      h.push_back(e1 * h[m - 1] - e2 * h[m - 2]);
    }
    BPoly q;
    for (int j = 1; j <= phi.degree(); ++j) q = q + phi.coeff(j) * h[static_cast<std::size_t>(j - 1)];
    out.push_back({i, std::move(q)});
  }
  return out;
}

CertCertificate certify_embedding(const PolynomialKnot& knot, const CertifyOptions& options) {
  if (knot.table().empty()) throw Error(ErrorKind::EmptyTable, "knot has no coefficients");
  if (!knot.table().is_exact()) return certify_interval_mode(knot);

  CertCertificate cert;
  auto refute = [&cert](Refuted w) {
    cert.verdict = std::move(w);
    return cert;
  };

  std::vector<UPoly> components;
  for (int i = 1; i <= knot.dimension(); ++i) components.push_back(component_polynomial(knot, i));

  bool any_moving = false;
  for (std::size_t k = 0; k < components.size(); ++k) {
    const UPoly& p = components[k];
    if (p.degree() < 1) continue;
    any_moving = true;
    UPoly d = p.derivative();
    auto roots = sturm_real_roots(d);
    if (roots.empty()) {
      cert.verdict = Certified{};
      cert.evidence.push_back({"monotone-component",
                               "derivative of component " + std::to_string(k + 1) + " has no real root",
                               {}});
      return cert;
    }
  }
  if (!any_moving) {
    cert.evidence.push_back({"constant-map", "every component is constant", {}});
    return refute(Refuted{Scalar(Rational(0)), Scalar(Rational(1))});
  }

  // Common critical points (diagonal zeros).
  UPoly dgcd;
  for (const auto& p : components)
    if (p.degree() >= 1) dgcd = gcd(dgcd, p.derivative());
  if (dgcd.degree() >= 1) {
    auto roots = sturm_real_roots(dgcd);
    cert.evidence.push_back({"derivative-gcd-roots", "real roots of gcd of derivatives", roots});
    if (!roots.empty()) {
      RootInterval r = roots.front();
      refine_root(squarefree_part(dgcd), r, witness_width());
      Scalar t = scalar_of(r);
      return refute(Refuted{t, t});
    }
  }

  std::vector<BPoly> quotients;
  for (auto& q : difference_quotients(knot))
    if (!q.poly.is_zero()) quotients.push_back(std::move(q.poly));

  BPoly common;
  for (const auto& q : quotients) common = gcd(common, q);

  bool undecided = false;
  if (!common.is_constant()) {
    cert.evidence.push_back({"common-factor", common.to_string("e1", "e2"), {}});
    SearchResult res = curve_part(common, options.depth, cert.evidence);
    if (res.status == SearchStatus::Found) return refute(*res.witness);
    undecided = undecided || res.status == SearchStatus::Undecided;
  }

  std::vector<BPoly> reduced;
  for (const auto& q : quotients) reduced.push_back(common.is_constant() ? q : divide_exact(q, common));
  SearchResult res = finite_part(std::move(reduced), options.depth, cert.evidence);
  if (res.status == SearchStatus::Found) return refute(*res.witness);
  undecided = undecided || res.status == SearchStatus::Undecided;

  if (undecided) {
    cert.verdict = Inconclusive{options.depth};
  } else {
    cert.verdict = Certified{};
  }
  return cert;
}

PolynomialKnot certify(const PolynomialKnot& knot, const CertifyOptions& options) {
  return knot.with_verdict(certify_embedding(knot, options).verdict);
}

bool verify_refutation(const PolynomialKnot& knot, const Refuted& witness) {
  if (witness.s == witness.t) {
    auto d = evaluate_derivative(knot, witness.t);
    return std::all_of(d.begin(), d.end(), [](const Scalar& v) {
      return v.is_exact() ? v.is_exact_zero() : v.interval().contains_zero();
    });
  }
  if (!(witness.s - witness.t).certainly_nonzero()) return false;
  auto a = evaluate(knot, witness.s);
  auto b = evaluate(knot, witness.t);
  for (std::size_t k = 0; k < a.size(); ++k) {
    Scalar diff = a[k] - b[k];
    bool zero = diff.is_exact() ? diff.is_exact_zero() : diff.interval().contains_zero();
    if (!zero) return false;
  }
  return true;
}

double default_oracle_bound(const PolynomialKnot& knot) {
  int best = -1;
  double bound = 1.0;
  for (int i = 1; i <= knot.dimension(); ++i) {
    auto row = knot.table().component(i);
    while (!row.empty() && row.back().is_exact_zero()) row.pop_back();
    int deg = static_cast<int>(row.size()) - 1;
    if (deg <= best) continue;
    best = deg;
    if (deg < 1) {
      bound = 1.0;
      continue;
    }
    double lc = std::abs(row.back().to_double());
    double m = 0;
    for (int k = 0; k < deg; ++k) m = std::max(m, std::abs(row[static_cast<std::size_t>(k)].to_double()) / lc);
    bound = 1.0 + m;
  }
  return 1.0 + bound;
}

OracleResult sampling_oracle(const PolynomialKnot& knot, std::optional<OracleGrid> grid) {
  OracleGrid g = grid.value_or(OracleGrid{default_oracle_bound(knot), 101});
  if (g.bound <= 0) g.bound = default_oracle_bound(knot);
  if (g.resolution < 2) throw Error(ErrorKind::InvalidArgument, "oracle resolution must be at least 2");
  const int n = knot.dimension();
  const int m = g.resolution;
  std::vector<std::vector<double>> rows;
  for (int i = 1; i <= n; ++i) {
    std::vector<double> row;
    for (const auto& v : knot.table().component(i)) row.push_back(v.to_double());
    rows.push_back(std::move(row));
  }
  std::vector<double> ts(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) ts[static_cast<std::size_t>(k)] = g.bound * (2.0 * k - (m - 1)) / (m - 1);

  std::vector<std::vector<double>> values(static_cast<std::size_t>(m), std::vector<double>(static_cast<std::size_t>(n)));
  for (int k = 0; k < m; ++k) {
    double t = ts[static_cast<std::size_t>(k)];
    double dnorm = 0;
    for (int i = 0; i < n; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      double v = 0, d = 0;
      for (std::size_t j = row.size(); j-- > 0;) {
        d = d * t + v;
        v = v * t + row[j];
      }
      values[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = v;
      dnorm += d * d;
    }
    if (std::sqrt(dnorm) < kOracleDerivativeTolerance) return {true, t, t};
  }
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (std::abs(ts[static_cast<std::size_t>(a)] - ts[static_cast<std::size_t>(b)]) <= kOracleCollisionTolerance)
        continue;
      double dist = 0;
      for (int i = 0; i < n; ++i) {
        double diff = values[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)] -
                      values[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)];
        dist += diff * diff;
      }
      if (std::sqrt(dist) < kOracleCollisionTolerance)
        return {true, ts[static_cast<std::size_t>(a)], ts[static_cast<std::size_t>(b)]};
    }
  }
  return {};
}

}  // namespace polyknot
