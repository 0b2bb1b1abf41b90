#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyknot/bipoly.hpp"
#include "polyknot/knot.hpp"
#include "polyknot/upoly.hpp"

namespace polyknot {

/// Difference quotient q_i(s, t) = (phi_i(s) - phi_i(t)) / (s - t) written
/// in the symmetric coordinates e1 = s + t (x) and e2 = s t (y).
struct BivariateSymmetricPoly {
  int component = 1;
  BPoly poly;
};

/// One quotient per component 1..n (zero for constant components).
/// Requires exact coefficients.
std::vector<BivariateSymmetricPoly> difference_quotients(const PolynomialKnot& knot);

/// Component i of an exact knot as a polynomial in t.
UPoly component_polynomial(const PolynomialKnot& knot, int i);

struct EvidenceItem {
  std::string kind;
  std::string detail;
  /// Isolating intervals or box sides examined at this stage.
  std::vector<RootInterval> intervals;
};

struct CertCertificate {
  Verdict verdict = Inconclusive{};
  std::vector<EvidenceItem> evidence;
};

struct CertifyOptions {
  /// Halvings per axis allowed when a candidate box has to be refined.
  int depth = 40;
};

/// Decides whether the knot is an injective immersion.
///
/// Exact coefficients: the common real zeros of the difference quotients in
/// the region e1^2 >= 4 e2 are searched exactly (monotone components, the
/// gcd of the derivatives, the common curve of all quotients by cylindrical
/// sampling, and the finitely many remaining points by resultants and
/// interval boxes). Interval coefficients: only the monotone-sign criterion
/// applies; anything else is Inconclusive.
CertCertificate certify_embedding(const PolynomialKnot& knot, const CertifyOptions& options = {});

/// The knot with the certificate's verdict attached.
PolynomialKnot certify(const PolynomialKnot& knot, const CertifyOptions& options = {});

/// Re-checks a refutation by direct evaluation: phi(s) - phi(t) encloses 0
/// with s, t certainly distinct, or (s == t) phi'(t) encloses 0.
bool verify_refutation(const PolynomialKnot& knot, const Refuted& witness);

struct OracleGrid {
  double bound = 0;
  int resolution = 101;
};

struct OracleResult {
  bool refuted = false;
  double s = 0;
  double t = 0;
};

constexpr double kOracleCollisionTolerance = 1e-9;
constexpr double kOracleDerivativeTolerance = 1e-9;

/// 1 + Cauchy bound of the highest-degree component.
double default_oracle_bound(const PolynomialKnot& knot);

/// Brute-force search for near-collisions and near-critical points on an
/// m x m grid over [-B, B]^2. Never certifies anything.
OracleResult sampling_oracle(const PolynomialKnot& knot, std::optional<OracleGrid> grid = std::nullopt);

}  // namespace polyknot
