#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyknot/interval.hpp"
#include "polyknot/rational.hpp"

namespace polyknot {

/// Dense univariate polynomial over Q; coefficient k multiplies x^k.
/// The coefficient vector never has trailing zeros, so the zero polynomial
/// is the empty vector and has degree -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(std::initializer_list<Rational> coeffs);
  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  Interval eval(const Interval& x) const;
  int sign_at(const Rational& x) const { return sgn(eval(x)); }

  UPoly derivative() const;
  UPoly monic() const;
  /// Divides by |leading coefficient| (keeps the sign pattern for Sturm chains).
  UPoly normalized_positive() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& c, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws on division by zero.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

  /// Composition p(q(x)).
  UPoly compose(const UPoly& q) const;

  std::string to_string(const char* var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
/// p / gcd(p, p'), monic.
UPoly squarefree_part(const UPoly& p);
/// 1 + max |a_k / a_d|; every real root lies strictly inside (-B, B).
Rational cauchy_bound(const UPoly& p);

/// Interval with rational endpoints isolating one real root. Either
/// lo == hi (the root is exactly lo) or lo < root < hi with the squarefree
/// polynomial nonzero at both endpoints.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
};

/// Real range for root isolation; an absent bound is infinite.
struct RealRange {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
};

/// Signed remainder sequence p, p', -rem(p, p'), ... with each member
/// scaled by a positive constant.
std::vector<UPoly> sturm_chain(const UPoly& p);
/// Sign variations of the chain at x; nullopt x stands for +inf (negative = -inf).
int sign_variations(const std::vector<UPoly>& chain, const Rational& x);
int sign_variations_at_infinity(const std::vector<UPoly>& chain, bool positive);
/// Number of distinct real roots in (a, b].
int count_roots(const std::vector<UPoly>& chain, const Rational& a, const Rational& b);

/// Isolating intervals for the distinct real roots of p in the closed range,
/// sorted left to right. Throws ZeroPolynomial for p = 0.
std::vector<RootInterval> sturm_real_roots(const UPoly& p, const RealRange& range = {});

/// Bisects `root` (an isolating interval for the squarefree `p`) until its
/// width is at most `width`. Stops early when a midpoint is an exact root.
void refine_root(const UPoly& squarefree, RootInterval& root, const Rational& width);
/// One bisection step.
void bisect_root(const UPoly& squarefree, RootInterval& root);

Interval to_interval(const RootInterval& r);

}  // namespace polyknot
