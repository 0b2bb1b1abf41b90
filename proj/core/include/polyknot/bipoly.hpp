#pragma once

#include <string>
#include <vector>

#include "polyknot/upoly.hpp"

namespace polyknot {

/// Polynomial in (x, y) over Q stored as a polynomial in y whose
/// coefficients are polynomials in x: coeff(k) multiplies y^k.
class BPoly {
 public:
  BPoly() = default;
  explicit BPoly(std::vector<UPoly> y_coeffs);
  /// Lifts a polynomial in x.
  static BPoly from_x(const UPoly& p);
  static BPoly monomial(const Rational& c, int x_power, int y_power);
  static BPoly constant(const Rational& c) { return monomial(c, 0, 0); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1 && (c_.empty() || c_[0].degree() <= 0); }
  int degree_y() const { return static_cast<int>(c_.size()) - 1; }
  int degree_x() const;
  const std::vector<UPoly>& y_coeffs() const { return c_; }
  UPoly coeff_y(int k) const;
  const UPoly& leading_y() const { return c_.back(); }
  /// Coefficient of x^a y^b.
  Rational coeff(int a, int b) const { return coeff_y(b).coeff(a); }

  /// p(a, y) as a polynomial in y.
  UPoly eval_x(const Rational& a) const;
  /// p(x, b) as a polynomial in x.
  UPoly eval_y(const Rational& b) const;
  Rational eval(const Rational& x, const Rational& y) const;
  Interval eval(const Interval& x, const Interval& y) const;
  /// p(X(t), Y(t)).
  UPoly substitute(const UPoly& x_of_t, const UPoly& y_of_t) const;

  BPoly dx() const;
  BPoly dy() const;
  /// Exchanges the roles of x and y.
  BPoly swapped() const;

  /// Monic gcd (in x) of the y-coefficients.
  UPoly content_y() const;
  BPoly primitive_y() const;
  /// Scales so the leading y-coefficient is monic in x.
  BPoly normalized() const;

  BPoly operator-() const;
  friend BPoly operator+(const BPoly& a, const BPoly& b);
  friend BPoly operator-(const BPoly& a, const BPoly& b);
  friend BPoly operator*(const BPoly& a, const BPoly& b);
  friend BPoly operator*(const UPoly& p, const BPoly& a);
  friend BPoly operator*(const Rational& c, const BPoly& a);
  friend bool operator==(const BPoly& a, const BPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const char* x = "x", const char* y = "y") const;

 private:
  void trim();
  std::vector<UPoly> c_;
};

/// Pseudo-remainder of a by b with respect to y.
BPoly pseudo_remainder(const BPoly& a, const BPoly& b);
/// a / b when b divides a exactly; throws InvalidArgument otherwise.
BPoly divide_exact(const BPoly& a, const BPoly& b);
/// Normalized gcd in Q[x, y].
BPoly gcd(const BPoly& a, const BPoly& b);
/// a / gcd(a, da/dy) made primitive and normalized; a must have content 1.
BPoly squarefree_y(const BPoly& a);
/// Res_y(a, b) as a polynomial in x, from the Sylvester matrix with the
/// formal y-degrees of a and b.
UPoly resultant_y(const BPoly& a, const BPoly& b);
/// Determinant of a square rational matrix.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace polyknot
