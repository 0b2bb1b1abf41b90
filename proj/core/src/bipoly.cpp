#include "polyknot/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "polyknot/error.hpp"

namespace polyknot {

BPoly::BPoly(std::vector<UPoly> y_coeffs) : c_(std::move(y_coeffs)) { trim(); }

void BPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BPoly BPoly::from_x(const UPoly& p) { return BPoly(std::vector<UPoly>{p}); }

BPoly BPoly::monomial(const Rational& c, int x_power, int y_power) {
  std::vector<UPoly> v(static_cast<std::size_t>(y_power) + 1);
  v.back() = UPoly::monomial(c, x_power);
  return BPoly(std::move(v));
}

int BPoly::degree_x() const {
  int d = -1;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

UPoly BPoly::coeff_y(int k) const {
  if (k < 0 || k > degree_y()) return {};
  return c_[static_cast<std::size_t>(k)];
}

UPoly BPoly::eval_x(const Rational& a) const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& p : c_) v.push_back(p.eval(a));
  return UPoly(std::move(v));
}

UPoly BPoly::eval_y(const Rational& b) const {
  UPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = b * acc + *it;
  return acc;
}

Rational BPoly::eval(const Rational& x, const Rational& y) const { return eval_x(x).eval(y); }

Interval BPoly::eval(const Interval& x, const Interval& y) const {
  Interval acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + it->eval(x);
  return acc;
}

UPoly BPoly::substitute(const UPoly& x_of_t, const UPoly& y_of_t) const {
  UPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y_of_t + it->compose(x_of_t);
  return acc;
}

BPoly BPoly::dx() const {
  std::vector<UPoly> v;
  v.reserve(c_.size());
  for (const auto& p : c_) v.push_back(p.derivative());
  return BPoly(std::move(v));
}

BPoly BPoly::dy() const {
  if (c_.size() <= 1) return {};
  std::vector<UPoly> v;
  for (std::size_t k = 1; k < c_.size(); ++k) v.push_back(Rational(static_cast<long>(k)) * c_[k]);
  return BPoly(std::move(v));
}

BPoly BPoly::swapped() const {
  int dx_ = degree_x();
  if (dx_ < 0) return {};
  std::vector<std::vector<Rational>> grid(static_cast<std::size_t>(dx_) + 1,
                                          std::vector<Rational>(c_.size()));
  for (std::size_t b = 0; b < c_.size(); ++b)
    for (int a = 0; a <= c_[b].degree(); ++a) grid[static_cast<std::size_t>(a)][b] = c_[b].coeff(a);
  std::vector<UPoly> v;
  for (auto& row : grid) v.emplace_back(std::move(row));
  return BPoly(std::move(v));
}

UPoly BPoly::content_y() const {
  UPoly g;
  for (const auto& p : c_) g = gcd(g, p);
  return g;
}

BPoly BPoly::primitive_y() const {
  if (is_zero()) return {};
  UPoly c = content_y();
  std::vector<UPoly> v;
  for (const auto& p : c_) v.push_back(p / c);
  return BPoly(std::move(v));
}

BPoly BPoly::normalized() const {
  if (is_zero()) return {};
  return Rational(1 / leading_y().leading()) * *this;
}

BPoly BPoly::operator-() const {
  std::vector<UPoly> v;
  for (const auto& p : c_) v.push_back(-p);
  return BPoly(std::move(v));
}

BPoly operator+(const BPoly& a, const BPoly& b) {
  std::vector<UPoly> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] = v[k] + a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] = v[k] + b.c_[k];
  return BPoly(std::move(v));
}

BPoly operator-(const BPoly& a, const BPoly& b) { return a + (-b); }

BPoly operator*(const BPoly& a, const BPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UPoly> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
  return BPoly(std::move(v));
}

BPoly operator*(const UPoly& p, const BPoly& a) {
  std::vector<UPoly> v;
  for (const auto& q : a.c_) v.push_back(p * q);
  return BPoly(std::move(v));
}

BPoly operator*(const Rational& c, const BPoly& a) {
  std::vector<UPoly> v;
  for (const auto& q : a.c_) v.push_back(c * q);
  return BPoly(std::move(v));
}

std::string BPoly::to_string(const char* x, const char* y) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int b = degree_y(); b >= 0; --b) {
    const UPoly& p = c_[static_cast<std::size_t>(b)];
    if (p.is_zero()) continue;
    if (!first) out << " + ";
    out << "(" << p.to_string(x) << ")";
    if (b > 0) out << "*" << y;
    if (b > 1) out << "^" << b;
    first = false;
  }
  return out.str();
}

BPoly pseudo_remainder(const BPoly& a, const BPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "pseudo-division by zero");
  BPoly r = a;
  const int db = b.degree_y();
  const UPoly& lb = b.leading_y();
  while (!r.is_zero() && r.degree_y() >= db) {
    int shift = r.degree_y() - db;
    BPoly term = r.leading_y() * BPoly::monomial(1, 0, shift);
    r = lb * r - term * b;
  }
  return r;
}

BPoly divide_exact(const BPoly& a, const BPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  BPoly r = a;
  std::vector<UPoly> q(static_cast<std::size_t>(std::max(0, a.degree_y() - b.degree_y() + 1)));
  const UPoly& lb = b.leading_y();
  while (!r.is_zero()) {
    if (r.degree_y() < b.degree_y())
      throw Error(ErrorKind::InvalidArgument, "bivariate division is not exact");
    auto [factor, rem] = divmod(r.leading_y(), lb);
    if (!rem.is_zero()) throw Error(ErrorKind::InvalidArgument, "bivariate division is not exact");
    int shift = r.degree_y() - b.degree_y();
    q[static_cast<std::size_t>(shift)] = factor;
    r = r - factor * (BPoly::monomial(1, 0, shift) * b);
  }
  return BPoly(std::move(q));
}

BPoly gcd(const BPoly& a, const BPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  UPoly content = gcd(a.content_y(), b.content_y());
  BPoly p = a.primitive_y();
  BPoly q = b.primitive_y();
  if (p.degree_y() < q.degree_y()) std::swap(p, q);
  BPoly g = BPoly::constant(1);
  if (q.degree_y() > 0) {
    while (true) {
      BPoly r = pseudo_remainder(p, q);
      if (r.is_zero()) {
        g = q;
        break;
      }
      if (r.degree_y() == 0) break;
      p = std::move(q);
      q = r.primitive_y();
    }
  }
  return (content * g.primitive_y()).normalized();
}

BPoly squarefree_y(const BPoly& a) {
  BPoly p = a.primitive_y();
  if (p.degree_y() <= 0) return p.normalized();
  BPoly g = gcd(p, p.dy());
  return divide_exact(p, g).primitive_y().normalized();
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (sgn(m[row][col]) == 0) continue;
      Rational f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return det;
}

namespace {

Rational sylvester_resultant(const UPoly& a, int da, const UPoly& b, int db) {
  const int n = da + db;
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int row = 0; row < db; ++row)
    for (int k = 0; k <= da; ++k)
      m[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + da - k)] = a.coeff(k);
  for (int row = 0; row < da; ++row)
    for (int k = 0; k <= db; ++k)
      m[static_cast<std::size_t>(db + row)][static_cast<std::size_t>(row + db - k)] = b.coeff(k);
  return determinant(std::move(m));
}

// Newton interpolation through (k, values[k]), k = 0..n.
UPoly interpolate(const std::vector<Rational>& values) {
  const std::size_t n = values.size();
  std::vector<Rational> dd = values;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t k = n - 1; k >= level; --k)
      dd[k] = (dd[k] - dd[k - 1]) / static_cast<long>(level);
  UPoly acc = UPoly::constant(dd[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    UPoly factor{Rational(-static_cast<long>(k)), Rational(1)};
    acc = acc * factor + UPoly::constant(dd[k]);
  }
  return acc;
}

}  // namespace

UPoly resultant_y(const BPoly& a, const BPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const int da = a.degree_y();
  const int db = b.degree_y();
  if (da == 0 && db == 0) return UPoly::constant(1);
  const int bound = std::max(0, a.degree_x()) * db + std::max(0, b.degree_x()) * da;
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(bound) + 1);
  for (int k = 0; k <= bound; ++k) {
    Rational x(k);
    values.push_back(sylvester_resultant(a.eval_x(x), da, b.eval_x(x), db));
  }
  return interpolate(values);
}

}  // namespace polyknot
