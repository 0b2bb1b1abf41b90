#include "polyknot/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "polyknot/error.hpp"

namespace polyknot {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(k)];
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Interval UPoly::eval(const Interval& x) const {
  Interval acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Interval(*it);
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  Rational lc = leading();
  std::vector<Rational> v = c_;
  for (auto& x : v) x /= lc;
  return UPoly(std::move(v));
}

UPoly UPoly::normalized_positive() const {
  if (is_zero()) return {};
  Rational lc = abs(leading());
  std::vector<Rational> v = c_;
  for (auto& x : v) x /= lc;
  return UPoly(std::move(v));
}

UPoly UPoly::operator-() const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x = -x;
  return UPoly(std::move(v));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly operator*(const Rational& c, const UPoly& a) {
  std::vector<Rational> v = a.c_;
  for (auto& x : v) x *= c;
  return UPoly(std::move(v));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational& lc = b.leading();
  for (int k = a.degree(); k >= b.degree(); --k) {
    Rational factor = rem[static_cast<std::size_t>(k)] / lc;
    quo[static_cast<std::size_t>(k - b.degree())] = factor;
    if (sgn(factor) == 0) continue;
    for (int m = 0; m <= b.degree(); ++m)
      rem[static_cast<std::size_t>(k - b.degree() + m)] -= factor * b.c_[static_cast<std::size_t>(m)];
  }
  rem.resize(static_cast<std::size_t>(b.degree()));
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::compose(const UPoly& q) const {
  UPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + UPoly::constant(*it);
  return acc;
}

std::string UPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    if (!first) out << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) out << "-";
    Rational a = abs(c);
    if (k == 0 || a != 1) out << polyknot::to_string(a);
    if (k > 0) out << var;
    if (k > 1) out << "^" << k;
    first = false;
  }
  return out.str();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.is_zero()) return {};
  UPoly g = gcd(p, p.derivative());
  return (p / g).monic();
}

Rational cauchy_bound(const UPoly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeff(k) / p.leading())));
  return m + 1;
}

std::vector<UPoly> sturm_chain(const UPoly& p) {
  std::vector<UPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p.normalized_positive());
  UPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d.normalized_positive());
  while (true) {
    UPoly r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    chain.push_back((-r).normalized_positive());
  }
  return chain;
}

namespace {

int variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int sign_variations(const std::vector<UPoly>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(p.sign_at(x));
  return variations(signs);
}

int sign_variations_at_infinity(const std::vector<UPoly>& chain, bool positive) {
  std::vector<int> signs;
  for (const auto& p : chain) {
    int s = sgn(p.leading());
    if (!positive && p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

int count_roots(const std::vector<UPoly>& chain, const Rational& a, const Rational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

namespace {

void isolate(const UPoly& q, const std::vector<UPoly>& chain, Rational a, Rational b, int count,
             std::vector<RootInterval>& out) {
  // Roots in (a, b], `count` of them.
  while (count > 0) {
    if (count == 1 && q.sign_at(a) != 0) {
      if (q.sign_at(b) == 0) {
        out.push_back({b, b});
      } else {
        out.push_back({a, b});
      }
      return;
    }
    Rational m = (a + b) / 2;
    int left = count_roots(chain, a, m);
    isolate(q, chain, a, m, left, out);
    a = m;
    count -= left;
  }
}

}  // namespace

std::vector<RootInterval> sturm_real_roots(const UPoly& p, const RealRange& range) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot isolate roots of the zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  UPoly q = squarefree_part(p);
  auto chain = sturm_chain(q);
  Rational bound = cauchy_bound(q);
  Rational lo = range.lo ? *range.lo : Rational(-bound);
  Rational hi = range.hi ? *range.hi : bound;
  if (range.lo && range.hi && lo > hi) return out;
  if (lo < -bound) lo = -bound;
  if (hi > bound) hi = bound;
  if (lo > hi) return out;
  if (q.sign_at(lo) == 0) out.push_back({lo, lo});
  if (lo < hi) isolate(q, chain, lo, hi, count_roots(chain, lo, hi), out);
  return out;
}

void bisect_root(const UPoly& squarefree, RootInterval& root) {
  if (root.exact()) return;
  Rational m = (root.lo + root.hi) / 2;
  int sm = squarefree.sign_at(m);
  if (sm == 0) {
    root.lo = m;
    root.hi = m;
  } else if (squarefree.sign_at(root.lo) != sm) {
    root.hi = m;
  } else {
    root.lo = m;
  }
}

void refine_root(const UPoly& squarefree, RootInterval& root, const Rational& width) {
  while (!root.exact() && root.width() > width) bisect_root(squarefree, root);
}

Interval to_interval(const RootInterval& r) { return Interval(r.lo, r.hi); }

}  // namespace polyknot
