#pragma once

#include <compare>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "polyknot/scalar.hpp"

namespace polyknot {

/// Position (i, j) of a coefficient: component i >= 1, power j >= 0.
struct Index {
  int component = 1;
  int power = 0;

  Index() = default;
  Index(int i, int j);

  friend auto operator<=>(const Index&, const Index&) = default;
};

/// Finite-support map Index -> Scalar. Exact zeros are never stored.
class CoefficientTable {
 public:
  using Map = std::map<Index, Scalar>;

  CoefficientTable() = default;
  explicit CoefficientTable(const std::vector<std::pair<Index, Scalar>>& entries);

  /// Coefficient at (i, j); zero when absent.
  Scalar at(const Index& idx) const;
  void set(const Index& idx, const Scalar& value);

  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  int max_component() const;
  int max_power() const;
  bool is_exact() const;

  /// Row of component i as dense coefficients by power (length max power + 1).
  std::vector<Scalar> component(int i) const;

  friend CoefficientTable operator-(const CoefficientTable& a, const CoefficientTable& b);
  friend bool operator==(const CoefficientTable& a, const CoefficientTable& b) {
    return a.entries_ == b.entries_;
  }

 private:
  Map entries_;
};

struct Uncertified {
  friend bool operator==(const Uncertified&, const Uncertified&) { return true; }
};
struct Certified {
  friend bool operator==(const Certified&, const Certified&) { return true; }
};
/// phi(s) = phi(t) with s != t, or phi'(t) = 0 when s == t.
struct Refuted {
  Scalar s;
  Scalar t;
  friend bool operator==(const Refuted&, const Refuted&) = default;
};
struct Inconclusive {
  int depth = 0;
  friend bool operator==(const Inconclusive&, const Inconclusive&) = default;
};
using Verdict = std::variant<Uncertified, Certified, Refuted, Inconclusive>;

const char* verdict_name(const Verdict& v);

/// A polynomial map R -> R^n stored as its coefficient table. Only the
/// certifier, `embed_linear` and the homotopies may attach a Certified verdict.
class PolynomialKnot {
 public:
  int dimension() const { return dimension_; }
  const CoefficientTable& table() const { return table_; }
  const Verdict& verdict() const { return verdict_; }
  bool is_certified() const { return std::holds_alternative<Certified>(verdict_); }

  /// Same knot with a verdict attached (used by the certifier).
  PolynomialKnot with_verdict(Verdict v) const;
  /// Same table in a larger ambient dimension.
  PolynomialKnot with_dimension(int n) const;

  /// Equality of the underlying maps (dimension and table); verdicts ignored.
  friend bool operator==(const PolynomialKnot& a, const PolynomialKnot& b) {
    return a.dimension_ == b.dimension_ && a.table_ == b.table_;
  }

 private:
  friend PolynomialKnot make_knot(int dimension, CoefficientTable table);
  PolynomialKnot(int dimension, CoefficientTable table)
      : dimension_(dimension), table_(std::move(table)) {}

  int dimension_;
  CoefficientTable table_;
  Verdict verdict_ = Uncertified{};
};

/// Nonzero finite-support real sequence (x_1, x_2, ...).
class SequencePoint {
 public:
  using Map = std::map<int, Scalar>;

  /// Throws ZeroVector when no entry is certainly nonzero.
  explicit SequencePoint(Map entries);
  SequencePoint(std::initializer_list<Scalar> dense);

  Scalar at(int i) const;
  const Map& entries() const { return entries_; }
  int max_index() const { return entries_.rbegin()->first; }

  friend bool operator==(const SequencePoint& a, const SequencePoint& b) {
    return a.entries_ == b.entries_;
  }

 private:
  Map entries_;
};

PolynomialKnot make_knot(int dimension, const std::vector<std::pair<Index, Scalar>>& entries);
PolynomialKnot make_knot(int dimension, CoefficientTable table);

/// Componentwise Horner evaluation; exact for exact inputs.
std::vector<Scalar> evaluate(const PolynomialKnot& knot, const Scalar& t);
/// Componentwise derivative at t.
std::vector<Scalar> evaluate_derivative(const PolynomialKnot& knot, const Scalar& t);

/// The linear-coefficient row (phi_i1)_i of a certified knot.
SequencePoint project_linear(const PolynomialKnot& knot);
/// t -> (x_1 t, ..., x_n t) with n the largest support index; Certified.
PolynomialKnot embed_linear(const SequencePoint& x);
/// (x_1, ..., x_n); throws SupportExceedsDim when x has support past n.
std::vector<Scalar> truncate_to_dim(const SequencePoint& x, int n);
/// (y_1, ..., y_n, 0, 0, ...); throws ZeroVector for y = 0.
SequencePoint extend_from_dim(const std::vector<Scalar>& y);

}  // namespace polyknot
