#include "polyknot/knot.hpp"

#include <algorithm>
#include <string>

#include "polyknot/error.hpp"

namespace polyknot {

Index::Index(int i, int j) : component(i), power(j) {
  if (i < 1 || j < 0)
    throw Error(ErrorKind::InvalidArgument,
                "invalid index (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

CoefficientTable::CoefficientTable(const std::vector<std::pair<Index, Scalar>>& entries) {
  for (const auto& [idx, value] : entries) set(idx, at(idx) + value);
}

Scalar CoefficientTable::at(const Index& idx) const {
  auto it = entries_.find(idx);
  return it == entries_.end() ? Scalar() : it->second;
}

void CoefficientTable::set(const Index& idx, const Scalar& value) {
  if (value.is_exact_zero()) {
    entries_.erase(idx);
  } else {
    entries_.insert_or_assign(idx, value);
  }
}

int CoefficientTable::max_component() const {
  return entries_.empty() ? 0 : entries_.rbegin()->first.component;
}

int CoefficientTable::max_power() const {
  int m = 0;
  for (const auto& [idx, _] : entries_) m = std::max(m, idx.power);
  return m;
}

bool CoefficientTable::is_exact() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& e) { return e.second.is_exact(); });
}

std::vector<Scalar> CoefficientTable::component(int i) const {
  std::vector<Scalar> row;
  for (auto it = entries_.lower_bound(Index(i, 0));
       it != entries_.end() && it->first.component == i; ++it) {
    if (row.size() <= static_cast<std::size_t>(it->first.power))
      row.resize(static_cast<std::size_t>(it->first.power) + 1);
    row[static_cast<std::size_t>(it->first.power)] = it->second;
  }
  return row;
}

CoefficientTable operator-(const CoefficientTable& a, const CoefficientTable& b) {
  CoefficientTable r = a;
  for (const auto& [idx, value] : b.entries_) r.set(idx, r.at(idx) - value);
  return r;
}

const char* verdict_name(const Verdict& v) {
  switch (v.index()) {
    case 0: return "Uncertified";
    case 1: return "Certified";
    case 2: return "Refuted";
    default: return "Inconclusive";
  }
}

PolynomialKnot PolynomialKnot::with_verdict(Verdict v) const {
  PolynomialKnot k = *this;
  k.verdict_ = std::move(v);
  return k;
}

PolynomialKnot PolynomialKnot::with_dimension(int n) const {
  if (n < table_.max_component())
    throw Error(ErrorKind::IndexOutOfDimension, "dimension below the largest component index");
  PolynomialKnot k = *this;
  k.dimension_ = n;
  return k;
}

PolynomialKnot make_knot(int dimension, CoefficientTable table) {
  if (dimension < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  if (table.empty()) throw Error(ErrorKind::EmptyTable, "coefficient table has no nonzero entry");
  if (table.max_component() > dimension)
    throw Error(ErrorKind::IndexOutOfDimension,
                "component " + std::to_string(table.max_component()) +
                    " exceeds dimension " + std::to_string(dimension));
  return PolynomialKnot(dimension, std::move(table));
}

PolynomialKnot make_knot(int dimension, const std::vector<std::pair<Index, Scalar>>& entries) {
  for (const auto& [idx, _] : entries) {
    if (idx.component > dimension)
      throw Error(ErrorKind::IndexOutOfDimension,
                  "component " + std::to_string(idx.component) + " exceeds dimension " +
                      std::to_string(dimension));
  }
  return make_knot(dimension, CoefficientTable(entries));
}

SequencePoint::SequencePoint(Map entries) {
  for (auto& [i, v] : entries) {
    if (i < 1) throw Error(ErrorKind::InvalidArgument, "sequence index must be positive");
    if (!v.is_exact_zero()) entries_.emplace(i, std::move(v));
  }
  bool nonzero = std::any_of(entries_.begin(), entries_.end(),
                             [](const auto& e) { return e.second.certainly_nonzero(); });
  if (!nonzero) throw Error(ErrorKind::ZeroVector, "sequence point must be nonzero");
}

SequencePoint::SequencePoint(std::initializer_list<Scalar> dense)
    : SequencePoint([&] {
        Map m;
        int i = 1;
        for (const auto& v : dense) m.emplace(i++, v);
        return m;
      }()) {}

Scalar SequencePoint::at(int i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? Scalar() : it->second;
}

std::vector<Scalar> evaluate(const PolynomialKnot& knot, const Scalar& t) {
  std::vector<Scalar> out(static_cast<std::size_t>(knot.dimension()));
  for (int i = 1; i <= knot.dimension(); ++i) {
    auto row = knot.table().component(i);
    Scalar acc;
    for (auto it = row.rbegin(); it != row.rend(); ++it) acc = acc * t + *it;
    out[static_cast<std::size_t>(i - 1)] = acc;
  }
  return out;
}

std::vector<Scalar> evaluate_derivative(const PolynomialKnot& knot, const Scalar& t) {
  std::vector<Scalar> out(static_cast<std::size_t>(knot.dimension()));
  for (int i = 1; i <= knot.dimension(); ++i) {
    auto row = knot.table().component(i);
    Scalar acc;
    for (std::size_t j = row.size(); j-- > 1;)
      acc = acc * t + row[j] * Scalar(static_cast<long>(j));
    out[static_cast<std::size_t>(i - 1)] = acc;
  }
  return out;
}

SequencePoint project_linear(const PolynomialKnot& knot) {
  if (!knot.is_certified())
    throw Error(ErrorKind::NotCertified, "project_linear needs a certified knot");
  SequencePoint::Map m;
  for (const auto& [idx, v] : knot.table().entries())
    if (idx.power == 1) m.emplace(idx.component, v);
  bool nonzero = std::any_of(m.begin(), m.end(),
                             [](const auto& e) { return e.second.certainly_nonzero(); });
  if (!nonzero) throw Error(ErrorKind::ZeroLinearPart, "all linear coefficients vanish");
  return SequencePoint(std::move(m));
}

PolynomialKnot embed_linear(const SequencePoint& x) {
  CoefficientTable table;
  for (const auto& [i, v] : x.entries()) table.set(Index(i, 1), v);
  return make_knot(x.max_index(), std::move(table)).with_verdict(Certified{});
}

std::vector<Scalar> truncate_to_dim(const SequencePoint& x, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  if (x.max_index() > n)
    throw Error(ErrorKind::SupportExceedsDim,
                "entry " + std::to_string(x.max_index()) + " lies beyond dimension " +
                    std::to_string(n));
  std::vector<Scalar> y(static_cast<std::size_t>(n));
  for (const auto& [i, v] : x.entries()) y[static_cast<std::size_t>(i - 1)] = v;
  return y;
}

SequencePoint extend_from_dim(const std::vector<Scalar>& y) {
  SequencePoint::Map m;
  for (std::size_t k = 0; k < y.size(); ++k) m.emplace(static_cast<int>(k) + 1, y[k]);
  return SequencePoint(std::move(m));
}

}  // namespace polyknot
