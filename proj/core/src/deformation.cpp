#include "polyknot/deformation.hpp"

#include "polyknot/error.hpp"

namespace polyknot {

namespace {

void check_unit(const Scalar& s) {
  auto below = certainly_less(s, Scalar(Rational(0)));
  auto above = certainly_less(Scalar(Rational(1)), s);
  if (!below || *below || !above || *above)
    throw Error(ErrorKind::OutOfRange, "homotopy parameter " + to_display(s, 12) + " is not in [0, 1]");
}

const Scalar& one() {
  static const Scalar v(Rational(1));
  return v;
}

}  // namespace

PolynomialKnot linearize_homotopy(const Scalar& s, const PolynomialKnot& phi, const CertifyOptions& options) {
  check_unit(s);
  if (!phi.is_certified()) throw Error(ErrorKind::NotCertified, "linearization requires a certified knot");
  CoefficientTable table;
  for (const auto& [idx, v] : phi.table().entries()) {
    unsigned long e = static_cast<unsigned long>(std::abs(idx.power - 1));
    table.set(idx, e == 0 ? v : pow(s, e) * v);
  }
  PolynomialKnot h = make_knot(phi.dimension(), table);
  CertCertificate cert = certify_embedding(h, options);
  if (s.is_exact() && !std::holds_alternative<Certified>(cert.verdict))
    throw Error(ErrorKind::CertificationFailed,
                "H(" + to_string(s) + ", phi) is not certified: " + verdict_name(cert.verdict));
  return h.with_verdict(cert.verdict);
}

SequencePoint shift_homotopy(const Scalar& s, const SequencePoint& x) {
  check_unit(s);
  SequencePoint::Map out;
  Scalar keep = one() - s;
  for (int i = 1; i <= x.max_index() + 1; ++i) {
    Scalar v = keep * x.at(i) + s * x.at(i - 1);
    if (!v.is_exact_zero()) out[i] = v;
  }
  return SequencePoint(std::move(out));
}

SequencePoint cone_homotopy(const Scalar& s, const SequencePoint& x) {
  check_unit(s);
  SequencePoint::Map out;
  Scalar keep = one() - s;
  for (int i = 1; i <= x.max_index() + 1; ++i) {
    Scalar v = keep * x.at(i - 1);
    if (i == 1) v = v + s;
    if (!v.is_exact_zero()) out[i] = v;
  }
  return SequencePoint(std::move(out));
}

const char* to_string(TraceKind k) {
  switch (k) {
    case TraceKind::Linearize: return "linearize";
    case TraceKind::ShiftContract: return "shift";
    case TraceKind::ConeContract: return "cone";
    case TraceKind::Contract: return "contract";
  }
  return "?";
}

TraceKind parse_trace_kind(std::string_view text) {
  for (auto k : {TraceKind::Linearize, TraceKind::ShiftContract, TraceKind::ConeContract, TraceKind::Contract})
    if (text == to_string(k)) return k;
  throw Error(ErrorKind::InvalidArgument, "unknown trace kind '" + std::string(text) + "'");
}

std::vector<Rational> uniform_parameters(int steps) {
  if (steps < 2) throw Error(ErrorKind::InvalidArgument, "a trace needs at least 2 steps");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    Rational u(k, steps - 1);
    u.canonicalize();
    out.push_back(u);
  }
  return out;
}

HomotopyTrace trace_linearization(const PolynomialKnot& phi, int steps, const CertifyOptions& options) {
  auto params = uniform_parameters(steps);
  if (!phi.is_certified()) throw Error(ErrorKind::NotCertified, "linearization requires a certified knot");
  HomotopyTrace trace{TraceKind::Linearize, steps, phi, {}};
  for (const auto& u : params) {
    PolynomialKnot h = linearize_homotopy(Scalar(u), phi, options);
    std::string verdict = verdict_name(h.verdict());
    trace.samples.push_back({TraceKind::Linearize, u, std::move(h), std::move(verdict)});
  }
  return trace;
}

HomotopyTrace contract_trace(const SequencePoint& x, int steps) {
  auto params = uniform_parameters(steps);
  HomotopyTrace trace{TraceKind::Contract, steps, x, {}};
  for (const auto& u : params)
    trace.samples.push_back({TraceKind::ShiftContract, u, shift_homotopy(Scalar(u), x), "Nonzero"});
  for (const auto& u : params)
    trace.samples.push_back({TraceKind::ConeContract, u, cone_homotopy(Scalar(u), x), "Nonzero"});
  return trace;
}

}  // namespace polyknot
