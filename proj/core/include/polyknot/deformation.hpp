#pragma once

#include <string>
#include <variant>
#include <vector>

#include "polyknot/certifier.hpp"

namespace polyknot {

/// H(s, phi): coefficient (i, j) scaled by s^|j-1| (0^0 = 1), then
/// re-certified. Exact s must keep the knot Certified; a failure throws
/// CertificationFailed. An interval s is certified in interval mode and the
/// verdict is returned as found.
/// Throws OutOfRange unless 0 <= s <= 1, NotCertified for an uncertified phi.
PolynomialKnot linearize_homotopy(const Scalar& s, const PolynomialKnot& phi, const CertifyOptions& options = {});

/// S(s, x)_i = (1 - s) x_i + s x_(i-1), with x_0 = 0.
SequencePoint shift_homotopy(const Scalar& s, const SequencePoint& x);
/// T(s, x)_i = (1 - s) x_(i-1) + s a_i, with a = (1, 0, 0, ...).
SequencePoint cone_homotopy(const Scalar& s, const SequencePoint& x);

enum class TraceKind { Linearize, ShiftContract, ConeContract, Contract };

const char* to_string(TraceKind k);
TraceKind parse_trace_kind(std::string_view text);

using TraceState = std::variant<PolynomialKnot, SequencePoint>;

struct TraceSample {
  TraceKind leg;
  Rational parameter;
  TraceState state;
  /// Knot verdict name, or "Nonzero" for sequence points.
  std::string verdict;
};

/// Samples ordered by leg, then by parameter. A Contract trace has a shift
/// leg followed by a cone leg, each parameterized over [0, 1].
struct HomotopyTrace {
  TraceKind kind;
  int steps;
  TraceState source;
  std::vector<TraceSample> samples;
};

/// Parameters k / (steps - 1), k = 0..steps-1.
std::vector<Rational> uniform_parameters(int steps);

/// Throws InvalidArgument for steps < 2, NotCertified, CertificationFailed.
HomotopyTrace trace_linearization(const PolynomialKnot& phi, int steps, const CertifyOptions& options = {});

/// Shift leg then cone leg, `steps` samples each.
HomotopyTrace contract_trace(const SequencePoint& x, int steps);

}  // namespace polyknot
