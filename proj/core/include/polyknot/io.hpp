#pragma once

#include <string>
#include <string_view>

#include "polyknot/certifier.hpp"
#include "polyknot/deformation.hpp"

namespace polyknot {

/// Knot document:
///   {"dimension": n, "coefficients": [{"i": 1, "j": 3, "value": "1/2"}, ...]}
/// Values are "p/q", integers, exact decimals ("0.25", "1e-3") or
/// "[lo, hi]" enclosures. Serialization sorts by (i, j) and is canonical:
/// serialize(parse(serialize(k))) == serialize(k).
std::string serialize_knot(const PolynomialKnot& knot);
/// Throws ParseError with the 1-based line and a JSON pointer to the field.
PolynomialKnot parse_knot(std::string_view text);

/// {"entries": [{"i": 1, "value": "2"}, ...]}
std::string serialize_sequence(const SequencePoint& x);
SequencePoint parse_sequence(std::string_view text);

/// {"verdict": ..., "witness": {"s", "t"}, "depth": ..., "evidence": [...]}
std::string serialize_certificate(const CertCertificate& cert);

/// {"kind", "steps", "source", "samples": [{"leg", "parameter", "state", "verdict"}]}
std::string serialize_trace(const HomotopyTrace& trace);
HomotopyTrace parse_trace(std::string_view text);

/// Whole-file read; throws Error(InvalidArgument) when unreadable.
std::string read_text_file(const std::string& path);
/// Writes to a sibling temporary file and renames it over `path`, so a
/// failed write never leaves a partial file behind.
void write_text_file_atomic(const std::string& path, std::string_view content);

}  // namespace polyknot
