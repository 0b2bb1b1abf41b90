#include "polyknot/error.hpp"

namespace polyknot {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyTable: return "EmptyTable";
    case ErrorKind::IndexOutOfDimension: return "IndexOutOfDimension";
    case ErrorKind::NotCertified: return "NotCertified";
    case ErrorKind::ZeroLinearPart: return "ZeroLinearPart";
    case ErrorKind::SupportExceedsDim: return "SupportExceedsDim";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NegativeInput: return "NegativeInput";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::Undecidable: return "Undecidable";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::BadExponents: return "BadExponents";
    case ErrorKind::ParameterBoundViolated: return "ParameterBoundViolated";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace polyknot
