#include "septet/error.hpp"

namespace septet {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::IdenticalArguments: return "IdenticalArguments";
    case ErrorKind::PointNotOnLine: return "PointNotOnLine";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::NotTypical: return "NotTypical";
    case ErrorKind::InvalidComponentCount: return "InvalidComponentCount";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::UnknownCode: return "UnknownCode";
    case ErrorKind::NotHeptagonal: return "NotHeptagonal";
    case ErrorKind::CanonicalizationFailed: return "CanonicalizationFailed";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::Ambiguous: return "Ambiguous";
    case ErrorKind::UnknownFingerprint: return "UnknownFingerprint";
    case ErrorKind::RepDegenerate: return "RepDegenerate";
    case ErrorKind::ClassMismatch: return "ClassMismatch";
    case ErrorKind::ImageDegenerate: return "ImageDegenerate";
    case ErrorKind::SeedCorrupt: return "SeedCorrupt";
  }
  return "Unknown";
}

}  // namespace septet
