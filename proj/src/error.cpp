#include "pdg/error.hpp"

namespace pdg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPermutation: return "NotPermutation";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::HasFixedPoint: return "HasFixedPoint";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::OddEulerDefect: return "OddEulerDefect";
    case ErrorCode::EdgeOutOfRange: return "EdgeOutOfRange";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::LabelCountNotTwo: return "LabelCountNotTwo";
    case ErrorCode::OddLength: return "OddLength";
    case ErrorCode::InvalidToken: return "InvalidToken";
    case ErrorCode::CutOutOfRange: return "CutOutOfRange";
    case ErrorCode::EmptyCaravan: return "EmptyCaravan";
    case ErrorCode::UnknownChord: return "UnknownChord";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace pdg
