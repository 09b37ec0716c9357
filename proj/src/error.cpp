#include "tms/error.hpp"

namespace tms {

std::string_view error_tag(ErrorCode code) {
  switch (code) {
    case ErrorCode::kGrammar: return "E_GRAMMAR";
    case ErrorCode::kTopology: return "E_TOP";
    case ErrorCode::kSigma: return "E_SIGMA";
    case ErrorCode::kMass: return "E_MASS";
    case ErrorCode::kNotMeasurable: return "E_NOT_MEASURABLE";
    case ErrorCode::kExprSyntax: return "E_EXPR_SYNTAX";
    case ErrorCode::kExprUnknownIdent: return "E_EXPR_UNKNOWN_IDENT";
    case ErrorCode::kTooLarge: return "E_TOO_LARGE";
    case ErrorCode::kIo: return "E_IO";
  }
  return "E_UNKNOWN";
}

}  // namespace tms
