#ifndef TMS_ERROR_HPP
#define TMS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tms {

enum class ErrorCode {
  kGrammar,
  kTopology,
  kSigma,
  kMass,
  kNotMeasurable,
  kExprSyntax,
  kExprUnknownIdent,
  kTooLarge,
  kIo,
};

/// Stable tag such as "E_GRAMMAR".
std::string_view error_tag(ErrorCode code);

/// Every recoverable failure in the library is reported as a ModelError.
class ModelError : public std::runtime_error {
 public:
  ModelError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_tag(code)) + ": " + message), code_(code), detail_(message) {}

  ErrorCode code() const { return code_; }
  /// The message without the tag prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

/// Parse errors carry the 1-based source line (0 when not tied to a line).
class ParseError : public ModelError {
 public:
  ParseError(ErrorCode code, int line, const std::string& message)
      : ModelError(code, line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace tms

#endif  // TMS_ERROR_HPP
