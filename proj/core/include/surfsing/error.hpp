#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace surfsing {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally malformed graph data (dangling edge, duplicate vertex, ...).
/// `element` names the offending vertex, edge or field.
class ValidationError : public Error {
 public:
  ValidationError(std::string element, const std::string& what)
      : Error(what), element_(std::move(element)) {}
  const std::string& element() const noexcept { return element_; }

 private:
  std::string element_;
};

/// Text-format error with a 1-based line number (0 when not line specific).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string field, std::string message, std::string source = {})
      : Error(format(source, line, message)),
        line_(line),
        field_(std::move(field)),
        message_(std::move(message)),
        source_(std::move(source)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }
  const std::string& message() const noexcept { return message_; }

  /// Same error attributed to a file name.
  ParseError in_source(std::string source) const { return ParseError(line_, field_, message_, std::move(source)); }

 private:
  static std::string format(const std::string& source, std::size_t line, const std::string& message) {
    std::string out = source.empty() ? std::string() : source + ":";
    if (line) out += std::to_string(line) + ":";
    if (!out.empty()) out += " ";
    return out + message;
  }

  std::size_t line_;
  std::string field_;
  std::string message_;
  std::string source_;
};

/// The input is well formed but outside the domain of the requested
/// analysis (not negative definite, not log terminal, not minimal, ...).
class AnalysisRefusal : public Error {
 public:
  using Error::Error;
};

/// A square system whose matrix has zero determinant.
class SingularMatrixError : public AnalysisRefusal {
 public:
  using AnalysisRefusal::AnalysisRefusal;
};

/// Caller broke a documented precondition (e.g. non-symmetric matrix).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Data that cannot arise from a consistent profile; signals corruption.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace surfsing
