#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfaffcubic {

/// Coarse failure categories. The CLI maps these onto its exit codes.
enum class ErrorKind {
  Parse,          // malformed text input
  Domain,         // input violates an operation's precondition
  SearchExhausted,// a bounded search found nothing; retry with a new seed or field
  FieldLimitation,// the requested computation is not available over this field
  Undetermined,   // a heuristic could not decide
  Verification,   // an emitted object failed its own exact check (always a bug)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::Parse, "parse error at column " + std::to_string(position + 1) + ": " + what),
        position_(position) {}
  /// Zero-based offset into the input text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class SearchExhausted : public Error {
 public:
  explicit SearchExhausted(const std::string& what) : Error(ErrorKind::SearchExhausted, what) {}
};

class FieldLimitation : public Error {
 public:
  explicit FieldLimitation(const std::string& what) : Error(ErrorKind::FieldLimitation, what) {}
};

class Undetermined : public Error {
 public:
  explicit Undetermined(const std::string& what) : Error(ErrorKind::Undetermined, what) {}
};

class VerificationFailure : public Error {
 public:
  explicit VerificationFailure(const std::string& what) : Error(ErrorKind::Verification, what) {}
};

}  // namespace pfaffcubic
