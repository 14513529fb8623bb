#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zelcalc {

enum class ErrorCode {
  EmptySegment,
  LatticeMismatch,
  UnknownLine,
  NotSelfDualLine,
  EmptyInput,
  NotRigid,
  NotALadder,
  HypothesisViolated,
  ConsistencyViolation,
  SyntaxError,
  SchemaError,
  InconsistentPartners,
  BoundExceeded,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// True for errors raised while reading user input (DSL text, universe files).
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Byte offsets [start, end) into a DSL input.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const SourceSpan&) const = default;
};

// An input error tied to a location in DSL text.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, SourceSpan span)
      : Error(code, message + " at " + std::to_string(span.start) + ".." + std::to_string(span.end)),
        span_(span) {}

  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

// Universe JSON validation failure; path is a JSON pointer such as "/lines/1/eta0".
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& message)
      : Error(ErrorCode::SchemaError, path + ": " + message), path_(path) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

enum class HypothesisKind { NotProperLadder, NotMutuallyUnlinked };

class HypothesisViolated : public Error {
 public:
  HypothesisViolated(HypothesisKind kind, std::size_t factor, const std::string& message)
      : Error(ErrorCode::HypothesisViolated, message), kind_(kind), factor_(factor) {}

  HypothesisKind kind() const { return kind_; }
  // Zero-based index of the first offending factor.
  std::size_t factor() const { return factor_; }

 private:
  HypothesisKind kind_;
  std::size_t factor_;
};

std::string_view to_string(HypothesisKind kind);

}  // namespace zelcalc
