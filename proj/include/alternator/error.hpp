#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace alternator {

enum class ErrorCode {
  // Input errors.
  SyntaxError,
  DuplicateLabelArity,
  Disconnected,
  NonPlanar,
  InvalidMap,
  InvalidArgument,
  FormatError,
  // Construction failures. None of these should ever fire on valid input;
  // they are assertions over the invariants of the constructions.
  RegionAlternationViolated,
  PlanarityBroken,
  CircleNotSimple,
  AlternationBroken,
  NoAlternatingAssignment,
  NoPath,
  NoMergeableComponent,
  DegreeViolation,
  // Move preconditions.
  NotSameFace,
  SameCircle,
  NotAugmentArc,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// An error tied to a position in PD text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& message, int line, int column)
      : Error(code, message + " at " + std::to_string(line) + ":" +
                        std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace alternator
