#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hitchin3 {

enum class ErrorCode {
  DivisionByZero,
  ZeroPolynomial,
  FieldTooSmall,
  IdentityViolated,
  InvalidPuncture,
  HypothesisViolated,
  PreconditionViolated,
  MalformedInput,
  ParseError,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::IdentityViolated: return "IdentityViolated";
    case ErrorCode::InvalidPuncture: return "InvalidPuncture";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // Input errors map to CLI exit code 2, identity violations to 3.
  bool is_input_error() const noexcept {
    return code_ == ErrorCode::ParseError || code_ == ErrorCode::MalformedInput ||
           code_ == ErrorCode::FieldTooSmall || code_ == ErrorCode::InvalidPuncture ||
           code_ == ErrorCode::DivisionByZero || code_ == ErrorCode::ZeroPolynomial;
  }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& input)
      : Error(ErrorCode::ParseError, describe(offset, expected, input)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string describe(std::size_t offset, const std::vector<std::string>& expected,
                              const std::string& input) {
    std::string msg = "at byte " + std::to_string(offset) + " in \"" + input + "\": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    return msg;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace hitchin3
