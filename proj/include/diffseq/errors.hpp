#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace diffseq {

/// Base of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

// diffalg
struct NotHomogeneous : Error {
  using Error::Error;
};
struct NonMonicEquation : Error {
  using Error::Error;
};
struct JetTooShort : Error {
  using Error::Error;
};

// symmetry
struct ProlongationTooShort : Error {
  using Error::Error;
};

// singularity
struct NoBalance : Error {
  using Error::Error;
};
struct IrrationalLeadingCoefficient : Error {
  using Error::Error;
};
struct InconsistentBalance : Error {
  using Error::Error;
};
struct NonIntegerResonance : Error {
  using Error::Error;
};
struct RepeatedResonance : Error {
  using Error::Error;
};

// integrals
struct PoleAtSamplePoint : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct IdenticalIndices : Error {
  using Error::Error;
};
struct InvalidCombination : Error {
  using Error::Error;
};

/// Raised when an exact identity does not hold. Carries the residual in
/// canonical text form so that the failure can be diagnosed.
struct VerificationFailure : Error {
  VerificationFailure(std::string module, std::string operation,
                      std::string stage, std::string residual)
      : Error(module + "::" + operation + " [" + stage +
              "] residual: " + residual),
        module(std::move(module)),
        operation(std::move(operation)),
        stage(std::move(stage)),
        residual(std::move(residual)) {}

  std::string module;
  std::string operation;
  std::string stage;
  std::string residual;
};

/// Parse failure with the byte offset and the set of tokens that would
/// have been accepted there.
struct ParseError : Error {
  ParseError(std::string what, std::size_t position,
             std::vector<std::string> expected = {})
      : Error(describe(what, position, expected)),
        position(position),
        expected(std::move(expected)) {}

  std::size_t position;
  std::vector<std::string> expected;

 private:
  static std::string describe(const std::string& what, std::size_t pos,
                              const std::vector<std::string>& expected) {
    std::string msg = "parse error at " + std::to_string(pos) + ": " + what;
    if (!expected.empty()) {
      msg += " (expected one of:";
      for (const auto& e : expected) msg += " " + e;
      msg += ")";
    }
    return msg;
  }
};

struct UsageError : Error {
  using Error::Error;
};

}  // namespace diffseq
