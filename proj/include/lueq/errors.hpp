#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lueq {

// Input dimensions do not match the operation's contract.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// A state invariant failed at construction. Carries the name of the violated
// invariant and the magnitude of the violation.
class ValidationError : public std::runtime_error {
  public:
    ValidationError(std::string invariant, double magnitude, const std::string& message)
        : std::runtime_error(message), invariant_(std::move(invariant)), magnitude_(magnitude) {}

    const std::string& invariant() const noexcept { return invariant_; }
    double magnitude() const noexcept { return magnitude_; }

  private:
    std::string invariant_;
    double magnitude_;
};

// The realigned matrix has numerical rank > 1, so no tensor factorization exists.
class NotDecomposableError : public std::runtime_error {
  public:
    NotDecomposableError(const std::string& message, double singular_ratio)
        : std::runtime_error(message), ratio_(singular_ratio) {}

    double singular_ratio() const noexcept { return ratio_; }

  private:
    double ratio_;
};

class NotUnitaryError : public std::runtime_error {
  public:
    NotUnitaryError(const std::string& message, double deviation)
        : std::runtime_error(message), deviation_(deviation) {}

    double deviation() const noexcept { return deviation_; }

  private:
    double deviation_;
};

// State-file parsing failure. `line` is 1-based, or -1 when unknown.
class ParseError : public std::runtime_error {
  public:
    enum class Kind { MalformedSyntax, UnknownKind, ValidationFailed };

    ParseError(Kind kind, const std::string& message, int line = -1)
        : std::runtime_error(message), kind_(kind), line_(line) {}

    Kind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }

  private:
    Kind kind_;
    int line_;
};

}  // namespace lueq
