#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spinlie {

// Root of every error the library throws. Math-level failures (singular
// metric, non-Killing input, ...) and input failures (bad expression, bad
// scene) both derive from it; the CLI maps the two families onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- input errors ---------------------------------------------------------

class InputError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : InputError(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownIdentifier : public InputError {
 public:
  explicit UnknownIdentifier(const std::string& name)
      : InputError("unknown identifier '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class SceneError : public InputError {
 public:
  using InputError::InputError;
};

// ---- math errors ----------------------------------------------------------

class MathError : public Error {
 public:
  using Error::Error;
};

class DomainError : public MathError {
 public:
  using MathError::MathError;
};

class SingularMetric : public MathError {
 public:
  using MathError::MathError;
};

class SignatureError : public MathError {
 public:
  using MathError::MathError;
};

class TetradMismatch : public MathError {
 public:
  using MathError::MathError;
};

class SingularSpinor : public MathError {
 public:
  using MathError::MathError;
};

class KillingViolation : public MathError {
 public:
  explicit KillingViolation(double residual)
      : MathError("vector field is not Killing (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class FlowEscape : public MathError {
 public:
  explicit FlowEscape(double exit_time)
      : MathError("flow left the domain at t = " + std::to_string(exit_time)),
        exit_time_(exit_time) {}
  double exit_time() const noexcept { return exit_time_; }

 private:
  double exit_time_;
};

}  // namespace spinlie
