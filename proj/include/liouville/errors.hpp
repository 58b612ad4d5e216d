#ifndef LIOUVILLE_ERRORS_HPP
#define LIOUVILLE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace liouville {

// Base of every recoverable error raised by the library. The CLI maps
// subclasses onto exit codes; anything else is an internal failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract user input (exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected,
              const std::string& detail = {});

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

class UndeclaredSymbol : public InputError {
 public:
  UndeclaredSymbol(std::size_t position, const std::string& name);
  std::size_t position() const noexcept { return position_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::size_t position_;
  std::string name_;
};

class NonIntegerExponent : public InputError {
 public:
  NonIntegerExponent(std::size_t position, const std::string& detail);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class WrongPoleOrder : public InputError {
 public:
  using InputError::InputError;
};

class CapExceeded : public InputError {
 public:
  using InputError::InputError;
};

// The computation would leave the rationals (exit code 3).
class NeedsExtension : public Error {
 public:
  using Error::Error;
};

class NonSquareLeading : public NeedsExtension {
 public:
  using NeedsExtension::NeedsExtension;
};

class NonSquareAtZero : public NeedsExtension {
 public:
  using NeedsExtension::NeedsExtension;
};

class NonPolynomialObstruction : public Error {
 public:
  using Error::Error;
};

}  // namespace liouville

#endif  // LIOUVILLE_ERRORS_HPP
