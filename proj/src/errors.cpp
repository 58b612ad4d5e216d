#include "liouville/errors.hpp"

namespace liouville {

namespace {

std::string syntax_message(std::size_t position, const std::vector<std::string>& expected,
                           const std::string& detail) {
  std::string msg = "syntax error at position " + std::to_string(position);
  if (!detail.empty()) msg += ": " + detail;
  if (!expected.empty()) {
    msg += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ")";
  }
  return msg;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected,
                         const std::string& detail)
    : InputError(syntax_message(position, expected, detail)),
      position_(position),
      expected_(std::move(expected)) {}

UndeclaredSymbol::UndeclaredSymbol(std::size_t position, const std::string& name)
    : InputError("undeclared symbol '" + name + "' at position " + std::to_string(position)),
      position_(position),
      name_(name) {}

NonIntegerExponent::NonIntegerExponent(std::size_t position, const std::string& detail)
    : InputError("non-integer exponent at position " + std::to_string(position) + ": " + detail),
      position_(position) {}

}  // namespace liouville
