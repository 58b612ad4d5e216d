#ifndef LIOUVILLE_PARSER_HPP
#define LIOUVILLE_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "liouville/laurent.hpp"
#include "liouville/param.hpp"

namespace liouville {

/// Expression text plus the parameters it may mention.
struct ExprSource {
  std::string text;
  std::vector<Symbol> params;
};

/// Parses a Laurent polynomial in x with coefficients in Q[params].
///
///   expr   := term (("+" | "-") term)*
///   term   := unary (("*" | "/") unary)*
///   unary  := "-" unary | power
///   power  := primary ("^" int)?
///   primary:= rational | symbol | "x" | "(" expr ")"
///
/// Division is allowed only by single-term divisors whose parameters are all
/// declared invertible. Negative powers follow the same rule.
LaurentP parse(const ExprSource& src);

/// Convenience overload for parameter-free input.
LaurentQ parse_concrete(std::string_view text);

/// Parses "k0,k1:inv" into symbols; ":inv" marks invertible ones.
std::vector<Symbol> parse_param_list(std::string_view text);

/// Descending exponents, e.g. "x^2 + 3*x^-1"; parse(format(p)) == p.
std::string format(const LaurentP& p);
std::string format(const LaurentQ& p);
std::string format(const ParamElement& c);
std::string format(const Rational& c);

}  // namespace liouville

#endif  // LIOUVILLE_PARSER_HPP
