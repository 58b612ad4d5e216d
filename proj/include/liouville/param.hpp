#ifndef LIOUVILLE_PARAM_HPP
#define LIOUVILLE_PARAM_HPP

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "liouville/rational.hpp"

namespace liouville {

/// A declared parameter. Only invertible symbols may carry negative exponents.
struct Symbol {
  std::string name;
  bool invertible = false;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Power product of parameter symbols; exponents are nonzero, symbols sorted.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const Symbol& s, int exponent = 1);

  const std::vector<std::pair<Symbol, int>>& powers() const { return powers_; }
  bool is_one() const { return powers_.empty(); }
  int total_degree() const;
  int exponent_of(const std::string& name) const;

  Monomial operator*(const Monomial& o) const;
  /// Negates every exponent; nullopt when a non-invertible symbol is present.
  std::optional<Monomial> inverse() const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Graded: total degree first, then lexicographic on the sorted powers.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::pair<Symbol, int>> powers_;
};

/// Multivariate (Laurent in the invertible symbols) polynomial over Q.
class ParamElement {
 public:
  using TermMap = std::map<Monomial, Rational>;

  ParamElement() = default;
  ParamElement(Rational c);  // NOLINT(google-explicit-constructor)
  ParamElement(long c) : ParamElement(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  ParamElement(const Monomial& m, Rational c);

  static ParamElement symbol(const Symbol& s, int exponent = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> constant_value() const;
  std::size_t term_count() const { return terms_.size(); }

  std::set<Symbol> symbols() const;

  ParamElement pow(unsigned e) const;
  /// Inverse of a single term whose symbols are all invertible.
  std::optional<ParamElement> try_inverse() const;
  /// Square root of a constant or of a single term with even exponents.
  std::optional<ParamElement> sqrt_exact() const;

  /// Specializes every symbol; throws InputError for a missing symbol.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  /// Clears negative exponents with a monomial factor, scales to coprime
  /// integer coefficients, and makes the leading coefficient positive.
  ParamElement normalized() const;
  /// Monomial that clears every negative exponent when multiplied in.
  Monomial denominator_monomial() const;

  std::string to_string() const;

  ParamElement& operator+=(const ParamElement& o);
  ParamElement& operator-=(const ParamElement& o);
  ParamElement& operator*=(const ParamElement& o);
  ParamElement& operator*=(const Rational& c);
  ParamElement& operator/=(const Rational& c);

  friend ParamElement operator+(ParamElement a, const ParamElement& b) { return a += b; }
  friend ParamElement operator-(ParamElement a, const ParamElement& b) { return a -= b; }
  friend ParamElement operator*(const ParamElement& a, const ParamElement& b);
  friend ParamElement operator*(ParamElement a, const Rational& c) { return a *= c; }
  friend ParamElement operator*(const Rational& c, ParamElement a) { return a *= c; }
  friend ParamElement operator/(ParamElement a, const Rational& c) { return a /= c; }
  friend ParamElement operator-(ParamElement a);

  friend bool operator==(const ParamElement&, const ParamElement&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

inline bool is_zero(const ParamElement& p) { return p.is_zero(); }

/// Parameter assignment used to specialize families to concrete equations.
using Assignment = std::map<std::string, Rational>;

}  // namespace liouville

#endif  // LIOUVILLE_PARAM_HPP
