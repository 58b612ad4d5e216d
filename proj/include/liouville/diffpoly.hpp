#ifndef LIOUVILLE_DIFFPOLY_HPP
#define LIOUVILLE_DIFFPOLY_HPP

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liouville/laurent.hpp"
#include "liouville/rational.hpp"

namespace liouville {

enum class Var { Alpha = 0, Beta = 1 };

/// alpha^(order) or beta^(order).
struct Indeterminate {
  Var var = Var::Alpha;
  int order = 0;

  friend bool operator==(const Indeterminate&, const Indeterminate&) = default;
  friend auto operator<=>(const Indeterminate&, const Indeterminate&) = default;
};

/// Power product of indeterminates, sorted, exponents positive.
class DiffMonomial {
 public:
  DiffMonomial() = default;
  explicit DiffMonomial(Indeterminate v, int exponent = 1);

  const std::vector<std::pair<Indeterminate, int>>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree() const;
  /// Weight with alpha = 1, beta = 2 and one extra per derivative.
  int weight() const;

  DiffMonomial operator*(const DiffMonomial& o) const;

  std::string to_string() const;

  friend bool operator==(const DiffMonomial&, const DiffMonomial&) = default;
  // Lexicographic on the expanded factor sequence, so alpha^2 < alpha*beta.
  friend std::strong_ordering operator<=>(const DiffMonomial& a, const DiffMonomial& b);

 private:
  std::vector<std::pair<Indeterminate, int>> factors_;
};

/// Element of Q{alpha, beta}, the differential polynomial ring in two
/// indeterminates with derivation alpha^(i) -> alpha^(i+1).
class DifferentialPolynomial {
 public:
  using TermMap = std::map<DiffMonomial, Rational>;

  DifferentialPolynomial() = default;
  DifferentialPolynomial(Rational c);  // NOLINT(google-explicit-constructor)
  DifferentialPolynomial(const DiffMonomial& m, Rational c);

  static DifferentialPolynomial alpha(int order = 0);
  static DifferentialPolynomial beta(int order = 0);

  /// Parses sums like "3*alpha'*alpha*beta''' - (beta')^2". Accepts "a"/"b"
  /// and TeX-style "\alpha"/"\beta" spellings; juxtaposition multiplies.
  static DifferentialPolynomial parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Formal derivation extended by the Leibniz rule.
  DifferentialPolynomial derive() const;

  std::string to_string() const;

  DifferentialPolynomial& operator+=(const DifferentialPolynomial& o);
  DifferentialPolynomial& operator-=(const DifferentialPolynomial& o);

  friend DifferentialPolynomial operator+(DifferentialPolynomial a,
                                          const DifferentialPolynomial& b) {
    return a += b;
  }
  friend DifferentialPolynomial operator-(DifferentialPolynomial a,
                                          const DifferentialPolynomial& b) {
    return a -= b;
  }
  friend DifferentialPolynomial operator-(DifferentialPolynomial a);
  friend DifferentialPolynomial operator*(const DifferentialPolynomial& a,
                                          const DifferentialPolynomial& b);

  friend bool operator==(const DifferentialPolynomial&, const DifferentialPolynomial&) = default;

 private:
  void add_term(const DiffMonomial& m, const Rational& c);
  TermMap terms_;
};

/// Substitutes alpha^(i) -> f^(i), beta^(i) -> g^(i).
template <class C>
Laurent<C> dp_evaluate(const DifferentialPolynomial& p, const Laurent<C>& f, const Laurent<C>& g) {
  std::map<Indeterminate, Laurent<C>> derivs;
  auto value_of = [&](const Indeterminate& v) -> const Laurent<C>& {
    auto it = derivs.find(v);
    if (it != derivs.end()) return it->second;
    Laurent<C> val = v.var == Var::Alpha ? f : g;
    for (int i = 0; i < v.order; ++i) val = val.derive();
    return derivs.emplace(v, std::move(val)).first->second;
  };
  Laurent<C> out;
  for (const auto& [m, c] : p.terms()) {
    Laurent<C> term{C(c)};
    for (const auto& [v, e] : m.factors())
      for (int i = 0; i < e; ++i) term = term * value_of(v);
    out += term;
  }
  return out;
}

}  // namespace liouville

#endif  // LIOUVILLE_DIFFPOLY_HPP
