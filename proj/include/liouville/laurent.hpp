#ifndef LIOUVILLE_LAURENT_HPP
#define LIOUVILLE_LAURENT_HPP

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>

#include "liouville/param.hpp"
#include "liouville/rational.hpp"

namespace liouville {

/// Sparse Laurent polynomial in one variable over a coefficient ring C.
/// C is Rational (concrete mode) or ParamElement (symbolic mode).
template <class C>
class Laurent {
 public:
  using Coeff = C;
  using TermMap = std::map<int, C>;

  Laurent() = default;
  Laurent(const C& c, int exponent = 0) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(exponent, c);
  }

  static Laurent x(int exponent = 1) { return Laurent(C(1), exponent); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Lowest exponent; throws on the zero polynomial.
  int order() const {
    if (terms_.empty()) throw std::logic_error("order of zero Laurent polynomial");
    return terms_.begin()->first;
  }
  /// Highest exponent; throws on the zero polynomial.
  int degree() const {
    if (terms_.empty()) throw std::logic_error("degree of zero Laurent polynomial");
    return terms_.rbegin()->first;
  }
  const C& leading() const {
    if (terms_.empty()) throw std::logic_error("leading coefficient of zero");
    return terms_.rbegin()->second;
  }

  C coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? C() : it->second;
  }

  bool is_polynomial() const { return terms_.empty() || order() >= 0; }

  void add(int k, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void set(int k, const C& c) {
    if (c.is_zero())
      terms_.erase(k);
    else
      terms_[k] = c;
  }

  Laurent derive() const {
    Laurent out;
    for (const auto& [k, c] : terms_)
      if (k != 0) out.terms_.emplace(k - 1, c * C(static_cast<long>(k)));
    return out;
  }

  /// Exact antiderivative with zero constant; an x^-1 term has none.
  Laurent antiderivative() const {
    Laurent out;
    for (const auto& [k, c] : terms_) {
      if (k == -1) throw std::domain_error("x^-1 term has no Laurent antiderivative");
      out.terms_.emplace(k + 1, c * C(Rational(1, k + 1)));
    }
    return out;
  }

  /// Multiplication by x^k.
  Laurent shifted(int k) const {
    Laurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
  }

  /// Substitution x -> x^factor.
  Laurent stretched(int factor) const {
    if (factor <= 0) throw std::invalid_argument("stretch factor must be positive");
    Laurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e * factor, c);
    return out;
  }

  /// Terms with exponent in [lo, hi].
  Laurent slice(int lo, int hi) const {
    Laurent out;
    for (auto it = terms_.lower_bound(lo); it != terms_.end() && it->first <= hi; ++it)
      out.terms_.insert(*it);
    return out;
  }

  /// Applies fn to every coefficient, dropping those that become zero.
  template <class Fn>
  auto map(Fn fn) const -> Laurent<std::decay_t<std::invoke_result_t<Fn, const C&>>> {
    Laurent<std::decay_t<std::invoke_result_t<Fn, const C&>>> out;
    for (const auto& [k, c] : terms_) out.add(k, fn(c));
    return out;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(Laurent a) {
    for (auto& [k, c] : a.terms_) c = -c;
    return a;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) out.add(ka + kb, ca * cb);
    return out;
  }
  friend Laurent operator*(Laurent a, const C& s) {
    if (s.is_zero()) return {};
    for (auto& [k, c] : a.terms_) c = c * s;
    return a;
  }
  friend Laurent operator*(const C& s, Laurent a) { return std::move(a) * s; }

  friend bool operator==(const Laurent&, const Laurent&) = default;

 private:
  TermMap terms_;
};

template <class C>
bool is_zero(const Laurent<C>& p) {
  return p.is_zero();
}

using LaurentQ = Laurent<Rational>;
using LaurentP = Laurent<ParamElement>;

inline LaurentP to_symbolic(const LaurentQ& p) {
  return p.map([](const Rational& c) { return ParamElement(c); });
}

/// Coefficients as rationals when every one is parameter-free.
inline std::optional<LaurentQ> to_concrete(const LaurentP& p) {
  LaurentQ out;
  for (const auto& [k, c] : p.terms()) {
    auto v = c.constant_value();
    if (!v) return std::nullopt;
    out.add(k, *v);
  }
  return out;
}

inline LaurentQ specialize(const LaurentP& p, const Assignment& values) {
  return p.map([&](const ParamElement& c) { return c.evaluate(values); });
}

inline LaurentQ specialize(const LaurentQ& p, const Assignment&) { return p; }

}  // namespace liouville

#endif  // LIOUVILLE_LAURENT_HPP
