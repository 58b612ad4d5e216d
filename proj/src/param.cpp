#include "liouville/param.hpp"

#include <algorithm>
#include <stdexcept>

#include "liouville/errors.hpp"

namespace liouville {

Monomial::Monomial(const Symbol& s, int exponent) {
  if (exponent != 0) powers_.emplace_back(s, exponent);
}

int Monomial::total_degree() const {
  int deg = 0;
  for (const auto& [sym, e] : powers_) deg += e;
  return deg;
}

int Monomial::exponent_of(const std::string& name) const {
  for (const auto& [sym, e] : powers_)
    if (sym.name == name) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  auto a = powers_.begin();
  auto b = o.powers_.begin();
  while (a != powers_.end() || b != o.powers_.end()) {
    if (b == o.powers_.end() || (a != powers_.end() && a->first < b->first)) {
      out.powers_.push_back(*a++);
    } else if (a == powers_.end() || b->first < a->first) {
      out.powers_.push_back(*b++);
    } else {
      const int e = a->second + b->second;
      if (e != 0) out.powers_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  return out;
}

std::optional<Monomial> Monomial::inverse() const {
  Monomial out;
  for (const auto& [sym, e] : powers_) {
    if (!sym.invertible) return std::nullopt;
    out.powers_.emplace_back(sym, -e);
  }
  return out;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& [sym, e] : powers_) {
    if (!s.empty()) s += "*";
    s += sym.name;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.powers_.begin(), a.powers_.end(),
                                                b.powers_.begin(), b.powers_.end());
}

ParamElement::ParamElement(Rational c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

ParamElement::ParamElement(const Monomial& m, Rational c) {
  if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

ParamElement ParamElement::symbol(const Symbol& s, int exponent) {
  if (exponent < 0 && !s.invertible)
    throw InputError("negative power of non-invertible parameter '" + s.name + "'");
  return ParamElement(Monomial(s, exponent), Rational(1));
}

bool ParamElement::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Rational> ParamElement::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return std::nullopt;
}

std::set<Symbol> ParamElement::symbols() const {
  std::set<Symbol> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [sym, e] : m.powers()) out.insert(sym);
  return out;
}

void ParamElement::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamElement& ParamElement::operator+=(const ParamElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ParamElement& ParamElement::operator-=(const ParamElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ParamElement operator*(const ParamElement& a, const ParamElement& b) {
  ParamElement out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

ParamElement& ParamElement::operator*=(const ParamElement& o) { return *this = *this * o; }

ParamElement& ParamElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

ParamElement& ParamElement::operator/=(const Rational& c) { return *this *= c.inverse(); }

ParamElement operator-(ParamElement a) {
  for (auto& [m, v] : a.terms_) v = -v;
  return a;
}

ParamElement ParamElement::pow(unsigned e) const {
  ParamElement result(Rational(1));
  ParamElement base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::optional<ParamElement> ParamElement::try_inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [m, c] = *terms_.begin();
  auto inv = m.inverse();
  if (!inv) return std::nullopt;
  return ParamElement(*inv, c.inverse());
}

std::optional<ParamElement> ParamElement::sqrt_exact() const {
  if (terms_.empty()) return ParamElement();
  if (terms_.size() != 1) return std::nullopt;
  const auto& [m, c] = *terms_.begin();
  auto root = c.sqrt_exact();
  if (!root) return std::nullopt;
  Monomial half;
  for (const auto& [sym, e] : m.powers()) {
    if (e % 2 != 0) return std::nullopt;
    half = half * Monomial(sym, e / 2);
  }
  return ParamElement(half, *root);
}

Rational ParamElement::evaluate(const std::map<std::string, Rational>& values) const {
  Rational total;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [sym, e] : m.powers()) {
      auto it = values.find(sym.name);
      if (it == values.end()) throw InputError("no value for parameter '" + sym.name + "'");
      if (e < 0 && it->second.is_zero())
        throw InputError("parameter '" + sym.name + "' declared invertible but set to 0");
      t *= it->second.pow(e);
    }
    total += t;
  }
  return total;
}

Monomial ParamElement::denominator_monomial() const {
  std::map<Symbol, int> lowest;
  for (const auto& [m, c] : terms_)
    for (const auto& [sym, e] : m.powers())
      if (e < 0) lowest[sym] = std::min(lowest[sym], e);
  Monomial out;
  for (const auto& [sym, e] : lowest) out = out * Monomial(sym, -e);
  return out;
}

ParamElement ParamElement::normalized() const {
  if (terms_.empty()) return {};
  ParamElement cleared = *this * ParamElement(denominator_monomial(), Rational(1));
  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (const auto& [m, c] : cleared.terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  if (cleared.terms_.rbegin()->second.sign() < 0) scale = -scale;
  return cleared * scale;
}

std::string ParamElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (m.is_one()) {
      s += mag.to_string();
    } else if (mag.is_one()) {
      s += m.to_string();
    } else {
      s += mag.to_string() + "*" + m.to_string();
    }
  }
  return s;
}

}  // namespace liouville
