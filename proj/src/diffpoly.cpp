#include "liouville/diffpoly.hpp"

#include <algorithm>
#include <cctype>

#include "liouville/errors.hpp"

namespace liouville {

DiffMonomial::DiffMonomial(Indeterminate v, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent in differential monomial");
  if (exponent > 0) factors_.emplace_back(v, exponent);
}

int DiffMonomial::degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

int DiffMonomial::weight() const {
  int w = 0;
  for (const auto& [v, e] : factors_) w += e * ((v.var == Var::Alpha ? 1 : 2) + v.order);
  return w;
}

DiffMonomial DiffMonomial::operator*(const DiffMonomial& o) const {
  DiffMonomial out;
  auto a = factors_.begin();
  auto b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

std::strong_ordering operator<=>(const DiffMonomial& a, const DiffMonomial& b) {
  // Walk both expanded sequences in step without materializing them.
  std::size_t ia = 0, ib = 0;
  int ra = a.factors_.empty() ? 0 : a.factors_[0].second;
  int rb = b.factors_.empty() ? 0 : b.factors_[0].second;
  while (ia < a.factors_.size() && ib < b.factors_.size()) {
    if (auto c = a.factors_[ia].first <=> b.factors_[ib].first; c != 0) return c;
    const int step = std::min(ra, rb);
    ra -= step;
    rb -= step;
    if (ra == 0 && ++ia < a.factors_.size()) ra = a.factors_[ia].second;
    if (rb == 0 && ++ib < b.factors_.size()) rb = b.factors_[ib].second;
  }
  const bool a_done = ia >= a.factors_.size();
  const bool b_done = ib >= b.factors_.size();
  if (a_done && b_done) return std::strong_ordering::equal;
  return a_done ? std::strong_ordering::less : std::strong_ordering::greater;
}

namespace {

std::string indeterminate_name(const Indeterminate& v) {
  std::string s = v.var == Var::Alpha ? "alpha" : "beta";
  s.append(static_cast<std::size_t>(v.order), '\'');
  return s;
}

}  // namespace

std::string DiffMonomial::to_string() const {
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += "*";
    const std::string name = indeterminate_name(v);
    if (e == 1)
      s += name;
    else if (v.order == 0)
      s += name + "^" + std::to_string(e);
    else
      s += "(" + name + ")^" + std::to_string(e);
  }
  return s;
}

DifferentialPolynomial::DifferentialPolynomial(Rational c) {
  if (!c.is_zero()) terms_.emplace(DiffMonomial{}, std::move(c));
}

DifferentialPolynomial::DifferentialPolynomial(const DiffMonomial& m, Rational c) {
  if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

DifferentialPolynomial DifferentialPolynomial::alpha(int order) {
  return {DiffMonomial({Var::Alpha, order}), Rational(1)};
}

DifferentialPolynomial DifferentialPolynomial::beta(int order) {
  return {DiffMonomial({Var::Beta, order}), Rational(1)};
}

void DifferentialPolynomial::add_term(const DiffMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DifferentialPolynomial& DifferentialPolynomial::operator+=(const DifferentialPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

DifferentialPolynomial& DifferentialPolynomial::operator-=(const DifferentialPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

DifferentialPolynomial operator-(DifferentialPolynomial a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

DifferentialPolynomial operator*(const DifferentialPolynomial& a,
                                 const DifferentialPolynomial& b) {
  DifferentialPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

DifferentialPolynomial DifferentialPolynomial::derive() const {
  DifferentialPolynomial out;
  for (const auto& [m, c] : terms_) {
    const auto& fs = m.factors();
    for (std::size_t i = 0; i < fs.size(); ++i) {
      // d(v^e) = e * v^(e-1) * v'
      DiffMonomial rest;
      for (std::size_t j = 0; j < fs.size(); ++j)
        rest = rest * DiffMonomial(fs[j].first, j == i ? fs[j].second - 1 : fs[j].second);
      Indeterminate next = fs[i].first;
      ++next.order;
      out.add_term(rest * DiffMonomial(next), c * Rational(fs[i].second));
    }
  }
  return out;
}

std::string DifferentialPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (m.is_one())
      s += mag.to_string();
    else if (mag.is_one())
      s += m.to_string();
    else
      s += mag.to_string() + "*" + m.to_string();
  }
  return s;
}

namespace {

class DiffParser {
 public:
  explicit DiffParser(std::string_view text) : text_(text) {}

  DifferentialPolynomial parse_all() {
    DifferentialPolynomial p = expr();
    skip();
    if (pos_ < text_.size()) fail("unexpected character");
    return p;
  }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == '&') {
        ++pos_;
      } else if (ch == '\\' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '\\') {
        pos_ += 2;  // TeX line break
      } else {
        break;
      }
    }
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw SyntaxError(pos_, {}, what);
  }

  DifferentialPolynomial expr() {
    DifferentialPolynomial sum;
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = text_[pos_++] == '-';
    for (;;) {
      DifferentialPolynomial t = term();
      sum += negative ? -t : t;
      const char ch = peek();
      if (ch != '+' && ch != '-') break;
      negative = ch == '-';
      ++pos_;
    }
    return sum;
  }

  bool starts_factor(char ch) const {
    return std::isdigit(static_cast<unsigned char>(ch)) || std::isalpha(static_cast<unsigned char>(ch)) ||
           ch == '\\' || ch == '(';
  }

  DifferentialPolynomial term() {
    DifferentialPolynomial prod = factor();
    for (;;) {
      char ch = peek();
      if (ch == '*') {
        ++pos_;
        ch = peek();
      } else if (!starts_factor(ch)) {
        break;
      }
      prod = prod * factor();
    }
    return prod;
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  DifferentialPolynomial factor() {
    DifferentialPolynomial base;
    const char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Rational v(integer());
      if (peek() == '/') {
        ++pos_;
        v /= Rational(integer());
      }
      base = DifferentialPolynomial(v);
    } else if (ch == '(') {
      ++pos_;
      base = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else if (ch == '\\' || std::isalpha(static_cast<unsigned char>(ch))) {
      if (ch == '\\') ++pos_;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      Var var;
      if (name == "alpha" || name == "a")
        var = Var::Alpha;
      else if (name == "beta" || name == "b")
        var = Var::Beta;
      else
        fail("unknown indeterminate '" + std::string(name) + "'");
      int order = 0;
      while (peek() == '\'') {
        ++pos_;
        ++order;
      }
      base = var == Var::Alpha ? DifferentialPolynomial::alpha(order)
                               : DifferentialPolynomial::beta(order);
    } else {
      fail("expected factor");
    }
    if (peek() == '^') {
      ++pos_;
      const long e = integer();
      DifferentialPolynomial p(Rational(1));
      for (long i = 0; i < e; ++i) p = p * base;
      base = p;
    }
    return base;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

DifferentialPolynomial DifferentialPolynomial::parse(std::string_view text) {
  return DiffParser(text).parse_all();
}

}  // namespace liouville
