#include "liouville/parser.hpp"

#include <cctype>
#include <set>

#include "liouville/errors.hpp"

namespace liouville {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

constexpr long kMaxExponent = 100000;

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char ch = static_cast<unsigned char>(s[i]);
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(ch)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, start, std::string(s.substr(start, i - start))});
      continue;
    }
    if (std::isalpha(ch) || ch == '_') {
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
      out.push_back({Tok::Ident, start, std::string(s.substr(start, i - start))});
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '.':
        throw SyntaxError(start, {}, "decimal literals are not supported; use a/b");
      default:
        throw SyntaxError(start, {}, std::string("unexpected character '") + s[i] + "'");
    }
    out.push_back({kind, start, std::string(1, s[i])});
    ++i;
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<Symbol>& params)
      : text_(text), tokens_(lex(text)) {
    for (const auto& s : params) params_.emplace(s.name, s);
  }

  LaurentP run() {
    if (peek().kind == Tok::End) throw SyntaxError(peek().pos, {"expression"}, "empty input");
    LaurentP p = expr();
    if (peek().kind != Tok::End) {
      const bool juxtaposed = peek().kind == Tok::Ident || peek().kind == Tok::Number ||
                              peek().kind == Tok::LParen;
      throw SyntaxError(peek().pos, {"'+'", "'-'", "'*'", "'/'", "end of input"},
                        juxtaposed ? "implicit multiplication is not allowed"
                                   : "unexpected '" + peek().text + "'");
    }
    return p;
  }

 private:
  const Token& peek() const { return tokens_[idx_]; }
  const Token& next() { return tokens_[idx_++]; }

  LaurentP expr() {
    LaurentP sum = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = next().kind == Tok::Minus;
      LaurentP t = term();
      if (minus)
        sum -= t;
      else
        sum += t;
    }
    return sum;
  }

  LaurentP term() {
    LaurentP prod = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const bool divide = next().kind == Tok::Slash;
      const std::size_t at = peek().pos;
      LaurentP rhs = unary();
      prod = divide ? prod * invert(rhs, at) : prod * rhs;
    }
    return prod;
  }

  LaurentP unary() {
    if (peek().kind == Tok::Minus) {
      next();
      return -unary();
    }
    if (peek().kind == Tok::Plus) {
      next();
      return unary();
    }
    return power();
  }

  LaurentP power() {
    const std::size_t at = peek().pos;
    LaurentP base = primary();
    if (peek().kind != Tok::Caret) return base;
    next();
    const long e = exponent();
    if (e >= 0) return pow(base, static_cast<unsigned long>(e));
    return pow(invert(base, at), static_cast<unsigned long>(-e));
  }

  long exponent() {
    const std::size_t at = peek().pos;
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      next();
      negative = true;
    }
    if (peek().kind != Tok::Number) {
      if (peek().kind == Tok::End)
        throw SyntaxError(peek().pos, {"integer exponent"}, "missing exponent");
      throw NonIntegerExponent(at, "exponent must be an integer literal");
    }
    const Token& num = next();
    if (num.text.size() > 6) throw SyntaxError(num.pos, {}, "exponent too large");
    const long v = std::stol(num.text);
    if (v > kMaxExponent) throw SyntaxError(num.pos, {}, "exponent too large");
    return negative ? -v : v;
  }

  LaurentP primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        next();
        return LaurentP(ParamElement(Rational::parse(t.text)));
      }
      case Tok::Ident: {
        next();
        if (t.text == "x") return LaurentP::x();
        auto it = params_.find(t.text);
        if (it == params_.end()) throw UndeclaredSymbol(t.pos, t.text);
        return LaurentP(ParamElement::symbol(it->second));
      }
      case Tok::LParen: {
        next();
        LaurentP inner = expr();
        if (peek().kind != Tok::RParen)
          throw SyntaxError(peek().pos, {"')'"}, "unbalanced parenthesis");
        next();
        return inner;
      }
      case Tok::End:
        throw SyntaxError(t.pos, {"number", "symbol", "'('"}, "unexpected end of input");
      default:
        throw SyntaxError(t.pos, {"number", "symbol", "'('"}, "unexpected '" + t.text + "'");
    }
  }

  static LaurentP pow(const LaurentP& base, unsigned long e) {
    LaurentP result(ParamElement(1));
    LaurentP b = base;
    while (e) {
      if (e & 1u) result = result * b;
      e >>= 1u;
      if (e) b = b * b;
    }
    return result;
  }

  LaurentP invert(const LaurentP& d, std::size_t at) const {
    if (d.is_zero()) throw SyntaxError(at, {}, "division by zero");
    if (d.term_count() != 1)
      throw SyntaxError(at, {}, "divisor must be a single term (a constant, parameter or x-power)");
    const auto& [k, c] = *d.terms().begin();
    auto inv = c.try_inverse();
    if (!inv)
      throw SyntaxError(at, {}, "divisor '" + c.to_string() +
                                    "' involves a parameter not declared invertible");
    return LaurentP(*inv, -k);
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t idx_ = 0;
  std::map<std::string, Symbol> params_;
};

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char ch : s)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  return true;
}

void validate_params(const std::vector<Symbol>& params) {
  std::set<std::string> seen;
  for (const auto& s : params) {
    if (!is_identifier(s.name)) throw InputError("invalid parameter name '" + s.name + "'");
    if (s.name == "x") throw InputError("'x' is the variable and cannot be a parameter");
    if (!seen.insert(s.name).second) throw InputError("parameter '" + s.name + "' declared twice");
  }
}

std::string x_power(int k) {
  if (k == 0) return "";
  if (k == 1) return "x";
  return "x^" + std::to_string(k);
}

}  // namespace

LaurentP parse(const ExprSource& src) {
  validate_params(src.params);
  return Parser(src.text, src.params).run();
}

LaurentQ parse_concrete(std::string_view text) {
  LaurentP p = Parser(text, {}).run();
  auto q = to_concrete(p);
  if (!q) throw InputError("expression contains parameters");
  return *q;
}

std::vector<Symbol> parse_param_list(std::string_view text) {
  std::vector<Symbol> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string item(text.substr(start, end - start));
    const auto l = item.find_first_not_of(" \t");
    const auto r = item.find_last_not_of(" \t");
    item = l == std::string::npos ? "" : item.substr(l, r - l + 1);
    if (!item.empty()) {
      Symbol s;
      const auto colon = item.find(':');
      if (colon == std::string::npos) {
        s.name = item;
      } else {
        s.name = item.substr(0, colon);
        const std::string flag = item.substr(colon + 1);
        if (flag != "inv") throw InputError("unknown parameter flag '" + flag + "' (only ':inv')");
        s.invertible = true;
      }
      out.push_back(s);
    } else if (end != text.size() || start != 0) {
      throw InputError("empty entry in parameter list");
    }
    start = end + 1;
  }
  validate_params(out);
  return out;
}

std::string format(const Rational& c) { return c.to_string(); }

std::string format(const ParamElement& c) { return c.to_string(); }

std::string format(const LaurentP& p) {
  if (p.is_zero()) return "0";
  std::string s;
  const bool single = p.term_count() == 1;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const int k = it->first;
    const ParamElement& c = it->second;
    const std::string xs = x_power(k);
    bool negative = false;
    std::string body;
    if (c.term_count() == 1) {
      const auto& [mono, r] = *c.terms().begin();
      negative = r.sign() < 0;
      const Rational mag = r.abs();
      std::vector<std::string> parts;
      if (!mag.is_one() || (mono.is_one() && k == 0)) parts.push_back(mag.to_string());
      if (!mono.is_one()) parts.push_back(mono.to_string());
      if (!xs.empty()) parts.push_back(xs);
      for (std::size_t i = 0; i < parts.size(); ++i) body += (i ? "*" : "") + parts[i];
    } else if (single && k == 0) {
      body = c.to_string();
    } else {
      body = "(" + c.to_string() + ")" + (xs.empty() ? "" : "*" + xs);
    }
    if (s.empty())
      s = (negative ? "-" : "") + body;
    else
      s += (negative ? " - " : " + ") + body;
  }
  return s;
}

std::string format(const LaurentQ& p) { return format(to_symbolic(p)); }

}  // namespace liouville
