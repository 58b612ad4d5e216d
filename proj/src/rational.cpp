#include "liouville/rational.hpp"

#include <stdexcept>

#include "liouville/errors.hpp"

namespace liouville {

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw InputError("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  return Rational(std::move(q));
}

std::optional<long> Rational::to_long() const {
  if (!is_integer() || !value_.get_num().fits_slong_p()) return std::nullopt;
  return value_.get_num().get_si();
}

std::optional<Rational> Rational::sqrt_exact() const {
  if (sign() < 0) return std::nullopt;
  const mpz_class& n = value_.get_num();
  const mpz_class& d = value_.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace liouville
