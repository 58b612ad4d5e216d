#ifndef LIOUVILLE_RATIONAL_HPP
#define LIOUVILLE_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace liouville {

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpz_class& n) : value_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class v);

  /// Accepts "a" or "a/b" with an optional leading sign.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  std::optional<long> to_long() const;

  /// Nonnegative rational square root if one exists.
  std::optional<Rational> sqrt_exact() const;
  Rational inverse() const;
  Rational abs() const;
  Rational pow(int e) const;

  std::string to_string() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

}  // namespace liouville

#endif  // LIOUVILLE_RATIONAL_HPP
