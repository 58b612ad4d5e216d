#ifndef LIOUVILLE_TEST_SUPPORT_HPP
#define LIOUVILLE_TEST_SUPPORT_HPP

#include <random>

#include "liouville/diffpoly.hpp"
#include "liouville/laurent.hpp"
#include "liouville/param.hpp"

namespace liouville::testing {

inline Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den = 1) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

/// Laurent polynomial with exponents in [lo, hi], each present with
/// probability 1/2, coefficients in {-3..3} with denominators up to max_den.
inline LaurentQ random_laurent(std::mt19937_64& rng, int lo, int hi, int max_den = 1) {
  std::bernoulli_distribution keep(0.5);
  LaurentQ p;
  for (int k = lo; k <= hi; ++k)
    if (keep(rng)) p.add(k, random_rational(rng, -3, 3, max_den));
  return p;
}

inline ParamElement random_param(std::mt19937_64& rng, const std::vector<Symbol>& syms) {
  std::uniform_int_distribution<int> terms(0, 3);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(syms.size()) - 1);
  std::uniform_int_distribution<int> exps(-1, 2);
  ParamElement out;
  const int n = terms(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m;
    for (int j = 0; j < 2; ++j) {
      const Symbol& s = syms[static_cast<std::size_t>(pick(rng))];
      int e = exps(rng);
      if (e < 0 && !s.invertible) e = 1;
      m = m * Monomial(s, e);
    }
    out += ParamElement(m, random_rational(rng, -3, 3, 4));
  }
  return out;
}

inline LaurentP random_laurent_param(std::mt19937_64& rng, const std::vector<Symbol>& syms,
                                     int lo, int hi) {
  std::bernoulli_distribution keep(0.5);
  LaurentP p;
  for (int k = lo; k <= hi; ++k)
    if (keep(rng)) p.add(k, random_param(rng, syms));
  return p;
}

inline DifferentialPolynomial random_diffpoly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, 4);
  std::uniform_int_distribution<int> factors(0, 3);
  std::uniform_int_distribution<int> var(0, 1);
  std::uniform_int_distribution<int> order(0, 2);
  DifferentialPolynomial out;
  const int n = terms(rng);
  for (int i = 0; i < n; ++i) {
    DifferentialPolynomial t(random_rational(rng, -3, 3));
    const int k = factors(rng);
    for (int j = 0; j < k; ++j) {
      const int o = order(rng);
      t = t * (var(rng) ? DifferentialPolynomial::beta(o) : DifferentialPolynomial::alpha(o));
    }
    out += t;
  }
  return out;
}

}  // namespace liouville::testing

#endif  // LIOUVILLE_TEST_SUPPORT_HPP
