#include "liouville/aim.hpp"

#include <map>
#include <set>

#include "liouville/linsolve.hpp"

namespace liouville {

DifferentialPolynomial delta_universal(int n, int cap) {
  if (n < 0) throw InputError("obstruction index must be nonnegative");
  if (n > cap)
    throw CapExceeded("universal obstruction " + std::to_string(n) + " exceeds the cap " +
                      std::to_string(cap) + "; raise it with --cap");
  const auto seq =
      aim_sequences(DifferentialPolynomial::alpha(), DifferentialPolynomial::beta(), n);
  return delta_from(seq, n);
}

namespace {

// Images E(x^i) = (x^i)'' - f (x^i)' - g x^i for i = 0..n, and the sorted set
// of exponents they touch.
struct Expansion {
  std::vector<LaurentQ> images;
  std::vector<int> exponents;
};

Expansion expand_basis(const LaurentQ& f, const LaurentQ& g, int n) {
  Expansion e;
  std::set<int> exps;
  for (int i = 0; i <= n; ++i) {
    e.images.push_back(aux_residual(f, g, LaurentQ::x(i)));
    for (const auto& [k, c] : e.images.back().terms()) exps.insert(k);
  }
  e.exponents.assign(exps.begin(), exps.end());
  return e;
}

}  // namespace

std::optional<LaurentQ> poly_solution_monic(const LaurentQ& f, const LaurentQ& g, int d) {
  if (d < 0) return std::nullopt;
  const Expansion e = expand_basis(f, g, d);
  const auto rows = e.exponents.size();
  const auto cols = static_cast<std::size_t>(d);
  Matrix m(rows, cols);
  std::vector<Rational> rhs(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const int k = e.exponents[r];
    for (std::size_t j = 0; j < cols; ++j) m(r, j) = e.images[j].coeff(k);
    rhs[r] = -e.images[cols].coeff(k);
  }
  const LinearSystemResult res = solve_linear(m, rhs);
  if (!res.consistent) return std::nullopt;
  LaurentQ P = LaurentQ::x(d);
  for (std::size_t j = 0; j < cols; ++j) P.add(static_cast<int>(j), res.particular[j]);
  return P;
}

bool has_poly_solution_leq(const LaurentQ& f, const LaurentQ& g, int n) {
  if (n < 0) return false;
  const Expansion e = expand_basis(f, g, n);
  const auto cols = static_cast<std::size_t>(n) + 1;
  Matrix m(e.exponents.size(), cols);
  for (std::size_t r = 0; r < e.exponents.size(); ++r)
    for (std::size_t j = 0; j < cols; ++j) m(r, j) = e.images[j].coeff(e.exponents[r]);
  return rank(m) < cols;
}

}  // namespace liouville
