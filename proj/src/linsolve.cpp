#include "liouville/linsolve.hpp"

#include <gmpxx.h>

#include <string>
#include <utility>

#include "liouville/errors.hpp"

namespace liouville {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> init)
    : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_)
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " for " +
                            std::to_string(cols_) + " columns");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

// Integer echelon form. Each row is scaled by the lcm of its denominators,
// then Bareiss elimination keeps every intermediate entry integral.
struct Echelon {
  IntRows rows;
  std::vector<std::size_t> pivot_cols;
};

Echelon bareiss(const Matrix& m, const std::vector<Rational>* rhs) {
  const std::size_t n_rows = m.rows();
  const std::size_t n_cols = m.cols() + (rhs ? 1 : 0);
  IntRows a(n_rows, std::vector<mpz_class>(n_cols));
  for (std::size_t i = 0; i < n_rows; ++i) {
    mpz_class l = 1;
    auto entry = [&](std::size_t j) -> const Rational& {
      return j < m.cols() ? m(i, j) : (*rhs)[i];
    };
    for (std::size_t j = 0; j < n_cols; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), entry(j).denominator().get_mpz_t());
    for (std::size_t j = 0; j < n_cols; ++j) {
      const Rational& e = entry(j);
      a[i][j] = e.numerator() * (l / e.denominator());
    }
  }

  Echelon out;
  mpz_class prev = 1;
  std::size_t r = 0;
  // The augmented column never serves as a pivot.
  for (std::size_t col = 0; col < m.cols() && r < n_rows; ++col) {
    std::size_t piv = r;
    while (piv < n_rows && a[piv][col] == 0) ++piv;
    if (piv == n_rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < n_rows; ++i) {
      for (std::size_t j = col + 1; j < n_cols; ++j) {
        mpz_class t = a[r][col] * a[i][j] - a[i][col] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    out.pivot_cols.push_back(col);
    ++r;
  }
  out.rows = std::move(a);
  return out;
}

// Back substitution over Q on the echelon rows for a chosen assignment of
// free variables.
std::vector<Rational> back_substitute(const Echelon& e, std::size_t n_vars,
                                      std::vector<Rational> x, bool augmented) {
  for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
    const auto& row = e.rows[k];
    const std::size_t pc = e.pivot_cols[k];
    Rational acc = augmented ? Rational(row[n_vars]) : Rational(0);
    for (std::size_t j = pc + 1; j < n_vars; ++j)
      if (row[j] != 0 && !x[j].is_zero()) acc -= Rational(row[j]) * x[j];
    x[pc] = acc / Rational(row[pc]);
  }
  return x;
}

std::vector<std::vector<Rational>> kernel_from(const Echelon& e, std::size_t n_vars) {
  std::vector<bool> is_pivot(n_vars, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < n_vars; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(n_vars);
    x[free] = 1;
    x = back_substitute(e, n_vars, std::move(x), false);
    for (const auto& v : x) {
      if (v.is_zero()) continue;
      const Rational s = v.inverse();
      for (auto& w : x) w *= s;
      break;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace

LinearSystemResult solve_linear(const Matrix& m, const std::vector<Rational>& rhs) {
  if (rhs.size() != m.rows())
    throw DimensionMismatch("right-hand side has " + std::to_string(rhs.size()) +
                            " entries for " + std::to_string(m.rows()) + " rows");
  const Echelon e = bareiss(m, &rhs);
  LinearSystemResult res;
  for (std::size_t i = e.pivot_cols.size(); i < m.rows(); ++i) {
    if (e.rows[i][m.cols()] != 0) return res;
  }
  res.consistent = true;
  res.particular = back_substitute(e, m.cols(), std::vector<Rational>(m.cols()), true);
  res.kernel = kernel_from(e, m.cols());
  return res;
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
  return kernel_from(bareiss(m, nullptr), m.cols());
}

std::size_t rank(const Matrix& m) { return bareiss(m, nullptr).pivot_cols.size(); }

}  // namespace liouville
