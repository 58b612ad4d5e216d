#ifndef LIOUVILLE_LINSOLVE_HPP
#define LIOUVILLE_LINSOLVE_HPP

#include <cstddef>
#include <vector>

#include "liouville/rational.hpp"

namespace liouville {

/// Dense rectangular matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> init);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct LinearSystemResult {
  bool consistent = false;
  /// One solution (free variables set to zero); empty when inconsistent.
  std::vector<Rational> particular;
  /// Basis of the null space of M; each vector's first nonzero entry is 1.
  std::vector<std::vector<Rational>> kernel;
};

/// Solves M c = rhs exactly via fraction-free (Bareiss) elimination.
/// Throws DimensionMismatch when rhs.size() != M.rows().
LinearSystemResult solve_linear(const Matrix& m, const std::vector<Rational>& rhs);

/// Null space basis of M (the homogeneous case of solve_linear).
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m);

/// Rank of M.
std::size_t rank(const Matrix& m);

}  // namespace liouville

#endif  // LIOUVILLE_LINSOLVE_HPP
