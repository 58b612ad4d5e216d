#ifndef LIOUVILLE_AIM_HPP
#define LIOUVILLE_AIM_HPP

#include <array>
#include <optional>
#include <vector>

#include "liouville/diffpoly.hpp"
#include "liouville/errors.hpp"
#include "liouville/laurent.hpp"

namespace liouville {

/// lambda_0 = f, s_0 = g, lambda_{j+1} = lambda_j' + s_j + f lambda_j,
/// s_{j+1} = s_j' + g lambda_j. Works in any differential ring T with a
/// derive() member.
template <class T>
struct AimSequences {
  std::vector<T> lambdas;
  std::vector<T> esses;
};

template <class T>
AimSequences<T> aim_sequences(const T& f, const T& g, int n) {
  if (n < 0) throw InputError("sequence length must be nonnegative");
  AimSequences<T> seq;
  seq.lambdas.reserve(static_cast<std::size_t>(n) + 1);
  seq.esses.reserve(static_cast<std::size_t>(n) + 1);
  seq.lambdas.push_back(f);
  seq.esses.push_back(g);
  for (int j = 0; j < n; ++j) {
    const T& l = seq.lambdas.back();
    const T& s = seq.esses.back();
    T next_l = l.derive() + s + f * l;
    T next_s = s.derive() + g * l;
    seq.lambdas.push_back(std::move(next_l));
    seq.esses.push_back(std::move(next_s));
  }
  return seq;
}

/// Delta_n = s_n lambda_{n-1} - lambda_n s_{n-1}; Delta_0 = -g.
template <class T>
T delta_from(const AimSequences<T>& seq, int n) {
  if (n == 0) return -seq.esses[0];
  const auto k = static_cast<std::size_t>(n);
  return seq.esses[k] * seq.lambdas[k - 1] - seq.lambdas[k] * seq.esses[k - 1];
}

template <class C>
Laurent<C> delta(const Laurent<C>& f, const Laurent<C>& g, int n) {
  return delta_from(aim_sequences(f, g, n), n);
}

constexpr int kDefaultUniversalCap = 6;

/// The universal obstruction in Q{alpha, beta}. Throws CapExceeded above cap.
DifferentialPolynomial delta_universal(int n, int cap = kDefaultUniversalCap);

/// det((d/dx + M)^n M) for the companion matrix M = [[0, 1], [g, f]], where
/// (d/dx + M) acts by N -> N' + N M. Equals -Delta_n for n >= 1 and Delta_0
/// for n = 0.
template <class C>
Laurent<C> delta_determinant(const Laurent<C>& f, const Laurent<C>& g, int n) {
  using Mat = std::array<Laurent<C>, 4>;
  Mat m{Laurent<C>(), Laurent<C>(C(1)), g, f};
  Mat cur = m;
  for (int i = 0; i < n; ++i) {
    Mat nxt;
    nxt[0] = cur[0].derive() + cur[0] * m[0] + cur[1] * m[2];
    nxt[1] = cur[1].derive() + cur[0] * m[1] + cur[1] * m[3];
    nxt[2] = cur[2].derive() + cur[2] * m[0] + cur[3] * m[2];
    nxt[3] = cur[3].derive() + cur[2] * m[1] + cur[3] * m[3];
    cur = std::move(nxt);
  }
  return cur[0] * cur[3] - cur[1] * cur[2];
}

/// P'' - f P' - g P.
template <class C>
Laurent<C> aux_residual(const Laurent<C>& f, const Laurent<C>& g, const Laurent<C>& P) {
  const Laurent<C> dp = P.derive();
  return dp.derive() - f * dp - g * P;
}

/// Monic polynomial P of degree exactly d with P'' = f P' + g P, if any.
std::optional<LaurentQ> poly_solution_monic(const LaurentQ& f, const LaurentQ& g, int d);

/// Whether a nonzero polynomial solution of degree <= n exists.
bool has_poly_solution_leq(const LaurentQ& f, const LaurentQ& g, int n);

}  // namespace liouville

#endif  // LIOUVILLE_AIM_HPP
