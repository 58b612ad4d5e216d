#include "liouville/batch.hpp"

#include <exception>

#include "liouville/aim.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liouville {

namespace {

SolveOutcome solve_one(const LaurentQ& L, int d_max) {
  SolveOutcome out;
  try {
    out.verdict = solve(DirectInput<Rational>{L}, d_max);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

// Exceptions must not cross the parallel region; the first one is kept and
// rethrown after the loop.
template <class Fn>
void parallel_for(std::size_t n, Fn fn) {
  std::exception_ptr first;
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(liouville_batch_error)
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
}

}  // namespace

std::vector<LaurentQ> delta_batch(const std::vector<CoefficientPair>& fg, int n) {
  std::vector<LaurentQ> out(fg.size());
  parallel_for(fg.size(), [&](std::size_t i) { out[i] = delta(fg[i].first, fg[i].second, n); });
  return out;
}

std::vector<LaurentQ> delta_batch_serial(const std::vector<CoefficientPair>& fg, int n) {
  std::vector<LaurentQ> out;
  out.reserve(fg.size());
  for (const auto& [f, g] : fg) out.push_back(delta(f, g, n));
  return out;
}

std::vector<char> has_poly_solution_batch(const std::vector<CoefficientPair>& fg, int n) {
  std::vector<char> out(fg.size());
  parallel_for(fg.size(), [&](std::size_t i) {
    out[i] = has_poly_solution_leq(fg[i].first, fg[i].second, n) ? 1 : 0;
  });
  return out;
}

std::vector<char> has_poly_solution_batch_serial(const std::vector<CoefficientPair>& fg, int n) {
  std::vector<char> out;
  out.reserve(fg.size());
  for (const auto& [f, g] : fg) out.push_back(has_poly_solution_leq(f, g, n) ? 1 : 0);
  return out;
}

std::vector<SolveOutcome> solve_batch(const std::vector<LaurentQ>& potentials, int d_max) {
  std::vector<SolveOutcome> out(potentials.size());
  parallel_for(potentials.size(),
               [&](std::size_t i) { out[i] = solve_one(potentials[i], d_max); });
  return out;
}

std::vector<SolveOutcome> solve_batch_serial(const std::vector<LaurentQ>& potentials, int d_max) {
  std::vector<SolveOutcome> out;
  out.reserve(potentials.size());
  for (const auto& L : potentials) out.push_back(solve_one(L, d_max));
  return out;
}

int batch_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace liouville
