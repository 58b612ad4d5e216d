#ifndef LIOUVILLE_BATCH_HPP
#define LIOUVILLE_BATCH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liouville/laurent.hpp"
#include "liouville/pipeline.hpp"

namespace liouville {

// Independent instances fan out across OpenMP threads. Each kernel has a
// plain loop twin used as the reference in tests and benchmarks; both return
// results in input order.

using CoefficientPair = std::pair<LaurentQ, LaurentQ>;

std::vector<LaurentQ> delta_batch(const std::vector<CoefficientPair>& fg, int n);
std::vector<LaurentQ> delta_batch_serial(const std::vector<CoefficientPair>& fg, int n);

std::vector<char> has_poly_solution_batch(const std::vector<CoefficientPair>& fg, int n);
std::vector<char> has_poly_solution_batch_serial(const std::vector<CoefficientPair>& fg, int n);

struct SolveOutcome {
  std::optional<Verdict> verdict;
  std::string error;  // what() of the exception that stopped this instance
};

std::vector<SolveOutcome> solve_batch(const std::vector<LaurentQ>& potentials, int d_max);
std::vector<SolveOutcome> solve_batch_serial(const std::vector<LaurentQ>& potentials, int d_max);

/// Threads the parallel kernels will use (1 without OpenMP).
int batch_threads();

}  // namespace liouville

#endif  // LIOUVILLE_BATCH_HPP
