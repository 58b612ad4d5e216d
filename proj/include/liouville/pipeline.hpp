#ifndef LIOUVILLE_PIPELINE_HPP
#define LIOUVILLE_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "liouville/kovacic.hpp"
#include "liouville/laurent.hpp"

namespace liouville {

constexpr int kDefaultDMax = 25;

/// Direct: solve in x. DAlembert: solve the transformed equation in w = sqrt(x).
enum class Route { Direct, DAlembert };

std::string to_string(Route r);

/// y = v^lambda P(v) exp(int omega) in the route's variable v; on the w-route
/// the original solution is y(x) = x^(1/4) y~(sqrt x).
struct LiouvillianSolution {
  Route route = Route::Direct;
  std::optional<int> s0;
  int s_inf = 1;
  int d = 0;
  Rational lambda;
  LaurentQ P;
  LaurentQ omega;
  LaurentQ antiderivative;

  char variable() const { return route == Route::Direct ? 'x' : 'w'; }
  std::string pullback_note() const;
};

struct CandidateOutcome {
  Route route = Route::Direct;
  CandidateReport report;
  std::string outcome;
  std::optional<LaurentQ> P;
};

/// A decomposition together with the route it is examined on.
struct RouteDecomposition {
  Route route = Route::Direct;
  Decomposition<Rational> dec;
};

/// The decompositions a concrete equation is examined through: the cover's
/// case 3, both routes for a double pole (direct only in class C3), and the
/// direct decomposition otherwise. Empty for class C4. L~ is stored in
/// *transformed when the w-route is taken.
std::vector<RouteDecomposition> route_decompositions(const EquationInput<Rational>& eq,
                                                     std::optional<LaurentQ>* transformed = nullptr);

enum class VerdictStatus { Integrable, NotIntegrableUpTo, EmptyClass, NeedsExtension };

std::string to_string(VerdictStatus s);

struct Verdict {
  VerdictStatus status = VerdictStatus::NotIntegrableUpTo;
  EquationClass cls = EquationClass::C4;
  PoleType type;
  int d_max = kDefaultDMax;
  std::string reason;
  std::vector<LiouvillianSolution> solutions;
  std::vector<CandidateOutcome> candidates;
  std::optional<LaurentQ> transformed;  // the w-equation when the D'Alembert route ran
};

/// Decides integrability up to d_max and assembles verified solutions.
/// Class C3 runs both routes; class C2 only the D'Alembert route.
Verdict solve(const EquationInput<Rational>& eq, int d_max = kDefaultDMax);

/// P'' + 2 phi P' + (phi' + phi^2 - L) P with phi = omega + lambda/v.
LaurentQ solution_residual(const LaurentQ& L, const Rational& lambda, const LaurentQ& P,
                           const LaurentQ& omega);

/// For a w-route solution: numerator of u' + u^2 - L where u is the
/// log-derivative of x^(1/4) y~(sqrt x), written in w (zero iff the identity holds).
LaurentQ pullback_residual(const LaurentQ& L, const LiouvillianSolution& sol);

/// Exact residual check of sol against the original potential L.
bool verify_solution(const LaurentQ& L, const LiouvillianSolution& sol);

struct StratumEntry {
  Route route = Route::Direct;
  std::optional<int> s0;
  int s_inf = 1;
  bool condition_a = false;
  bool member = false;
};

/// For each route and sign choice: condition (a) holds with this d and the
/// auxiliary equation has a monic degree-d polynomial solution.
std::vector<StratumEntry> stratum_membership(const EquationInput<Rational>& eq, int d);

/// Polynomial equations in the family's parameters cutting out one stratum.
struct SpectralSystem {
  DecompKind kind = DecompKind::Case1;
  std::optional<int> s0;
  int s_inf = 1;
  int d = 0;
  ParamElement lambda;
  std::vector<ParamElement> condition_a;
  std::vector<ParamElement> delta_coeffs;

  bool satisfied_at(const Assignment& point) const;
};

/// In case 2 lambda is eliminated and (2 lambda - 1)^2 = 1 + 4b is appended,
/// so the system covers both s0 sheets at once.
SpectralSystem variety_equations(const EquationInput<ParamElement>& family, int d,
                                 std::optional<int> s0, int s_inf);

EquationInput<Rational> specialize(const EquationInput<ParamElement>& family,
                                   const Assignment& point);

/// The oracle's answer for the stratum a system describes (any s0 in case 2).
bool oracle_member(const EquationInput<ParamElement>& family, const SpectralSystem& sys,
                   const Assignment& point);

}  // namespace liouville

#endif  // LIOUVILLE_PIPELINE_HPP
