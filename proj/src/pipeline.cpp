#include "liouville/pipeline.hpp"

#include <stdexcept>

#include "liouville/aim.hpp"
#include "liouville/errors.hpp"

namespace liouville {

std::string to_string(Route r) { return r == Route::Direct ? "direct" : "dalembert"; }

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Integrable: return "Integrable";
    case VerdictStatus::NotIntegrableUpTo: return "NotIntegrableUpTo";
    case VerdictStatus::EmptyClass: return "EmptyClass";
    case VerdictStatus::NeedsExtension: return "NeedsExtension";
  }
  return "?";
}

std::string LiouvillianSolution::pullback_note() const {
  if (route == Route::Direct) return "";
  return "y(x) = x^(1/4) * y~(sqrt(x)) with y~(w) = w^lambda * P(w) * exp(int omega dw)";
}

LaurentQ solution_residual(const LaurentQ& L, const Rational& lambda, const LaurentQ& P,
                           const LaurentQ& omega) {
  const LaurentQ phi = omega + LaurentQ(lambda, -1);
  const LaurentQ dP = P.derive();
  return dP.derive() + phi * dP * Rational(2) + (phi.derive() + phi * phi - L) * P;
}

LaurentQ pullback_residual(const LaurentQ& L, const LiouvillianSolution& sol) {
  const LaurentQ& P = sol.P;
  const LaurentQ w = LaurentQ::x();
  const LaurentQ N = P * (Rational(1) + Rational(2) * sol.lambda) +
                     w * sol.omega * P * Rational(2) + w * P.derive() * Rational(2);
  const LaurentQ lhs = (N.derive() * w * P - N * P * Rational(2) - N * w * P.derive()) *
                       Rational(2);
  return lhs + N * N - P * P * L.stretched(2).shifted(4) * Rational(16);
}

bool verify_solution(const LaurentQ& L, const LiouvillianSolution& sol) {
  if (sol.route == Route::Direct) return solution_residual(L, sol.lambda, sol.P, sol.omega).is_zero();
  return solution_residual(dalembert(L), sol.lambda, sol.P, sol.omega).is_zero() &&
         pullback_residual(L, sol).is_zero();
}

namespace {

void run_route(const Decomposition<Rational>& dec, const LaurentQ& original, Route route,
               int d_max, Verdict& v) {
  for (const CandidateReport& rep : candidates(dec, d_max)) {
    CandidateOutcome out;
    out.route = route;
    out.report = rep;
    if (!rep.admissible()) {
      out.outcome = "inadmissible: " + rep.reason;
      v.candidates.push_back(std::move(out));
      continue;
    }
    const Candidate<Rational>& cand = *rep.candidate;
    const auto aux = aux_equation(dec, cand);
    auto P = poly_solution_monic(aux.f, aux.g, cand.d);
    if (!P) {
      out.outcome = "no polynomial solution of degree " + std::to_string(cand.d);
      v.candidates.push_back(std::move(out));
      continue;
    }
    out.outcome = "solution";
    out.P = P;
    LiouvillianSolution sol;
    sol.route = route;
    sol.s0 = cand.s0;
    sol.s_inf = cand.s_inf;
    sol.d = cand.d;
    sol.lambda = cand.lambda;
    sol.P = *P;
    sol.omega = cand.omega;
    sol.antiderivative = cand.omega.antiderivative();
    if (!verify_solution(original, sol))
      throw std::logic_error("assembled solution failed the residual check");
    v.solutions.push_back(std::move(sol));
    v.candidates.push_back(std::move(out));
  }
}

PoleType checked_type(const LaurentQ& L) {
  const PoleType t = pole_type(L);
  if (t.r < 1) throw InputError("the potential must have a pole at x = 0 (r >= 1)");
  return t;
}

}  // namespace

std::vector<RouteDecomposition> route_decompositions(const EquationInput<Rational>& eq,
                                                     std::optional<LaurentQ>* transformed) {
  const PoleType t = checked_type(potential(eq));
  const EquationClass cls = classify(t.r, t.m);
  std::vector<RouteDecomposition> out;
  if (cls == EquationClass::C4) return out;
  if (const auto* cov = std::get_if<CoverInput<Rational>>(&eq)) {
    out.push_back({Route::Direct, decompose_cover(*cov)});
    return out;
  }
  const LaurentQ& L = std::get<DirectInput<Rational>>(eq).L;
  if (t.r == 2) {
    if (cls == EquationClass::C3)
      out.push_back({Route::Direct, decompose_at_infinity(L, DecompKind::Case2)});
    const LaurentQ Lw = dalembert(L);
    if (transformed) *transformed = Lw;
    out.push_back({Route::DAlembert, decompose_at_infinity(Lw, DecompKind::Case2)});
    return out;
  }
  out.push_back({Route::Direct, decompose(eq)});
  return out;
}

Verdict solve(const EquationInput<Rational>& eq, int d_max) {
  if (d_max < 0) throw InputError("d_max must be nonnegative");
  Verdict v;
  v.d_max = d_max;
  const LaurentQ L = potential(eq);
  v.type = checked_type(L);
  v.cls = classify(v.type.r, v.type.m);
  if (v.cls == EquationClass::C4) {
    v.status = VerdictStatus::EmptyClass;
    v.reason = "type (" + std::to_string(v.type.r) + ", " + std::to_string(v.type.m) +
               ") lies in class C4";
    return v;
  }
  try {
    for (const auto& rd : route_decompositions(eq, &v.transformed))
      run_route(rd.dec, L, rd.route, d_max, v);
  } catch (const NeedsExtension& e) {
    if (v.solutions.empty()) {
      v.status = VerdictStatus::NeedsExtension;
      v.reason = e.what();
      return v;
    }
  }
  v.status = v.solutions.empty() ? VerdictStatus::NotIntegrableUpTo : VerdictStatus::Integrable;
  if (v.status == VerdictStatus::NotIntegrableUpTo)
    v.reason = "no Liouvillian solution with d <= " + std::to_string(d_max);
  return v;
}

std::vector<StratumEntry> stratum_membership(const EquationInput<Rational>& eq, int d) {
  if (d < 0) throw InputError("d must be nonnegative");
  std::vector<StratumEntry> out;
  for (const auto& rd : route_decompositions(eq)) {
    for (const CandidateReport& rep : candidates(rd.dec, d)) {
      StratumEntry e;
      e.route = rd.route;
      e.s0 = rep.s0;
      e.s_inf = rep.s_inf;
      e.condition_a = rep.d_value && *rep.d_value == Rational(d);
      if (e.condition_a) {
        const auto aux = aux_equation(rd.dec, *rep.candidate);
        e.member = poly_solution_monic(aux.f, aux.g, d).has_value();
      }
      out.push_back(e);
    }
  }
  return out;
}

bool SpectralSystem::satisfied_at(const Assignment& point) const {
  for (const auto& e : condition_a)
    if (!e.evaluate(point).is_zero()) return false;
  for (const auto& e : delta_coeffs)
    if (!e.evaluate(point).is_zero()) return false;
  return true;
}

namespace {

void push_normalized(std::vector<ParamElement>& out, const ParamElement& e) {
  if (e.is_zero()) return;
  ParamElement n = e.normalized();
  for (const auto& [m, c] : n.terms())
    for (const auto& [sym, k] : m.powers())
      if (k < 0) throw NonPolynomialObstruction("could not clear denominators in " + e.to_string());
  for (const auto& existing : out)
    if (existing == n) return;
  out.push_back(std::move(n));
}

}  // namespace

SpectralSystem variety_equations(const EquationInput<ParamElement>& family, int d,
                                 std::optional<int> s0, int s_inf) {
  using P = ParamElement;
  if (d < 0) throw InputError("d must be nonnegative");
  if (s_inf != 1 && s_inf != -1) throw InputError("s_inf must be +1 or -1");
  if (s0 && *s0 != 1 && *s0 != -1) throw InputError("s0 must be +1 or -1");
  const Decomposition<P> dec = decompose(family);
  SpectralSystem sys;
  sys.kind = dec.kind;
  sys.s_inf = s_inf;
  sys.d = d;
  const P si(static_cast<long>(s_inf));
  const P p(static_cast<long>(dec.p));
  const P inv_c = require_inverse(dec.c, "the leading coefficient of A");
  LaurentP omega = dec.A * si;
  switch (dec.kind) {
    case DecompKind::Case1: {
      sys.lambda = P(1);
      push_normalized(sys.condition_a, si * dec.b_top - P(static_cast<long>(2 * d + 2)) * dec.c -
                                           p * dec.c);
      break;
    }
    case DecompKind::Case2: {
      sys.s0 = s0.value_or(1);
      sys.lambda = (si * dec.b_top * inv_c - p - P(static_cast<long>(2 * d))) * Rational(1, 2);
      const P t = sys.lambda * Rational(2) - P(1);
      push_normalized(sys.condition_a, t * t - P(1) - dec.b * Rational(4));
      break;
    }
    case DecompKind::Case3: {
      sys.s0 = s0.value_or(1);
      const P s(static_cast<long>(*sys.s0));
      const P rq = dec.R.coeff(-dec.q);
      const P q(static_cast<long>(dec.q));
      sys.lambda = (si * dec.b_top * inv_c - p) * Rational(1, 2) - P(static_cast<long>(d));
      push_normalized(sys.condition_a, sys.lambda * rq * Rational(2) - s * dec.b_low - q * rq);
      omega += dec.R * s;
      break;
    }
  }
  const auto aux = aux_generic(dec.L, sys.lambda, omega);
  const LaurentP obstruction = delta(aux.f, aux.g, d);
  for (const auto& [k, c] : obstruction.terms()) push_normalized(sys.delta_coeffs, c);
  return sys;
}

EquationInput<Rational> specialize(const EquationInput<ParamElement>& family,
                                   const Assignment& point) {
  if (const auto* d = std::get_if<DirectInput<ParamElement>>(&family))
    return DirectInput<Rational>{specialize(d->L, point)};
  const auto& c = std::get<CoverInput<ParamElement>>(family);
  return CoverInput<Rational>{specialize(c.R, point), specialize(c.B, point),
                              specialize(c.A, point)};
}

bool oracle_member(const EquationInput<ParamElement>& family, const SpectralSystem& sys,
                   const Assignment& point) {
  for (const StratumEntry& e : stratum_membership(specialize(family, point), sys.d)) {
    if (e.route != Route::Direct || e.s_inf != sys.s_inf) continue;
    if (sys.kind != DecompKind::Case2 && e.s0 && sys.s0 && *e.s0 != *sys.s0) continue;
    if (e.member) return true;
  }
  return false;
}

}  // namespace liouville
