#ifndef LIOUVILLE_KOVACIC_HPP
#define LIOUVILLE_KOVACIC_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "liouville/errors.hpp"
#include "liouville/laurent.hpp"

namespace liouville {

enum class EquationClass { C1, C2, C3, C4 };

std::string to_string(EquationClass c);

/// C1: (r = 1 or r even >= 4) and m even; C2: r = 2, m odd; C3: r = 2, m even;
/// C4 otherwise. Throws InputError unless r >= 1 and m >= 0.
EquationClass classify(int r, int m);

// ---- coefficient helpers shared by both modes ----

inline std::optional<Rational> coeff_sqrt(const Rational& c) { return c.sqrt_exact(); }
inline std::optional<ParamElement> coeff_sqrt(const ParamElement& c) { return c.sqrt_exact(); }
inline std::optional<Rational> coeff_inverse(const Rational& c) {
  if (c.is_zero()) return std::nullopt;
  return c.inverse();
}
inline std::optional<ParamElement> coeff_inverse(const ParamElement& c) { return c.try_inverse(); }

template <class C>
C require_inverse(const C& c, const char* what) {
  auto inv = coeff_inverse(c);
  if (!inv) throw NeedsExtension(std::string(what) + " is not invertible over the declared parameters");
  return *inv;
}

// ---- equation input ----

template <class C>
struct DirectInput {
  Laurent<C> L;
};

/// A point (R, B, A) of the cover space; L = R^2 + B + A^2.
template <class C>
struct CoverInput {
  Laurent<C> R, B, A;
};

template <class C>
using EquationInput = std::variant<DirectInput<C>, CoverInput<C>>;

/// Pole order at zero and degree at infinity of a nonzero Laurent polynomial.
struct PoleType {
  int r = 0;
  int m = 0;
};

template <class C>
PoleType pole_type(const Laurent<C>& L) {
  if (L.is_zero()) throw InputError("the zero potential has no type");
  return {L.order() < 0 ? -L.order() : 0, L.degree()};
}

template <class C>
Laurent<C> potential(const EquationInput<C>& eq) {
  if (const auto* d = std::get_if<DirectInput<C>>(&eq)) return d->L;
  const auto& c = std::get<CoverInput<C>>(eq);
  return c.R * c.R + c.B + c.A * c.A;
}

// ---- decompositions ----

enum class DecompKind { Case1, Case2, Case3 };

std::string to_string(DecompKind k);

template <class C>
struct Decomposition {
  DecompKind kind = DecompKind::Case1;
  Laurent<C> L;
  C a;  // x^-1 coefficient (cases 1 and 2)
  C b;  // x^-2 coefficient (case 2)
  Laurent<C> R, B, A;
  int p = 0;
  int q = 0;
  C c;      // leading coefficient of A
  C b_top;  // x^(p-1) coefficient of L - A^2 - R^2
  C b_low;  // x^-(q+1) coefficient of B (case 3)

  /// Reassembles L from the parts of this case.
  Laurent<C> reconstruct() const {
    switch (kind) {
      case DecompKind::Case1:
        return Laurent<C>(a, -1) + B + A * A;
      case DecompKind::Case2:
        return Laurent<C>(b, -2) + Laurent<C>(a, -1) + B + A * A;
      case DecompKind::Case3:
        break;
    }
    return R * R + B + A * A;
  }
};

/// Square-root part at infinity: A of degree p with leading coefficient
/// c = sqrt(leading(L)) and deg(L - A^2) <= p - 1. Returns (A, L - A^2).
template <class C>
std::pair<Laurent<C>, Laurent<C>> decompose_inf(const Laurent<C>& L, int p) {
  if (L.is_zero() || L.degree() != 2 * p)
    throw InputError("decompose_inf needs degree exactly " + std::to_string(2 * p));
  auto c = coeff_sqrt(L.leading());
  if (!c)
    throw NonSquareLeading("leading coefficient " + L.leading().to_string() +
                           " is not the square of a rational");
  const C inv2c = require_inverse(C(2) * *c, "twice the leading square root");
  Laurent<C> A(*c, p);
  for (int k = p - 1; k >= 0; --k) {
    const Laurent<C> rem = L - A * A;
    A.add(k, rem.coeff(p + k) * inv2c);
  }
  Laurent<C> rem = L - A * A;
  if (!rem.is_zero() && rem.degree() > p - 1)
    throw std::logic_error("decompose_inf left a remainder of too high degree");
  return {A, rem};
}

/// Square-root part at zero: R on exponents -q..-2 with r_{-q} = +sqrt(l_{-2q})
/// and order(L - R^2) >= -(q+1). Returns (R, L - R^2).
template <class C>
std::pair<Laurent<C>, Laurent<C>> decompose_zero(const Laurent<C>& L, int q) {
  if (q < 2) throw InputError("decompose_zero needs q >= 2");
  if (L.is_zero() || L.order() != -2 * q)
    throw InputError("decompose_zero needs order exactly " + std::to_string(-2 * q));
  auto rq = coeff_sqrt(L.coeff(-2 * q));
  if (!rq)
    throw NonSquareAtZero("coefficient " + L.coeff(-2 * q).to_string() + " of x^" +
                          std::to_string(-2 * q) +
                          " is not a rational square; supply the cover point (R;B;A) instead");
  Laurent<C> R(*rq, -q);
  if (q > 2) {
    const C inv2r = require_inverse(C(2) * *rq, "twice the leading coefficient of R");
    for (int k = -q + 1; k <= -2; ++k) {
      const Laurent<C> rem = L - R * R;
      R.add(k, rem.coeff(k - q) * inv2r);
    }
  }
  Laurent<C> rem = L - R * R;
  if (!rem.is_zero() && rem.order() < -(q + 1))
    throw std::logic_error("decompose_zero left a remainder of too low order");
  return {R, rem};
}

/// Case 1 (r = 1) or case 2 (r = 2, but any order >= -2 is accepted so the
/// D'Alembert image with vanishing w^-2 term still decomposes).
template <class C>
Decomposition<C> decompose_at_infinity(const Laurent<C>& L, DecompKind kind) {
  const int m = L.degree();
  if (m % 2 != 0) throw InputError("degree must be even to decompose at infinity");
  Decomposition<C> dec;
  dec.kind = kind;
  dec.L = L;
  dec.p = m / 2;
  auto [A, rem] = decompose_inf(L, dec.p);
  dec.A = A;
  dec.c = A.leading();
  dec.a = rem.coeff(-1);
  if (kind == DecompKind::Case2) dec.b = rem.coeff(-2);
  dec.B = rem.slice(0, dec.p - 1);
  dec.b_top = rem.coeff(dec.p - 1);
  if (!(dec.reconstruct() == L))
    throw InputError("potential has poles beyond the order allowed for " + to_string(kind));
  return dec;
}

template <class C>
Decomposition<C> decompose_case3(const Laurent<C>& L, int q) {
  Decomposition<C> dec;
  dec.kind = DecompKind::Case3;
  dec.L = L;
  dec.q = q;
  const int m = L.degree();
  if (m % 2 != 0) throw InputError("degree must be even to decompose at infinity");
  dec.p = m / 2;
  auto [R, rem0] = decompose_zero(L, q);
  auto [A, rem] = decompose_inf(rem0, dec.p);
  dec.R = R;
  dec.A = A;
  dec.B = rem;
  dec.c = A.leading();
  dec.b_top = rem.coeff(dec.p - 1);
  dec.b_low = rem.coeff(-(q + 1));
  return dec;
}

template <class C>
Decomposition<C> decompose_cover(const CoverInput<C>& cov) {
  if (cov.R.is_zero()) throw InputError("cover input needs a nonzero R");
  if (cov.A.is_zero() || !cov.A.is_polynomial()) throw InputError("A must be a nonzero polynomial");
  const int q = -cov.R.order();
  if (q < 2 || cov.R.degree() > -2) throw InputError("R must be supported on exponents -q..-2, q >= 2");
  const int p = cov.A.degree();
  if (!cov.B.is_zero() && (cov.B.order() < -(q + 1) || cov.B.degree() > p - 1))
    throw InputError("B must be supported on exponents -(q+1).." + std::to_string(p - 1));
  Decomposition<C> dec;
  dec.kind = DecompKind::Case3;
  dec.R = cov.R;
  dec.B = cov.B;
  dec.A = cov.A;
  dec.p = p;
  dec.q = q;
  dec.c = cov.A.leading();
  dec.b_top = cov.B.coeff(p - 1);
  dec.b_low = cov.B.coeff(-(q + 1));
  dec.L = dec.reconstruct();
  return dec;
}

/// Selects the case from the pole type: case1 for r = 1, case2 for r = 2,
/// case3 for r = 2q >= 4. Class C2 must go through dalembert first.
template <class C>
Decomposition<C> decompose(const EquationInput<C>& eq) {
  if (const auto* cov = std::get_if<CoverInput<C>>(&eq)) return decompose_cover(*cov);
  const Laurent<C>& L = std::get<DirectInput<C>>(eq).L;
  const PoleType t = pole_type(L);
  const EquationClass cls = classify(t.r, t.m);
  if (cls == EquationClass::C4)
    throw InputError("type (" + std::to_string(t.r) + ", " + std::to_string(t.m) +
                     ") is in class C4 and has no decomposition");
  if (cls == EquationClass::C2)
    throw InputError("odd degree with a double pole: apply the D'Alembert transform first");
  if (t.r == 1) return decompose_at_infinity(L, DecompKind::Case1);
  if (t.r == 2) return decompose_at_infinity(L, DecompKind::Case2);
  if (t.m == 0) throw InputError("pole order >= 4 with constant leading part needs cover input");
  return decompose_case3(L, t.r / 2);
}

// ---- candidates ----

template <class C>
struct Candidate {
  std::optional<int> s0;  // none in case 1
  int s_inf = 1;
  int d = 0;
  C lambda;
  Laurent<C> omega;
};

struct CandidateReport {
  std::optional<int> s0;
  int s_inf = 1;
  std::optional<Rational> d_value;  // none when the formula leaves Q
  std::optional<Candidate<Rational>> candidate;
  std::string reason;  // why the sign choice is inadmissible, empty otherwise

  bool admissible() const { return candidate.has_value(); }
};

/// Every sign choice of the case with d, lambda and omega, in the order
/// s_inf = +1, -1 and then s0 = +1, -1. Inadmissible choices carry a reason.
std::vector<CandidateReport> candidates(const Decomposition<Rational>& dec, int d_max);

// ---- D'Alembert transform ----

/// L~(w) = 3/(4 w^2) + 4 w^2 L(w^2); solutions pull back as y = x^(1/4) y~(sqrt x).
template <class C>
Laurent<C> dalembert(const Laurent<C>& L) {
  if (L.is_zero() || L.order() != -2)
    throw WrongPoleOrder("the D'Alembert transform needs a pole of order exactly 2");
  return L.stretched(2).shifted(2) * C(4) + Laurent<C>(C(Rational(3, 4)), -2);
}

// ---- auxiliary equation ----

/// P'' = f P' + g P.
template <class C>
struct AuxiliaryEquation {
  Laurent<C> f, g;
  friend bool operator==(const AuxiliaryEquation&, const AuxiliaryEquation&) = default;
};

/// f = -2 phi, g = -(phi' + phi^2 - L) with phi = omega + lambda/x.
template <class C>
AuxiliaryEquation<C> aux_generic(const Laurent<C>& L, const C& lambda, const Laurent<C>& omega) {
  const Laurent<C> phi = omega + Laurent<C>(lambda, -1);
  return {phi * C(-2), -(phi.derive() + phi * phi - L)};
}

/// The per-case closed forms of the P coefficient.
template <class C>
AuxiliaryEquation<C> aux_template(const Decomposition<C>& dec, const Candidate<C>& cand) {
  const Laurent<C>& w = cand.omega;
  const C& lam = cand.lambda;
  const Laurent<C> f = (w + Laurent<C>(lam, -1)) * C(-2);
  Laurent<C> coef;
  switch (dec.kind) {
    case DecompKind::Case1:
      coef = w.derive() - dec.B + (w * C(2) - Laurent<C>(dec.a)).shifted(-1);
      break;
    case DecompKind::Case2:
      coef = w.derive() - dec.B + (w * (C(2) * lam) - Laurent<C>(dec.a)).shifted(-1);
      break;
    case DecompKind::Case3: {
      const C sign(static_cast<long>(cand.s_inf * cand.s0.value_or(1)));
      coef = w.derive() - dec.B + dec.A * dec.R * (C(2) * sign) + (w * (C(2) * lam)).shifted(-1) +
             Laurent<C>(lam * (lam - C(1)), -2);
      break;
    }
  }
  return {f, -coef};
}

/// Builds the auxiliary equation twice (closed form and generic) and insists
/// they agree.
template <class C>
AuxiliaryEquation<C> aux_equation(const Decomposition<C>& dec, const Candidate<C>& cand) {
  AuxiliaryEquation<C> tmpl = aux_template(dec, cand);
  AuxiliaryEquation<C> gen = aux_generic(dec.L, cand.lambda, cand.omega);
  if (!(tmpl == gen)) throw std::logic_error("auxiliary equation constructions disagree");
  return gen;
}

}  // namespace liouville

#endif  // LIOUVILLE_KOVACIC_HPP
