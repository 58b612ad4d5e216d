#include "liouville/kovacic.hpp"

namespace liouville {

std::string to_string(EquationClass c) {
  switch (c) {
    case EquationClass::C1: return "C1";
    case EquationClass::C2: return "C2";
    case EquationClass::C3: return "C3";
    case EquationClass::C4: return "C4";
  }
  return "?";
}

std::string to_string(DecompKind k) {
  switch (k) {
    case DecompKind::Case1: return "case1";
    case DecompKind::Case2: return "case2";
    case DecompKind::Case3: return "case3";
  }
  return "?";
}

EquationClass classify(int r, int m) {
  if (r < 1 || m < 0)
    throw InputError("classification needs r >= 1 and m >= 0, got (" + std::to_string(r) + ", " +
                     std::to_string(m) + ")");
  const bool m_even = m % 2 == 0;
  if (r == 2) return m_even ? EquationClass::C3 : EquationClass::C2;
  if ((r == 1 || (r % 2 == 0 && r >= 4)) && m_even) return EquationClass::C1;
  return EquationClass::C4;
}

namespace {

CandidateReport judge(std::optional<int> s0, int s_inf, const Rational& d, const Rational& lambda,
                      const LaurentQ& omega, int d_max) {
  CandidateReport rep;
  rep.s0 = s0;
  rep.s_inf = s_inf;
  rep.d_value = d;
  if (!d.is_integer()) {
    rep.reason = "d = " + d.to_string() + " is not an integer";
  } else if (d.sign() < 0) {
    rep.reason = "d = " + d.to_string() + " is negative";
  } else if (d > Rational(d_max)) {
    rep.reason = "d = " + d.to_string() + " exceeds d_max = " + std::to_string(d_max);
  } else {
    rep.candidate = Candidate<Rational>{s0, s_inf, static_cast<int>(*d.to_long()), lambda, omega};
  }
  return rep;
}

}  // namespace

std::vector<CandidateReport> candidates(const Decomposition<Rational>& dec, int d_max) {
  std::vector<CandidateReport> out;
  const Rational p(dec.p);
  const Rational q(dec.q);
  const Rational bc = dec.b_top / dec.c;
  for (int s_inf : {1, -1}) {
    const Rational si(s_inf);
    switch (dec.kind) {
      case DecompKind::Case1: {
        const Rational d = (si * bc - p - 2) / 2;
        out.push_back(judge(std::nullopt, s_inf, d, Rational(1), dec.A * si, d_max));
        break;
      }
      case DecompKind::Case2: {
        const auto root = (Rational(1) + Rational(4) * dec.b).sqrt_exact();
        for (int s0 : {1, -1}) {
          if (!root) {
            CandidateReport rep;
            rep.s0 = s0;
            rep.s_inf = s_inf;
            rep.reason = "requires quadratic extension (1 + 4b = " +
                         (Rational(1) + Rational(4) * dec.b).to_string() + " is not a square)";
            out.push_back(std::move(rep));
            continue;
          }
          const Rational t = Rational(s0) * *root;
          const Rational lambda = (Rational(1) + t) / 2;
          const Rational d = (si * bc - t - p - 1) / 2;
          out.push_back(judge(s0, s_inf, d, lambda, dec.A * si, d_max));
        }
        break;
      }
      case DecompKind::Case3: {
        const Rational rq = dec.R.coeff(-dec.q);
        for (int s0 : {1, -1}) {
          const Rational shift = Rational(s0) * dec.b_low / (Rational(2) * rq);
          const Rational d = (si * bc - p - q) / 2 - shift;
          const Rational lambda = shift + q / 2;
          out.push_back(
              judge(s0, s_inf, d, lambda, dec.A * si + dec.R * Rational(s0), d_max));
        }
        break;
      }
    }
  }
  return out;
}

}  // namespace liouville
