// liouville: command-line front end for the Liouvillian-solution engine.
//
// Exit codes: 0 success or Integrable, 1 NotIntegrableUpTo, 2 input error,
// 3 needs an algebraic extension, 4 empty class (C4), 5 internal failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "liouville/aim.hpp"
#include "liouville/errors.hpp"
#include "liouville/kovacic.hpp"
#include "liouville/parser.hpp"
#include "liouville/pipeline.hpp"

namespace {

using namespace liouville;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNotIntegrable = 1;
constexpr int kExitInput = 2;
constexpr int kExitExtension = 3;
constexpr int kExitEmptyClass = 4;
constexpr int kExitInternal = 5;

struct Options {
  std::string expr, cover, family, params, f, g, signs = "+";
  int r = 0, m = 0, d = 0, d_max = kDefaultDMax, cap = kDefaultUniversalCap;
  bool universal = false, json = false, timings = false;
};

class Timer {
 public:
  explicit Timer(bool on) : on_(on) {}
  void mark(const std::string& name) {
    if (!on_) return;
    const auto now = std::chrono::steady_clock::now();
    out_[name] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }
  Json json() const { return out_; }

 private:
  bool on_;
  Json out_ = Json::object();
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

Json sign_json(std::optional<int> s) { return s ? Json(*s) : Json(nullptr); }

std::string sign_char(std::optional<int> s) {
  if (!s) return "none";
  return *s > 0 ? "+" : "-";
}

// Text output names the route's variable; JSON keeps x so strings re-parse.
std::string in_var(const std::string& s, char var) {
  if (var == 'x') return s;
  std::string out = s;
  std::replace(out.begin(), out.end(), 'x', var);
  return out;
}

std::vector<std::string> split_cover(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) parts.push_back(item);
  if (parts.size() != 3) throw InputError("--cover expects three expressions \"R;B;A\"");
  return parts;
}

EquationInput<ParamElement> read_input(const Options& o, const std::vector<Symbol>& params) {
  const std::string& text = o.family.empty() ? o.expr : o.family;
  if (!text.empty() && !o.cover.empty()) throw InputError("give either an expression or --cover");
  if (!o.cover.empty()) {
    const auto parts = split_cover(o.cover);
    return CoverInput<ParamElement>{parse({parts[0], params}), parse({parts[1], params}),
                                    parse({parts[2], params})};
  }
  if (text.empty()) throw InputError("no input expression");
  return DirectInput<ParamElement>{parse({text, params})};
}

EquationInput<Rational> concrete(const EquationInput<ParamElement>& eq) {
  return specialize(eq, Assignment{});
}

Json input_json(const Options& o) {
  Json in = Json::object();
  if (!o.expr.empty()) in["expr"] = o.expr;
  if (!o.family.empty()) in["family"] = o.family;
  if (!o.cover.empty()) in["cover"] = o.cover;
  if (!o.params.empty()) in["params"] = o.params;
  return in;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// ---- subcommands ----

int run_classify(const Options& o) {
  const EquationClass c = classify(o.r, o.m);
  if (o.json) {
    Json j{{"command", "classify"}, {"input", {{"r", o.r}, {"m", o.m}}}};
    j["class"] = to_string(c);
    j["candidates"] = Json::array();
    j["timings"] = Json::object();
    emit(j);
  } else {
    std::cout << "class " << to_string(c) << '\n';
  }
  return c == EquationClass::C4 ? kExitEmptyClass : kExitOk;
}

template <class C>
Json decomposition_json(const Decomposition<C>& dec) {
  Json j{{"kind", to_string(dec.kind)}, {"p", dec.p}};
  if (dec.kind == DecompKind::Case3) j["q"] = dec.q;
  if (dec.kind != DecompKind::Case3) j["a"] = format(dec.a);
  if (dec.kind == DecompKind::Case2) j["b"] = format(dec.b);
  if (dec.kind == DecompKind::Case3) j["R"] = format(dec.R);
  j["B"] = format(dec.B);
  j["A"] = format(dec.A);
  j["c"] = format(dec.c);
  j["b_top"] = format(dec.b_top);
  if (dec.kind == DecompKind::Case3) j["b_low"] = format(dec.b_low);
  return j;
}

int run_decompose(const Options& o) {
  const auto params = parse_param_list(o.params);
  const auto eq = read_input(o, params);
  const LaurentP L = potential(eq);
  const PoleType t = pole_type(L);
  if (t.r < 1) throw InputError("the potential must have a pole at x = 0 (r >= 1)");
  const EquationClass cls = classify(t.r, t.m);
  Json j{{"command", "decompose"}, {"input", input_json(o)}};
  j["class"] = to_string(cls);
  j["type"] = {{"r", t.r}, {"m", t.m}};
  Json decs = Json::array();
  if (cls != EquationClass::C4) {
    const bool cover = std::holds_alternative<CoverInput<ParamElement>>(eq);
    if (!cover && t.r == 2) {
      if (cls == EquationClass::C3) {
        Json d = decomposition_json(decompose_at_infinity(L, DecompKind::Case2));
        d["route"] = to_string(Route::Direct);
        decs.push_back(d);
      }
      const LaurentP Lw = dalembert(L);
      Json d = decomposition_json(decompose_at_infinity(Lw, DecompKind::Case2));
      d["route"] = to_string(Route::DAlembert);
      d["transformed"] = format(Lw);
      decs.push_back(d);
    } else {
      Json d = decomposition_json(decompose(eq));
      d["route"] = to_string(Route::Direct);
      decs.push_back(d);
    }
  }
  j["decompositions"] = decs;
  j["candidates"] = Json::array();
  j["timings"] = Json::object();
  if (o.json) {
    emit(j);
  } else {
    std::cout << "class " << to_string(cls) << " type (" << t.r << ", " << t.m << ")\n";
    for (const auto& d : decs) {
      const char var = d["route"] == "dalembert" ? 'w' : 'x';
      std::cout << "route " << d["route"].get<std::string>() << ": "
                << d["kind"].get<std::string>() << '\n';
      for (const auto& [k, v] : d.items()) {
        if (k == "route" || k == "kind") continue;
        std::cout << "  " << k << " = "
                  << (v.is_string() ? in_var(v.get<std::string>(), var) : v.dump()) << '\n';
      }
    }
  }
  return cls == EquationClass::C4 ? kExitEmptyClass : kExitOk;
}

Json candidate_json(Route route, const CandidateReport& rep) {
  Json c{{"route", to_string(route)}, {"s0", sign_json(rep.s0)}, {"s_inf", rep.s_inf}};
  c["d"] = rep.d_value ? Json(format(*rep.d_value)) : Json(nullptr);
  c["lambda"] = rep.candidate ? Json(format(rep.candidate->lambda)) : Json(nullptr);
  c["omega"] = rep.candidate ? Json(format(rep.candidate->omega)) : Json(nullptr);
  return c;
}

int run_candidates(const Options& o) {
  if (o.d_max < 0) throw InputError("d_max must be nonnegative");
  const auto eq = concrete(read_input(o, {}));
  const PoleType t = pole_type(potential(eq));
  const EquationClass cls = classify(t.r, t.m);
  const auto routes = route_decompositions(eq);
  Json list = Json::array();
  for (const auto& rd : routes)
    for (const auto& rep : candidates(rd.dec, o.d_max)) {
      Json c = candidate_json(rd.route, rep);
      c["outcome"] = rep.admissible() ? "admissible" : "inadmissible: " + rep.reason;
      list.push_back(c);
    }
  if (o.json) {
    Json j{{"command", "candidates"}, {"input", input_json(o)}};
    j["class"] = to_string(cls);
    j["candidates"] = list;
    j["timings"] = Json::object();
    emit(j);
  } else {
    std::cout << "class " << to_string(cls) << '\n';
    for (const auto& c : list) {
      const char var = c["route"] == "dalembert" ? 'w' : 'x';
      std::cout << c["route"].get<std::string>() << " s_inf=" << (c["s_inf"] == 1 ? "+" : "-")
                << " s0=" << (c["s0"].is_null() ? "none" : (c["s0"] == 1 ? "+" : "-"))
                << " d=" << (c["d"].is_null() ? "irrational" : c["d"].get<std::string>());
      if (!c["lambda"].is_null())
        std::cout << " lambda=" << c["lambda"].get<std::string>()
                  << " omega=" << in_var(c["omega"].get<std::string>(), var);
      std::cout << " : " << c["outcome"].get<std::string>() << '\n';
    }
  }
  return cls == EquationClass::C4 ? kExitEmptyClass : kExitOk;
}

int run_delta(const Options& o) {
  if (o.d < 0) throw InputError("d must be nonnegative");
  if (o.universal) {
    if (!o.f.empty() || !o.g.empty()) throw InputError("--universal takes no --f/--g");
    const auto dp = delta_universal(o.d, o.cap);
    if (o.json) {
      Json j{{"command", "delta"}, {"input", {{"universal", true}, {"d", o.d}}}};
      j["delta"] = dp.to_string();
      j["terms"] = dp.term_count();
      j["candidates"] = Json::array();
      j["timings"] = Json::object();
      emit(j);
    } else {
      std::cout << dp.to_string() << '\n';
    }
    return kExitOk;
  }
  if (o.f.empty() || o.g.empty()) throw InputError("delta needs --universal or both --f and --g");
  const auto params = parse_param_list(o.params);
  const LaurentP f = parse({o.f, params}), g = parse({o.g, params});
  const std::string out = format(delta(f, g, o.d));
  if (o.json) {
    Json j{{"command", "delta"}, {"input", {{"f", o.f}, {"g", o.g}, {"d", o.d}}}};
    if (!o.params.empty()) j["input"]["params"] = o.params;
    j["delta"] = out;
    j["candidates"] = Json::array();
    j["timings"] = Json::object();
    emit(j);
  } else {
    std::cout << out << '\n';
  }
  return kExitOk;
}

int exit_for(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Integrable: return kExitOk;
    case VerdictStatus::NotIntegrableUpTo: return kExitNotIntegrable;
    case VerdictStatus::NeedsExtension: return kExitExtension;
    case VerdictStatus::EmptyClass: return kExitEmptyClass;
  }
  return kExitInternal;
}

int run_solve(const Options& o) {
  Timer timer(o.timings);
  const auto eq = concrete(read_input(o, {}));
  timer.mark("parse_ms");
  const Verdict v = solve(eq, o.d_max);
  timer.mark("solve_ms");

  Json verdict{{"status", to_string(v.status)}, {"class", to_string(v.cls)}};
  verdict["type"] = {{"r", v.type.r}, {"m", v.type.m}};
  verdict["d_max"] = v.d_max;
  if (!v.reason.empty()) verdict["reason"] = v.reason;
  if (v.transformed) verdict["transformed"] = format(*v.transformed);
  Json sols = Json::array();
  for (const auto& s : v.solutions) {
    Json js{{"route", to_string(s.route)}, {"variable", std::string(1, s.variable())}};
    js["s0"] = sign_json(s.s0);
    js["s_inf"] = s.s_inf;
    js["d"] = s.d;
    js["lambda"] = format(s.lambda);
    js["P"] = format(s.P);
    js["omega"] = format(s.omega);
    js["antiderivative"] = format(s.antiderivative);
    if (s.route == Route::DAlembert) js["pullback"] = s.pullback_note();
    sols.push_back(js);
  }
  verdict["solutions"] = sols;
  Json cands = Json::array();
  for (const auto& c : v.candidates) {
    Json jc = candidate_json(c.route, c.report);
    jc["outcome"] = c.outcome;
    if (c.P) jc["P"] = format(*c.P);
    cands.push_back(jc);
  }

  if (o.json) {
    Json j{{"command", "solve"}, {"input", input_json(o)}};
    j["input"]["d_max"] = o.d_max;
    j["verdict"] = verdict;
    j["candidates"] = cands;
    j["timings"] = timer.json();
    emit(j);
    return exit_for(v.status);
  }
  std::cout << "verdict " << to_string(v.status) << " (class " << to_string(v.cls) << ", type ("
            << v.type.r << ", " << v.type.m << "), d_max " << v.d_max << ")\n";
  if (!v.reason.empty()) std::cout << "reason: " << v.reason << '\n';
  if (v.transformed) std::cout << "transformed: y~'' = (" << in_var(format(*v.transformed), 'w')
                               << ") y~\n";
  for (const auto& c : cands) {
    const char var = c["route"] == "dalembert" ? 'w' : 'x';
    std::cout << "candidate " << c["route"].get<std::string>()
              << " s_inf=" << (c["s_inf"] == 1 ? "+" : "-")
              << " s0=" << (c["s0"].is_null() ? "none" : (c["s0"] == 1 ? "+" : "-"))
              << " d=" << (c["d"].is_null() ? "irrational" : c["d"].get<std::string>());
    if (!c["lambda"].is_null())
      std::cout << " lambda=" << c["lambda"].get<std::string>()
                << " omega=" << in_var(c["omega"].get<std::string>(), var);
    std::cout << " : " << c["outcome"].get<std::string>() << '\n';
  }
  for (const auto& s : v.solutions) {
    const char var = s.variable();
    std::cout << "solution (" << to_string(s.route) << "): " << var << "^(" << format(s.lambda)
              << ") * (" << in_var(format(s.P), var) << ") * exp("
              << in_var(format(s.antiderivative), var) << ")\n";
    std::cout << "  lambda = " << format(s.lambda) << ", d = " << s.d
              << ", P = " << in_var(format(s.P), var)
              << ", omega = " << in_var(format(s.omega), var) << '\n';
    if (s.route == Route::DAlembert) std::cout << "  " << s.pullback_note() << '\n';
  }
  if (o.timings)
    for (const auto& [k, val] : timer.json().items()) std::cout << k << " " << val.dump() << '\n';
  return exit_for(v.status);
}

// "+-" reads as (s_inf, s0); a single sign is s_inf alone.
std::pair<int, std::optional<int>> parse_signs(const std::string& s) {
  auto one = [](char c) {
    if (c == '+') return 1;
    if (c == '-') return -1;
    throw InputError("--signs takes '+' and '-' only");
  };
  if (s.empty() || s.size() > 2) throw InputError("--signs takes one or two signs");
  return {one(s[0]), s.size() == 2 ? std::optional<int>(one(s[1])) : std::nullopt};
}

int run_variety(const Options& o) {
  Timer timer(o.timings);
  const auto params = parse_param_list(o.params);
  const auto family = read_input(o, params);
  const auto [s_inf, s0] = parse_signs(o.signs);
  timer.mark("parse_ms");
  const SpectralSystem sys = variety_equations(family, o.d, s0, s_inf);
  timer.mark("variety_ms");
  Json ca = Json::array(), dc = Json::array();
  for (const auto& e : sys.condition_a) ca.push_back(format(e));
  for (const auto& e : sys.delta_coeffs) dc.push_back(format(e));
  if (o.json) {
    Json j{{"command", "variety"}, {"input", input_json(o)}};
    j["input"]["d"] = o.d;
    j["input"]["signs"] = o.signs;
    j["candidates"] = Json::array({Json{{"s0", sign_json(sys.s0)},
                                        {"s_inf", sys.s_inf},
                                        {"d", format(Rational(sys.d))},
                                        {"lambda", format(sys.lambda)},
                                        {"omega", nullptr},
                                        {"outcome", "variety"}}});
    j["variety"] = {{"kind", to_string(sys.kind)}, {"condition_a", ca}, {"delta_coeffs", dc}};
    j["timings"] = timer.json();
    emit(j);
    return kExitOk;
  }
  std::cout << "stratum " << to_string(sys.kind) << " d=" << sys.d << " s_inf="
            << sign_char(sys.s_inf) << " s0=" << sign_char(sys.s0) << '\n';
  std::cout << "lambda = " << format(sys.lambda) << '\n';
  for (const auto& e : ca) std::cout << "condition_a: " << e.get<std::string>() << " = 0\n";
  for (const auto& e : dc) std::cout << "delta: " << e.get<std::string>() << " = 0\n";
  if (o.timings)
    for (const auto& [k, val] : timer.json().items()) std::cout << k << " " << val.dump() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Liouvillian solutions of y'' = L(x) y for Laurent polynomial L"};
  app.require_subcommand(1);
  Options o;

  auto* classify_cmd = app.add_subcommand("classify", "class of the pole type (r, m)");
  classify_cmd->add_option("--r", o.r, "pole order at zero")->required();
  classify_cmd->add_option("--m", o.m, "degree at infinity")->required();
  classify_cmd->add_flag("--json", o.json);

  auto* decompose_cmd = app.add_subcommand("decompose", "Kovacic decomposition of L");
  decompose_cmd->add_option("--expr", o.expr, "the potential L");
  decompose_cmd->add_option("--params", o.params, "declared parameters, e.g. \"a,r:inv\"");
  decompose_cmd->add_option("--cover", o.cover, "cover point \"R;B;A\"");
  decompose_cmd->add_flag("--json", o.json);

  auto* candidates_cmd = app.add_subcommand("candidates", "sign choices with d, lambda, omega");
  candidates_cmd->add_option("--expr", o.expr, "the potential L");
  candidates_cmd->add_option("--cover", o.cover, "cover point \"R;B;A\"");
  candidates_cmd->add_option("--dmax", o.d_max, "largest degree considered");
  candidates_cmd->add_flag("--json", o.json);

  auto* delta_cmd = app.add_subcommand("delta", "the obstruction Delta_d");
  delta_cmd->add_flag("--universal", o.universal, "universal form in alpha, beta");
  delta_cmd->add_option("--d", o.d, "index")->required();
  delta_cmd->add_option("--cap", o.cap, "largest universal index allowed");
  delta_cmd->add_option("--f", o.f, "coefficient f of P'' = f P' + g P");
  delta_cmd->add_option("--g", o.g, "coefficient g");
  delta_cmd->add_option("--params", o.params, "declared parameters");
  delta_cmd->add_flag("--json", o.json);

  auto* solve_cmd = app.add_subcommand("solve", "decide integrability and build solutions");
  solve_cmd->add_option("--expr", o.expr, "the potential L");
  solve_cmd->add_option("--cover", o.cover, "cover point \"R;B;A\"");
  solve_cmd->add_option("--dmax", o.d_max, "largest degree considered");
  solve_cmd->add_flag("--json", o.json);
  solve_cmd->add_flag("--timings", o.timings, "report wall-clock timings");

  auto* variety_cmd = app.add_subcommand("variety", "spectral-variety equations of a family");
  variety_cmd->add_option("--family", o.family, "the parametric potential");
  variety_cmd->add_option("--cover", o.cover, "parametric cover point \"R;B;A\"");
  variety_cmd->add_option("--params", o.params, "declared parameters")->required();
  variety_cmd->add_option("--d", o.d, "degree of P")->required();
  variety_cmd->add_option("--signs", o.signs, "s_inf then s0, e.g. \"++\"");
  variety_cmd->add_flag("--json", o.json);
  variety_cmd->add_flag("--timings", o.timings, "report wall-clock timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(o);
    if (decompose_cmd->parsed()) return run_decompose(o);
    if (candidates_cmd->parsed()) return run_candidates(o);
    if (delta_cmd->parsed()) return run_delta(o);
    if (solve_cmd->parsed()) return run_solve(o);
    if (variety_cmd->parsed()) return run_variety(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const NeedsExtension& e) {
    std::cerr << "needs extension: " << e.what() << '\n';
    return kExitExtension;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
