#include "addchow/cli/commands.hpp"

#include <filesystem>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "addchow/cycles/curve.hpp"
#include "addchow/cycles/maps.hpp"
#include "addchow/degeneration/degeneration.hpp"
#include "addchow/error.hpp"
#include "addchow/fields/parse.hpp"
#include "addchow/milnor/symbol.hpp"
#include "addchow/verify/suites.hpp"

namespace addchow {

namespace {

using nlohmann::json;

struct Options {
  std::string field;
  int n = 0;
  int count = 0;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string suite = "all";
  std::string a;
  std::vector<std::string> b;
  std::string scale;
  std::string point;
  std::string cycle;
  std::vector<std::string> symbol;
  std::string scenario;
  std::string t;
  std::string alpha;
};

bool json_output(const Options& o) { return o.format == "json"; }

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string field_or(const Options& o, const char* fallback) { return o.field.empty() ? fallback : o.field; }

// A repeated flag may also carry a whole tuple: --b t --b "t + 1" or --b "(t, t + 1)".
std::vector<FieldElement> parse_list(const TowerPtr& T, const std::vector<std::string>& items) {
  std::vector<FieldElement> out;
  for (const auto& item : items) {
    const std::string s = trim_copy(item);
    if (!s.empty() && s.front() == '(' && s.back() == ')' && split_top_level(s.substr(1, s.size() - 2), ',').size() > 1) {
      for (auto& x : parse_tuple(T, s)) out.push_back(std::move(x));
    } else {
      out.push_back(parse_element(T, s));
    }
  }
  return out;
}

json cycle_json(const ZeroCycle& c) {
  json j;
  j["field"] = c.base()->to_string();
  j["n"] = c.n();
  j["degree"] = c.degree();
  j["lines"] = c.lines();
  return j;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyConfig cfg{o.field, o.n, o.count, o.seed};
  const auto reports = run_suites(o.suite, cfg);
  if (json_output(o)) print_json(out, render_json(reports));
  else out << render_text(reports);
  return exit_code(reports);
}

int cmd_phi(const Options& o, std::ostream& out) {
  const TowerPtr T = parse_tower(field_or(o, "Q(t)"));
  const FieldElement a = parse_element(T, o.a);
  const std::vector<FieldElement> b = parse_list(T, o.b);
  if (o.n > 0 && static_cast<int>(b.size()) + 1 != o.n)
    fail(ErrorKind::InvalidArgument, "--n " + std::to_string(o.n) + " needs " + std::to_string(o.n - 1) + " values of --b");
  const ZeroCycle c = o.scale.empty() ? phi(a, b) : phi_scaled(a, b, parse_element(T, o.scale));
  if (json_output(o)) {
    json j = cycle_json(c);
    if (!o.scale.empty()) j["scale"] = o.scale;
    print_json(out, j);
  } else {
    out << c.to_string() << '\n';
  }
  return kExitPass;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const TowerPtr T = parse_tower(field_or(o, "Q(t)"));
  DifferentialForm w(T, 0);
  if (!o.point.empty()) {
    w = gamma_of_point(QPoint(parse_tuple(T, o.point)));
  } else if (!o.cycle.empty()) {
    if (o.n <= 0) fail(ErrorKind::InvalidArgument, "--cycle needs --n");
    w = eval_gamma(parse_cycle(T, o.n, o.cycle));
  } else {
    fail(ErrorKind::InvalidArgument, "eval needs --point or --cycle");
  }
  if (json_output(o)) print_json(out, json{{"field", T->to_string()}, {"form", w.to_string()}});
  else out << w.to_string() << '\n';
  return kExitPass;
}

int cmd_dlog(const Options& o, std::ostream& out) {
  const TowerPtr T = parse_tower(field_or(o, "Q(t)"));
  if (o.symbol.empty()) fail(ErrorKind::InvalidArgument, "dlog needs --symbol");
  const std::vector<FieldElement> e = parse_list(T, o.symbol);
  const MilnorSymbol s = MilnorSymbol::of(e);
  const DifferentialForm w = dlog_symbol(s);
  const std::optional<DeltaPoint> p = symbol_to_point(e);
  const ZeroCycle c = milnor_to_additive(s);
  if (json_output(o)) {
    json j{{"symbol", s.to_string()}, {"dlog", w.to_string()}, {"additive_cycle", cycle_json(c)}};
    j["eval_gamma"] = eval_gamma(c).to_string();
    print_json(out, j);
  } else {
    out << "dlog " << s.to_string() << " = " << w.to_string() << '\n';
    out << "iota(symbol_to_point) = " << (p ? c.to_string() : std::string("0")) << '\n';
    out << "eval_gamma = " << eval_gamma(c).to_string() << '\n';
  }
  return kExitPass;
}

int cmd_nabla(const Options& o, std::ostream& out) {
  const TowerPtr T = parse_tower(field_or(o, "Q(t)"));
  const QPoint x(parse_tuple(T, o.point));
  const QPoint y = nabla(x);
  const DifferentialForm lhs = gamma_of_point(y);
  const DifferentialForm dg = d_form(gamma_of_point(x));
  const int n = x.n();
  const FieldElement minus = FieldElement::from_int(T, -1);
  // Which sign, if any, relates gamma_n(nabla x) to d gamma_{n-1}(x).
  std::string relation = "none";
  if (lhs == dg) relation = "+1";
  else if (lhs == dg.scaled(minus)) relation = "-1";
  const std::string stated = n % 2 ? "-1" : "+1";
  if (json_output(o)) {
    print_json(out, json{{"nabla", y.to_string()},
                         {"gamma_of_nabla", lhs.to_string()},
                         {"d_gamma", dg.to_string()},
                         {"observed_sign", relation},
                         {"stated_sign", stated}});
  } else {
    out << "nabla x = " << y.to_string() << '\n';
    out << "gamma_" << n << "(nabla x) = " << lhs.to_string() << '\n';
    out << "d gamma_" << n - 1 << "(x) = " << dg.to_string() << '\n';
    out << "observed sign " << relation << ", stated (-1)^n = " << stated << '\n';
  }
  return relation == stated ? kExitPass : kExitFailure;
}

int cmd_trace_curve(const Options& o, std::ostream& out) {
  const TowerPtr K = parse_tower(field_or(o, "Q(x)[th]/(th^2 - x*th - 1)"));
  if (!K->has_extension()) fail(ErrorKind::NoExtension, "trace-curve needs an extension field, e.g. Q(t)[th]/(th^2 - t)");
  const TowerPtr k = K->base();
  const FieldElement t = o.t.empty() ? FieldElement::generator(K) : parse_element(K, o.t);
  std::vector<FieldElement> alpha_coords;
  if (o.alpha.empty()) {
    const int n = o.n > 0 ? o.n : 2;
    alpha_coords.push_back(FieldElement::from_int(k, -1));
    // Coordinates v + i keep gamma from vanishing when k has a variable v.
    const FieldElement v = k->num_variables() > 0 ? FieldElement::variable(k, std::size_t{0}) : FieldElement(k);
    for (int i = 1; i < n; ++i) alpha_coords.push_back(v + FieldElement::from_int(k, i));
    FieldElement last = FieldElement::from_int(k, 1);
    for (int i = 1; i < n; ++i) last -= alpha_coords[static_cast<std::size_t>(i)];
    alpha_coords.push_back(last);
  } else {
    alpha_coords = parse_tuple(k, o.alpha);
  }
  const QPoint alpha(alpha_coords);
  const MinimalPolynomialData P = minimal_polynomial_data(minimal_polynomial(-t.inverse()));
  const ParametrizedCurve W = trace_curve(P, alpha);
  const ZeroCycle bd = curve_boundary(W);
  const FieldElement ratio = P.a[1] / P.a[0];
  const DifferentialForm traced = trace_form(gamma_of_point(star(t, alpha.moved_to(K))));
  const DifferentialForm rational = eval_gamma(star(ratio, ZeroCycle::of(k, alpha)));
  const DifferentialForm total = eval_gamma(bd);
  const bool ok = traced == rational && total.is_zero();
  if (json_output(o)) {
    print_json(out, json{{"curve", W.to_string()},
                         {"boundary", cycle_json(bd)},
                         {"a1_over_a0", ratio.to_string()},
                         {"trace_of_eval", traced.to_string()},
                         {"eval_of_rational_part", rational.to_string()},
                         {"eval_of_boundary", total.to_string()},
                         {"status", ok ? "PASS" : "FAIL"}});
  } else {
    out << "curve " << W.to_string() << '\n';
    out << "boundary " << bd.to_string() << '\n';
    out << "a1/a0 = " << ratio.to_string() << '\n';
    out << "Tr eval_gamma(t * alpha) = " << traced.to_string() << '\n';
    out << "eval_gamma((a1/a0) * alpha) = " << rational.to_string() << '\n';
    out << "eval_gamma(boundary) = " << total.to_string() << '\n';
    out << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kExitPass : kExitFailure;
}

DegenerationScenario resolve_scenario(const Options& o) {
  if (o.scenario.empty()) fail(ErrorKind::InvalidArgument, "degenerate needs --scenario");
  DegenerationScenario sc;
  if (std::filesystem::exists(o.scenario)) {
    sc = load_scenario(o.scenario);
  } else {
    auto b = builtin_scenario(o.scenario);
    if (!b) fail(ErrorKind::InvalidArgument, "no scenario file or built-in scenario named " + o.scenario);
    sc = *b;
  }
  if (!o.field.empty()) {
    const Characteristic p = parse_tower(o.field)->characteristic();
    if (p != sc.characteristic) {
      // Built-in expectations are rebuilt in the requested characteristic.
      auto b = builtin_scenario(sc.name, p);
      if (b) sc = *b;
      else sc.characteristic = p;
    }
  }
  return sc;
}

int cmd_degenerate(const Options& o, std::ostream& out) {
  const DegenerationScenario sc = resolve_scenario(o);
  const ScenarioOutcome r = run_scenario(sc);
  const SuiteReport rep{"degenerate " + sc.name, r.checks};
  if (json_output(o)) {
    json j;
    j["scenario"] = sc.name;
    j["characteristic"] = sc.characteristic;
    if (r.split) {
      j["s"] = r.split->s;
      j["omega"] = r.split->omega.to_string();
      j["nu"] = r.split->nu.to_string();
      j["gamma"] = r.split->gamma.to_string();
      j["nu_at_0"] = at_t_zero(r.split->nu).to_string();
      j["gamma_at_0"] = at_t_zero(r.split->gamma).to_string();
    } else {
      j["error"] = r.error;
    }
    if (r.cusp) {
      j["cusp"] = {{"residue_gamma", r.cusp->residue_gamma},
                   {"residue_nu", r.cusp->residue_nu},
                   {"d_residue_gamma", r.cusp->d_residue_gamma},
                   {"epsilon", r.cusp->epsilon}};
    }
    j["report"] = render_json({rep});
    print_json(out, j);
  } else {
    out << "scenario " << sc.name << " (characteristic " << sc.characteristic << ")\n";
    if (r.split) {
      out << "omega = " << r.split->omega.to_string() << '\n';
      out << "s = " << r.split->s << '\n';
      out << "nu = " << r.split->nu.to_string() << '\n';
      out << "gamma = " << r.split->gamma.to_string() << '\n';
      out << "nu|t=0 = " << at_t_zero(r.split->nu).to_string() << '\n';
      out << "gamma|t=0 = " << at_t_zero(r.split->gamma).to_string() << '\n';
    } else {
      out << "split refused: " << r.error << '\n';
    }
    if (r.cusp) out << "cusp: Res(gamma|0) -> " << r.cusp->residue_gamma << ", Res(nu|0) -> " << r.cusp->residue_nu
                    << ", epsilon = " << r.cusp->epsilon << '\n';
    out << render_text({rep});
  }
  if (!r.split && r.error == to_string(ErrorKind::CharacteristicObstruction)) return kExitUnsupported;
  return exit_code({rep});
}

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnsupportedDegree:
    case ErrorKind::CharacteristicObstruction:
      return kExitUnsupported;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Additive Chow groups of zero-cycles: symbolic verification tools", "addchow"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* c) {
    c->add_option("--field", o.field, "field tower, e.g. Q(t1,t2), F5(t), Q(t)[th]/(th^2 - t)");
    c->add_option("--n", o.n, "dimension n of Q^n");
    c->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  common(verify);
  verify->add_option("--suite", o.suite, "suite name or all")
      ->check(CLI::IsMember([] {
        auto v = suite_names();
        v.push_back("all");
        return v;
      }()));
  verify->add_option("--seed", o.seed, "seed for random instances");
  verify->add_option("--count", o.count, "instances per randomized check");

  CLI::App* phi_cmd = app.add_subcommand("phi", "phi(a (x) b_1 ^ ... ^ b_{n-1}) as a zero-cycle");
  common(phi_cmd);
  phi_cmd->add_option("--a", o.a, "field element a")->required();
  phi_cmd->add_option("--b", o.b, "entries b_i (repeat the flag or give a tuple)");
  phi_cmd->add_option("--scale", o.scale, "coordinate scale lambda");

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate gamma at a point or cycle");
  common(eval_cmd);
  eval_cmd->add_option("--point", o.point, "(c0, ..., cn) with sum 0");
  eval_cmd->add_option("--cycle", o.cycle, "cycle in the `m * (...) over FIELD` format");

  CLI::App* dlog_cmd = app.add_subcommand("dlog", "dlog of a Milnor symbol and its additive cycle");
  common(dlog_cmd);
  dlog_cmd->add_option("--symbol", o.symbol, "symbol entries (repeat the flag or give a tuple)");

  CLI::App* degen = app.add_subcommand("degenerate", "split a log form along a constant-modulus degeneration");
  common(degen);
  degen->add_option("--scenario", o.scenario, "scenario JSON file or built-in name")->required();

  CLI::App* trace_cmd = app.add_subcommand("trace-curve", "trace of a closed point through the trace curve");
  common(trace_cmd);
  trace_cmd->add_option("--t", o.t, "element t of the extension (default: its generator)");
  trace_cmd->add_option("--alpha", o.alpha, "point alpha over the base field");

  CLI::App* nabla_cmd = app.add_subcommand("nabla", "the nabla correspondence and its gamma relation");
  common(nabla_cmd);
  nabla_cmd->add_option("--point", o.point, "(x0, ..., xn) with sum 0")->required();

  std::vector<const char*> argv{"addchow"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (phi_cmd->parsed()) return cmd_phi(o, out);
    if (eval_cmd->parsed()) return cmd_eval(o, out);
    if (dlog_cmd->parsed()) return cmd_dlog(o, out);
    if (degen->parsed()) return cmd_degenerate(o, out);
    if (trace_cmd->parsed()) return cmd_trace_curve(o, out);
    if (nabla_cmd->parsed()) return cmd_nabla(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e.kind());
  }
  return kExitUsage;
}

}  // namespace addchow
