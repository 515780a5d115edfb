// Acceptance run: one PASS/FAIL line per criterion. Criteria 1-8 are read
// off the JSON report of `verify --suite all`; criterion 9 drives `phi --scale`.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "addchow/cli/commands.hpp"
#include "addchow/cycles/cycle.hpp"
#include "addchow/fields/parse.hpp"
#include "addchow/fields/random.hpp"

using nlohmann::json;

namespace {

struct Verdict {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

json run_json(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = addchow::run_cli(args, out, err);
  return json::parse(out.str());
}

const json& suite(const json& report, const std::string& name) {
  for (const auto& s : report["suites"])
    if (s["suite"] == name) return s;
  throw std::runtime_error("suite missing from report: " + name);
}

std::vector<json> checks_matching(const json& s, const std::string& needle) {
  std::vector<json> out;
  for (const auto& c : s["checks"])
    if (c["name"].get<std::string>().find(needle) != std::string::npos) out.push_back(c);
  return out;
}

// Every check whose name contains needle passed with at least min_total
// instances; expected_count checks must exist when given.
void require_checks(Verdict& v, const json& s, const std::string& needle, int min_total, int expected_count = -1) {
  const auto cs = checks_matching(s, needle);
  v.require(!cs.empty(), "no check named like '" + needle + "'");
  if (expected_count >= 0)
    v.require(static_cast<int>(cs.size()) == expected_count,
              std::to_string(cs.size()) + " checks like '" + needle + "', expected " + std::to_string(expected_count));
  for (const auto& c : cs) {
    v.require(c["status"] == "PASS", c["name"].get<std::string>() + ": " + c["status"].get<std::string>() + " " +
                                         std::to_string(c["passed"].get<int>()) + "/" + std::to_string(c["total"].get<int>()));
    v.require(c["total"].get<int>() >= min_total,
              c["name"].get<std::string>() + ": only " + std::to_string(c["total"].get<int>()) + " instances");
  }
}

void report_line(int& failures, const std::string& label, const Verdict& v) {
  std::cout << (v.ok ? "PASS" : "FAIL") << "  " << label;
  if (!v.ok) std::cout << "  -- " << v.why;
  std::cout << std::endl;
  if (!v.ok) ++failures;
}

}  // namespace

int main() {
  int failures = 0;
  int code = 0;

  const auto t_all = std::chrono::steady_clock::now();
  const json all = run_json({"verify", "--suite", "all", "--format", "json"}, code);
  const double all_seconds = seconds_since(t_all);

  const auto t_main = std::chrono::steady_clock::now();
  const json main_only = run_json({"verify", "--suite", "theorem5_2", "--format", "json"}, code);
  const double main_seconds = seconds_since(t_main);

  {
    Verdict v;
    const json& s = suite(main_only, "theorem5_2");
    for (const std::string f : {"Q(t1,t2,t3)", "F5(t1,t2)", "Q(t)[th]/(th^2 - t)"})
      for (int n = 2; n <= 4; ++n)
        require_checks(v, s, "to_omega [" + f + ", n=" + std::to_string(n) + "]", 200, 1);
    v.require(main_seconds < 60.0, "took " + std::to_string(main_seconds) + " s");
    report_line(failures, "1 main theorem eval_gamma(phi) = (-1)^(n+1) to_omega, 3 fields, n = 2..4, < 60 s (" +
                              std::to_string(static_cast<int>(main_seconds)) + " s)", v);
  }
  {
    Verdict v;
    const json& lin = suite(all, "lemma2_5");
    require_checks(v, lin, "boundary of the linearity curve matches the display", 100, 3);
    require_checks(v, lin, "eval_gamma of the linearity-curve boundary is 0", 100, 3);
    for (const auto& c : checks_matching(lin, "boundary of the linearity curve matches the display"))
      v.require(c["detail"].get<std::string>().find("instances with a + b = 0") != std::string::npos &&
                    c["detail"].get<std::string>().rfind("0 instances", 0) != 0,
                "a + b = 0 branch not exercised");
    const json& rel = suite(all, "prop4_2");
    require_checks(v, rel, "boundary of Gamma(b, u) matches the display", 100, 3);
    require_checks(v, rel, "eval_gamma of the Gamma(b, u) boundary is 0", 100, 3);
    report_line(failures, "2 relation curves: boundaries match the displays, eval_gamma of each boundary is 0", v);
  }
  {
    Verdict v;
    const json& s = suite(all, "prop4_4");
    require_checks(v, s, "a_1/a_0 equals the matrix trace of t [quadratic", 50, 1);
    require_checks(v, s, "a_1/a_0 equals the matrix trace of t [cubic", 20, 1);
    require_checks(v, s, "Tr eval_gamma(t*alpha) = eval_gamma((a_1/a_0)*alpha) [quadratic", 50, 1);
    require_checks(v, s, "Tr eval_gamma(t*alpha) = eval_gamma((a_1/a_0)*alpha) [cubic", 20, 1);
    require_checks(v, s, "boundary of the trace curve", 20, 2);
    report_line(failures, "3 trace: a_1/a_0 = matrix trace, ev-level trace identity (50 quadratic, 20 cubic)", v);
  }
  {
    Verdict v;
    const json& s = suite(all, "lemma4_1");
    for (const std::string f : {"Q(t1,t2,t3)", "F2(t1,t2)", "F5(t1,t2)"})
      for (int n = 2; n <= 4; ++n) {
        const std::string where = "[" + f + ", n=" + std::to_string(n) + "]";
        require_checks(v, s, "D additive in the first slot " + where, 200, 1);
        require_checks(v, s, "D is a derivation in the first slot " + where, 200, 1);
        require_checks(v, s, "db_{n-1} " + where, 200, 1);
        require_checks(v, s, "relation element maps to 0 " + where, 200, 1);
      }
    report_line(failures, "4 presentation: D additive, Leibniz, section, relations vanish (char 0, 2, 5; n = 2..4)", v);
  }
  {
    Verdict v;
    const json& s = suite(all, "lemma5_1");
    require_checks(v, s, "Res_{v", 1, 3 + 4 + 5 + 6);
    require_checks(v, s, "d gamma_", 1, 5);
    report_line(failures, "5 residues of gamma_n along all n+2 faces (n = 1..4), d gamma = nu (n = 1..5)", v);
  }
  {
    Verdict v;
    const json& s = suite(all, "degeneration");
    for (const auto& c : s["checks"]) v.require(c["status"] != "FAIL", c["name"].get<std::string>() + " failed");
    for (int n = 0; n <= 3; ++n) {
      const std::string sc = "simplex" + std::to_string(n) + ": ";
      require_checks(v, s, sc + "gamma|t=0 equals the simplex closed form", 1, 1);
      require_checks(v, s, sc + "nu|t=0 equals the simplex closed form", 1, 1);
    }
    require_checks(v, s, "elliptic: nu matches expected", 1, 1);
    require_checks(v, s, "elliptic: gamma matches expected", 1, 1);
    require_checks(v, s, "elliptic: Res(gamma|0) pulls back to 1/s", 1, 1);
    require_checks(v, s, "elliptic: d Res(gamma|0) = epsilon Res(nu|0)", 1, 1);
    require_checks(v, s, "quadric2: nu|t=0 matches expected", 1, 1);
    require_checks(v, s, "quadric2: gamma|t=0 matches expected", 1, 1);
    require_checks(v, s, ": limit identity", 1, 8);
    require_checks(v, s, ": reconstruction omega", 1, 8);
    require_checks(v, s, "perturbed simplex weights", 10);
    report_line(failures, "6 degenerations: simplex, elliptic with cusp residues, quadric limits, reconstruction", v);
  }
  {
    Verdict v;
    const json& s = suite(all, "challenge");
    for (int n = 1; n <= 3; ++n)
      require_checks(v, s, "gamma_n(nabla x) = (-1)^n d gamma_{n-1}(x) [Q(t1,t2), n=" + std::to_string(n) + "]", 100, 1);
    report_line(failures, "7 challenge: gamma_n(nabla x) = (-1)^n d gamma_{n-1}(x), n = 1..3", v);
  }
  {
    Verdict v;
    const json& s = suite(all, "prop4_2");
    require_checks(v, s, "eval_gamma(iota(symbol_to_point(s))) = (-1)^(n+1) dlog(s)", 100, 3);
    report_line(failures, "8 Milnor square: eval_gamma(iota(symbol_to_point(s))) = (-1)^(n+1) dlog_symbol(s)", v);
  }
  {
    Verdict v;
    const addchow::TowerPtr T = addchow::parse_tower("Q(t1,t2)");
    addchow::RandomSource rng(2024);
    for (int i = 0; i < 20; ++i) {
      const std::string a = rng.nonzero_element(T).to_string();
      const std::string b1 = rng.nonzero_element(T).to_string(), b2 = rng.nonzero_element(T).to_string();
      const addchow::FieldElement lambda = rng.nonzero_element(T);
      const std::vector<std::string> base{"phi", "--field", "Q(t1,t2)", "--n", "3", "--a", a, "--b", b1, "--b", b2};
      std::vector<std::string> scaled = base;
      scaled.insert(scaled.end(), {"--scale", lambda.to_string()});
      std::ostringstream o1, o2, e;
      const int c1 = addchow::run_cli(base, o1, e), c2 = addchow::run_cli(scaled, o2, e);
      v.require(c1 == 0 && c2 == 0, "phi failed: " + e.str());
      if (c1 != 0 || c2 != 0) break;
      auto strip = [](std::string s) { return s.substr(0, s.find_last_not_of('\n') + 1); };
      const addchow::ZeroCycle plain = addchow::parse_cycle(T, 3, strip(o1.str()));
      const addchow::ZeroCycle with_scale = addchow::parse_cycle(T, 3, strip(o2.str()));
      v.require(with_scale == addchow::star(lambda, plain), "lambda = " + lambda.to_string());
    }
    report_line(failures, "9 scale covariance: phi --scale lambda equals lambda * phi for 20 random lambda", v);
  }
  {
    Verdict v;
    v.require(all_seconds < 300.0, "took " + std::to_string(all_seconds) + " s");
    report_line(failures, "verify --suite all < 5 min (" + std::to_string(static_cast<int>(all_seconds)) + " s)", v);
  }
  std::cout << failures << " criteria failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
