#ifndef ADDCHOW_DEGENERATION_DEGENERATION_HPP
#define ADDCHOW_DEGENERATION_DEGENERATION_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "addchow/forms/differential_form.hpp"
#include "addchow/verify/report.hpp"

namespace addchow {

/// A log form omega = (numerator/denominator) du_1 ^ ... ^ du_m in the
/// variables u_i (plus constant parameters), degenerated by u_i = t^{-r_i} v_i.
struct DegenerationScenario {
  std::string name;
  Characteristic characteristic = 0;
  std::vector<std::string> variables;        // u_1..u_m
  std::vector<std::string> limit_variables;  // v_1..v_m
  std::vector<std::string> parameters;       // constants such as a, b
  std::vector<int> weights;                  // r_1..r_m
  std::string numerator = "1";
  std::string denominator = "1";
  // Expected values, as strings over Q/F_p(t, v.., parameters).
  std::optional<long> expected_s;
  std::optional<std::string> expected_nu, expected_gamma;
  std::optional<std::string> expected_nu_limit, expected_gamma_limit;
  std::optional<std::string> expected_pullback;
  /// Compare the limits with gamma and nu evaluated at (-sum v, v_1, ..).
  bool simplex_closed_form = false;
  /// Run the residue check along the cuspidal special fibre.
  bool cusp_residue = false;
};

/// f = u_1...u_{n+1}(1 - sum u), weights 1.
DegenerationScenario simplex_scenario(int n, Characteristic p = 0);
/// f = u_1^2 - u_2^3 - a u_2 - b, weights (3, 2).
DegenerationScenario elliptic_scenario(Characteristic p = 0);
/// omega = du_1 ^ ... ^ du_{2n-1} / (u_1^2 + ... + u_{2n-1}^2 - 1)^n, weights -1.
DegenerationScenario quadric_scenario(int n, Characteristic p = 0);
/// "simplex", "simplex3", "elliptic", "quadric", "quadric3"; nullopt otherwise.
std::optional<DegenerationScenario> builtin_scenario(const std::string& name, Characteristic p = 0);

DegenerationScenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const DegenerationScenario& sc);
/// Reads a scenario file (Parse errors on bad JSON or missing keys).
DegenerationScenario load_scenario(const std::string& path);

struct SplitResult {
  TowerPtr source;  // F(u.., parameters)
  TowerPtr target;  // F(t, v.., parameters); t has index 0
  DifferentialForm omega;
  DifferentialForm pulled;
  long s = 0;
  DifferentialForm nu;
  DifferentialForm gamma;
  /// N - sum r_i when omega = c du/f with f a polynomial of degree <= m + 1
  /// and all weights nonnegative.
  std::optional<long> homogeneous_s;
};

/// Pulls omega back and writes it as t^s nu + s t^{s-1} dt ^ gamma.
/// Throws CharacteristicObstruction when s is not invertible and
/// NegativeLimitValuation when nu or gamma has a pole at t = 0.
SplitResult split(const DegenerationScenario& sc);

/// Substitutes t = 0 (coefficients must be regular there).
DifferentialForm at_t_zero(const DifferentialForm& a);
/// Exterior derivative in the v-variables only (parameters and t held fixed).
DifferentialForm d_relative(const DifferentialForm& a, std::size_t num_limit_variables);

/// nu|_{t=0} = d_v gamma|_{t=0}.
CheckResult limit_identity(const SplitResult& r, std::size_t num_limit_variables);

/// Residue checks along v_1^2 = v_2^3 for the elliptic split, through the
/// parametrisation v_1 = s^3, v_2 = s^2.
struct CuspReport {
  std::string residue_gamma;       // pull-back of Res(gamma|0)
  std::string residue_nu;          // pull-back of Res(nu|0)
  std::string d_residue_gamma;     // d of the first
  int epsilon = 0;                 // d Res(gamma|0) = epsilon * Res(nu|0); 0 if neither sign works
  std::vector<CheckResult> checks;
};
CuspReport cusp_residue_check(const SplitResult& elliptic);

struct ScenarioOutcome {
  std::optional<SplitResult> split;
  std::vector<CheckResult> checks;
  std::optional<CuspReport> cusp;
  /// Error kind name when the split was refused.
  std::string error;
};

/// Runs the split and every check the scenario asks for.
ScenarioOutcome run_scenario(const DegenerationScenario& sc);

}  // namespace addchow

#endif  // ADDCHOW_DEGENERATION_DEGENERATION_HPP
