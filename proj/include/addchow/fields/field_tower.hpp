#ifndef ADDCHOW_FIELDS_FIELD_TOWER_HPP
#define ADDCHOW_FIELDS_FIELD_TOWER_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "addchow/fields/rational_function.hpp"

namespace addchow {

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

/// Simple extension k[theta]/(P) with P monic. coefficients holds c_0..c_{N-1}
/// of P = theta^N + c_{N-1} theta^{N-1} + ... + c_0.
struct ExtensionData {
  std::string name;
  std::vector<RationalFunction> coefficients;
};

/// A computable field: Q or F_p, then a rational function field in named
/// transcendentals, then optionally one separable simple extension.
/// Towers are immutable and shared between the elements that live in them.
class FieldTower : public std::enable_shared_from_this<FieldTower> {
 public:
  static TowerPtr function_field(Characteristic p, std::vector<std::string> variables);
  /// Adjoins a root of P = sum c_j theta^j (j = 0..N, c_N != 0, made monic).
  /// Throws InvalidArgument if P is inseparable, or reducible where factoring
  /// applies.
  static TowerPtr extension(const TowerPtr& base, std::string name, std::vector<RationalFunction> coefficients);

  Characteristic characteristic() const noexcept { return p_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t num_variables() const noexcept { return variables_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws UnknownVariable.
  std::size_t variable_index(std::string_view name) const;

  bool has_extension() const noexcept { return extension_.has_value(); }
  /// Throws NoExtension.
  const ExtensionData& extension_data() const;
  /// Degree over the function field (1 without an extension).
  int degree() const noexcept { return extension_ ? static_cast<int>(extension_->coefficients.size()) : 1; }
  /// The function field below the extension (the tower itself when there is none).
  TowerPtr base() const;

  /// Variable names followed by the generator name, for rendering.
  const std::vector<std::string>& render_names() const noexcept { return render_names_; }
  /// "Q(t1,t2)", "F5(t)", "Q(t)[th]/(th^2 - t)".
  std::string to_string() const;
  bool same_as(const FieldTower& o) const;

  /// Tr(theta^j) for j = 0..N-1.
  const std::vector<RationalFunction>& power_traces() const noexcept { return power_traces_; }
  /// d(theta)/d(t_var) as theta-coefficients.
  const std::vector<RationalFunction>& theta_partial(std::size_t var) const { return theta_partials_.at(var); }

 private:
  FieldTower() = default;

  Characteristic p_ = 0;
  std::vector<std::string> variables_;
  std::vector<std::string> render_names_;
  std::optional<ExtensionData> extension_;
  TowerPtr base_;
  std::vector<RationalFunction> power_traces_;
  std::vector<std::vector<RationalFunction>> theta_partials_;
};

/// Throws TowerMismatch unless the towers are structurally equal.
void require_same_tower(const FieldTower& a, const FieldTower& b);

}  // namespace addchow

#endif  // ADDCHOW_FIELDS_FIELD_TOWER_HPP
