#ifndef ADDCHOW_FORMS_DIFFERENTIAL_FORM_HPP
#define ADDCHOW_FORMS_DIFFERENTIAL_FORM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "addchow/fields/field_element.hpp"

namespace addchow {

/// Set of differentials dt_i, as a bitmask over the tower's transcendentals.
using WedgeKey = std::uint32_t;

/// Keys of equal size compare lexicographically as increasing index tuples.
struct WedgeKeyOrder {
  bool operator()(WedgeKey a, WedgeKey b) const noexcept;
};

/// Absolute Kaehler form over a tower. Omega^1 is free on dt_1..dt_m for the
/// supported towers, so a form is a map from increasing index tuples to
/// coefficients; absent keys are zero.
class DifferentialForm {
 public:
  using Terms = std::map<WedgeKey, FieldElement, WedgeKeyOrder>;

  DifferentialForm(TowerPtr tower, int degree);
  static DifferentialForm function(const FieldElement& f);
  /// c * dt_{i1} ^ ... ^ dt_{ik} for the variables in key.
  static DifferentialForm monomial(const FieldElement& c, WedgeKey key);

  const TowerPtr& tower() const noexcept { return tower_; }
  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  FieldElement coefficient(WedgeKey key) const;

  DifferentialForm operator-() const;
  friend DifferentialForm operator+(const DifferentialForm& a, const DifferentialForm& b);
  friend DifferentialForm operator-(const DifferentialForm& a, const DifferentialForm& b);
  DifferentialForm& operator+=(const DifferentialForm& o) { return *this = *this + o; }
  DifferentialForm& operator-=(const DifferentialForm& o) { return *this = *this - o; }
  friend bool operator==(const DifferentialForm& a, const DifferentialForm& b);
  /// Multiplication by a function.
  DifferentialForm scaled(const FieldElement& f) const;

  /// `(c) dt1^dt2 + ...` in increasing key order; a 0-form prints as its
  /// coefficient; the zero form prints as 0.
  std::string to_string() const;

 private:
  void add_term(WedgeKey key, const FieldElement& c);

  TowerPtr tower_;
  int degree_;
  Terms terms_;
};

/// Sign of the permutation sorting key_a followed by key_b (0 if they meet).
int wedge_sign(WedgeKey a, WedgeKey b) noexcept;
std::vector<std::size_t> key_indices(WedgeKey key);

DifferentialForm d(const FieldElement& x);
/// Throws ZeroArgument on zero.
DifferentialForm dlog(const FieldElement& x);
DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);
DifferentialForm d_form(const DifferentialForm& a);

/// Residue along var = 0 of a form with at most a logarithmic pole there:
/// alpha = dlog(v) ^ eta + eta' gives eta|_{v=0}. Throws HigherOrderPole.
DifferentialForm residue_along(const DifferentialForm& a, std::size_t var);
/// Coefficient-wise trace down to the function field; throws NoExtension.
DifferentialForm trace_form(const DifferentialForm& a);

/// Pull-back along var_i -> images[i] (function-field source only).
DifferentialForm pullback(const DifferentialForm& a, const std::vector<FieldElement>& images);
/// Value of a function-field element at var_i -> images[i].
FieldElement substitute(const FieldElement& x, const std::vector<FieldElement>& images);
/// Sets var to a constant and drops every term containing d(var).
DifferentialForm restrict_to(const DifferentialForm& a, std::size_t var, const mpq_class& value);
/// Moves every coefficient into another tower (see FieldElement::moved_to).
DifferentialForm moved_to(const DifferentialForm& a, const TowerPtr& target);

/// gamma_{n-1} at coordinates x_0..x_n (sum zero):
///   (1/x_0) sum_{i=1}^n (-1)^i dlog x_1 ^ ... (omit i) ... ^ dlog x_n.
DifferentialForm gamma_at(const std::vector<FieldElement>& x);
/// nu_n at coordinates x_0..x_n: dx_1 ^ ... ^ dx_n / (x_0 x_1 ... x_n).
DifferentialForm nu_at(const std::vector<FieldElement>& x);
/// The universal forms over base(v1..vn) with v_0 = -(v_1 + ... + v_n).
DifferentialForm gamma_form(Characteristic p, int n);
DifferentialForm nu_form(Characteristic p, int n);
/// Coordinates (v_0, v_1, ..., v_n) of the universal point over base(v1..vn).
std::vector<FieldElement> universal_point(Characteristic p, int n);

/// Reads the to_string() format back; degree is needed for "0".
DifferentialForm parse_form(const TowerPtr& tower, const std::string& text, int degree_if_zero = 0);

}  // namespace addchow

#endif  // ADDCHOW_FORMS_DIFFERENTIAL_FORM_HPP
