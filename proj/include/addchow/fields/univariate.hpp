#ifndef ADDCHOW_FIELDS_UNIVARIATE_HPP
#define ADDCHOW_FIELDS_UNIVARIATE_HPP

#include <string>
#include <utility>
#include <vector>

#include "addchow/fields/field_element.hpp"

namespace addchow {

/// Dense univariate polynomial with coefficients in a FieldTower, low to high.
class UPoly {
 public:
  explicit UPoly(TowerPtr tower) : tower_(std::move(tower)) {}
  UPoly(TowerPtr tower, std::vector<FieldElement> coefficients);
  static UPoly x(const TowerPtr& tower);
  static UPoly constant(const FieldElement& c);

  const TowerPtr& tower() const noexcept { return tower_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<FieldElement>& coefficients() const noexcept { return c_; }
  FieldElement coefficient(std::size_t i) const;
  const FieldElement& leading() const { return c_.back(); }

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b);

  UPoly scaled(const FieldElement& c) const;
  std::pair<UPoly, UPoly> divmod(const UPoly& b) const;
  UPoly rem(const UPoly& b) const { return divmod(b).second; }
  UPoly monic() const;
  UPoly derivative() const;
  FieldElement eval(const FieldElement& x) const;
  /// Coefficients moved into another tower (see FieldElement::moved_to).
  UPoly moved_to(const TowerPtr& target) const;

  std::string to_string(const std::string& var) const;

 private:
  void trim();

  TowerPtr tower_;
  std::vector<FieldElement> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// s with s*a = 1 mod m, for a coprime to m.
UPoly inverse_mod(const UPoly& a, const UPoly& m);

/// Monic minimal polynomial over the function field of an element of an
/// extension tower (or of a function-field element, giving degree 1).
UPoly minimal_polynomial(const FieldElement& x);

/// Coefficients a_0..a_{N-1} of a monic minimal polynomial of degree N.
struct MinimalPolynomialData {
  std::vector<FieldElement> a;
  int degree = 0;
};

MinimalPolynomialData minimal_polynomial_data(const UPoly& monic_poly);

}  // namespace addchow

#endif  // ADDCHOW_FIELDS_UNIVARIATE_HPP
