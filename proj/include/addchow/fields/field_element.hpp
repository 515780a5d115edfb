#ifndef ADDCHOW_FIELDS_FIELD_ELEMENT_HPP
#define ADDCHOW_FIELDS_FIELD_ELEMENT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "addchow/fields/field_tower.hpp"

namespace addchow {

/// Element of a FieldTower, stored as the theta-coefficients x_0..x_{N-1}
/// (each a canonical rational function) of x = sum x_j theta^j. Without an
/// extension N = 1. Equality is representation equality.
class FieldElement {
 public:
  explicit FieldElement(TowerPtr tower);
  /// Coefficients of any length; reduced modulo the minimal polynomial.
  FieldElement(TowerPtr tower, std::vector<RationalFunction> coefficients);

  static FieldElement from_int(TowerPtr tower, long v);
  static FieldElement from_rational(TowerPtr tower, const mpq_class& v);
  static FieldElement from_base(TowerPtr tower, RationalFunction v);
  /// A transcendental or the extension generator, by name.
  static FieldElement variable(TowerPtr tower, std::string_view name);
  static FieldElement variable(TowerPtr tower, std::size_t index);
  static FieldElement generator(TowerPtr tower);

  const TowerPtr& tower() const noexcept { return tower_; }
  const std::vector<RationalFunction>& coefficients() const noexcept { return c_; }
  Characteristic characteristic() const noexcept { return tower_->characteristic(); }

  bool is_zero() const;
  bool is_one() const;
  /// No theta component.
  bool in_base() const;
  /// Value in the function field; throws InvalidArgument unless in_base().
  const RationalFunction& base_value() const;
  /// Same value viewed in another tower: the base of an extension, or an
  /// extension of this element's tower, or a function field whose variables
  /// extend this one's. Throws TowerMismatch otherwise.
  FieldElement moved_to(const TowerPtr& target) const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Throws DivisionByZero.
  FieldElement inverse() const;
  FieldElement pow(int e) const;
  FieldElement scaled(const mpq_class& c) const;

  /// Formal partial derivative by a transcendental.
  FieldElement partial(std::size_t var) const;
  FieldElement partial(std::string_view name) const;
  /// Trace down to the function field; throws NoExtension.
  FieldElement trace() const;

  /// Common-denominator rendering with the generator as the last variable.
  std::string to_string() const;

 private:
  void reduce();

  TowerPtr tower_;
  std::vector<RationalFunction> c_;
};

}  // namespace addchow

#endif  // ADDCHOW_FIELDS_FIELD_ELEMENT_HPP
