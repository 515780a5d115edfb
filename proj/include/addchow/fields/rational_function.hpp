#ifndef ADDCHOW_FIELDS_RATIONAL_FUNCTION_HPP
#define ADDCHOW_FIELDS_RATIONAL_FUNCTION_HPP

#include <span>
#include <string>

#include "addchow/fields/polynomial.hpp"

namespace addchow {

/// Element of the rational function field over Q or F_p. Canonical: the
/// numerator and denominator are coprime and the denominator is monic, so
/// equal functions have identical representations.
class RationalFunction {
 public:
  explicit RationalFunction(Characteristic p = 0) : num_(p), den_(Poly::constant(1, p)) {}
  explicit RationalFunction(Poly numerator);
  static RationalFunction constant(const mpq_class& c, Characteristic p);
  static RationalFunction variable(std::size_t index, Characteristic p);
  /// num/den reduced to canonical form; throws DivisionByZero if den == 0.
  static RationalFunction fraction(Poly num, Poly den);

  Characteristic characteristic() const noexcept { return num_.characteristic(); }
  const Poly& numerator() const noexcept { return num_; }
  const Poly& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  std::uint32_t variable_mask() const { return num_.variable_mask() | den_.variable_mask(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Caller guarantees gcd(num, den) = 1; only the denominator is made monic.
  static RationalFunction from_coprime(Poly num, Poly den);

  RationalFunction inverse() const;
  RationalFunction scaled(const mpq_class& c) const;
  RationalFunction pow(int e) const;

  RationalFunction derivative(std::size_t var) const;
  /// Throws DivisionByZero if the denominator vanishes at the value.
  RationalFunction evaluated(std::size_t var, const mpq_class& value) const;
  RationalFunction substituted(std::size_t var, const RationalFunction& value) const;
  RationalFunction remapped(std::span<const int> new_index) const;
  /// Order of vanishing along var = 0 (negative for poles); the zero function has no valuation.
  int valuation_in(std::size_t var) const;

  /// Integer-coefficient rendering: `num` or `num/den` with parenthesised sums.
  std::string to_string(std::span<const std::string> names) const;

 private:
  RationalFunction(Poly num, Poly den, bool) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

/// Renders an integer-coefficient fraction num/den with the shared scalar
/// content cleared; used by element and form printers.
std::string render_fraction(const Poly& num, const Poly& den, std::span<const std::string> names);

}  // namespace addchow

#endif  // ADDCHOW_FIELDS_RATIONAL_FUNCTION_HPP
