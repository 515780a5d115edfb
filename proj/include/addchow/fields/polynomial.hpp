#ifndef ADDCHOW_FIELDS_POLYNOMIAL_HPP
#define ADDCHOW_FIELDS_POLYNOMIAL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "addchow/fields/monomial.hpp"
#include "addchow/fields/scalar.hpp"

namespace addchow {

struct Term {
  Monomial monomial;
  mpq_class coefficient;
};

/// Sparse multivariate polynomial over Q or F_p. Terms are kept sorted in
/// strictly decreasing graded-lex order with nonzero coefficients, so two
/// polynomials are equal exactly when their term lists are.
class Poly {
 public:
  explicit Poly(Characteristic p = 0) : p_(p) {}

  static Poly constant(const mpq_class& c, Characteristic p);
  static Poly variable(std::size_t index, Characteristic p);
  static Poly term(const Monomial& m, const mpq_class& c, Characteristic p);

  Characteristic characteristic() const noexcept { return p_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_one() const;
  /// Constant term value (0 if absent).
  mpq_class constant_value() const;

  const Term& leading_term() const { return terms_.front(); }
  const mpq_class& leading_coefficient() const { return terms_.front().coefficient; }

  std::uint32_t total_degree() const noexcept { return terms_.empty() ? 0 : terms_.front().monomial.degree(); }
  std::uint32_t degree_in(std::size_t var) const noexcept;
  std::uint32_t valuation_in(std::size_t var) const noexcept;
  std::uint32_t variable_mask() const noexcept;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  Poly scaled(const mpq_class& c) const;
  Poly multiplied_by(const Monomial& m, const mpq_class& c) const;
  Poly pow(unsigned e) const;

  Poly derivative(std::size_t var) const;
  /// Substitutes a scalar for one variable.
  Poly evaluated(std::size_t var, const mpq_class& value) const;
  /// Substitutes a polynomial for one variable.
  Poly substituted(std::size_t var, const Poly& value) const;
  /// Coefficients with respect to var, index = power; entries do not involve var.
  std::vector<Poly> coefficients_in(std::size_t var) const;
  static Poly from_coefficients_in(std::size_t var, std::span<const Poly> coeffs, Characteristic p);
  /// Divides by var^k; requires valuation_in(var) >= k.
  Poly divided_by_power(std::size_t var, std::uint32_t k) const;
  /// new_index[i] is the index variable i moves to; -1 means it must not occur.
  Poly remapped(std::span<const int> new_index) const;

  /// Leading coefficient 1 (graded-lex). Zero stays zero.
  Poly monic() const;
  /// Char 0: integer coefficients with gcd 1 and positive leading coefficient.
  /// Char p: monic.
  Poly primitive() const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  friend class PolyBuilder;
  void canonicalize();

  std::vector<Term> terms_;
  Characteristic p_;
};

/// Exact quotient a / b if b divides a.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);
/// Exact quotient; throws if b does not divide a.
Poly exact_quotient(const Poly& a, const Poly& b);
/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// Polynomial square root if a is a perfect square in the polynomial ring.
std::optional<Poly> sqrt(const Poly& a);

}  // namespace addchow

#endif  // ADDCHOW_FIELDS_POLYNOMIAL_HPP
