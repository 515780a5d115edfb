#ifndef ADDCHOW_CYCLES_CURVE_HPP
#define ADDCHOW_CYCLES_CURVE_HPP

#include <string>
#include <vector>

#include "addchow/cycles/cycle.hpp"
#include "addchow/fields/univariate.hpp"

namespace addchow {

/// Rational curve in Q^{n+1} over k: coordinates rho_0..rho_{n+1} in k(s),
/// where s is an extra transcendental appended after k's variables. The
/// base k must be a function field (no algebraic extension).
class ParametrizedCurve {
 public:
  /// Throws InvalidArgument if a coordinate is identically zero, the sum is
  /// nonzero, or the tower is not parameter_tower(base).
  ParametrizedCurve(TowerPtr base, std::vector<FieldElement> coordinates);

  /// k(s), naming the parameter s (or s1, s2, ... if k already uses s).
  static TowerPtr parameter_tower(const TowerPtr& base);

  const TowerPtr& base() const noexcept { return base_; }
  const TowerPtr& tower() const noexcept { return coords_.front().tower(); }
  const std::vector<FieldElement>& coordinates() const noexcept { return coords_; }
  /// The boundary lives on Q^n.
  int n() const noexcept { return static_cast<int>(coords_.size()) - 2; }
  FieldElement parameter() const;
  std::string to_string() const;

 private:
  TowerPtr base_;
  std::vector<FieldElement> coords_;
};

/// Intersection with the face rho_j = 0: each irreducible factor F of the
/// numerator of rho_j contributes its multiplicity times the point
/// (rho_i(theta_F))_{i != j} over k[theta_F]/(F). Factors where another
/// coordinate has a pole are points at infinity and are skipped. Throws
/// BadPosition if a point lands on another face, UnsupportedDegree at the
/// factoring limits.
ZeroCycle curve_face(const ParametrizedCurve& c, std::size_t j);
/// sum_j (-1)^j curve_face(c, j).
ZeroCycle curve_boundary(const ParametrizedCurve& c);

/// (s, -s + u_0/l, u_1/l, ..., u_n/l) with l = -(ab/u_0) s + a + b.
/// Throws ZeroProduct if ab = 0; u must be k-rational in good position.
ParametrizedCurve linearity_curve(const FieldElement& a, const FieldElement& b, const QPoint& u);

/// (-1/b + s, 1/(b-1), -s, -u_1/(b(b-1)), ..., -u_m/(b(b-1))) with
/// sum u_i = 1. Throws DegenerateModulus for b in {0, 1}.
ParametrizedCurve gamma_curve(const FieldElement& b, const std::vector<FieldElement>& u);

/// For P = V^N + a_{N-1} V^{N-1} + ... + a_0 (the minimal polynomial of
/// -1/t) and alpha = (-1, alpha_1, ..., alpha_n) over k: the curve
///   V_0 = s, V_i = -alpha_i s (0 < i < n), Q(s, u) = 0, last = -(sum V + u),
/// where Q(V, u) = b_N V^{N-1} u + ... + b_2 V u + b_1 V + b_0 satisfies
/// Q(V, -alpha_n V) = P(V). Throws DegenerateData if N < 2, a_0 = 0 or some
/// alpha_i = 0.
ParametrizedCurve trace_curve(const MinimalPolynomialData& p, const QPoint& alpha);

}  // namespace addchow

#endif  // ADDCHOW_CYCLES_CURVE_HPP
