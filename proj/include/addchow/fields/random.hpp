#ifndef ADDCHOW_FIELDS_RANDOM_HPP
#define ADDCHOW_FIELDS_RANDOM_HPP

#include <cstdint>
#include <random>

#include "addchow/fields/field_element.hpp"

namespace addchow {

/// Seeded generator of small random field elements. Sizes are kept small on
/// purpose so that identities stay cheap to check exactly.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() noexcept { return rng_; }
  long integer(long lo, long hi);
  /// Nonzero small scalar: n/d with |n| <= 5, d <= 3 over Q, a nonzero
  /// residue over F_p.
  mpq_class small_rational(Characteristic p = 0);
  /// Polynomial in the tower's transcendentals of degree <= max_degree with
  /// at most max_terms terms (possibly zero).
  Poly small_poly(const TowerPtr& tower, int max_degree, int max_terms);
  /// Random function-field element: a small polynomial, sometimes divided
  /// by a small polynomial. Extension towers also get a theta component.
  FieldElement element(const TowerPtr& tower);
  FieldElement nonzero_element(const TowerPtr& tower);
  /// Nonzero and outside the excluded values.
  FieldElement element_avoiding(const TowerPtr& tower, const std::vector<FieldElement>& excluded);

 private:
  RationalFunction base_element(const TowerPtr& tower);
  std::mt19937_64 rng_;
};

}  // namespace addchow

#endif  // ADDCHOW_FIELDS_RANDOM_HPP
