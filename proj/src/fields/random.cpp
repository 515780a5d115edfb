#include "addchow/fields/random.hpp"

#include <algorithm>

namespace addchow {

long RandomSource::integer(long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(rng_);
}

mpq_class RandomSource::small_rational(Characteristic p) {
  if (p != 0) return mpq_class(integer(1, static_cast<long>(std::min<Characteristic>(p - 1, 1000))));
  long n = 0;
  while (n == 0) n = integer(-5, 5);
  mpq_class r(n, integer(1, 3));
  r.canonicalize();
  return r;
}

Poly RandomSource::small_poly(const TowerPtr& tower, int max_degree, int max_terms) {
  const Characteristic p = tower->characteristic();
  const std::size_t m = tower->num_variables();
  Poly out(p);
  int terms = static_cast<int>(integer(1, max_terms));
  for (int k = 0; k < terms; ++k) {
    Monomial mono;
    if (m > 0) {
      int d = static_cast<int>(integer(0, max_degree));
      for (int j = 0; j < d; ++j) {
        std::size_t v = static_cast<std::size_t>(integer(0, static_cast<long>(m) - 1));
        mono.set(v, mono[v] + 1);
      }
    }
    out += Poly::term(mono, small_rational(p), p);
  }
  return out;
}

RationalFunction RandomSource::base_element(const TowerPtr& tower) {
  Poly num = small_poly(tower, 2, 3);
  if (tower->num_variables() > 0 && integer(0, 2) == 0) {
    Poly den = small_poly(tower, 1, 2);
    if (!den.is_zero()) return RationalFunction::fraction(num, den);
  }
  return RationalFunction(num);
}

FieldElement RandomSource::element(const TowerPtr& tower) {
  std::vector<RationalFunction> c{base_element(tower)};
  for (int j = 1; j < tower->degree(); ++j) {
    if (integer(0, 1)) c.push_back(RationalFunction(small_poly(tower, 1, 2)));
    else c.emplace_back(tower->characteristic());
  }
  return FieldElement(tower, std::move(c));
}

FieldElement RandomSource::nonzero_element(const TowerPtr& tower) {
  for (;;) {
    FieldElement x = element(tower);
    if (!x.is_zero()) return x;
  }
}

FieldElement RandomSource::element_avoiding(const TowerPtr& tower, const std::vector<FieldElement>& excluded) {
  for (;;) {
    FieldElement x = nonzero_element(tower);
    if (std::find(excluded.begin(), excluded.end(), x) == excluded.end()) return x;
  }
}

}  // namespace addchow
