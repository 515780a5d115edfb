#ifndef ADDCHOW_FIELDS_FACTOR_HPP
#define ADDCHOW_FIELDS_FACTOR_HPP

#include <vector>

#include "addchow/fields/univariate.hpp"

namespace addchow {

struct Factor {
  UPoly poly;
  int multiplicity;
};

/// Monic irreducible factors with multiplicities; f equals its leading
/// coefficient times the product. Coverage:
///   F_p: any degree (Cantor-Zassenhaus).
///   Q: rational roots of any degree, then a remaining part of degree <= 4.
///   Function fields: degree <= 2 in characteristic != 2.
///   Extension towers: degree 1.
/// Anything else raises UnsupportedDegree.
std::vector<Factor> factor_univariate(const UPoly& f);

/// Square-free decomposition (Yun); requires characteristic 0 or larger than deg f.
std::vector<Factor> squarefree_decomposition(const UPoly& f);

}  // namespace addchow

#endif  // ADDCHOW_FIELDS_FACTOR_HPP
