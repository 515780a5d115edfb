#ifndef ADDCHOW_CYCLES_MAPS_HPP
#define ADDCHOW_CYCLES_MAPS_HPP

#include <vector>

#include "addchow/cycles/cycle.hpp"
#include "addchow/forms/differential_form.hpp"
#include "addchow/presentation/presentation.hpp"

namespace addchow {

/// a * (-1, b_1/c, ..., b_{n-1}/c, -1/c) with c = -1 + sum b_i, a 0-cycle on
/// Q^n (n = b.size() + 1). Empty when a = 0 or c = 0. Throws ZeroArgument
/// for a zero b_i.
ZeroCycle phi(const FieldElement& a, const std::vector<FieldElement>& b);
/// Term-wise extension to presentation elements.
ZeroCycle phi(const PresentationElement& alpha);
/// The same map in the rescaled coordinates u' = lambda u: the formula is
/// applied to u' and the point is read back in u, giving lambda * phi.
ZeroCycle phi_scaled(const FieldElement& a, const std::vector<FieldElement>& b, const FieldElement& lambda);

/// gamma_{n-1} substituted at the coordinates of a point, in its own field.
DifferentialForm gamma_of_point(const QPoint& p);
/// Sum of m * Tr(gamma_{n-1}(x)) over the cycle, an (n-1)-form over the base.
/// Throws BadPosition if some point has a zero coordinate.
DifferentialForm eval_gamma(const ZeroCycle& c);

/// (x_0, -x_1 x_0/(1-x_0), ..., -x_n x_0/(1-x_0), -x_0/(1-x_0)) on Q^{n+1}.
/// Throws Singular at x_0 = 1.
QPoint nabla(const QPoint& x);

}  // namespace addchow

#endif  // ADDCHOW_CYCLES_MAPS_HPP
