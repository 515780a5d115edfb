#include "addchow/cycles/maps.hpp"

#include "addchow/error.hpp"

namespace addchow {

namespace {

// The displayed point (-1, b_1/c, ..., -1/c), or nothing when c = 0.
std::optional<QPoint> phi_point(const TowerPtr& t, const std::vector<FieldElement>& b) {
  FieldElement c = FieldElement::from_int(t, -1);
  for (const auto& x : b) {
    if (x.is_zero()) fail(ErrorKind::ZeroArgument, "phi needs nonzero b entries");
    c += x;
  }
  if (c.is_zero()) return std::nullopt;
  const FieldElement ci = c.inverse();
  std::vector<FieldElement> coords{FieldElement::from_int(t, -1)};
  for (const auto& x : b) coords.push_back(x * ci);
  coords.push_back(-ci);
  return QPoint(std::move(coords));
}

}  // namespace

ZeroCycle phi(const FieldElement& a, const std::vector<FieldElement>& b) {
  const TowerPtr& t = a.tower();
  for (const auto& x : b) require_same_tower(*t, *x.tower());
  ZeroCycle r(t, static_cast<int>(b.size()) + 1);
  const auto p = phi_point(t, b);
  if (!p || a.is_zero()) return r;
  r.add(1, star(a, *p));
  return r;
}

ZeroCycle phi(const PresentationElement& alpha) {
  ZeroCycle r(alpha.tower(), alpha.degree() + 1);
  for (const auto& term : alpha.terms()) r = r + phi(term.a, term.b);
  return r;
}

ZeroCycle phi_scaled(const FieldElement& a, const std::vector<FieldElement>& b, const FieldElement& lambda) {
  if (lambda.is_zero()) fail(ErrorKind::InvalidArgument, "the coordinate scale must be nonzero");
  const TowerPtr& t = a.tower();
  ZeroCycle r(t, static_cast<int>(b.size()) + 1);
  const auto p = phi_point(t, b);
  if (!p || a.is_zero()) return r;
  // u'-coordinates of a * p are those of the displayed formula; u = u'/lambda.
  r.add(1, star(lambda, star(a, *p)));
  return r;
}

DifferentialForm gamma_of_point(const QPoint& p) {
  if (!p.good_position()) fail(ErrorKind::BadPosition, "point not in good position: " + p.to_string());
  return gamma_at(p.coordinates());
}

DifferentialForm eval_gamma(const ZeroCycle& c) {
  DifferentialForm r(c.base(), c.n() - 1);
  for (const auto& e : c.entries()) {
    DifferentialForm g = gamma_of_point(e.point);
    if (!e.point.tower()->same_as(*c.base())) g = trace_form(g);
    r += g.scaled(FieldElement::from_int(c.base(), e.multiplicity));
  }
  return r;
}

QPoint nabla(const QPoint& x) {
  const TowerPtr& t = x.tower();
  const FieldElement one = FieldElement::from_int(t, 1);
  const FieldElement denom = one - x[0];
  if (denom.is_zero()) fail(ErrorKind::Singular, "nabla is singular at x_0 = 1");
  const FieldElement f = -(x[0] / denom);
  std::vector<FieldElement> out{x[0]};
  for (int i = 1; i <= x.n(); ++i) out.push_back(x[static_cast<std::size_t>(i)] * f);
  out.push_back(f);
  return QPoint(std::move(out));
}

}  // namespace addchow
