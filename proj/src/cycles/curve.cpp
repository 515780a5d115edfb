#include "addchow/cycles/curve.hpp"

#include <algorithm>

#include "addchow/error.hpp"
#include "addchow/fields/factor.hpp"
#include "addchow/forms/differential_form.hpp"

namespace addchow {

namespace {

std::string fresh_name(const std::vector<std::string>& taken, const std::string& stem) {
  auto used = [&](const std::string& s) { return std::find(taken.begin(), taken.end(), s) != taken.end(); };
  if (!used(stem)) return stem;
  for (int i = 1;; ++i)
    if (!used(stem + std::to_string(i))) return stem + std::to_string(i);
}

// Numerator or denominator of a k(s)-element as a polynomial in s over k.
UPoly in_parameter(const TowerPtr& k, const Poly& f, std::size_t s_index) {
  std::vector<FieldElement> c;
  for (const Poly& coeff : f.coefficients_in(s_index)) c.push_back(FieldElement::from_base(k, RationalFunction(coeff)));
  return UPoly(k, std::move(c));
}

}  // namespace

ParametrizedCurve::ParametrizedCurve(TowerPtr base, std::vector<FieldElement> coordinates)
    : base_(std::move(base)), coords_(std::move(coordinates)) {
  if (coords_.size() < 3) fail(ErrorKind::InvalidArgument, "a curve needs at least three coordinates");
  if (!tower()->same_as(*parameter_tower(base_)))
    fail(ErrorKind::TowerMismatch, "curve coordinates must live in " + parameter_tower(base_)->to_string());
  FieldElement sum(tower());
  for (const auto& x : coords_) {
    require_same_tower(*tower(), *x.tower());
    if (x.is_zero()) fail(ErrorKind::InvalidArgument, "curve coordinate identically zero");
    sum += x;
  }
  if (!sum.is_zero()) fail(ErrorKind::InvalidArgument, "curve coordinates do not sum to zero");
}

TowerPtr ParametrizedCurve::parameter_tower(const TowerPtr& base) {
  if (base->has_extension())
    fail(ErrorKind::InvalidArgument, "curves need a base field without an algebraic extension");
  std::vector<std::string> vars = base->variables();
  vars.push_back(fresh_name(vars, "s"));
  return FieldTower::function_field(base->characteristic(), std::move(vars));
}

FieldElement ParametrizedCurve::parameter() const { return FieldElement::variable(tower(), base_->num_variables()); }

std::string ParametrizedCurve::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) out += (i ? ", " : "") + coords_[i].to_string();
  return out + ") over " + tower()->to_string();
}

ZeroCycle curve_face(const ParametrizedCurve& c, std::size_t j) {
  const auto& rho = c.coordinates();
  if (j >= rho.size()) fail(ErrorKind::IndexOutOfRange, "curve face index " + std::to_string(j));
  const TowerPtr& k = c.base();
  const std::size_t s = k->num_variables();
  ZeroCycle out(k, c.n());
  const UPoly num = in_parameter(k, rho[j].base_value().numerator(), s);
  if (num.degree() < 1) return out;
  std::vector<UPoly> dens;
  for (std::size_t i = 0; i < rho.size(); ++i)
    if (i != j) dens.push_back(in_parameter(k, rho[i].base_value().denominator(), s));

  for (const Factor& f : factor_univariate(num)) {
    if (std::any_of(dens.begin(), dens.end(), [&](const UPoly& d) { return d.rem(f.poly).is_zero(); })) continue;
    TowerPtr target = k;
    FieldElement root(k);
    if (f.poly.degree() == 1) {
      root = -f.poly.coefficient(0);
    } else {
      std::vector<RationalFunction> coeffs;
      for (const auto& x : f.poly.coefficients()) coeffs.push_back(x.base_value());
      target = FieldTower::extension(k, fresh_name(k->variables(), "th"), std::move(coeffs));
      root = FieldElement::generator(target);
    }
    std::vector<FieldElement> images;
    for (std::size_t i = 0; i < s; ++i) images.push_back(FieldElement::variable(target, i));
    images.push_back(root);
    std::vector<FieldElement> coords;
    for (std::size_t i = 0; i < rho.size(); ++i) {
      if (i == j) continue;
      coords.push_back(substitute(rho[i], images));
      if (coords.back().is_zero())
        fail(ErrorKind::BadPosition, "curve meets faces " + std::to_string(j) + " and " + std::to_string(i) + " together");
    }
    out.add(f.multiplicity, QPoint(std::move(coords)));
  }
  return out;
}

ZeroCycle curve_boundary(const ParametrizedCurve& c) {
  ZeroCycle out(c.base(), c.n());
  for (std::size_t j = 0; j < c.coordinates().size(); ++j) {
    const ZeroCycle f = curve_face(c, j);
    out = out + (j % 2 ? f.scaled(-1) : f);
  }
  return out;
}

ParametrizedCurve linearity_curve(const FieldElement& a, const FieldElement& b, const QPoint& u) {
  if (a.is_zero() || b.is_zero()) fail(ErrorKind::ZeroProduct, "linearity curve needs ab != 0");
  if (!u.good_position()) fail(ErrorKind::BadPosition, "linearity curve needs u in good position");
  const TowerPtr& k = u.tower();
  require_same_tower(*k, *a.tower());
  require_same_tower(*k, *b.tower());
  const TowerPtr t = ParametrizedCurve::parameter_tower(k);
  const FieldElement s = FieldElement::variable(t, k->num_variables());
  const FieldElement at = a.moved_to(t), bt = b.moved_to(t);
  const FieldElement u0 = u[0].moved_to(t);
  const FieldElement l = -(at * bt / u0) * s + at + bt;
  const FieldElement li = l.inverse();
  std::vector<FieldElement> coords{s, -s + u0 * li};
  for (int i = 1; i <= u.n(); ++i) coords.push_back(u[static_cast<std::size_t>(i)].moved_to(t) * li);
  return ParametrizedCurve(k, std::move(coords));
}

ParametrizedCurve gamma_curve(const FieldElement& b, const std::vector<FieldElement>& u) {
  const TowerPtr& k = b.tower();
  const FieldElement one = FieldElement::from_int(k, 1);
  if (b.is_zero() || b == one) fail(ErrorKind::DegenerateModulus, "gamma curve needs b outside {0, 1}");
  if (u.empty()) fail(ErrorKind::InvalidArgument, "gamma curve needs at least one u entry");
  FieldElement sum(k);
  for (const auto& x : u) {
    require_same_tower(*k, *x.tower());
    if (x.is_zero()) fail(ErrorKind::InvalidArgument, "gamma curve needs nonzero u entries");
    sum += x;
  }
  if (sum != one) fail(ErrorKind::InvalidArgument, "gamma curve needs sum u_i = 1");
  const TowerPtr t = ParametrizedCurve::parameter_tower(k);
  const FieldElement s = FieldElement::variable(t, k->num_variables());
  const FieldElement bt = b.moved_to(t), onet = FieldElement::from_int(t, 1);
  const FieldElement c = (bt * (bt - onet)).inverse();
  std::vector<FieldElement> coords{-bt.inverse() + s, (bt - onet).inverse(), -s};
  for (const auto& x : u) coords.push_back(-(x.moved_to(t) * c));
  return ParametrizedCurve(k, std::move(coords));
}

ParametrizedCurve trace_curve(const MinimalPolynomialData& p, const QPoint& alpha) {
  const int N = p.degree;
  if (N < 2) fail(ErrorKind::DegenerateData, "trace curve needs an extension of degree >= 2");
  const TowerPtr& k = alpha.tower();
  const int n = alpha.n();
  if (!(alpha[0] == FieldElement::from_int(k, -1)))
    fail(ErrorKind::DegenerateData, "trace curve needs a point (-1, alpha_1, ..., alpha_n)");
  if (!alpha.good_position()) fail(ErrorKind::DegenerateData, "trace curve needs nonzero alpha_i");
  if (p.a.size() != static_cast<std::size_t>(N) || p.a[0].is_zero())
    fail(ErrorKind::DegenerateData, "trace curve needs a minimal polynomial with a_0 != 0");
  const FieldElement& alpha_n = alpha[static_cast<std::size_t>(n)];
  // b_N = -1/alpha_n, b_i = -a_i/alpha_n for 2 <= i < N, b_1 = a_1, b_0 = a_0.
  std::vector<FieldElement> b(static_cast<std::size_t>(N) + 1, FieldElement(k));
  b[static_cast<std::size_t>(N)] = -alpha_n.inverse();
  for (int i = 2; i < N; ++i) b[static_cast<std::size_t>(i)] = -(p.a[static_cast<std::size_t>(i)] / alpha_n);
  b[1] = p.a[1];
  b[0] = p.a[0];

  const TowerPtr t = ParametrizedCurve::parameter_tower(k);
  const FieldElement s = FieldElement::variable(t, k->num_variables());
  // Q(s, u) = u * s * D(s) + b_1 s + b_0 with D = b_N s^{N-2} + ... + b_2.
  FieldElement D(t);
  for (int i = N; i >= 2; --i) D = D * s + b[static_cast<std::size_t>(i)].moved_to(t);
  const FieldElement u = -((b[1].moved_to(t) * s + b[0].moved_to(t)) / (s * D));
  std::vector<FieldElement> coords{s};
  for (int i = 1; i < n; ++i) coords.push_back(-(alpha[static_cast<std::size_t>(i)].moved_to(t) * s));
  coords.push_back(u);
  FieldElement sum(t);
  for (const auto& x : coords) sum += x;
  coords.push_back(-sum);
  return ParametrizedCurve(k, std::move(coords));
}

}  // namespace addchow
