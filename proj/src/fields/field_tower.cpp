#include "addchow/fields/field_tower.hpp"

#include <set>

#include "addchow/error.hpp"
#include "addchow/fields/factor.hpp"
#include "addchow/fields/field_element.hpp"
#include "addchow/fields/univariate.hpp"

namespace addchow {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

TowerPtr FieldTower::function_field(Characteristic p, std::vector<std::string> variables) {
  if (p != 0 && !is_prime(p)) fail(ErrorKind::InvalidArgument, "characteristic " + std::to_string(p) + " is not prime");
  if (variables.size() + 1 > kMaxVariables) fail(ErrorKind::InvalidArgument, "too many transcendentals");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (!valid_name(v)) fail(ErrorKind::InvalidArgument, "bad variable name '" + v + "'");
    if (!seen.insert(v).second) fail(ErrorKind::InvalidArgument, "repeated variable name '" + v + "'");
  }
  std::shared_ptr<FieldTower> t(new FieldTower());
  t->p_ = p;
  t->variables_ = std::move(variables);
  t->render_names_ = t->variables_;
  t->power_traces_ = {RationalFunction::constant(1, p)};
  return t;
}

TowerPtr FieldTower::extension(const TowerPtr& base, std::string name, std::vector<RationalFunction> coefficients) {
  if (base->has_extension()) fail(ErrorKind::InvalidArgument, "only single-step extensions are supported");
  if (!valid_name(name) || base->index_of(name)) fail(ErrorKind::InvalidArgument, "bad generator name '" + name + "'");
  while (!coefficients.empty() && coefficients.back().is_zero()) coefficients.pop_back();
  if (coefficients.size() < 2) fail(ErrorKind::InvalidArgument, "minimal polynomial must have degree >= 1");
  const Characteristic p = base->characteristic();
  for (const auto& c : coefficients)
    if (c.characteristic() != p) fail(ErrorKind::TowerMismatch, "minimal polynomial characteristic");
  RationalFunction lead_inv = coefficients.back().inverse();
  for (auto& c : coefficients) c = c * lead_inv;
  coefficients.pop_back();
  const std::size_t n = coefficients.size();

  // Separability and (where supported) irreducibility over the base.
  std::vector<FieldElement> pc;
  for (const auto& c : coefficients) pc.push_back(FieldElement::from_base(base, c));
  pc.push_back(FieldElement::from_int(base, 1));
  UPoly poly(base, pc);
  if (n > 1) {
    if (gcd(poly, poly.derivative()).degree() != 0)
      fail(ErrorKind::InvalidArgument, "minimal polynomial is not separable");
    try {
      auto factors = factor_univariate(poly);
      if (factors.size() != 1 || factors[0].multiplicity != 1)
        fail(ErrorKind::InvalidArgument, "minimal polynomial is reducible");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnsupportedDegree) throw;
    }
  }

  std::shared_ptr<FieldTower> t(new FieldTower());
  t->p_ = p;
  t->variables_ = base->variables_;
  t->render_names_ = base->variables_;
  t->render_names_.push_back(name);
  t->extension_ = ExtensionData{std::move(name), std::move(coefficients)};
  t->base_ = base;
  const auto& c = t->extension_->coefficients;

  // Power sums of the roots by Newton's identities.
  std::vector<RationalFunction> s{RationalFunction::constant(static_cast<long>(n), p)};
  for (std::size_t k = 1; k < n; ++k) {
    RationalFunction acc = c[n - k].scaled(-static_cast<long>(k));
    for (std::size_t i = 1; i < k; ++i) acc -= c[n - i] * s[k - i];
    s.push_back(acc);
  }
  t->power_traces_ = std::move(s);

  // d(theta) = -P_t(theta) / P'(theta).
  TowerPtr tp = t;
  std::vector<RationalFunction> dp(n, RationalFunction(p));
  dp[n - 1] = RationalFunction::constant(static_cast<long>(n), p);
  for (std::size_t j = 1; j < n; ++j) dp[j - 1] += c[j].scaled(static_cast<long>(j));
  FieldElement pprime(tp, dp);
  FieldElement pprime_inv = pprime.inverse();
  for (std::size_t v = 0; v < t->variables_.size(); ++v) {
    std::vector<RationalFunction> pt;
    for (const auto& cj : c) pt.push_back(cj.derivative(v));
    FieldElement d = -(FieldElement(tp, pt) * pprime_inv);
    t->theta_partials_.push_back(d.coefficients());
  }
  return t;
}

std::optional<std::size_t> FieldTower::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

std::size_t FieldTower::variable_index(std::string_view name) const {
  auto i = index_of(name);
  if (!i) fail(ErrorKind::UnknownVariable, "'" + std::string(name) + "' is not a transcendental of " + to_string());
  return *i;
}

const ExtensionData& FieldTower::extension_data() const {
  if (!extension_) fail(ErrorKind::NoExtension, to_string() + " has no extension");
  return *extension_;
}

TowerPtr FieldTower::base() const { return base_ ? base_ : shared_from_this(); }

std::string FieldTower::to_string() const {
  std::string s = p_ == 0 ? "Q" : "F" + std::to_string(p_);
  if (!variables_.empty()) {
    s += "(";
    for (std::size_t i = 0; i < variables_.size(); ++i) s += (i ? "," : "") + variables_[i];
    s += ")";
  }
  if (extension_) {
    // Clear denominators of the monic minimal polynomial for display.
    const auto& c = extension_->coefficients;
    const std::size_t th = variables_.size();
    Poly den = Poly::constant(1, p_);
    for (const auto& x : c) {
      Poly g = gcd(den, x.denominator());
      den = exact_quotient(den * x.denominator(), g);
    }
    Poly num = den.multiplied_by(Monomial::variable(th, static_cast<std::uint32_t>(c.size())), 1);
    for (std::size_t j = 0; j < c.size(); ++j) {
      Poly coeff = c[j].numerator() * exact_quotient(den, c[j].denominator());
      num += coeff.multiplied_by(Monomial::variable(th, static_cast<std::uint32_t>(j)), 1);
    }
    s += "[" + extension_->name + "]/(" + num.primitive().to_string(render_names_) + ")";
  }
  return s;
}

bool FieldTower::same_as(const FieldTower& o) const {
  if (this == &o) return true;
  if (p_ != o.p_ || variables_ != o.variables_ || extension_.has_value() != o.extension_.has_value()) return false;
  if (!extension_) return true;
  return extension_->name == o.extension_->name && extension_->coefficients == o.extension_->coefficients;
}

void require_same_tower(const FieldTower& a, const FieldTower& b) {
  if (!a.same_as(b)) fail(ErrorKind::TowerMismatch, a.to_string() + " vs " + b.to_string());
}

}  // namespace addchow
