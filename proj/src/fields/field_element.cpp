#include "addchow/fields/field_element.hpp"

#include <algorithm>

#include "addchow/error.hpp"
#include "addchow/fields/univariate.hpp"

namespace addchow {

FieldElement::FieldElement(TowerPtr tower)
    : tower_(std::move(tower)),
      c_(static_cast<std::size_t>(tower_->degree()), RationalFunction(tower_->characteristic())) {}

FieldElement::FieldElement(TowerPtr tower, std::vector<RationalFunction> coefficients)
    : tower_(std::move(tower)), c_(std::move(coefficients)) {
  for (const auto& c : c_)
    if (c.characteristic() != tower_->characteristic()) fail(ErrorKind::TowerMismatch, "coefficient characteristic");
  reduce();
}

void FieldElement::reduce() {
  const std::size_t n = static_cast<std::size_t>(tower_->degree());
  if (c_.size() > n) {
    const auto& p = tower_->extension_data().coefficients;
    for (std::size_t k = c_.size(); k-- > n;) {
      if (c_[k].is_zero()) continue;
      const RationalFunction top = c_[k];
      for (std::size_t j = 0; j < n; ++j) {
        if (!p[j].is_zero()) c_[k - n + j] -= top * p[j];
      }
    }
    c_.resize(n);
  }
  while (c_.size() < n) c_.emplace_back(tower_->characteristic());
}

FieldElement FieldElement::from_int(TowerPtr tower, long v) {
  return from_rational(std::move(tower), mpq_class(v));
}

FieldElement FieldElement::from_rational(TowerPtr tower, const mpq_class& v) {
  const Characteristic p = tower->characteristic();
  return from_base(std::move(tower), RationalFunction::constant(v, p));
}

FieldElement FieldElement::from_base(TowerPtr tower, RationalFunction v) {
  return FieldElement(std::move(tower), std::vector<RationalFunction>{std::move(v)});
}

FieldElement FieldElement::variable(TowerPtr tower, std::string_view name) {
  if (tower->has_extension() && tower->extension_data().name == name) return generator(std::move(tower));
  std::size_t i = tower->variable_index(name);
  return variable(std::move(tower), i);
}

FieldElement FieldElement::variable(TowerPtr tower, std::size_t index) {
  if (index >= tower->num_variables()) fail(ErrorKind::UnknownVariable, "variable index out of range");
  const Characteristic p = tower->characteristic();
  return from_base(std::move(tower), RationalFunction::variable(index, p));
}

FieldElement FieldElement::generator(TowerPtr tower) {
  const Characteristic p = tower->characteristic();
  tower->extension_data();
  return FieldElement(std::move(tower), {RationalFunction(p), RationalFunction::constant(1, p)});
}

bool FieldElement::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool FieldElement::is_one() const { return c_[0].is_one() && in_base(); }

bool FieldElement::in_base() const {
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (!c_[j].is_zero()) return false;
  return true;
}

const RationalFunction& FieldElement::base_value() const {
  if (!in_base()) fail(ErrorKind::InvalidArgument, "element is not in the function field");
  return c_[0];
}

FieldElement FieldElement::moved_to(const TowerPtr& target) const {
  if (target->same_as(*tower_)) return FieldElement(target, c_);
  if (target->has_extension() && !tower_->has_extension() && target->base()->same_as(*tower_))
    return FieldElement(target, c_);
  if (tower_->has_extension() && !target->has_extension() && tower_->base()->same_as(*target))
    return FieldElement(target, {base_value()});
  if (!tower_->has_extension() && !target->has_extension() && tower_->characteristic() == target->characteristic()) {
    // Function field into a larger one whose variable list extends ours.
    const auto& a = tower_->variables();
    const auto& b = target->variables();
    if (a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin())) return FieldElement(target, c_);
  }
  fail(ErrorKind::TowerMismatch, "cannot move " + tower_->to_string() + " element to " + target->to_string());
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_tower(*a.tower_, *b.tower_);
  FieldElement r = a;
  for (std::size_t j = 0; j < r.c_.size(); ++j)
    if (!b.c_[j].is_zero()) r.c_[j] += b.c_[j];
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_tower(*a.tower_, *b.tower_);
  FieldElement r = a;
  for (std::size_t j = 0; j < r.c_.size(); ++j)
    if (!b.c_[j].is_zero()) r.c_[j] -= b.c_[j];
  return r;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_tower(*a.tower_, *b.tower_);
  const std::size_t n = a.c_.size();
  if (n == 1) return FieldElement(a.tower_, {a.c_[0] * b.c_[0]});
  std::vector<RationalFunction> prod(2 * n - 1, RationalFunction(a.characteristic()));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!b.c_[j].is_zero()) prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return FieldElement(a.tower_, std::move(prod));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_tower(*a.tower_, *b.tower_);
  if (b.in_base() && !b.c_[0].is_zero()) {
    RationalFunction inv = b.c_[0].inverse();
    FieldElement r = a;
    for (auto& c : r.c_)
      if (!c.is_zero()) c *= inv;
    return r;
  }
  return a * b.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.tower_->same_as(*b.tower_) && a.c_ == b.c_;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
  if (in_base()) return FieldElement(tower_, {c_[0].inverse()});
  const TowerPtr base = tower_->base();
  std::vector<FieldElement> a, m;
  for (const auto& c : c_) a.push_back(FieldElement::from_base(base, c));
  for (const auto& c : tower_->extension_data().coefficients) m.push_back(FieldElement::from_base(base, c));
  m.push_back(FieldElement::from_int(base, 1));
  UPoly s = inverse_mod(UPoly(base, a), UPoly(base, m));
  std::vector<RationalFunction> out;
  for (const auto& c : s.coefficients()) out.push_back(c.base_value());
  return FieldElement(tower_, std::move(out));
}

FieldElement FieldElement::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result = from_int(tower_, 1);
  FieldElement base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

FieldElement FieldElement::scaled(const mpq_class& c) const {
  FieldElement r = *this;
  for (auto& x : r.c_) x = x.scaled(c);
  return r;
}

FieldElement FieldElement::partial(std::size_t var) const {
  if (var >= tower_->num_variables()) fail(ErrorKind::UnknownVariable, "partial: variable index out of range");
  std::vector<RationalFunction> d;
  for (const auto& c : c_) d.push_back(c.derivative(var));
  FieldElement result(tower_, std::move(d));
  if (c_.size() > 1 && !in_base()) {
    // Chain rule through theta.
    std::vector<RationalFunction> dx;
    for (std::size_t j = 1; j < c_.size(); ++j) dx.push_back(c_[j].scaled(static_cast<long>(j)));
    result += FieldElement(tower_, std::move(dx)) * FieldElement(tower_, tower_->theta_partial(var));
  }
  return result;
}

FieldElement FieldElement::partial(std::string_view name) const { return partial(tower_->variable_index(name)); }

FieldElement FieldElement::trace() const {
  tower_->extension_data();
  const auto& tr = tower_->power_traces();
  RationalFunction acc(characteristic());
  for (std::size_t j = 0; j < c_.size(); ++j)
    if (!c_[j].is_zero()) acc += c_[j] * tr[j];
  return FieldElement::from_base(tower_->base(), std::move(acc));
}

std::string FieldElement::to_string() const {
  if (c_.size() == 1) return c_[0].to_string(tower_->render_names());
  const Characteristic p = characteristic();
  Poly den = Poly::constant(1, p);
  for (const auto& c : c_) {
    if (c.is_zero()) continue;
    Poly g = gcd(den, c.denominator());
    den = exact_quotient(den * c.denominator(), g);
  }
  const std::size_t th = tower_->num_variables();
  Poly num(p);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    Poly coeff = c_[j].numerator() * exact_quotient(den, c_[j].denominator());
    num += coeff.multiplied_by(Monomial::variable(th, static_cast<std::uint32_t>(j)), 1);
  }
  return render_fraction(num, den, tower_->render_names());
}

}  // namespace addchow
