#include "addchow/fields/univariate.hpp"

#include "addchow/error.hpp"

namespace addchow {

UPoly::UPoly(TowerPtr tower, std::vector<FieldElement> coefficients)
    : tower_(std::move(tower)), c_(std::move(coefficients)) {
  for (const auto& c : c_) require_same_tower(*tower_, *c.tower());
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::x(const TowerPtr& tower) {
  return UPoly(tower, {FieldElement(tower), FieldElement::from_int(tower, 1)});
}

UPoly UPoly::constant(const FieldElement& c) { return UPoly(c.tower(), {c}); }

FieldElement UPoly::coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : FieldElement(tower_); }

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<FieldElement> c;
  for (std::size_t i = 0; i < std::max(a.c_.size(), b.c_.size()); ++i) c.push_back(a.coefficient(i) + b.coefficient(i));
  return UPoly(a.tower_, std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<FieldElement> c;
  for (std::size_t i = 0; i < std::max(a.c_.size(), b.c_.size()); ++i) c.push_back(a.coefficient(i) - b.coefficient(i));
  return UPoly(a.tower_, std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly(a.tower_);
  std::vector<FieldElement> c(a.c_.size() + b.c_.size() - 1, FieldElement(a.tower_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(a.tower_, std::move(c));
}

bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

UPoly UPoly::scaled(const FieldElement& s) const {
  std::vector<FieldElement> c;
  for (const auto& x : c_) c.push_back(x * s);
  return UPoly(tower_, std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& b) const {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "univariate division by zero");
  if (degree() < b.degree()) return {UPoly(tower_), *this};
  std::vector<FieldElement> r = c_;
  std::vector<FieldElement> q(c_.size() - b.c_.size() + 1, FieldElement(tower_));
  const FieldElement lead_inv = b.leading().inverse();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i].is_zero()) continue;
    FieldElement f = r[i] * lead_inv;
    for (std::size_t j = 0; j <= db; ++j) {
      if (!b.c_[j].is_zero()) r[i - db + j] -= f * b.c_[j];
    }
    q[i - db] = std::move(f);
  }
  r.erase(r.begin() + static_cast<std::ptrdiff_t>(db), r.end());
  return {UPoly(tower_, std::move(q)), UPoly(tower_, std::move(r))};
}

UPoly UPoly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return scaled(leading().inverse());
}

UPoly UPoly::derivative() const {
  std::vector<FieldElement> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i].scaled(static_cast<long>(i)));
  return UPoly(tower_, std::move(c));
}

FieldElement UPoly::eval(const FieldElement& x) const {
  FieldElement r(x.tower());
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i].moved_to(x.tower());
  return r;
}

UPoly UPoly::moved_to(const TowerPtr& target) const {
  std::vector<FieldElement> c;
  for (const auto& x : c_) c.push_back(x.moved_to(target));
  return UPoly(target, std::move(c));
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    std::string c = c_[i].to_string();
    bool negative = !c.empty() && c[0] == '-' && c.find(' ') == std::string::npos;
    if (negative) c = c.substr(1);
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty()) {
      out += c.find(' ') != std::string::npos ? "(" + c + ")" : c;
    } else if (c == "1") {
      out += mono;
    } else {
      bool simple = c.find_first_of(" /") == std::string::npos;
      out += (simple ? c : "(" + c + ")") + "*" + mono;
    }
  }
  return out;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.rem(y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  const TowerPtr& t = a.tower();
  UPoly r0 = m, r1 = a.rem(m);
  UPoly s0(t), s1 = UPoly::constant(FieldElement::from_int(t, 1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    UPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) fail(ErrorKind::DivisionByZero, "not invertible modulo the given polynomial");
  return s0.scaled(r0.leading().inverse()).rem(m);
}

UPoly minimal_polynomial(const FieldElement& x) {
  const TowerPtr& t = x.tower();
  const TowerPtr base = t->base();
  const Characteristic p = t->characteristic();
  const std::size_t n = static_cast<std::size_t>(t->degree());
  struct Row {
    std::size_t pivot;
    std::vector<RationalFunction> v;
    std::vector<RationalFunction> comb;
  };
  std::vector<Row> rows;
  FieldElement power = FieldElement::from_int(t, 1);
  for (std::size_t d = 0; d <= n; ++d) {
    std::vector<RationalFunction> v = power.coefficients();
    std::vector<RationalFunction> comb(d + 1, RationalFunction(p));
    comb[d] = RationalFunction::constant(1, p);
    for (const auto& row : rows) {
      if (v[row.pivot].is_zero()) continue;
      RationalFunction f = v[row.pivot];
      for (std::size_t j = 0; j < n; ++j)
        if (!row.v[j].is_zero()) v[j] -= f * row.v[j];
      for (std::size_t j = 0; j < row.comb.size(); ++j)
        if (!row.comb[j].is_zero()) comb[j] -= f * row.comb[j];
    }
    std::size_t pivot = n;
    for (std::size_t j = 0; j < n; ++j)
      if (!v[j].is_zero()) {
        pivot = j;
        break;
      }
    if (pivot == n) {
      std::vector<FieldElement> c;
      for (auto& r : comb) c.push_back(FieldElement::from_base(base, r));
      return UPoly(base, std::move(c));
    }
    RationalFunction inv = v[pivot].inverse();
    for (auto& e : v) e *= inv;
    for (auto& e : comb) e *= inv;
    rows.push_back({pivot, std::move(v), std::move(comb)});
    power *= x;
  }
  fail(ErrorKind::InvalidArgument, "minimal polynomial search did not terminate");
}

MinimalPolynomialData minimal_polynomial_data(const UPoly& monic_poly) {
  if (monic_poly.is_zero() || !monic_poly.leading().is_one())
    fail(ErrorKind::InvalidArgument, "minimal polynomial data needs a monic polynomial");
  MinimalPolynomialData d;
  d.degree = monic_poly.degree();
  for (int i = 0; i < d.degree; ++i) d.a.push_back(monic_poly.coefficient(static_cast<std::size_t>(i)));
  return d;
}

}  // namespace addchow
