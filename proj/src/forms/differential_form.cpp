#include "addchow/forms/differential_form.hpp"

#include <bit>
#include <unordered_map>

#include "addchow/error.hpp"
#include "addchow/fields/parse.hpp"

namespace addchow {

bool WedgeKeyOrder::operator()(WedgeKey a, WedgeKey b) const noexcept {
  int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  while (a && b) {
    int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

int wedge_sign(WedgeKey a, WedgeKey b) noexcept {
  if (a & b) return 0;
  int inversions = 0;
  for (WedgeKey rest = b; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    inversions += std::popcount(a >> (j + 1));
  }
  return inversions % 2 ? -1 : 1;
}

std::vector<std::size_t> key_indices(WedgeKey key) {
  std::vector<std::size_t> out;
  for (; key; key &= key - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(key)));
  return out;
}

DifferentialForm::DifferentialForm(TowerPtr tower, int degree) : tower_(std::move(tower)), degree_(degree) {
  if (degree < 0) fail(ErrorKind::InvalidArgument, "negative form degree");
}

DifferentialForm DifferentialForm::function(const FieldElement& f) {
  DifferentialForm r(f.tower(), 0);
  r.add_term(0, f);
  return r;
}

DifferentialForm DifferentialForm::monomial(const FieldElement& c, WedgeKey key) {
  for (std::size_t i : key_indices(key))
    if (i >= c.tower()->num_variables()) fail(ErrorKind::UnknownVariable, "differential of an unknown variable");
  DifferentialForm r(c.tower(), std::popcount(key));
  r.add_term(key, c);
  return r;
}

void DifferentialForm::add_term(WedgeKey key, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FieldElement DifferentialForm::coefficient(WedgeKey key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? FieldElement(tower_) : it->second;
}

DifferentialForm DifferentialForm::operator-() const {
  DifferentialForm r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

namespace {
void require_compatible(const DifferentialForm& a, const DifferentialForm& b) {
  require_same_tower(*a.tower(), *b.tower());
  if (a.degree() != b.degree())
    fail(ErrorKind::InvalidArgument, "adding forms of degrees " + std::to_string(a.degree()) + " and " +
                                         std::to_string(b.degree()));
}
}  // namespace

DifferentialForm operator+(const DifferentialForm& a, const DifferentialForm& b) {
  require_compatible(a, b);
  DifferentialForm r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k, c);
  return r;
}

DifferentialForm operator-(const DifferentialForm& a, const DifferentialForm& b) {
  require_compatible(a, b);
  DifferentialForm r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
  return r;
}

bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
  if (!a.tower_->same_as(*b.tower_)) return false;
  // The zero form compares equal across degrees only when both are zero and of equal degree.
  if (a.degree_ != b.degree_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  for (; i != a.terms_.end(); ++i, ++j)
    if (i->first != j->first || !(i->second == j->second)) return false;
  return true;
}

DifferentialForm DifferentialForm::scaled(const FieldElement& f) const {
  require_same_tower(*tower_, *f.tower());
  DifferentialForm r(tower_, degree_);
  if (f.is_zero()) return r;
  for (const auto& [k, c] : terms_) r.add_term(k, c * f);
  return r;
}

std::string DifferentialForm::to_string() const {
  if (terms_.empty()) return "0";
  if (degree_ == 0) return terms_.begin()->second.to_string();
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ") ";
    bool first = true;
    for (std::size_t i : key_indices(k)) {
      if (!first) out += "^";
      first = false;
      out += "d" + tower_->variables()[i];
    }
  }
  return out;
}

DifferentialForm d(const FieldElement& x) {
  DifferentialForm r(x.tower(), 1);
  if (x.in_base() && x.base_value().is_constant()) return r;
  const std::uint32_t mask = [&] {
    std::uint32_t m = 0;
    for (const auto& c : x.coefficients()) m |= c.variable_mask();
    return m;
  }();
  for (std::size_t i = 0; i < x.tower()->num_variables(); ++i) {
    // A theta component depends on every variable the minimal polynomial does.
    if (!(mask & (1u << i)) && x.in_base()) continue;
    FieldElement pi = x.partial(i);
    if (!pi.is_zero()) r += DifferentialForm::monomial(pi, WedgeKey{1} << i);
  }
  return r;
}

DifferentialForm dlog(const FieldElement& x) {
  if (x.is_zero()) fail(ErrorKind::ZeroArgument, "dlog of zero");
  DifferentialForm dx = d(x);
  if (dx.is_zero()) return dx;
  return dx.scaled(x.inverse());
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  require_same_tower(*a.tower(), *b.tower());
  DifferentialForm r(a.tower(), a.degree() + b.degree());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      int s = wedge_sign(ka, kb);
      if (s == 0) continue;
      FieldElement c = ca * cb;
      r += DifferentialForm::monomial(s > 0 ? c : -c, ka | kb);
    }
  }
  return r;
}

DifferentialForm d_form(const DifferentialForm& a) {
  DifferentialForm r(a.tower(), a.degree() + 1);
  for (const auto& [k, c] : a.terms()) {
    const DifferentialForm dc = d(c);
    for (const auto& [ki, ci] : dc.terms()) {
      int s = wedge_sign(ki, k);
      if (s == 0) continue;
      r += DifferentialForm::monomial(s > 0 ? ci : -ci, ki | k);
    }
  }
  return r;
}

DifferentialForm residue_along(const DifferentialForm& a, std::size_t var) {
  const TowerPtr& t = a.tower();
  if (t->has_extension()) fail(ErrorKind::InvalidArgument, "residue_along needs a function-field form");
  if (var >= t->num_variables()) fail(ErrorKind::UnknownVariable, "residue variable out of range");
  if (a.degree() == 0) fail(ErrorKind::InvalidArgument, "residue of a 0-form");
  const WedgeKey bit = WedgeKey{1} << var;
  const RationalFunction v = RationalFunction::variable(var, t->characteristic());
  DifferentialForm r(t, a.degree() - 1);
  for (const auto& [k, c] : a.terms()) {
    const RationalFunction& f = c.base_value();
    const int val = f.valuation_in(var);
    if (k & bit) {
      if (val < -1) fail(ErrorKind::HigherOrderPole, "pole of order " + std::to_string(-val) + " along " + t->variables()[var]);
      if (val > -1) continue;
      const int before = std::popcount(k & (bit - 1));
      RationalFunction res = (f * v).evaluated(var, 0);
      FieldElement e = FieldElement::from_base(t, before % 2 ? -res : res);
      r += DifferentialForm::monomial(e, k & ~bit);
    } else if (val < 0) {
      fail(ErrorKind::HigherOrderPole, "pole along " + t->variables()[var] + " without d" + t->variables()[var]);
    }
  }
  return r;
}

DifferentialForm trace_form(const DifferentialForm& a) {
  const TowerPtr& t = a.tower();
  t->extension_data();
  DifferentialForm r(t->base(), a.degree());
  for (const auto& [k, c] : a.terms()) r += DifferentialForm::monomial(c.trace(), k);
  return r;
}

namespace {

FieldElement eval_poly(const Poly& f, const std::vector<FieldElement>& images,
                       std::vector<std::vector<FieldElement>>& powers, const TowerPtr& target) {
  FieldElement acc(target);
  for (const auto& term : f.terms()) {
    FieldElement m = FieldElement::from_rational(target, term.coefficient);
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      std::uint32_t e = term.monomial[i];
      if (e == 0) continue;
      if (i >= images.size()) fail(ErrorKind::UnknownVariable, "no image for a variable in pullback");
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(FieldElement::from_int(target, 1));
      while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
      m *= pw[e];
    }
    acc += m;
  }
  return acc;
}

}  // namespace

FieldElement substitute(const FieldElement& x, const std::vector<FieldElement>& images) {
  if (images.empty()) fail(ErrorKind::InvalidArgument, "substitute needs images for the variables");
  const TowerPtr& target = images[0].tower();
  if (x.tower()->has_extension()) fail(ErrorKind::InvalidArgument, "substitute needs a function-field element");
  const RationalFunction& f = x.base_value();
  std::vector<std::vector<FieldElement>> powers(kMaxVariables);
  FieldElement num = eval_poly(f.numerator(), images, powers, target);
  if (f.is_polynomial()) return num;
  FieldElement den = eval_poly(f.denominator(), images, powers, target);
  if (den.is_zero()) fail(ErrorKind::DivisionByZero, "denominator vanishes under substitution");
  return num / den;
}

DifferentialForm pullback(const DifferentialForm& a, const std::vector<FieldElement>& images) {
  if (images.size() != a.tower()->num_variables())
    fail(ErrorKind::InvalidArgument, "pullback needs one image per variable");
  if (images.empty()) fail(ErrorKind::InvalidArgument, "pullback from a field without variables");
  const TowerPtr& target = images[0].tower();
  std::vector<std::optional<DifferentialForm>> dimg(images.size());
  DifferentialForm r(target, a.degree());
  for (const auto& [k, c] : a.terms()) {
    DifferentialForm term = DifferentialForm::function(substitute(c, images));
    for (std::size_t i : key_indices(k)) {
      if (!dimg[i]) dimg[i] = d(images[i]);
      term = wedge(term, *dimg[i]);
    }
    r += term;
  }
  return r;
}

DifferentialForm restrict_to(const DifferentialForm& a, std::size_t var, const mpq_class& value) {
  const TowerPtr& t = a.tower();
  if (t->has_extension()) fail(ErrorKind::InvalidArgument, "restrict_to needs a function-field form");
  const WedgeKey bit = WedgeKey{1} << var;
  DifferentialForm r(t, a.degree());
  for (const auto& [k, c] : a.terms()) {
    if (k & bit) continue;
    r += DifferentialForm::monomial(FieldElement::from_base(t, c.base_value().evaluated(var, value)), k);
  }
  return r;
}

DifferentialForm moved_to(const DifferentialForm& a, const TowerPtr& target) {
  DifferentialForm r(target, a.degree());
  for (const auto& [k, c] : a.terms()) r += DifferentialForm::monomial(c.moved_to(target), k);
  return r;
}

DifferentialForm gamma_at(const std::vector<FieldElement>& x) {
  if (x.size() < 2) fail(ErrorKind::InvalidArgument, "gamma needs at least two coordinates");
  const TowerPtr& t = x[0].tower();
  const std::size_t n = x.size() - 1;
  // With x = P/Q for a common denominator Q, the sum
  // Omega(x) = sum_i (-1)^i x_i ^_{j != i} dx_j is homogeneous of degree n,
  // so gamma = Q Omega(P) / (P_0 ... P_n) and the wedges stay polynomial.
  Poly common = Poly::constant(1, t->characteristic());
  for (const auto& xi : x)
    for (const auto& c : xi.coefficients()) {
      const Poly& den = c.denominator();
      if (den.is_constant()) continue;
      const Poly g = gcd(common, den);
      common = common * (g.is_one() ? den : exact_quotient(den, g));
    }
  const FieldElement q = FieldElement::from_base(t, RationalFunction(common));
  std::vector<FieldElement> P;
  for (const auto& xi : x) P.push_back(xi * q);
  std::vector<DifferentialForm> dP;
  for (std::size_t j = 1; j <= n; ++j) dP.push_back(d(P[j]));
  // prefix[i] = dP_1 ^ ... ^ dP_i, suffix[i] = dP_{i+1} ^ ... ^ dP_n (1-based).
  std::vector<DifferentialForm> prefix{DifferentialForm::function(FieldElement::from_int(t, 1))};
  for (std::size_t j = 0; j < n; ++j) prefix.push_back(wedge(prefix.back(), dP[j]));
  std::vector<DifferentialForm> suffix(n + 1, DifferentialForm::function(FieldElement::from_int(t, 1)));
  for (std::size_t j = n; j-- > 0;) suffix[j] = wedge(dP[j], suffix[j + 1]);
  DifferentialForm sum(t, static_cast<int>(n) - 1);
  for (std::size_t i = 1; i <= n; ++i) {
    DifferentialForm term = wedge(prefix[i - 1], suffix[i]).scaled(P[i]);
    sum += (i % 2 ? -term : term);
  }
  FieldElement prod = P[0];
  for (std::size_t j = 1; j <= n; ++j) prod *= P[j];
  return sum.scaled(q / prod);
}

DifferentialForm nu_at(const std::vector<FieldElement>& x) {
  if (x.size() < 2) fail(ErrorKind::InvalidArgument, "nu needs at least two coordinates");
  const TowerPtr& t = x[0].tower();
  DifferentialForm w = DifferentialForm::function(FieldElement::from_int(t, 1));
  FieldElement prod = x[0];
  for (std::size_t j = 1; j < x.size(); ++j) {
    w = wedge(w, d(x[j]));
    prod *= x[j];
  }
  return w.scaled(prod.inverse());
}

std::vector<FieldElement> universal_point(Characteristic p, int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "universal point needs n >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
  TowerPtr t = FieldTower::function_field(p, names);
  std::vector<FieldElement> x{FieldElement(t)};
  for (int i = 0; i < n; ++i) {
    x.push_back(FieldElement::variable(t, static_cast<std::size_t>(i)));
    x[0] -= x.back();
  }
  return x;
}

DifferentialForm gamma_form(Characteristic p, int n) { return gamma_at(universal_point(p, n)); }
DifferentialForm nu_form(Characteristic p, int n) { return nu_at(universal_point(p, n)); }

DifferentialForm parse_form(const TowerPtr& tower, const std::string& text_in, int degree_if_zero) {
  const std::string text = trim_copy(text_in);
  if (text == "0") return DifferentialForm(tower, degree_if_zero);
  // Split at top-level + and - that separate terms.
  std::vector<std::pair<int, std::string>> pieces;
  int depth = 0;
  int sign = 1;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    std::string piece = trim_copy(std::string_view(text).substr(start, end - start));
    if (!piece.empty()) pieces.emplace_back(sign, piece);
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if ((c == '+' || c == '-') && depth == 0) {
      // Binary operator only if preceded by the end of a form term.
      std::size_t j = i;
      while (j > 0 && text[j - 1] == ' ') --j;
      bool after_term = j > 0 && (std::isalnum(static_cast<unsigned char>(text[j - 1])) || text[j - 1] == '_');
      if (i == 0 || after_term) {
        flush(i);
        sign = c == '-' ? -1 : 1;
        start = i + 1;
      }
    }
  }
  flush(text.size());
  std::optional<DifferentialForm> result;
  for (auto& [s, piece] : pieces) {
    if (piece.empty() || piece.front() != '(') return DifferentialForm::function(parse_element(tower, text));
    int dep = 0;
    std::size_t close = std::string::npos;
    for (std::size_t i = 0; i < piece.size(); ++i) {
      if (piece[i] == '(') ++dep;
      else if (piece[i] == ')' && --dep == 0) {
        close = i;
        break;
      }
    }
    if (close == std::string::npos) fail(ErrorKind::Parse, "unbalanced parentheses in form \"" + text + "\"");
    std::string rest = trim_copy(std::string_view(piece).substr(close + 1));
    if (rest.empty()) return DifferentialForm::function(parse_element(tower, text));
    FieldElement c = parse_element(tower, std::string_view(piece).substr(1, close - 1));
    DifferentialForm term = DifferentialForm::function(s > 0 ? c : -c);
    for (auto& dv : split_top_level(rest, '^')) {
      if (dv.size() < 2 || dv[0] != 'd') fail(ErrorKind::Parse, "expected a differential, got \"" + dv + "\"");
      std::size_t i = tower->variable_index(dv.substr(1));
      term = wedge(term, DifferentialForm::monomial(FieldElement::from_int(tower, 1), WedgeKey{1} << i));
    }
    if (!result) result = term;
    else *result += term;
  }
  if (!result) fail(ErrorKind::Parse, "empty form");
  return *result;
}

}  // namespace addchow
