#include "addchow/fields/polynomial.hpp"

#include <algorithm>
#include <random>

#include "addchow/error.hpp"
#include "addchow/fields/modular.hpp"

namespace addchow {

namespace {

bool greater_term(const Term& a, const Term& b) { return a.monomial > b.monomial; }

// Sorted merge of two canonical term lists: a + sign * b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract, Characteristic p) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].monomial > b[j].monomial)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].monomial > a[i].monomial) {
      out.push_back({b[j].monomial, subtract ? scalar::neg(b[j].coefficient, p) : b[j].coefficient});
      ++j;
    } else {
      mpq_class c = subtract ? scalar::sub(a[i].coefficient, b[j].coefficient, p)
                             : scalar::add(a[i].coefficient, b[j].coefficient, p);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

class PolyBuilder {
 public:
  static Poly from_terms(std::vector<Term> terms, Characteristic p) {
    Poly r(p);
    r.terms_ = std::move(terms);
    r.canonicalize();
    return r;
  }
  // Terms already canonical (sorted, merged, nonzero, reduced).
  static Poly from_sorted(std::vector<Term> terms, Characteristic p) {
    Poly r(p);
    r.terms_ = std::move(terms);
    return r;
  }
};

void Poly::canonicalize() {
  if (p_ != 0) {
    for (auto& t : terms_) t.coefficient = scalar::reduce(t.coefficient, p_);
  }
  std::sort(terms_.begin(), terms_.end(), greater_term);
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient = scalar::add(merged.back().coefficient, t.coefficient, p_);
    } else {
      if (!merged.empty() && merged.back().coefficient == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coefficient == 0) merged.pop_back();
  terms_ = std::move(merged);
}

Poly Poly::constant(const mpq_class& c, Characteristic p) {
  return term(Monomial(), c, p);
}

Poly Poly::variable(std::size_t index, Characteristic p) {
  return term(Monomial::variable(index), mpq_class(1), p);
}

Poly Poly::term(const Monomial& m, const mpq_class& c, Characteristic p) {
  mpq_class r = scalar::reduce(c, p);
  if (r == 0) return Poly(p);
  return PolyBuilder::from_sorted({Term{m, std::move(r)}}, p);
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coefficient == 1;
}

mpq_class Poly::constant_value() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return 0;
}

std::uint32_t Poly::degree_in(std::size_t var) const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

std::uint32_t Poly::valuation_in(std::size_t var) const noexcept {
  if (terms_.empty()) return 0;
  std::uint32_t v = 0xffffffffu;
  for (const auto& t : terms_) v = std::min(v, t.monomial[var]);
  return v;
}

std::uint32_t Poly::variable_mask() const noexcept {
  std::uint32_t m = 0;
  for (const auto& t : terms_) m |= t.monomial.support();
  return m;
}

Poly Poly::operator-() const {
  Poly r(p_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coefficient = scalar::neg(t.coefficient, p_);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false, p_);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true, p_);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  const Characteristic p = a.p_;
  if (a.is_zero() || b.is_zero()) return Poly(p);
  if (b.terms_.size() == 1) return a.multiplied_by(b.terms_[0].monomial, b.terms_[0].coefficient);
  if (a.terms_.size() == 1) return b.multiplied_by(a.terms_[0].monomial, a.terms_[0].coefficient);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back({x.monomial * y.monomial, x.coefficient * y.coefficient});
  return PolyBuilder::from_terms(std::move(prod), p);
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.p_ != b.p_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  }
  return true;
}

Poly Poly::scaled(const mpq_class& c) const {
  return multiplied_by(Monomial(), c);
}

Poly Poly::multiplied_by(const Monomial& m, const mpq_class& c) const {
  mpq_class cr = scalar::reduce(c, p_);
  if (cr == 0 || terms_.empty()) return Poly(p_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.monomial * m, scalar::mul(t.coefficient, cr, p_)});
  return PolyBuilder::from_sorted(std::move(out), p_);
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(1, p_);
  Poly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint32_t e = t.monomial[var];
    if (e == 0) continue;
    mpq_class c = scalar::mul(t.coefficient, scalar::from_int(static_cast<long>(e), p_), p_);
    if (c == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back({m, std::move(c)});
  }
  return PolyBuilder::from_terms(std::move(out), p_);
}

Poly Poly::evaluated(std::size_t var, const mpq_class& value) const {
  mpq_class v = scalar::reduce(value, p_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  std::vector<mpq_class> powers{mpq_class(1)};
  for (const auto& t : terms_) {
    std::uint32_t e = t.monomial[var];
    while (powers.size() <= e) powers.push_back(scalar::mul(powers.back(), v, p_));
    Monomial m = t.monomial;
    m.set(var, 0);
    out.push_back({m, scalar::mul(t.coefficient, powers[e], p_)});
  }
  return PolyBuilder::from_terms(std::move(out), p_);
}

Poly Poly::substituted(std::size_t var, const Poly& value) const {
  auto coeffs = coefficients_in(var);
  if (coeffs.size() <= 1) return *this;
  Poly result(p_);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    result = result * value + coeffs[i];
  }
  return result;
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& t : terms_) {
    Monomial m = t.monomial;
    std::uint32_t e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coefficient});
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(PolyBuilder::from_sorted(std::move(b), p_));
  return out;
}

Poly Poly::from_coefficients_in(std::size_t var, std::span<const Poly> coeffs, Characteristic p) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (const auto& t : coeffs[i].terms()) {
      if (t.monomial[var] != 0) fail(ErrorKind::InvalidArgument, "coefficient involves the main variable");
      Monomial m = t.monomial;
      m.set(var, static_cast<std::uint32_t>(i));
      out.push_back({m, t.coefficient});
    }
  }
  return PolyBuilder::from_terms(std::move(out), p);
}

Poly Poly::divided_by_power(std::size_t var, std::uint32_t k) const {
  if (k == 0) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.monomial[var] < k) fail(ErrorKind::InvalidArgument, "divided_by_power: insufficient valuation");
    Monomial m = t.monomial;
    m.set(var, t.monomial[var] - k);
    out.push_back({m, t.coefficient});
  }
  return PolyBuilder::from_terms(std::move(out), p_);
}

Poly Poly::remapped(std::span<const int> new_index) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      std::uint32_t e = t.monomial[i];
      if (e == 0) continue;
      if (i >= new_index.size() || new_index[i] < 0)
        fail(ErrorKind::UnknownVariable, "remapped: variable has no image");
      std::size_t j = static_cast<std::size_t>(new_index[i]);
      m.set(j, m[j] + e);
    }
    out.push_back({m, t.coefficient});
  }
  return PolyBuilder::from_terms(std::move(out), p_);
}

Poly Poly::monic() const {
  if (terms_.empty() || terms_[0].coefficient == 1) return *this;
  return scaled(scalar::inv(terms_[0].coefficient, p_));
}

Poly Poly::primitive() const {
  if (p_ != 0 || terms_.empty()) {
    if (p_ != 0) return monic();
    return *this;
  }
  mpz_class l = 1, g = 0;
  for (const auto& t : terms_) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coefficient.get_den().get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_num().get_mpz_t());
  }
  mpq_class f(l, g);
  f.canonicalize();
  if (terms_[0].coefficient < 0) f = -f;
  if (f == 1) return *this;
  return scaled(f);
}

std::string Poly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.coefficient;
    bool negative = p_ == 0 && c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      std::uint32_t e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  const Characteristic p = a.characteristic();
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return Poly(p);
  if (b.is_constant()) return a.scaled(scalar::inv(b.constant_value(), p));
  const Term& lb = b.leading_term();
  const mpq_class lbinv = scalar::inv(lb.coefficient, p);
  // Cheap necessary conditions: variable support and degrees.
  if ((b.variable_mask() & ~a.variable_mask()) != 0) return std::nullopt;
  if (b.total_degree() > a.total_degree()) return std::nullopt;
  std::vector<Term> quotient;
  Poly r = a;
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    if (!lb.monomial.divides(lr.monomial)) return std::nullopt;
    Monomial qm = lr.monomial / lb.monomial;
    mpq_class qc = scalar::mul(lr.coefficient, lbinv, p);
    r -= b.multiplied_by(qm, qc);
    quotient.push_back({qm, std::move(qc)});
  }
  return PolyBuilder::from_sorted(std::move(quotient), p);
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto q = divide_exact(a, b);
  if (!q) fail(ErrorKind::InvalidArgument, "exact_quotient: division is not exact");
  return *std::move(q);
}

namespace {

constexpr std::uint64_t kCertificatePrime = 2305843009213693951ull;  // 2^61 - 1

// Image of a in F_P[x] after evaluating every other variable at vals.
std::optional<modular::ModPoly> univariate_image(const Poly& a, std::size_t x,
                                                 const std::array<std::uint64_t, kMaxVariables>& vals,
                                                 const modular::PrimeField& f) {
  std::vector<std::uint64_t> c(a.degree_in(x) + 1, 0);
  for (const auto& t : a.terms()) {
    std::uint64_t v;
    if (!f.reduce(t.coefficient, v)) return std::nullopt;
    for (std::size_t i = 0; i < kMaxVariables && v != 0; ++i) {
      if (i == x || t.monomial[i] == 0) continue;
      v = f.mul(v, f.pow(vals[i], t.monomial[i]));
    }
    std::uint32_t e = t.monomial[x];
    c[e] = f.add(c[e], v);
  }
  return modular::ModPoly(std::move(c));
}

// True only if a and b are certainly coprime. A positive-degree common factor
// in x survives any evaluation that keeps both leading coefficients in x.
bool certify_coprime(const Poly& a, const Poly& b, std::uint32_t shared) {
  const std::uint64_t prime = a.characteristic() != 0 ? a.characteristic() : kCertificatePrime;
  modular::ModPolyRing ring(prime);
  const auto& f = ring.field();
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (a.size() * 1315423911ull + b.size()));
  for (std::size_t x = 0; x < kMaxVariables; ++x) {
    if (!(shared & (1u << x))) continue;
    bool certified = false;
    for (int attempt = 0; attempt < 3 && !certified; ++attempt) {
      std::array<std::uint64_t, kMaxVariables> vals{};
      for (auto& v : vals) v = rng() % prime;
      auto ia = univariate_image(a, x, vals, f);
      auto ib = univariate_image(b, x, vals, f);
      if (!ia || !ib) return false;
      if (ia->degree() != static_cast<int>(a.degree_in(x)) || ib->degree() != static_cast<int>(b.degree_in(x)))
        continue;
      certified = ring.gcd(*ia, *ib).degree() == 0;
    }
    if (!certified) return false;
  }
  return true;
}

Poly gcd_nonzero(const Poly& a, const Poly& b);

Poly content_in(const std::vector<Poly>& coeffs, Characteristic p) {
  Poly g(p);
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd_nonzero(g, c);
    if (g.is_constant()) return Poly::constant(1, p);
  }
  return g;
}

Poly primitive_in(const Poly& a, std::size_t x) {
  Poly c = content_in(a.coefficients_in(x), a.characteristic());
  Poly r = c.is_constant() ? a : exact_quotient(a, c);
  return r.primitive();
}

Poly leading_coefficient_in(const Poly& a, std::size_t x) {
  return a.coefficients_in(x).back();
}

Poly pseudo_remainder(Poly a, const Poly& b, std::size_t x) {
  const std::uint32_t m = b.degree_in(x);
  const Poly lb = leading_coefficient_in(b, x);
  while (!a.is_zero() && a.degree_in(x) >= m) {
    std::uint32_t d = a.degree_in(x);
    Poly la = leading_coefficient_in(a, x);
    a = a * lb - (la * b).multiplied_by(Monomial::variable(x, d - m), mpq_class(1));
  }
  return a;
}

Poly gcd_nonzero(const Poly& a, const Poly& b) {
  const Characteristic p = a.characteristic();
  const Poly one = Poly::constant(1, p);
  if (a.is_constant() || b.is_constant()) return one;
  const std::uint32_t shared = a.variable_mask() & b.variable_mask();
  if (shared == 0) return one;
  if (a.size() <= b.size()) {
    if (divide_exact(b, a)) return a.monic();
  } else if (divide_exact(a, b)) {
    return b.monic();
  }
  if (certify_coprime(a, b, shared)) return one;

  // Main variable: the shared one of least degree keeps the remainder sequence short.
  std::size_t x = 0;
  std::uint32_t best = 0xffffffffu;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (!(shared & (1u << i))) continue;
    std::uint32_t d = std::min(a.degree_in(i), b.degree_in(i));
    if (d < best) {
      best = d;
      x = i;
    }
  }
  Poly ca = content_in(a.coefficients_in(x), p);
  Poly cb = content_in(b.coefficients_in(x), p);
  Poly c = gcd_nonzero(ca, cb);
  Poly f = (ca.is_constant() ? a : exact_quotient(a, ca)).primitive();
  Poly g = (cb.is_constant() ? b : exact_quotient(b, cb)).primitive();
  if (f.degree_in(x) < g.degree_in(x)) std::swap(f, g);
  Poly result = one;
  for (;;) {
    if (g.degree_in(x) == 0) break;
    Poly r = pseudo_remainder(f, g, x);
    if (r.is_zero()) {
      result = g;
      break;
    }
    if (r.degree_in(x) == 0) break;
    f = std::move(g);
    g = primitive_in(r, x);
  }
  return (c * result).monic();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  return gcd_nonzero(a, b);
}

std::optional<Poly> sqrt(const Poly& a) {
  const Characteristic p = a.characteristic();
  if (a.is_zero()) return a;
  const Term& lt = a.leading_term();
  Monomial root_m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (lt.monomial[i] % 2) return std::nullopt;
    root_m.set(i, lt.monomial[i] / 2);
  }
  mpq_class root_c;
  if (!scalar::sqrt(lt.coefficient, p, root_c)) return std::nullopt;
  Poly r = Poly::term(root_m, root_c, p);
  if (p == 2) return r * r == a ? std::optional<Poly>(r) : std::nullopt;
  const mpq_class two_inv = scalar::inv(scalar::from_int(2, p), p);
  const mpq_class lead_inv = scalar::inv(root_c, p);
  Poly rem = a - r * r;
  while (!rem.is_zero()) {
    const Term& lr = rem.leading_term();
    if (!root_m.divides(lr.monomial)) return std::nullopt;
    Monomial m = lr.monomial / root_m;
    if (!(m < root_m)) return std::nullopt;
    Poly t = Poly::term(m, scalar::mul(scalar::mul(lr.coefficient, two_inv, p), lead_inv, p), p);
    rem -= (r.scaled(scalar::from_int(2, p)) + t) * t;
    r += t;
  }
  return r;
}

}  // namespace addchow
