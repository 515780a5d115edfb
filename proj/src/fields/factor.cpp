#include "addchow/fields/factor.hpp"

#include <algorithm>

#include "addchow/error.hpp"
#include "addchow/fields/modular.hpp"

namespace addchow {

namespace {

using QPoly = std::vector<mpq_class>;  // low to high, trimmed

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const QPoly& a) { return static_cast<int>(a.size()) - 1; }

std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  QPoly q(a.size() - b.size() + 1);
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    mpq_class f = a[i] / b.back();
    q[i - db] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= f * b[j];
  }
  a.resize(db);
  trim(a);
  trim(q);
  return {q, a};
}

QPoly qmonic(QPoly a) {
  trim(a);
  if (a.empty()) return a;
  mpq_class l = a.back();
  for (auto& c : a) c /= l;
  return a;
}

QPoly qgcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = qdivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return qmonic(a);
}

QPoly qderivative(const QPoly& a) {
  QPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<long>(i));
  trim(d);
  return d;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

// Coefficients of a(y + s).
QPoly qshift(const QPoly& a, const mpq_class& s) {
  QPoly r;
  for (std::size_t i = a.size(); i-- > 0;) {
    // r = r * (y + s) + a[i]
    QPoly next(r.size() + 1);
    for (std::size_t j = 0; j < r.size(); ++j) {
      next[j + 1] += r[j];
      next[j] += r[j] * s;
    }
    next[0] += a[i];
    r = std::move(next);
  }
  trim(r);
  return r;
}

mpz_class eval_mod(const std::vector<mpz_class>& h, const mpz_class& x, const mpz_class& m) {
  mpz_class r = 0;
  for (std::size_t i = h.size(); i-- > 0;) {
    r = r * x + h[i];
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  }
  return r;
}

// Integer roots of a square-free monic integer polynomial: roots modulo a
// prime where it stays square-free, lifted by Newton iteration past the
// Cauchy bound and confirmed by exact evaluation.
std::vector<mpz_class> integer_roots_monic(const std::vector<mpz_class>& h) {
  std::vector<mpz_class> roots;
  if (h.size() <= 1) return roots;
  mpz_class bound = 0;
  for (const auto& c : h) bound = std::max(bound, mpz_class(abs(c)));
  bound += 1;
  std::uint64_t p = 1000003;
  for (;; p += 2) {
    if (!is_prime(p)) continue;
    modular::ModPolyRing ring(p);
    std::vector<std::uint64_t> c;
    for (const auto& x : h) c.push_back(ring.field().reduce(x));
    modular::ModPoly m(c);
    if (ring.gcd(m, ring.derivative(m)).degree() != 0) continue;
    std::vector<mpz_class> hd;
    for (std::size_t i = 1; i < h.size(); ++i) hd.push_back(h[i] * static_cast<unsigned long>(i));
    for (std::uint64_t r0 : ring.roots(m)) {
      mpz_class r = static_cast<unsigned long>(r0);
      mpz_class mod = static_cast<unsigned long>(p);
      while (mod <= 2 * bound) {
        mpz_class mod2 = mod * mod;
        mpz_class f = eval_mod(h, r, mod2);
        mpz_class fd = eval_mod(hd, r, mod2);
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), fd.get_mpz_t(), mod2.get_mpz_t()) == 0) break;
        r = r - f * inv;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod2.get_mpz_t());
        mod = mod2;
      }
      if (r > mod / 2) r -= mod;
      mpz_class v = 0;
      for (std::size_t i = h.size(); i-- > 0;) v = v * r + h[i];
      if (v == 0) roots.push_back(r);
    }
    break;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Distinct rational roots of a nonzero polynomial over Q.
std::vector<mpq_class> rational_roots(QPoly a) {
  trim(a);
  std::vector<mpq_class> roots;
  if (deg(a) < 1) return roots;
  QPoly g = qdivmod(a, qgcd(a, qderivative(a))).first;
  g = qmonic(g);
  if (g[0] == 0) {
    roots.push_back(0);
    g = qdivmod(g, QPoly{0, 1}).first;
  }
  if (deg(g) < 1) return roots;
  mpz_class l = 1;
  for (const auto& c : g) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> G;
  for (const auto& c : g) G.push_back(c.get_num() * (l / c.get_den()));
  const std::size_t n = G.size() - 1;
  const mpz_class lead = G[n];
  std::vector<mpz_class> h(n + 1);
  mpz_class pw = 1;
  for (std::size_t i = n + 1; i-- > 0;) {
    // h_i = G_i * lead^(n-1-i) for i < n; h_n = 1.
    if (i == n) {
      h[i] = 1;
      continue;
    }
    h[i] = G[i] * pw;
    pw *= lead;
  }
  for (const auto& y : integer_roots_monic(h)) {
    mpq_class r(y, lead);
    r.canonicalize();
    roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool rational_sqrt(const mpq_class& a, mpq_class& r) { return scalar::sqrt(a, 0, r); }

// Splits a monic quartic without rational roots into two quadratics if possible.
std::optional<std::pair<QPoly, QPoly>> split_quartic(const QPoly& q) {
  const mpq_class shift = -q[3] / 4;
  QPoly dep = qshift(q, shift);  // y^4 + P y^2 + Q y + R with x = y + shift
  dep.resize(5);
  const mpq_class P = dep[2], Q = dep[1], R = dep[0];
  std::vector<std::pair<QPoly, QPoly>> candidates;
  if (Q == 0) {
    mpq_class delta;
    if (rational_sqrt(P * P - 4 * R, delta)) {
      candidates.push_back({QPoly{(P - delta) / 2, 0, 1}, QPoly{(P + delta) / 2, 0, 1}});
    }
    mpq_class d;
    if (rational_sqrt(R, d)) {
      for (const mpq_class& dd : {d, mpq_class(-d)}) {
        mpq_class c;
        if (rational_sqrt(2 * dd - P, c) && c != 0) candidates.push_back({QPoly{dd, c, 1}, QPoly{dd, -c, 1}});
      }
    }
  } else {
    QPoly resolvent{-Q * Q, P * P - 4 * R, 2 * P, 1};
    for (const auto& z : rational_roots(resolvent)) {
      mpq_class c;
      if (z <= 0 || !rational_sqrt(z, c)) continue;
      mpq_class d = (P + z - Q / c) / 2;
      mpq_class e = (P + z + Q / c) / 2;
      candidates.push_back({QPoly{d, c, 1}, QPoly{e, -c, 1}});
    }
  }
  for (auto& [a, b] : candidates) {
    trim(a);
    trim(b);
    QPoly prod = qmul(a, b);
    QPoly expect = dep;
    trim(expect);
    if (prod == expect) return std::make_pair(qshift(a, -shift), qshift(b, -shift));
  }
  return std::nullopt;
}

QPoly constants_of(const UPoly& f) {
  QPoly c;
  for (const auto& x : f.coefficients()) c.push_back(x.base_value().numerator().constant_value());
  return c;
}

UPoly from_constants(const TowerPtr& t, const QPoly& c) {
  std::vector<FieldElement> e;
  for (const auto& x : c) e.push_back(FieldElement::from_rational(t, x));
  return UPoly(t, std::move(e));
}

std::vector<Factor> factor_prime_field(const UPoly& f) {
  const TowerPtr& t = f.tower();
  modular::ModPolyRing ring(t->characteristic());
  std::vector<std::uint64_t> c;
  for (const auto& x : constants_of(f)) c.push_back(mpz_get_ui(x.get_num().get_mpz_t()));
  std::vector<Factor> out;
  for (auto& [g, m] : ring.factor(modular::ModPoly(c))) {
    QPoly q;
    for (auto v : g.coefficients()) q.push_back(mpq_class(static_cast<unsigned long>(v)));
    out.push_back({from_constants(t, q), m});
  }
  return out;
}

std::vector<Factor> factor_rationals(const UPoly& f) {
  const TowerPtr& t = f.tower();
  std::vector<Factor> out;
  for (auto& part : squarefree_decomposition(f)) {
    QPoly g = constants_of(part.poly);
    for (const auto& r : rational_roots(g)) {
      out.push_back({from_constants(t, QPoly{-r, 1}), part.multiplicity});
      g = qdivmod(g, QPoly{-r, 1}).first;
    }
    g = qmonic(g);
    if (deg(g) < 1) continue;
    if (deg(g) > 4)
      fail(ErrorKind::UnsupportedDegree, "irreducible part of degree " + std::to_string(deg(g)) + " over Q");
    if (deg(g) == 4) {
      if (auto split = split_quartic(g)) {
        out.push_back({from_constants(t, split->first), part.multiplicity});
        out.push_back({from_constants(t, split->second), part.multiplicity});
        continue;
      }
    }
    out.push_back({from_constants(t, g), part.multiplicity});
  }
  return out;
}

// Square root in the function field, if the element is a square.
std::optional<FieldElement> function_field_sqrt(const FieldElement& x) {
  const RationalFunction& v = x.base_value();
  auto n = sqrt(v.numerator());
  auto d = sqrt(v.denominator());
  if (!n || !d) return std::nullopt;
  return FieldElement::from_base(x.tower(), RationalFunction::fraction(*n, *d));
}

std::vector<Factor> factor_function_field(const UPoly& f) {
  const TowerPtr& t = f.tower();
  const Characteristic p = t->characteristic();
  if (p != 0 && p <= static_cast<Characteristic>(f.degree()))
    fail(ErrorKind::UnsupportedDegree, "degree reaches the characteristic over a function field");
  std::vector<Factor> out;
  for (auto& part : squarefree_decomposition(f)) {
    const UPoly& g = part.poly;
    if (g.degree() == 1) {
      out.push_back(part);
      continue;
    }
    if (g.degree() > 2)
      fail(ErrorKind::UnsupportedDegree, "degree " + std::to_string(g.degree()) + " over a function field");
    const FieldElement b = g.coefficient(1), c = g.coefficient(0);
    const FieldElement disc = b * b - c.scaled(4);
    auto s = function_field_sqrt(disc);
    if (!s) {
      out.push_back(part);
      continue;
    }
    const FieldElement half = FieldElement::from_rational(t, mpq_class(1, 2));
    const FieldElement one = FieldElement::from_int(t, 1);
    for (const FieldElement& root : {(-b + *s) * half, (-b - *s) * half})
      out.push_back({UPoly(t, {-root, one}), part.multiplicity});
  }
  return out;
}

}  // namespace

std::vector<Factor> squarefree_decomposition(const UPoly& f) {
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "square-free decomposition of zero");
  std::vector<Factor> out;
  if (f.degree() < 1) return out;
  const Characteristic p = f.tower()->characteristic();
  if (p != 0 && p <= static_cast<Characteristic>(f.degree()))
    fail(ErrorKind::UnsupportedDegree, "square-free decomposition needs char > degree");
  UPoly a = f.monic();
  UPoly c = gcd(a, a.derivative());
  UPoly w = a.divmod(c).first;
  int i = 1;
  while (w.degree() > 0) {
    UPoly y = gcd(w, c);
    UPoly z = w.divmod(y).first;
    if (z.degree() > 0) out.push_back({z.monic(), i});
    ++i;
    w = y;
    c = c.divmod(y).first;
  }
  return out;
}

std::vector<Factor> factor_univariate(const UPoly& f) {
  if (f.is_zero()) fail(ErrorKind::InvalidArgument, "factor of the zero polynomial");
  if (f.degree() < 1) return {};
  const TowerPtr& t = f.tower();
  std::vector<Factor> out;
  if (t->has_extension()) {
    if (f.degree() > 1) fail(ErrorKind::UnsupportedDegree, "factoring of degree >= 2 over an extension tower");
    out.push_back({f.monic(), 1});
  } else if (t->num_variables() == 0) {
    out = t->characteristic() == 0 ? factor_rationals(f) : factor_prime_field(f);
  } else if (f.degree() == 1) {
    out.push_back({f.monic(), 1});
  } else {
    out = factor_function_field(f);
  }
  std::stable_sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return a.poly.to_string("x") < b.poly.to_string("x");
  });
  return out;
}

}  // namespace addchow
