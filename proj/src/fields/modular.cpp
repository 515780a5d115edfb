#include "addchow/fields/modular.hpp"

#include <algorithm>

#include "addchow/error.hpp"

namespace addchow::modular {

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p == 0) fail(ErrorKind::DivisionByZero, "inverse of zero mod p");
  return pow(a, p - 2);
}

std::uint64_t PrimeField::reduce(const mpz_class& x) const {
  return mpz_fdiv_ui(x.get_mpz_t(), p);
}

bool PrimeField::reduce(const mpq_class& x, std::uint64_t& out) const {
  std::uint64_t d = reduce(x.get_den());
  if (d == 0) return false;
  out = mul(reduce(x.get_num()), inv(d));
  return true;
}

ModPoly ModPolyRing::add(const ModPoly& a, const ModPoly& b) const {
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<std::uint64_t> c(std::max(x.size(), y.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f_.add(a[i], b[i]);
  return ModPoly(std::move(c));
}

ModPoly ModPolyRing::sub(const ModPoly& a, const ModPoly& b) const {
  std::vector<std::uint64_t> c(std::max(a.coefficients().size(), b.coefficients().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f_.sub(a[i], b[i]);
  return ModPoly(std::move(c));
}

ModPoly ModPolyRing::mul(const ModPoly& a, const ModPoly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<std::uint64_t> c(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] = f_.add(c[i + j], f_.mul(x[i], y[j]));
  }
  return ModPoly(std::move(c));
}

ModPoly ModPolyRing::scale(const ModPoly& a, std::uint64_t s) const {
  std::vector<std::uint64_t> c = a.coefficients();
  for (auto& v : c) v = f_.mul(v, s);
  return ModPoly(std::move(c));
}

std::pair<ModPoly, ModPoly> ModPolyRing::divmod(const ModPoly& a, const ModPoly& b) const {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero mod p");
  if (a.degree() < b.degree()) return {ModPoly(), a};
  std::vector<std::uint64_t> r = a.coefficients();
  const auto& d = b.coefficients();
  const int db = b.degree();
  std::vector<std::uint64_t> q(a.degree() - db + 1, 0);
  const std::uint64_t li = f_.inv(b.leading());
  for (int i = a.degree(); i >= db; --i) {
    std::uint64_t c = f_.mul(r[i], li);
    q[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] = f_.sub(r[i - db + j], f_.mul(c, d[j]));
  }
  r.resize(db);
  return {ModPoly(std::move(q)), ModPoly(std::move(r))};
}

ModPoly ModPolyRing::monic(const ModPoly& a) const {
  if (a.is_zero()) return a;
  return scale(a, f_.inv(a.leading()));
}

ModPoly ModPolyRing::gcd(ModPoly a, ModPoly b) const {
  while (!b.is_zero()) {
    ModPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

ModPoly ModPolyRing::derivative(const ModPoly& a) const {
  if (a.degree() <= 0) return {};
  std::vector<std::uint64_t> c(a.degree(), 0);
  for (int i = 1; i <= a.degree(); ++i) c[i - 1] = f_.mul(a[i], static_cast<std::uint64_t>(i) % f_.p);
  return ModPoly(std::move(c));
}

ModPoly ModPolyRing::powmod(const ModPoly& base, const mpz_class& e, const ModPoly& modulus) const {
  ModPoly result({1});
  result = rem(result, modulus);
  ModPoly b = rem(base, modulus);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result), modulus);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b), modulus);
  }
  return result;
}

std::uint64_t ModPolyRing::eval(const ModPoly& a, std::uint64_t x) const {
  std::uint64_t r = 0;
  for (int i = a.degree(); i >= 0; --i) r = f_.add(f_.mul(r, x), a[i]);
  return r;
}

std::vector<std::pair<ModPoly, int>> ModPolyRing::squarefree(const ModPoly& a) const {
  std::vector<std::pair<ModPoly, int>> out;
  if (a.degree() <= 0) return out;
  const std::uint64_t p = f_.p;
  auto pth_root = [&](const ModPoly& f) {
    std::vector<std::uint64_t> c;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f[i]);
    return ModPoly(std::move(c));
  };
  ModPoly g = derivative(a);
  if (g.is_zero()) {
    for (auto& [h, m] : squarefree(pth_root(a))) out.emplace_back(h, m * static_cast<int>(p));
    return out;
  }
  ModPoly c = gcd(a, g);
  ModPoly w = divmod(a, c).first;
  int i = 1;
  while (w.degree() > 0) {
    ModPoly y = gcd(w, c);
    ModPoly z = divmod(w, y).first;
    if (z.degree() > 0) out.emplace_back(monic(z), i);
    ++i;
    w = y;
    c = divmod(c, y).first;
  }
  if (c.degree() > 0) {
    for (auto& [h, m] : squarefree(pth_root(c))) out.emplace_back(h, m * static_cast<int>(p));
  }
  return out;
}

std::vector<std::pair<ModPoly, int>> ModPolyRing::distinct_degree(const ModPoly& a) const {
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly f = monic(a);
  const ModPoly x({0, 1});
  ModPoly h = rem(x, f);
  const mpz_class p(static_cast<unsigned long>(f_.p));
  int i = 1;
  while (f.degree() >= 2 * i) {
    h = powmod(h, p, f);
    ModPoly g = gcd(sub(h, x), f);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = divmod(f, g).first;
      h = rem(h, f);
    }
    ++i;
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

void ModPolyRing::equal_degree(const ModPoly& a, int d, std::vector<ModPoly>& out,
                               std::mt19937_64& rng) const {
  if (a.degree() == d) {
    out.push_back(monic(a));
    return;
  }
  const std::uint64_t p = f_.p;
  mpz_class e;
  if (p != 2) {
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
    e = (e - 1) / 2;
  }
  for (;;) {
    std::vector<std::uint64_t> r(a.degree());
    for (auto& v : r) v = rng() % p;
    ModPoly rnd(std::move(r));
    if (rnd.degree() <= 0) continue;
    ModPoly b;
    if (p != 2) {
      b = sub(powmod(rnd, e, a), ModPoly({1}));
    } else {
      ModPoly term = rem(rnd, a);
      b = term;
      for (int k = 1; k < d; ++k) {
        term = rem(mul(term, term), a);
        b = add(b, term);
      }
    }
    ModPoly g = gcd(b, a);
    if (g.degree() > 0 && g.degree() < a.degree()) {
      equal_degree(g, d, out, rng);
      equal_degree(divmod(a, g).first, d, out, rng);
      return;
    }
  }
}

std::vector<std::pair<ModPoly, int>> ModPolyRing::factor(const ModPoly& a) const {
  if (a.is_zero()) fail(ErrorKind::InvalidArgument, "factor of zero polynomial");
  std::vector<std::pair<ModPoly, int>> out;
  std::mt19937_64 rng(0x5eed);
  for (auto& [s, m] : squarefree(monic(a))) {
    for (auto& [g, d] : distinct_degree(s)) {
      std::vector<ModPoly> parts;
      equal_degree(g, d, parts, rng);
      for (auto& q : parts) out.emplace_back(q, m);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
    return x.first.coefficients() < y.first.coefficients();
  });
  return out;
}

std::vector<std::uint64_t> ModPolyRing::roots(const ModPoly& a) const {
  std::vector<std::uint64_t> out;
  if (a.degree() <= 0) return out;
  const ModPoly x({0, 1});
  ModPoly f = monic(a);
  ModPoly h = sub(powmod(x, mpz_class(static_cast<unsigned long>(f_.p)), f), x);
  ModPoly g = gcd(h, f);
  if (g.degree() <= 0) return out;
  std::vector<ModPoly> parts;
  std::mt19937_64 rng(0x5eed);
  equal_degree(g, 1, parts, rng);
  for (auto& q : parts) out.push_back(f_.neg(q[0]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace addchow::modular
