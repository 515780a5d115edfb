#include "addchow/fields/scalar.hpp"

#include <algorithm>

#include "addchow/error.hpp"
#include "addchow/fields/modular.hpp"

namespace addchow {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  modular::PrimeField f{n};
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = f.pow(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r && composite; ++i) {
      x = f.mul(x, x);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

namespace scalar {

namespace {
mpz_class mod_p(const mpz_class& x, Characteristic p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
  return r;
}
}  // namespace

mpq_class reduce(const mpq_class& x, Characteristic p) {
  if (p == 0) return x;
  mpz_class num = mod_p(x.get_num(), p);
  if (x.get_den() == 1) return mpq_class(num);
  mpz_class den = mod_p(x.get_den(), p);
  if (den == 0) fail(ErrorKind::DivisionByZero, "denominator divisible by the characteristic");
  mpz_class inv;
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  return mpq_class(mod_p(num * inv, p));
}

mpq_class add(const mpq_class& a, const mpq_class& b, Characteristic p) {
  if (p == 0) return a + b;
  mpz_class s = a.get_num() + b.get_num();
  if (s >= p) s -= p;
  return mpq_class(s);
}

mpq_class sub(const mpq_class& a, const mpq_class& b, Characteristic p) {
  if (p == 0) return a - b;
  mpz_class s = a.get_num() - b.get_num();
  if (s < 0) s += p;
  return mpq_class(s);
}

mpq_class mul(const mpq_class& a, const mpq_class& b, Characteristic p) {
  if (p == 0) return a * b;
  return mpq_class(mod_p(a.get_num() * b.get_num(), p));
}

mpq_class neg(const mpq_class& a, Characteristic p) {
  if (p == 0) return -a;
  if (a == 0) return a;
  return mpq_class(mpz_class(static_cast<unsigned long>(p)) - a.get_num());
}

mpq_class inv(const mpq_class& a, Characteristic p) {
  if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
  if (p == 0) return 1 / a;
  mpz_class r;
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), pz.get_mpz_t());
  return mpq_class(r);
}

mpq_class from_int(long v, Characteristic p) { return reduce(mpq_class(v), p); }

bool sqrt(const mpq_class& a, Characteristic p, mpq_class& root) {
  if (p == 0) {
    if (a < 0) return false;
    if (!mpz_perfect_square_p(a.get_num().get_mpz_t()) || !mpz_perfect_square_p(a.get_den().get_mpz_t()))
      return false;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), a.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), a.get_den().get_mpz_t());
    root = mpq_class(n, d);
    root.canonicalize();
    return true;
  }
  std::uint64_t x = mpz_get_ui(a.get_num().get_mpz_t());
  modular::PrimeField f{p};
  if (x == 0 || p == 2) {
    root = a;
    return true;
  }
  if (f.pow(x, (p - 1) / 2) != 1) return false;
  // Tonelli-Shanks.
  std::uint64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (f.pow(z, (p - 1) / 2) != p - 1) ++z;
  std::uint64_t m = s, c = f.pow(z, q), t = f.pow(x, q), r = f.pow(x, (q + 1) / 2);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = f.mul(tt, tt);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = f.mul(b, b);
    m = i;
    c = f.mul(b, b);
    t = f.mul(t, c);
    r = f.mul(r, b);
  }
  root = mpq_class(mpz_class(static_cast<unsigned long>(std::min(r, p - r))));
  return true;
}

std::string to_string(const mpq_class& a) { return a.get_str(); }

}  // namespace scalar
}  // namespace addchow
