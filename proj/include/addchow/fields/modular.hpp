#ifndef ADDCHOW_FIELDS_MODULAR_HPP
#define ADDCHOW_FIELDS_MODULAR_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace addchow::modular {

/// Arithmetic in Z/p for a prime p < 2^63.
struct PrimeField {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { std::uint64_t s = a + b; return s >= p ? s - p : s; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
  /// Image of a rational number; returns false if the denominator vanishes mod p.
  bool reduce(const mpq_class& x, std::uint64_t& out) const;
  std::uint64_t reduce(const mpz_class& x) const;
};

/// Dense univariate polynomial over Z/p, coefficients low to high, no
/// trailing zeros (the zero polynomial is empty).
class ModPoly {
 public:
  ModPoly() = default;
  explicit ModPoly(std::vector<std::uint64_t> c) : c_(std::move(c)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<std::uint64_t>& coefficients() const { return c_; }
  std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t leading() const { return c_.back(); }

  friend bool operator==(const ModPoly&, const ModPoly&) = default;

 private:
  void trim() { while (!c_.empty() && c_.back() == 0) c_.pop_back(); }
  std::vector<std::uint64_t> c_;
};

class ModPolyRing {
 public:
  explicit ModPolyRing(std::uint64_t p) : f_{p} {}
  const PrimeField& field() const { return f_; }

  ModPoly add(const ModPoly& a, const ModPoly& b) const;
  ModPoly sub(const ModPoly& a, const ModPoly& b) const;
  ModPoly mul(const ModPoly& a, const ModPoly& b) const;
  ModPoly scale(const ModPoly& a, std::uint64_t c) const;
  std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) const;
  ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
  ModPoly monic(const ModPoly& a) const;
  ModPoly gcd(ModPoly a, ModPoly b) const;
  ModPoly derivative(const ModPoly& a) const;
  ModPoly powmod(const ModPoly& base, const mpz_class& e, const ModPoly& modulus) const;
  std::uint64_t eval(const ModPoly& a, std::uint64_t x) const;

  /// Monic irreducible factors with multiplicities (a must be nonzero).
  std::vector<std::pair<ModPoly, int>> factor(const ModPoly& a) const;
  /// Distinct roots in Z/p.
  std::vector<std::uint64_t> roots(const ModPoly& a) const;

 private:
  std::vector<std::pair<ModPoly, int>> squarefree(const ModPoly& a) const;
  std::vector<std::pair<ModPoly, int>> distinct_degree(const ModPoly& a) const;
  void equal_degree(const ModPoly& a, int d, std::vector<ModPoly>& out, std::mt19937_64& rng) const;

  PrimeField f_;
};

}  // namespace addchow::modular

#endif  // ADDCHOW_FIELDS_MODULAR_HPP
