#include "addchow/fields/rational_function.hpp"

#include <bit>

#include "addchow/error.hpp"

namespace addchow {

RationalFunction::RationalFunction(Poly numerator)
    : num_(std::move(numerator)), den_(Poly::constant(1, num_.characteristic())) {}

RationalFunction RationalFunction::constant(const mpq_class& c, Characteristic p) {
  return RationalFunction(Poly::constant(c, p));
}

RationalFunction RationalFunction::variable(std::size_t index, Characteristic p) {
  return RationalFunction(Poly::variable(index, p));
}

RationalFunction RationalFunction::fraction(Poly num, Poly den) {
  if (den.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
  const Characteristic p = num.characteristic();
  if (num.is_zero()) return RationalFunction(p);
  if (!den.is_constant()) {
    Poly g = gcd(num, den);
    if (!g.is_one()) {
      num = exact_quotient(num, g);
      den = exact_quotient(den, g);
    }
  }
  mpq_class lead_inv = scalar::inv(den.leading_coefficient(), p);
  if (lead_inv != 1) {
    num = num.scaled(lead_inv);
    den = den.scaled(lead_inv);
  }
  return RationalFunction(std::move(num), std::move(den), true);
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, true); }

RationalFunction RationalFunction::from_coprime(Poly num, Poly den) {
  mpq_class lead_inv = scalar::inv(den.leading_coefficient(), num.characteristic());
  if (lead_inv != 1) {
    num = num.scaled(lead_inv);
    den = den.scaled(lead_inv);
  }
  return RationalFunction(std::move(num), std::move(den), true);
}

namespace {

RationalFunction add_impl(const RationalFunction& a, const RationalFunction& b, bool subtract) {
  const Poly& an = a.numerator();
  const Poly& ad = a.denominator();
  Poly bn = subtract ? -b.numerator() : b.numerator();
  const Poly& bd = b.denominator();
  if (b.is_zero()) return a;
  if (a.is_zero()) return RationalFunction::fraction(std::move(bn), bd);
  if (ad.is_one() && bd.is_one()) return RationalFunction(an + bn);
  if (ad == bd) return RationalFunction::fraction(an + bn, ad);
  if (bd.is_one()) return RationalFunction::fraction(an + bn * ad, ad);
  if (ad.is_one()) return RationalFunction::fraction(an * bd + bn, bd);
  Poly g = gcd(ad, bd);
  if (g.is_one()) {
    // Coprime denominators: the result is already reduced.
    return RationalFunction::fraction(an * bd + bn * ad, ad * bd);
  }
  Poly ad1 = exact_quotient(ad, g);
  Poly bd1 = exact_quotient(bd, g);
  Poly num = an * bd1 + bn * ad1;
  if (num.is_zero()) return RationalFunction(a.characteristic());
  // Reduced inputs: any common factor of num and ad1 * bd divides g.
  Poly h = gcd(num, g);
  Poly den = ad1 * bd;
  if (!h.is_one()) {
    num = exact_quotient(num, h);
    den = exact_quotient(den, h);
  }
  return RationalFunction::from_coprime(std::move(num), std::move(den));
}

}  // namespace

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) { return add_impl(a, b, false); }
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return add_impl(a, b, true); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction(a.characteristic());
  if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ * b.num_);
  // Cross-cancel so that the product only needs gcds of smaller pieces.
  Poly g1 = gcd(a.num_, b.den_);
  Poly g2 = gcd(b.num_, a.den_);
  Poly n1 = g1.is_one() ? a.num_ : exact_quotient(a.num_, g1);
  Poly d2 = g1.is_one() ? b.den_ : exact_quotient(b.den_, g1);
  Poly n2 = g2.is_one() ? b.num_ : exact_quotient(b.num_, g2);
  Poly d1 = g2.is_one() ? a.den_ : exact_quotient(a.den_, g2);
  Poly num = n1 * n2;
  Poly den = d1 * d2;
  mpq_class lead_inv = scalar::inv(den.leading_coefficient(), a.characteristic());
  if (lead_inv != 1) {
    num = num.scaled(lead_inv);
    den = den.scaled(lead_inv);
  }
  return RationalFunction(std::move(num), std::move(den), true);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of the zero rational function");
  const Characteristic p = characteristic();
  mpq_class lead_inv = scalar::inv(num_.leading_coefficient(), p);
  return RationalFunction(den_.scaled(lead_inv), num_.scaled(lead_inv), true);
}

RationalFunction RationalFunction::scaled(const mpq_class& c) const {
  mpq_class r = scalar::reduce(c, characteristic());
  if (r == 0) return RationalFunction(characteristic());
  return RationalFunction(num_.scaled(r), den_, true);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), true);
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  if (den_.is_one()) return RationalFunction(num_.derivative(var));
  Poly dn = num_.derivative(var);
  Poly dd = den_.derivative(var);
  if (dd.is_zero()) return fraction(std::move(dn), den_);
  return fraction(dn * den_ - num_ * dd, den_ * den_);
}

RationalFunction RationalFunction::evaluated(std::size_t var, const mpq_class& value) const {
  Poly d = den_.evaluated(var, value);
  if (d.is_zero()) fail(ErrorKind::DivisionByZero, "denominator vanishes at the evaluation point");
  return fraction(num_.evaluated(var, value), std::move(d));
}

RationalFunction RationalFunction::substituted(std::size_t var, const RationalFunction& value) const {
  // Homogenise in var: sum c_i v^i with v = n/d becomes sum c_i n^i d^(D-i) / d^D.
  auto sub_poly = [&](const Poly& f, std::uint32_t deg) {
    auto c = f.coefficients_in(var);
    Poly acc(f.characteristic());
    std::vector<Poly> npow{Poly::constant(1, f.characteristic())};
    std::vector<Poly> dpow{Poly::constant(1, f.characteristic())};
    for (std::uint32_t i = 1; i <= deg; ++i) {
      npow.push_back(npow.back() * value.numerator());
      dpow.push_back(dpow.back() * value.denominator());
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c[i].is_zero()) acc += c[i] * npow[i] * dpow[deg - i];
    }
    return acc;
  };
  const std::uint32_t dn = num_.degree_in(var);
  const std::uint32_t dd = den_.degree_in(var);
  if (dn == 0 && dd == 0) return *this;
  const std::uint32_t deg = std::max(dn, dd);
  Poly n = sub_poly(num_, deg);
  Poly d = sub_poly(den_, deg);
  if (d.is_zero()) fail(ErrorKind::DivisionByZero, "substitution makes the denominator vanish");
  return fraction(std::move(n), std::move(d));
}

RationalFunction RationalFunction::remapped(std::span<const int> new_index) const {
  return fraction(num_.remapped(new_index), den_.remapped(new_index));
}

int RationalFunction::valuation_in(std::size_t var) const {
  if (num_.is_zero()) fail(ErrorKind::InvalidArgument, "valuation of zero");
  return static_cast<int>(num_.valuation_in(var)) - static_cast<int>(den_.valuation_in(var));
}

namespace {

bool needs_parens_as_denominator(const Poly& d) {
  if (d.size() != 1) return true;
  const Term& t = d.leading_term();
  if (t.monomial.is_one()) return false;
  if (t.coefficient != 1) return true;
  return std::popcount(t.monomial.support()) > 1;
}

}  // namespace

std::string render_fraction(const Poly& num, const Poly& den, std::span<const std::string> names) {
  Poly n = num;
  Poly d = den;
  if (n.characteristic() == 0 && !n.is_zero()) {
    mpz_class l = 1, g = 0;
    for (const Poly* f : {&n, &d}) {
      for (const auto& t : f->terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coefficient.get_den().get_mpz_t());
    }
    for (const Poly* f : {&n, &d}) {
      for (const auto& t : f->terms()) {
        mpz_class c = t.coefficient.get_num() * (l / t.coefficient.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      }
    }
    mpq_class f(l, g);
    f.canonicalize();
    if (d.leading_coefficient() < 0) f = -f;
    n = n.scaled(f);
    d = d.scaled(f);
  }
  if (d.is_one()) return n.to_string(names);
  std::string ns = n.to_string(names);
  std::string ds = d.to_string(names);
  if (n.size() > 1) ns = "(" + ns + ")";
  if (needs_parens_as_denominator(d)) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

std::string RationalFunction::to_string(std::span<const std::string> names) const {
  return render_fraction(num_, den_, names);
}

}  // namespace addchow
