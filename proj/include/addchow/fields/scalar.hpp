#ifndef ADDCHOW_FIELDS_SCALAR_HPP
#define ADDCHOW_FIELDS_SCALAR_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace addchow {

/// Characteristic of the prime field: 0 for the rationals, otherwise a prime p.
using Characteristic = std::uint64_t;

bool is_prime(std::uint64_t n);

/// Coefficients are mpq_class in both characteristics. Over F_p they are kept
/// as integers in [0, p).
namespace scalar {

mpq_class reduce(const mpq_class& x, Characteristic p);
mpq_class add(const mpq_class& a, const mpq_class& b, Characteristic p);
mpq_class sub(const mpq_class& a, const mpq_class& b, Characteristic p);
mpq_class mul(const mpq_class& a, const mpq_class& b, Characteristic p);
mpq_class neg(const mpq_class& a, Characteristic p);
/// Throws DivisionByZero on zero.
mpq_class inv(const mpq_class& a, Characteristic p);
mpq_class from_int(long v, Characteristic p);

/// Square root in the prime field if it exists (rational squares over Q,
/// Tonelli-Shanks over F_p).
bool sqrt(const mpq_class& a, Characteristic p, mpq_class& root);

std::string to_string(const mpq_class& a);

}  // namespace scalar
}  // namespace addchow

#endif  // ADDCHOW_FIELDS_SCALAR_HPP
