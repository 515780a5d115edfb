#ifndef ADDCHOW_FIELDS_MONOMIAL_HPP
#define ADDCHOW_FIELDS_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>

#include "addchow/error.hpp"

namespace addchow {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector with cached total degree. Ordered graded-lexicographically,
/// variable 0 most significant.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index, std::uint32_t power = 1) {
    Monomial m;
    m.set(index, power);
    return m;
  }

  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t operator[](std::size_t i) const noexcept { return exps_[i]; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t index, std::uint32_t power) {
    if (index >= kMaxVariables) fail(ErrorKind::IndexOutOfRange, "monomial variable index");
    if (power > 0xffff) fail(ErrorKind::InvalidArgument, "exponent overflow");
    degree_ = degree_ - exps_[index] + power;
    exps_[index] = static_cast<std::uint16_t>(power);
  }

  /// Bitmask of variables with positive exponent.
  std::uint32_t support() const noexcept {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exps_[i]) mask |= (1u << i);
    return mask;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      std::uint32_t e = std::uint32_t(exps_[i]) + o.exps_[i];
      if (e > 0xffff) fail(ErrorKind::InvalidArgument, "exponent overflow");
      r.exps_[i] = static_cast<std::uint16_t>(e);
    }
    r.degree_ = degree_ + o.degree_;
    return r;
  }

  bool divides(const Monomial& o) const noexcept {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const noexcept {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) r.exps_[i] = exps_[i] - divisor.exps_[i];
    r.degree_ = degree_ - divisor.degree_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
    return std::strong_ordering::equal;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
};

}  // namespace addchow

#endif  // ADDCHOW_FIELDS_MONOMIAL_HPP
