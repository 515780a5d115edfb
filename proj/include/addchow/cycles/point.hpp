#ifndef ADDCHOW_CYCLES_POINT_HPP
#define ADDCHOW_CYCLES_POINT_HPP

#include <string>
#include <vector>

#include "addchow/fields/field_element.hpp"

namespace addchow {

/// Point (t_0, ..., t_n) of Q^n: coordinates in one tower summing to zero.
/// The tower is the residue field of the point; a point over an extension of
/// the base field stands for the closed point it defines.
class QPoint {
 public:
  /// Throws InvalidArgument for fewer than two coordinates or a nonzero sum,
  /// TowerMismatch for mixed towers.
  explicit QPoint(std::vector<FieldElement> coordinates);

  const TowerPtr& tower() const noexcept { return c_.front().tower(); }
  /// Dimension n of the ambient Q^n.
  int n() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<FieldElement>& coordinates() const noexcept { return c_; }
  const FieldElement& operator[](std::size_t i) const { return c_.at(i); }

  /// All coordinates nonzero: misses every face and the vertex.
  bool good_position() const;
  QPoint moved_to(const TowerPtr& target) const;

  /// "(c0, c1, ..., cn)".
  std::string to_string() const;
  friend bool operator==(const QPoint& a, const QPoint& b);

 private:
  std::vector<FieldElement> c_;
};

/// Face map Q^n -> Q^{n+1}: inserts 0 at slot j (0 <= j <= n+1).
QPoint face(std::size_t j, const QPoint& p);

/// Pull-back table of the degeneracy pi_j: Q^n -> Q^{n-1}, one row per
/// target coordinate i = 0..n-1: "t_i", "t_j + t_{j+1}" or "t_{i+1}".
/// Requires 0 <= j <= n-1 (IndexOutOfRange).
std::vector<std::string> degeneracy_table(std::size_t j, int n);
/// pi_j applied to coordinates.
QPoint degeneracy(std::size_t j, const QPoint& p);

/// x * p = (t_0/x, ..., t_n/x) for x != 0 (DivisionByZero otherwise).
QPoint star(const FieldElement& x, const QPoint& p);

}  // namespace addchow

#endif  // ADDCHOW_CYCLES_POINT_HPP
