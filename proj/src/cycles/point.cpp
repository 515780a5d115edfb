#include "addchow/cycles/point.hpp"

#include "addchow/error.hpp"

namespace addchow {

QPoint::QPoint(std::vector<FieldElement> coordinates) : c_(std::move(coordinates)) {
  if (c_.size() < 2) fail(ErrorKind::InvalidArgument, "a point of Q^n needs at least two coordinates");
  FieldElement sum(c_.front().tower());
  for (const auto& x : c_) {
    require_same_tower(*c_.front().tower(), *x.tower());
    sum += x;
  }
  if (!sum.is_zero()) fail(ErrorKind::InvalidArgument, "coordinates do not sum to zero: " + to_string());
}

bool QPoint::good_position() const {
  for (const auto& x : c_)
    if (x.is_zero()) return false;
  return true;
}

QPoint QPoint::moved_to(const TowerPtr& target) const {
  std::vector<FieldElement> out;
  for (const auto& x : c_) out.push_back(x.moved_to(target));
  return QPoint(std::move(out));
}

std::string QPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) out += (i ? ", " : "") + c_[i].to_string();
  return out + ")";
}

bool operator==(const QPoint& a, const QPoint& b) {
  if (a.c_.size() != b.c_.size() || !a.tower()->same_as(*b.tower())) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i].coefficients() != b.c_[i].coefficients()) return false;
  return true;
}

QPoint face(std::size_t j, const QPoint& p) {
  if (j > static_cast<std::size_t>(p.n()) + 1)
    fail(ErrorKind::IndexOutOfRange, "face index " + std::to_string(j) + " out of range for Q^" + std::to_string(p.n() + 1));
  std::vector<FieldElement> c = p.coordinates();
  c.insert(c.begin() + static_cast<long>(j), FieldElement(p.tower()));
  return QPoint(std::move(c));
}

std::vector<std::string> degeneracy_table(std::size_t j, int n) {
  if (n < 1 || j >= static_cast<std::size_t>(n))
    fail(ErrorKind::IndexOutOfRange, "degeneracy index " + std::to_string(j) + " out of range for Q^" + std::to_string(n));
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    if (i < j) rows.push_back("t_" + std::to_string(i));
    else if (i == j) rows.push_back("t_" + std::to_string(i) + " + t_" + std::to_string(i + 1));
    else rows.push_back("t_" + std::to_string(i + 1));
  }
  return rows;
}

QPoint degeneracy(std::size_t j, const QPoint& p) {
  degeneracy_table(j, p.n());
  std::vector<FieldElement> c;
  for (std::size_t i = 0; i < static_cast<std::size_t>(p.n()); ++i) {
    if (i < j) c.push_back(p[i]);
    else if (i == j) c.push_back(p[i] + p[i + 1]);
    else c.push_back(p[i + 1]);
  }
  return QPoint(std::move(c));
}

QPoint star(const FieldElement& x, const QPoint& p) {
  const FieldElement inv = x.moved_to(p.tower()).inverse();
  std::vector<FieldElement> c;
  for (const auto& y : p.coordinates()) c.push_back(y * inv);
  return QPoint(std::move(c));
}

}  // namespace addchow
