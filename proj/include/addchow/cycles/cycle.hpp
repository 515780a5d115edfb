#ifndef ADDCHOW_CYCLES_CYCLE_HPP
#define ADDCHOW_CYCLES_CYCLE_HPP

#include <string>
#include <vector>

#include "addchow/cycles/point.hpp"

namespace addchow {

struct CycleEntry {
  long multiplicity;
  QPoint point;
};

/// Formal integer combination of closed points of Q^n over a base field k.
/// Each point lives in k itself or in a simple extension of k. Kept in
/// collected form: structurally equal points are merged, zero entries dropped.
class ZeroCycle {
 public:
  ZeroCycle(TowerPtr base, int n);
  static ZeroCycle of(const TowerPtr& base, const QPoint& p, long multiplicity = 1);

  const TowerPtr& base() const noexcept { return base_; }
  int n() const noexcept { return n_; }
  const std::vector<CycleEntry>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  /// Sum of multiplicities times residue degrees.
  long degree() const;
  bool good_position() const;

  /// Throws TowerMismatch if the point is not over k or an extension of k.
  void add(long multiplicity, const QPoint& p);
  friend ZeroCycle operator+(const ZeroCycle& a, const ZeroCycle& b);
  friend ZeroCycle operator-(const ZeroCycle& a, const ZeroCycle& b);
  ZeroCycle scaled(long m) const;
  friend bool operator==(const ZeroCycle& a, const ZeroCycle& b);

  /// `m * (c0, ..., cn) over FIELD`, sorted.
  std::vector<std::string> lines() const;
  /// Lines joined by newlines; the empty cycle renders as 0.
  std::string to_string() const;

 private:
  TowerPtr base_;
  int n_;
  std::vector<CycleEntry> entries_;
};

/// x * c pointwise; 0 * c is the empty cycle.
ZeroCycle star(const FieldElement& x, const ZeroCycle& c);

/// Push-forward along Spec k' -> Spec k of a cycle of k'-rational points.
ZeroCycle push_forward(const ZeroCycle& c, const TowerPtr& k);

/// Reads the to_string() format back.
ZeroCycle parse_cycle(const TowerPtr& base, int n, const std::string& text);

}  // namespace addchow

#endif  // ADDCHOW_CYCLES_CYCLE_HPP
