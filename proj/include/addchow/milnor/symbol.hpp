#ifndef ADDCHOW_MILNOR_SYMBOL_HPP
#define ADDCHOW_MILNOR_SYMBOL_HPP

#include <optional>
#include <string>
#include <vector>

#include "addchow/cycles/cycle.hpp"
#include "addchow/forms/differential_form.hpp"

namespace addchow {

struct SymbolTerm {
  long coefficient;
  std::vector<FieldElement> entries;
};

/// Formal integer combination of symbols {x_1, ..., x_w} with nonzero
/// entries. Equal tuples are merged; nothing else is normalised, so two
/// symbols are compared only through dlog_symbol or cycle evaluation.
class MilnorSymbol {
 public:
  MilnorSymbol(TowerPtr tower, int weight);
  /// Throws ZeroArgument on a zero entry.
  static MilnorSymbol of(std::vector<FieldElement> entries, long coefficient = 1);

  const TowerPtr& tower() const noexcept { return tower_; }
  int weight() const noexcept { return weight_; }
  const std::vector<SymbolTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(long coefficient, std::vector<FieldElement> entries);
  friend MilnorSymbol operator+(const MilnorSymbol& a, const MilnorSymbol& b);
  friend MilnorSymbol operator-(const MilnorSymbol& a, const MilnorSymbol& b);
  MilnorSymbol scaled(long m) const;

  /// `{x1, x2}`, with `m {…}` for coefficients other than 1; zero prints as 0.
  std::string to_string() const;

 private:
  TowerPtr tower_;
  int weight_;
  std::vector<SymbolTerm> terms_;
};

/// Multilinearity rewrite in one slot of one term:
/// {.., v, ..} -> {.., x, ..} + {.., v/x, ..}.
MilnorSymbol split_slot(const MilnorSymbol& s, std::size_t term, std::size_t slot, const FieldElement& x);
/// Alternating rewrite: {.., a, b, ..} -> -{.., b, a, ..} at slots (slot, slot+1).
MilnorSymbol swap_slots(const MilnorSymbol& s, std::size_t term, std::size_t slot);

/// {x_1, ..., x_w} -> dlog x_1 ^ ... ^ dlog x_w, extended additively.
DifferentialForm dlog_symbol(const MilnorSymbol& s);

/// Point (u_0, ..., u_n) of Delta^n: coordinates in one tower summing to 1.
class DeltaPoint {
 public:
  explicit DeltaPoint(std::vector<FieldElement> coordinates);
  const TowerPtr& tower() const noexcept { return c_.front().tower(); }
  int n() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<FieldElement>& coordinates() const noexcept { return c_; }
  std::string to_string() const;

 private:
  std::vector<FieldElement> c_;
};

/// (u_0, ..., u_n) -> {-u_0/u_n, ..., -u_{n-1}/u_n}. Throws BadPosition on a zero coordinate.
MilnorSymbol point_to_symbol(const DeltaPoint& u);
/// {b_1, ..., b_n} -> (b_1/c, ..., b_n/c, -1/c), c = -1 + sum b_i; nullopt
/// (the zero cycle) when c = 0.
std::optional<DeltaPoint> symbol_to_point(const std::vector<FieldElement>& b);

/// (u_0, ..., u_n) -> (-1, u_0, ..., u_n) on Q^{n+1}. Throws BadPosition.
QPoint iota(const DeltaPoint& u);

/// iota(symbol_to_point(.)) term by term, a 0-cycle on Q^{w+1}.
ZeroCycle milnor_to_additive(const MilnorSymbol& s);

}  // namespace addchow

#endif  // ADDCHOW_MILNOR_SYMBOL_HPP
