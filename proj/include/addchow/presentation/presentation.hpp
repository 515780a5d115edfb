#ifndef ADDCHOW_PRESENTATION_PRESENTATION_HPP
#define ADDCHOW_PRESENTATION_PRESENTATION_HPP

#include <string>
#include <vector>

#include "addchow/forms/differential_form.hpp"

namespace addchow {

/// One tensor a (x) (b_1 ^ ... ^ b_{n-1}).
struct PresentationTerm {
  FieldElement a;
  std::vector<FieldElement> b;
};

/// Formal sum of tensors in k (x) wedge^{n-1} k^x. Stored normalised: b-slots
/// sorted by rendering (the sign goes into a), terms with a repeated slot or
/// a = 0 dropped, equal slot lists merged. No normal form modulo the
/// relations is attempted; compare through to_omega.
class PresentationElement {
 public:
  PresentationElement(TowerPtr tower, int degree);
  /// Throws ZeroArgument if some b_i is zero.
  static PresentationElement term(const FieldElement& a, std::vector<FieldElement> b);

  const TowerPtr& tower() const noexcept { return tower_; }
  /// Number of wedge slots (n - 1).
  int degree() const noexcept { return degree_; }
  const std::vector<PresentationTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const FieldElement& a, std::vector<FieldElement> b);
  friend PresentationElement operator+(const PresentationElement& x, const PresentationElement& y);
  friend PresentationElement operator-(const PresentationElement& x, const PresentationElement& y);
  /// The k-structure: multiplication on the first slot.
  PresentationElement scaled(const FieldElement& c) const;

  /// `a (x) b1 ^ b2 + ...`; zero prints as 0.
  std::string to_string() const;

 private:
  TowerPtr tower_;
  int degree_;
  std::vector<PresentationTerm> terms_;
};

/// a (x) b_1 ^ ... ^ b_{n-1}  ->  a dlog b_1 ^ ... ^ dlog b_{n-1}.
DifferentialForm to_omega(const PresentationElement& x);
/// D(b_1..b_{n-1}) = b_1...b_{n-1} (x) (b_1 ^ ... ^ b_{n-1}); zero if some b_i = 0.
PresentationElement D(const TowerPtr& tower, const std::vector<FieldElement>& b);
/// The relation element a (x) (a ^ b_2 ^ ...) + (1-a) (x) ((1-a) ^ b_2 ^ ...),
/// with the convention that a zero slot kills a term.
PresentationElement relation_element(const FieldElement& a, const std::vector<FieldElement>& rest);
/// to_omega of relation_element; identically zero.
DifferentialForm relation_check(const FieldElement& a, const std::vector<FieldElement>& rest);

}  // namespace addchow

#endif  // ADDCHOW_PRESENTATION_PRESENTATION_HPP
