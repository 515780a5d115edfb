#include "addchow/presentation/presentation.hpp"

#include <algorithm>
#include <numeric>

#include "addchow/error.hpp"

namespace addchow {

PresentationElement::PresentationElement(TowerPtr tower, int degree) : tower_(std::move(tower)), degree_(degree) {
  if (degree < 0) fail(ErrorKind::InvalidArgument, "negative presentation degree");
}

PresentationElement PresentationElement::term(const FieldElement& a, std::vector<FieldElement> b) {
  PresentationElement r(a.tower(), static_cast<int>(b.size()));
  r.add(a, std::move(b));
  return r;
}

void PresentationElement::add(const FieldElement& a_in, std::vector<FieldElement> b) {
  if (static_cast<int>(b.size()) != degree_) fail(ErrorKind::InvalidArgument, "wrong number of wedge slots");
  require_same_tower(*tower_, *a_in.tower());
  for (const auto& x : b) {
    require_same_tower(*tower_, *x.tower());
    if (x.is_zero()) fail(ErrorKind::ZeroArgument, "zero entry in a wedge slot");
  }
  if (a_in.is_zero()) return;
  // Sort the slots by rendering, tracking the permutation sign.
  std::vector<std::string> keys;
  for (const auto& x : b) keys.push_back(x.to_string());
  std::vector<std::size_t> order(b.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return keys[i] < keys[j]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (keys[order[i]] == keys[order[i - 1]]) return;  // repeated slot: alternating
  int inversions = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (order[i] > order[j]) ++inversions;
  std::vector<FieldElement> sorted;
  for (std::size_t i : order) sorted.push_back(b[i]);
  FieldElement a = inversions % 2 ? -a_in : a_in;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->b == sorted) {
      it->a += a;
      if (it->a.is_zero()) terms_.erase(it);
      return;
    }
  }
  terms_.push_back({std::move(a), std::move(sorted)});
}

PresentationElement operator+(const PresentationElement& x, const PresentationElement& y) {
  if (x.degree_ != y.degree_) fail(ErrorKind::InvalidArgument, "adding presentation elements of different degree");
  PresentationElement r = x;
  for (const auto& t : y.terms_) r.add(t.a, t.b);
  return r;
}

PresentationElement operator-(const PresentationElement& x, const PresentationElement& y) {
  if (x.degree_ != y.degree_) fail(ErrorKind::InvalidArgument, "subtracting presentation elements of different degree");
  PresentationElement r = x;
  for (const auto& t : y.terms_) r.add(-t.a, t.b);
  return r;
}

PresentationElement PresentationElement::scaled(const FieldElement& c) const {
  PresentationElement r(tower_, degree_);
  for (const auto& t : terms_) r.add(t.a * c, t.b);
  return r;
}

std::string PresentationElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + t.a.to_string() + ")";
    if (t.b.empty()) continue;
    out += " (x) ";
    for (std::size_t i = 0; i < t.b.size(); ++i) out += (i ? " ^ " : "") + ("(" + t.b[i].to_string() + ")");
  }
  return out;
}

DifferentialForm to_omega(const PresentationElement& x) {
  DifferentialForm r(x.tower(), x.degree());
  for (const auto& t : x.terms()) {
    DifferentialForm w = DifferentialForm::function(t.a);
    for (const auto& b : t.b) w = wedge(w, dlog(b));
    r += w;
  }
  return r;
}

PresentationElement D(const TowerPtr& tower, const std::vector<FieldElement>& b) {
  PresentationElement r(tower, static_cast<int>(b.size()));
  FieldElement prod = FieldElement::from_int(tower, 1);
  for (const auto& x : b) {
    if (x.is_zero()) return r;
    prod *= x;
  }
  r.add(prod, b);
  return r;
}

PresentationElement relation_element(const FieldElement& a, const std::vector<FieldElement>& rest) {
  const TowerPtr& t = a.tower();
  PresentationElement r(t, static_cast<int>(rest.size()) + 1);
  const FieldElement one_minus = FieldElement::from_int(t, 1) - a;
  for (const FieldElement& x : {a, one_minus}) {
    if (x.is_zero()) continue;
    std::vector<FieldElement> slots{x};
    slots.insert(slots.end(), rest.begin(), rest.end());
    r.add(x, std::move(slots));
  }
  return r;
}

DifferentialForm relation_check(const FieldElement& a, const std::vector<FieldElement>& rest) {
  return to_omega(relation_element(a, rest));
}

}  // namespace addchow
