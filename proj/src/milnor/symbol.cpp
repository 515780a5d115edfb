#include "addchow/milnor/symbol.hpp"

#include "addchow/error.hpp"

namespace addchow {

MilnorSymbol::MilnorSymbol(TowerPtr tower, int weight) : tower_(std::move(tower)), weight_(weight) {
  if (weight < 0) fail(ErrorKind::InvalidArgument, "negative symbol weight");
}

MilnorSymbol MilnorSymbol::of(std::vector<FieldElement> entries, long coefficient) {
  if (entries.empty()) fail(ErrorKind::InvalidArgument, "symbol needs at least one entry");
  MilnorSymbol s(entries.front().tower(), static_cast<int>(entries.size()));
  s.add(coefficient, std::move(entries));
  return s;
}

void MilnorSymbol::add(long coefficient, std::vector<FieldElement> entries) {
  if (static_cast<int>(entries.size()) != weight_) fail(ErrorKind::InvalidArgument, "symbol of the wrong weight");
  for (const auto& x : entries) {
    require_same_tower(*tower_, *x.tower());
    if (x.is_zero()) fail(ErrorKind::ZeroArgument, "zero entry in a Milnor symbol");
  }
  if (coefficient == 0) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->entries == entries) {
      it->coefficient += coefficient;
      if (it->coefficient == 0) terms_.erase(it);
      return;
    }
  }
  terms_.push_back({coefficient, std::move(entries)});
}

MilnorSymbol operator+(const MilnorSymbol& a, const MilnorSymbol& b) {
  if (a.weight_ != b.weight_) fail(ErrorKind::InvalidArgument, "adding symbols of different weight");
  MilnorSymbol r = a;
  for (const auto& t : b.terms_) r.add(t.coefficient, t.entries);
  return r;
}

MilnorSymbol operator-(const MilnorSymbol& a, const MilnorSymbol& b) { return a + b.scaled(-1); }

MilnorSymbol MilnorSymbol::scaled(long m) const {
  MilnorSymbol r(tower_, weight_);
  for (const auto& t : terms_) r.add(m * t.coefficient, t.entries);
  return r;
}

std::string MilnorSymbol::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.coefficient != 1) out += std::to_string(t.coefficient) + " ";
    out += "{";
    for (std::size_t i = 0; i < t.entries.size(); ++i) out += (i ? ", " : "") + t.entries[i].to_string();
    out += "}";
  }
  return out;
}

MilnorSymbol split_slot(const MilnorSymbol& s, std::size_t term, std::size_t slot, const FieldElement& x) {
  if (term >= s.terms().size() || slot >= static_cast<std::size_t>(s.weight()))
    fail(ErrorKind::IndexOutOfRange, "split_slot index out of range");
  MilnorSymbol r(s.tower(), s.weight());
  for (std::size_t i = 0; i < s.terms().size(); ++i) {
    const SymbolTerm& t = s.terms()[i];
    if (i != term) {
      r.add(t.coefficient, t.entries);
      continue;
    }
    auto first = t.entries, second = t.entries;
    first[slot] = x;
    second[slot] = t.entries[slot] / x;
    r.add(t.coefficient, std::move(first));
    r.add(t.coefficient, std::move(second));
  }
  return r;
}

MilnorSymbol swap_slots(const MilnorSymbol& s, std::size_t term, std::size_t slot) {
  if (term >= s.terms().size() || slot + 1 >= static_cast<std::size_t>(s.weight()))
    fail(ErrorKind::IndexOutOfRange, "swap_slots index out of range");
  MilnorSymbol r(s.tower(), s.weight());
  for (std::size_t i = 0; i < s.terms().size(); ++i) {
    const SymbolTerm& t = s.terms()[i];
    if (i != term) {
      r.add(t.coefficient, t.entries);
      continue;
    }
    auto e = t.entries;
    std::swap(e[slot], e[slot + 1]);
    r.add(-t.coefficient, std::move(e));
  }
  return r;
}

DifferentialForm dlog_symbol(const MilnorSymbol& s) {
  DifferentialForm r(s.tower(), s.weight());
  for (const auto& t : s.terms()) {
    DifferentialForm w = DifferentialForm::function(FieldElement::from_int(s.tower(), t.coefficient));
    for (const auto& x : t.entries) w = wedge(w, dlog(x));
    r += w;
  }
  return r;
}

DeltaPoint::DeltaPoint(std::vector<FieldElement> coordinates) : c_(std::move(coordinates)) {
  if (c_.empty()) fail(ErrorKind::InvalidArgument, "a point of Delta^n needs coordinates");
  FieldElement sum(c_.front().tower());
  for (const auto& x : c_) {
    require_same_tower(*c_.front().tower(), *x.tower());
    sum += x;
  }
  if (!sum.is_one()) fail(ErrorKind::InvalidArgument, "coordinates do not sum to one: " + to_string());
}

std::string DeltaPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) out += (i ? ", " : "") + c_[i].to_string();
  return out + ")";
}

MilnorSymbol point_to_symbol(const DeltaPoint& u) {
  const auto& c = u.coordinates();
  for (const auto& x : c)
    if (x.is_zero()) fail(ErrorKind::BadPosition, "point of Delta^n on a face: " + u.to_string());
  if (c.size() < 2) fail(ErrorKind::InvalidArgument, "point_to_symbol needs n >= 1");
  const FieldElement last = c.back();
  std::vector<FieldElement> entries;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) entries.push_back(-(c[i] / last));
  return MilnorSymbol::of(std::move(entries));
}

std::optional<DeltaPoint> symbol_to_point(const std::vector<FieldElement>& b) {
  if (b.empty()) fail(ErrorKind::InvalidArgument, "symbol_to_point needs at least one entry");
  const TowerPtr& t = b.front().tower();
  FieldElement c = FieldElement::from_int(t, -1);
  for (const auto& x : b) {
    if (x.is_zero()) fail(ErrorKind::ZeroArgument, "zero entry in a Milnor symbol");
    c += x;
  }
  if (c.is_zero()) return std::nullopt;
  const FieldElement ci = c.inverse();
  std::vector<FieldElement> coords;
  for (const auto& x : b) coords.push_back(x * ci);
  coords.push_back(-ci);
  return DeltaPoint(std::move(coords));
}

QPoint iota(const DeltaPoint& u) {
  for (const auto& x : u.coordinates())
    if (x.is_zero()) fail(ErrorKind::BadPosition, "iota needs a point off the faces: " + u.to_string());
  std::vector<FieldElement> c{FieldElement::from_int(u.tower(), -1)};
  c.insert(c.end(), u.coordinates().begin(), u.coordinates().end());
  return QPoint(std::move(c));
}

ZeroCycle milnor_to_additive(const MilnorSymbol& s) {
  ZeroCycle r(s.tower(), s.weight() + 1);
  for (const auto& t : s.terms()) {
    const auto p = symbol_to_point(t.entries);
    if (p) r.add(t.coefficient, iota(*p));
  }
  return r;
}

}  // namespace addchow
