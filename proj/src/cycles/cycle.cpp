#include "addchow/cycles/cycle.hpp"

#include <algorithm>
#include <sstream>

#include "addchow/error.hpp"
#include "addchow/fields/parse.hpp"

namespace addchow {

namespace {

bool over_base_or_extension(const FieldTower& base, const FieldTower& t) {
  if (t.same_as(base)) return true;
  return !base.has_extension() && t.has_extension() && t.base()->same_as(base);
}

}  // namespace

ZeroCycle::ZeroCycle(TowerPtr base, int n) : base_(std::move(base)), n_(n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "0-cycles live on Q^n with n >= 1");
}

ZeroCycle ZeroCycle::of(const TowerPtr& base, const QPoint& p, long multiplicity) {
  ZeroCycle c(base, p.n());
  c.add(multiplicity, p);
  return c;
}

long ZeroCycle::degree() const {
  long d = 0;
  for (const auto& e : entries_) d += e.multiplicity * e.point.tower()->degree() / base_->degree();
  return d;
}

bool ZeroCycle::good_position() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const CycleEntry& e) { return e.point.good_position(); });
}

void ZeroCycle::add(long multiplicity, const QPoint& p) {
  if (p.n() != n_) fail(ErrorKind::InvalidArgument, "point of Q^" + std::to_string(p.n()) + " in a cycle on Q^" + std::to_string(n_));
  if (!over_base_or_extension(*base_, *p.tower()))
    fail(ErrorKind::TowerMismatch, "point over " + p.tower()->to_string() + " in a cycle over " + base_->to_string());
  if (multiplicity == 0) return;
  for (auto it = entries_.begin(); it != entries_.end(); ++it) {
    if (it->point == p) {
      it->multiplicity += multiplicity;
      if (it->multiplicity == 0) entries_.erase(it);
      return;
    }
  }
  entries_.push_back({multiplicity, p});
}

ZeroCycle operator+(const ZeroCycle& a, const ZeroCycle& b) {
  require_same_tower(*a.base_, *b.base_);
  ZeroCycle r = a;
  for (const auto& e : b.entries_) r.add(e.multiplicity, e.point);
  return r;
}

ZeroCycle operator-(const ZeroCycle& a, const ZeroCycle& b) { return a + b.scaled(-1); }

ZeroCycle ZeroCycle::scaled(long m) const {
  ZeroCycle r(base_, n_);
  for (const auto& e : entries_) r.add(m * e.multiplicity, e.point);
  return r;
}

bool operator==(const ZeroCycle& a, const ZeroCycle& b) {
  if (!a.base_->same_as(*b.base_) || a.n_ != b.n_) return false;
  return (a - b).is_zero();
}

std::vector<std::string> ZeroCycle::lines() const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    out.push_back(std::to_string(e.multiplicity) + " * " + e.point.to_string() + " over " + e.point.tower()->to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::string ZeroCycle::to_string() const {
  if (entries_.empty()) return "0";
  std::string out;
  for (const auto& l : lines()) out += (out.empty() ? "" : "\n") + l;
  return out;
}

ZeroCycle star(const FieldElement& x, const ZeroCycle& c) {
  ZeroCycle r(c.base(), c.n());
  if (x.is_zero()) return r;
  for (const auto& e : c.entries()) r.add(e.multiplicity, star(x, e.point));
  return r;
}

ZeroCycle push_forward(const ZeroCycle& c, const TowerPtr& k) {
  if (!c.base()->has_extension() || !c.base()->base()->same_as(*k))
    fail(ErrorKind::TowerMismatch, "push-forward from " + c.base()->to_string() + " to " + k->to_string());
  ZeroCycle r(k, c.n());
  for (const auto& e : c.entries()) {
    if (!e.point.tower()->same_as(*c.base()))
      fail(ErrorKind::TowerMismatch, "push-forward needs points rational over " + c.base()->to_string());
    r.add(e.multiplicity, e.point);
  }
  return r;
}

ZeroCycle parse_cycle(const TowerPtr& base, int n, const std::string& text) {
  ZeroCycle r(base, n);
  if (trim_copy(text) == "0") return r;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim_copy(line);
    if (line.empty()) continue;
    const auto star_pos = line.find(" * ");
    const auto over_pos = line.rfind(" over ");
    if (star_pos == std::string::npos || over_pos == std::string::npos || over_pos < star_pos)
      fail(ErrorKind::Parse, "expected `m * (c0, ..., cn) over FIELD`: " + line);
    long m = 0;
    try {
      m = std::stol(line.substr(0, star_pos));
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad multiplicity in: " + line);
    }
    TowerPtr t = parse_tower(line.substr(over_pos + 6));
    if (t->same_as(*base)) t = base;
    r.add(m, QPoint(parse_tuple(t, line.substr(star_pos + 3, over_pos - star_pos - 3))));
  }
  return r;
}

}  // namespace addchow
