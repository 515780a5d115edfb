#ifndef ADDCHOW_TESTS_SUPPORT_HPP
#define ADDCHOW_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include <doctest.h>

#include "addchow/fields/parse.hpp"
#include "addchow/forms/differential_form.hpp"

namespace doctest {

template <>
struct StringMaker<addchow::FieldElement> {
  static String convert(const addchow::FieldElement& x) { return x.to_string().c_str(); }
};

template <>
struct StringMaker<addchow::DifferentialForm> {
  static String convert(const addchow::DifferentialForm& w) { return w.to_string().c_str(); }
};

}  // namespace doctest

namespace testing {

inline addchow::TowerPtr tower(const std::string& s) { return addchow::parse_tower(s); }

inline addchow::FieldElement el(const addchow::TowerPtr& t, const std::string& s) { return addchow::parse_element(t, s); }

inline std::vector<addchow::FieldElement> tuple(const addchow::TowerPtr& t, const std::string& s) {
  return addchow::parse_tuple(t, s);
}

inline addchow::DifferentialForm form(const addchow::TowerPtr& t, const std::string& s, int degree = 0) {
  return addchow::parse_form(t, s, degree);
}

// Sweeps a seed range; each property test draws its instances from these.
inline std::vector<std::uint64_t> seeds(int count, std::uint64_t base = 1000) {
  std::vector<std::uint64_t> out;
  for (int i = 0; i < count; ++i) out.push_back(base + static_cast<std::uint64_t>(i));
  return out;
}

}  // namespace testing

#endif  // ADDCHOW_TESTS_SUPPORT_HPP
