#ifndef ADDCHOW_FIELDS_PARSE_HPP
#define ADDCHOW_FIELDS_PARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "addchow/fields/field_element.hpp"

namespace addchow {

/// Infix expression over the tower's variables and generator: + - * / and
/// ^ with an integer (possibly negative) exponent. Errors are Parse errors
/// carrying the character position.
FieldElement parse_element(const TowerPtr& tower, std::string_view text);

/// "Q", "F5", "Q(t1,t2)", "F5(t)", "Q(t)[th]/(th^2 - t)".
TowerPtr parse_tower(std::string_view text);

/// "(c0, c1, ..., cn)" with top-level commas separating entries.
std::vector<FieldElement> parse_tuple(const TowerPtr& tower, std::string_view text);

/// Splits on commas outside parentheses and brackets.
std::vector<std::string> split_top_level(std::string_view text, char sep);

std::string trim_copy(std::string_view s);

}  // namespace addchow

#endif  // ADDCHOW_FIELDS_PARSE_HPP
