#pragma once

#include <string>

#include <json.hpp>

#include "sumfree/group.hpp"
#include "sumfree/rational.hpp"

namespace sumfree {

// "7,7" -> group with invariant factors 7 | 7
FinAbGroup parse_group_literal(const std::string& literal);
std::string group_literal(const FinAbGroup& g);

// subsets travel as JSON arrays of coordinate tuples in index order,
// e.g. [[0,3],[0,4]]
nlohmann::json subset_to_json(const GroupSubset& a);
GroupSubset subset_from_json(const FinAbGroup& g, const nlohmann::json& j);

nlohmann::json element_to_json(const FinAbGroup& g, Elem e);
Elem element_from_json(const FinAbGroup& g, const nlohmann::json& j);

// "1/49" or "0" -> exact rational
Rational parse_rational(const std::string& s);

}  // namespace sumfree
