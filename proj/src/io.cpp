#include "sumfree/io.hpp"

#include <sstream>

#include "sumfree/rational.hpp"

namespace sumfree {

FinAbGroup parse_group_literal(const std::string& literal) {
    std::vector<long long> factors;
    std::stringstream ss(literal);
    std::string part;
    while (std::getline(ss, part, ',')) {
        size_t pos = 0;
        long long v = std::stoll(part, &pos);
        if (pos != part.size()) throw std::invalid_argument("bad group literal: " + literal);
        factors.push_back(v);
    }
    if (factors.empty()) throw std::invalid_argument("bad group literal: " + literal);
    return FinAbGroup::make(factors);
}

std::string group_literal(const FinAbGroup& g) {
    std::string out;
    for (size_t i = 0; i < g.invariant_factors().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(g.invariant_factors()[i]);
    }
    return out;
}

nlohmann::json subset_to_json(const GroupSubset& a) {
    nlohmann::json out = nlohmann::json::array();
    for (Elem e : a.elements()) out.push_back(a.group().coords(e));
    return out;
}

GroupSubset subset_from_json(const FinAbGroup& g, const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("subset JSON must be an array of tuples");
    GroupSubset s(g);
    for (const auto& t : j) s.insert(element_from_json(g, t));
    return s;
}

nlohmann::json element_to_json(const FinAbGroup& g, Elem e) {
    return nlohmann::json(g.coords(e));
}

Elem element_from_json(const FinAbGroup& g, const nlohmann::json& j) {
    std::vector<long long> coords;
    if (j.is_number_integer()) {
        coords.push_back(j.get<long long>());
    } else if (j.is_array()) {
        for (const auto& v : j) coords.push_back(v.get<long long>());
    } else {
        throw std::invalid_argument("element JSON must be a tuple");
    }
    return g.at(coords);
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace sumfree
