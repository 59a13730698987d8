#pragma once

#include <json.hpp>

#include "burnside/cokernel.hpp"
#include "burnside/elements.hpp"

namespace burnside {

using json = nlohmann::json;

// All integers serialize as strings so consumers never overflow.
std::string int_str(const Int& v);
std::string rat_str(const Rat& v); // "num/den" in lowest terms, den > 0
Rat parse_rat(const std::string& s);

json classes_json(const SliceClassTable& table);
json matrix_json(const std::vector<std::vector<Int>>& m);
json element_json(const BurnsideElt& x);
json element_json(const QBurnsideElt& x);
json report_json(const SequenceReport& rep);

// Reads an element back from {"coeffs": {"cls": "num/den", ...}}.
QBurnsideElt element_from_json(const TablePtr& table, const json& j);

} // namespace burnside
