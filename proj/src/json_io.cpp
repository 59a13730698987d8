#include "burnside/json_io.hpp"

#include <sstream>

namespace burnside {

std::string int_str(const Int& v) {
    return v.str();
}

std::string rat_str(const Rat& v) {
    std::ostringstream out;
    out << boost::multiprecision::numerator(v);
    if (boost::multiprecision::denominator(v) != 1)
        out << "/" << boost::multiprecision::denominator(v);
    return out.str();
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

json classes_json(const SliceClassTable& table) {
    json out = json::array();
    for (size_t i = 0; i < table.class_count(); ++i) {
        json cls;
        cls["id"] = static_cast<int>(i);
        cls["chain"] = table.chain_string(static_cast<int>(i));
        json orders = json::array();
        for (int part : table.classes[i])
            orders.push_back(table.lattice->order_of(part));
        cls["orders"] = orders;
        cls["weyl"] = int_str(table.weyl[i]);
        cls["normalizer_order"] = table.lattice->order_of(table.slice_normalizer[i]);
        out.push_back(cls);
    }
    return out;
}

json matrix_json(const std::vector<std::vector<Int>>& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const Int& v : row)
            r.push_back(int_str(v));
        out.push_back(r);
    }
    return out;
}

json element_json(const BurnsideElt& x) {
    json coeffs = json::object();
    for (const auto& [k, v] : x.coeffs)
        coeffs[std::to_string(k)] = int_str(v);
    return json{{"coeffs", coeffs}};
}

json element_json(const QBurnsideElt& x) {
    json coeffs = json::object();
    for (const auto& [k, v] : x.coeffs)
        coeffs[std::to_string(k)] = rat_str(v);
    return json{{"coeffs", coeffs}};
}

json report_json(const SequenceReport& rep) {
    json out = json::array();
    for (const auto& c : rep.checks)
        out.push_back(json{{"check", c.check}, {"pass", c.pass}, {"detail", c.detail}});
    return out;
}

QBurnsideElt element_from_json(const TablePtr& table, const json& j) {
    QBurnsideElt x(table);
    for (const auto& [key, val] : j.at("coeffs").items())
        x.add(std::stoi(key), parse_rat(val.get<std::string>()));
    return x;
}

} // namespace burnside
