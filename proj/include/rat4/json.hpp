#pragma once

#include <json.hpp>

#include "rat4/lattice.hpp"

namespace rat4 {

using json = nlohmann::ordered_json;

inline json class_json(const HClass& x) {
    json j = json::array();
    j.push_back(x.a);
    for (int v : x.b) j.push_back(v);
    return j;
}

inline json tuple_json(const std::vector<HClass>& t) {
    json j = json::array();
    for (const auto& x : t) j.push_back(class_json(x));
    return j;
}

inline HClass class_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("class must be a non-empty array [a, b1, ..., bN]");
    HClass x;
    x.a = j[0].get<int>();
    for (std::size_t i = 1; i < j.size(); ++i) x.b.push_back(j[i].get<int>());
    return x;
}

inline std::vector<HClass> tuple_from_json(const json& j) {
    std::vector<HClass> t;
    for (const auto& e : j) t.push_back(class_from_json(e));
    return t;
}

}  // namespace rat4
