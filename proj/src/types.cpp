#include "semieq/types.hpp"

#include <map>

namespace semieq {

const std::vector<int>& signature(MapType t) {
    static const std::map<MapType, std::vector<int>> sigs = {
        {MapType::T3_3_3_3_3_3, {3, 3, 3, 3, 3, 3}},
        {MapType::T4_4_4_4, {4, 4, 4, 4}},
        {MapType::T6_6_6, {6, 6, 6}},
        {MapType::T3_3_3_4_4, {3, 3, 3, 4, 4}},
        {MapType::T3_3_4_3_4, {3, 3, 4, 3, 4}},
        {MapType::T3_6_3_6, {3, 6, 3, 6}},
        {MapType::T3_3_3_3_6, {3, 3, 3, 3, 6}},
        {MapType::T4_8_8, {4, 8, 8}},
        {MapType::T3_12_12, {3, 12, 12}},
        {MapType::T4_6_12, {4, 6, 12}},
        {MapType::T3_4_6_4, {3, 4, 6, 4}},
    };
    return sigs.at(t);
}

std::string dotted_name(MapType t) {
    switch (t) {
        case MapType::T3_3_3_3_3_3: return "3.6";
        case MapType::T4_4_4_4: return "4.4";
        case MapType::T6_6_6: return "6.3";
        case MapType::T3_3_3_4_4: return "3.3.4.4";
        case MapType::T3_3_4_3_4: return "3.3.4.3.4";
        case MapType::T3_6_3_6: return "3.6.3.6";
        case MapType::T3_3_3_3_6: return "3.4.6";
        case MapType::T4_8_8: return "4.8.8";
        case MapType::T3_12_12: return "3.12.12";
        case MapType::T4_6_12: return "4.6.12";
        case MapType::T3_4_6_4: return "3.4.6.4";
    }
    return "?";
}

std::optional<MapType> parse_type(const std::string& dotted) {
    for (MapType t : kAllTypes) {
        if (dotted_name(t) == dotted) return t;
    }
    // tolerated alias for {3^4,6}
    if (dotted == "3-4.6") return MapType::T3_3_3_3_6;
    return std::nullopt;
}

int degree(MapType t) { return static_cast<int>(signature(t).size()); }

}  // namespace semieq
