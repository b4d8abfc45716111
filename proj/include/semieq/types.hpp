#pragma once
// Face-sequence type catalogue for semi-equivelar maps on the Klein bottle.

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace semieq {

// The eleven vertex face-sequence types.  Enumerator names spell the cyclic
// face sequence around a vertex.
enum class MapType {
    T3_3_3_3_3_3,  // {3^6}
    T4_4_4_4,      // {4^4}
    T6_6_6,        // {6^3}
    T3_3_3_4_4,    // {3^3,4^2}
    T3_3_4_3_4,    // {3^2,4,3,4}
    T3_6_3_6,      // {3,6,3,6}
    T3_3_3_3_6,    // {3^4,6}
    T4_8_8,        // {4,8^2}
    T3_12_12,      // {3,12^2}
    T4_6_12,       // {4,6,12}
    T3_4_6_4,      // {3,4,6,4}
};

inline constexpr std::array<MapType, 11> kAllTypes = {
    MapType::T3_3_3_3_3_3, MapType::T4_4_4_4,   MapType::T6_6_6,
    MapType::T3_3_3_4_4,   MapType::T3_3_4_3_4, MapType::T3_6_3_6,
    MapType::T3_3_3_3_6,   MapType::T4_8_8,     MapType::T3_12_12,
    MapType::T4_6_12,      MapType::T3_4_6_4,
};

// Cyclic face-size sequence around a vertex, e.g. {3,3,3,3,3,3} for {3^6}.
const std::vector<int>& signature(MapType t);

// Dotted CLI spelling: "3.6", "4.4", "6.3", "3.3.4.4", "3.3.4.3.4",
// "3.6.3.6", "3.4.6", "4.8.8", "3.12.12", "4.6.12", "3.4.6.4".
std::string dotted_name(MapType t);

std::optional<MapType> parse_type(const std::string& dotted);

// Vertex degree (= signature length).
int degree(MapType t);

}  // namespace semieq
