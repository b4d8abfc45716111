#pragma once
// JSON (semieq-map/1, semieq-census/1), OFF and DOT serialization.

#include <string>

#include "semieq/census.hpp"
#include "semieq/map.hpp"

namespace semieq {

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// semieq-map/1: {"format":"semieq-map/1","type":"3.6","n":28,
//  "faces":[[...],...],"meta":{"rep":"planar:7,4,1"}}
// Faces are normalized (rotated to smallest vertex first, smaller direction)
// and sorted, so the file is deterministic for a given map.
std::string map_to_json(const PolygonalMap& m);
PolygonalMap map_from_json(const std::string& text);

std::string map_to_off(const PolygonalMap& m);
std::string map_to_dot(const PolygonalMap& m);

std::string census_to_json(const std::vector<CensusEntry>& entries);

// File helpers; throw IoError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace semieq
