#pragma once
// Distinguished path types traced through a map, and classification of the
// strip of faces meeting a cycle (cylinder / Mobius strip / union).

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "semieq/map.hpp"

namespace semieq {

enum class PathRule { A, B, A1, A2, A3, B1 };

std::string rule_name(PathRule r);

class RuleInapplicable : public std::runtime_error {
public:
    explicit RuleInapplicable(const std::string& msg)
        : std::runtime_error(msg) {}
};

struct TraceResult {
    // Closed walk: first vertex == last vertex; stops the first time the
    // leading directed edge repeats.
    std::vector<int> walk;
    bool simple = false;   // no vertex visited twice (excluding the closing one)
    int length = 0;        // number of edges in the closed walk
};

// Trace the maximal walk of the given type from the directed start edge.
// Deterministic: side conventions (which of the two flanking faces seeds the
// walk for the mirror-pair rules A2/A3, and the step class for B1) are fixed
// by smallest-face-index tie-breaks.
TraceResult trace(const PolygonalMap& m, PathRule rule, int from, int to);

enum class StripKind { Cylinder, MobiusStrip, CylinderPlusMobius };

struct StripClassification {
    StripKind kind = StripKind::Cylinder;
    // Cylinder: 2 boundary cycles; MobiusStrip: 1; CylinderPlusMobius: the
    // gluing cycle is recorded here as the single entry.
    std::vector<std::vector<int>> boundary_cycles;
    // gon size -> multiplicity over the strip's faces
    std::map<int, int> face_content;
};

class NotACycle : public std::runtime_error {
public:
    explicit NotACycle(const std::string& msg) : std::runtime_error(msg) {}
};

// Classify the union of faces meeting the simple cycle C.
StripClassification classify_strip(const PolygonalMap& m,
                                   const std::vector<int>& cycle);

class MetadataMissing : public std::runtime_error {
public:
    explicit MetadataMissing(const std::string& msg)
        : std::runtime_error(msg) {}
};

// Constructor-known boundary-parallel cycles (rows), in order.
std::vector<std::vector<int>> row_cycles(const PolygonalMap& m);

}  // namespace semieq
