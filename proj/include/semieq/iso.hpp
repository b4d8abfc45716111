#pragma once
// Isomorphism testing via canonical forms over the flag graph, duals, and an
// independent backtracking vertex-bijection oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semieq/map.hpp"

namespace semieq {

// Canonical encoding over the flag graph: from each of the 4E flags, run a
// breadth-first traversal along the involutions s0, s1, s2 (in that order),
// number flags by discovery, and record one row per flag holding the
// discovery numbers of its three involution images.  The lexicographically
// smallest such table over all starts is the canonical form.  Orientation-
// reversing isomorphisms are covered automatically (flag graphs forget
// orientation).  Two maps are isomorphic iff canonical forms are equal.
using CanonicalForm = std::vector<std::vector<int>>;

CanonicalForm canonical_form(const PolygonalMap& m);

// FNV-1a 64-bit digest of the canonical form, as fixed-width hex.
std::string canonical_digest(const PolygonalMap& m);
std::string digest_of(const CanonicalForm& form);

struct IsoResult {
    bool isomorphic = false;
    // Vertex bijection from a to b (witness), verified to map faces onto
    // faces before being returned.
    std::vector<int> witness;
};

// Canonical-form equality plus a concrete verified witness bijection.
IsoResult are_isomorphic(const PolygonalMap& a, const PolygonalMap& b);

// Independent oracle: backtracking search for a vertex bijection mapping
// faces onto faces (up to rotation/reflection).  Exponential in the worst
// case; used for cross-validation at small n.
std::optional<std::vector<int>> backtracking_isomorphism(
    const PolygonalMap& a, const PolygonalMap& b);

// Verify that `f` maps every face of a onto a face of b (as cyclic boundary
// classes) bijectively.
bool verify_witness(const PolygonalMap& a, const PolygonalMap& b,
                    const std::vector<int>& f);

// Dual map: one vertex per face, one face per vertex (the link cycle).
// Orientation is chosen per link; the result is re-validated by the caller's
// checks (the dual of a valid map is valid).
PolygonalMap dual(const PolygonalMap& m);

}  // namespace semieq
