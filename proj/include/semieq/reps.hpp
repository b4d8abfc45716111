#pragma once
// Constructors for the two representation shapes:
//   Planar   K(r,s,k): a cylinder of row cycles with a reflecting seam,
//   MobiusPair K(l,t): a cylinder closed at both ends by Mobius strips,
// together with per-type admissibility and canonical parameter reduction.

#include <stdexcept>
#include <string>
#include <vector>

#include "semieq/map.hpp"
#include "semieq/types.hpp"

namespace semieq {

class InadmissibleParams : public std::runtime_error {
public:
    explicit InadmissibleParams(const std::string& msg)
        : std::runtime_error(msg) {}
};

class InternalClosureFailure : public std::runtime_error {
public:
    explicit InternalClosureFailure(const std::string& msg)
        : std::runtime_error(msg) {}
};

// Mobius-pair closure families available per type ("variant" tags).
//   {3^6}:       plain
//   {3^3,4^2}:   mtri (odd l, triangle chords), mquad (even l, quad chords)
//   {3,6,3,6}:   m36 (chord closure, 4|l), m (doubled-core, l = 2 mod 4)
//   {3,12^2}:    m312 (chord closure, 8|l), m (doubled-core, l = 4 mod 8)
//   {4,6,12}:    m412 (folded 12-gon row, 12|l), mrot (rotation, l = 6 mod 12)
//   {3,4,6,4}:   m34 (rotation chords, l = 3 mod 6), m46 (folded hexagon row)
std::vector<std::string> mobius_variants(MapType t);

// True when the parameters are admissible, i.e. the constructor provably
// yields a valid semi-equivelar map on the Klein bottle.
bool admissible(MapType t, const RepParams& p);

// Human-readable reason for rejection (empty when admissible).
std::string admissibility_reason(MapType t, const RepParams& p);

// Build K(r,s,k); throws InadmissibleParams unless admissible, and
// InternalClosureFailure when gluing produces a defective complex (used by
// the {3^4,6} non-existence sweep, where every twisted closure fails).
PolygonalMap build_planar(MapType t, int r, int s, int k);

PolygonalMap build_mobius(MapType t, const std::string& variant, int l, int t_rows);

PolygonalMap build(MapType t, const RepParams& p);

// Raw template expansion without the admissibility gate; the result may
// fail validation.  Exposed for the non-existence sweep.
PolygonalMap expand_planar_template(MapType t, int r, int s, int k);

// Collapse the twist parameter to its isomorphism-class representative in
// {0,1}: k ~ k+2 and k ~ -k (hence odd r collapses everything to 0).
int reduce_k(MapType t, int r, int s, int k);

// The deduplicated canonical parameter list with exactly n vertices: planar
// tuples with one representative per k-class, plus every Mobius-pair family
// tuple.  Distinct entries may still be isomorphic only if the per-type
// reduction rules are incomplete; the census double-checks by digest.
std::vector<RepParams> canonical_reps(MapType t, int n);

// Number of vertices the constructor yields for admissible parameters.
long vertex_count(MapType t, const RepParams& p);

}  // namespace semieq
