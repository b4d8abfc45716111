#pragma once
// Universal polygonal-complex model: faces as cyclic vertex sequences,
// with validity, link, Euler characteristic and orientability checks.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "semieq/types.hpp"

namespace semieq {

using Face = std::vector<int>;

// Parameters of the representation a map was built from (if any).
struct RepParams {
    enum class Kind { Planar, MobiusPair };
    Kind kind = Kind::Planar;
    // Planar twisted cylinder K(r,s,k).
    int r = 0, s = 0, k = 0;
    // Mobius pair K(l,t); `variant` selects the per-type closure family.
    std::string variant;
    int l = 0, t = 0;

    static RepParams planar(int r, int s, int k) {
        RepParams p;
        p.kind = Kind::Planar;
        p.r = r; p.s = s; p.k = k;
        return p;
    }
    static RepParams mobius(std::string variant, int l, int t) {
        RepParams p;
        p.kind = Kind::MobiusPair;
        p.variant = std::move(variant);
        p.l = l; p.t = t;
        return p;
    }
    std::string to_string() const;
    bool operator==(const RepParams&) const = default;
};

struct PolygonalMap {
    int n_vertices = 0;
    std::vector<Face> faces;
    std::optional<MapType> type_hint;
    std::optional<RepParams> rep;
    // Constructor-known boundary-parallel row cycles, in bottom-to-top order.
    std::vector<std::vector<int>> rows;
};

// Structured rejection reasons for from_faces / validate.
enum class MapDefect {
    None,
    NoFaces,
    FaceTooSmall,
    DuplicateVertexInFace,
    DuplicateFace,
    VertexOutOfRange,
    EdgeNotTwoSided,
    LinkNotSingleCycle,
    WrongFaceSequence,
    EulerCharNonZero,
    Orientable,
    Disconnected,
};

struct ValidityReport {
    bool ok = false;
    MapDefect defect = MapDefect::None;
    std::string detail;
};

class MapError : public std::runtime_error {
public:
    MapError(MapDefect d, const std::string& msg)
        : std::runtime_error(msg), defect(d) {}
    MapDefect defect;
};

// Alternating (neighbour, face) cycle around a vertex.  cycle[i].second is
// the face between cycle[i].first and cycle[(i+1) % deg].first.
struct VertexLink {
    int center = 0;
    std::vector<std::pair<int, int>> cycle;
};

// Undirected edge -> incidences (face index, position of the edge's first
// endpoint inside the face).
using EdgeSides = std::map<std::pair<int, int>, std::vector<std::pair<int, int>>>;

EdgeSides edge_sides(const std::vector<Face>& faces);

inline std::pair<int, int> edge_key(int u, int v) {
    return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

// Full structural validation.  `expect_signature` additionally checks the
// cyclic face-size sequence at every vertex (up to rotation/reflection) and
// that the map is non-orientable (Klein bottle, Euler characteristic 0).
ValidityReport validate(const PolygonalMap& m,
                        const std::vector<int>* expect_signature = nullptr,
                        bool expect_nonorientable = true);

// Construct a map from a face list, renumbering nothing; throws MapError on
// any structural defect (degenerate faces, open edges, bad links, ...).
PolygonalMap from_faces(std::vector<Face> faces,
                        std::optional<MapType> hint = std::nullopt);

// Link of one vertex; throws MapError(LinkNotSingleCycle) when the incident
// faces do not close into a single cycle.
VertexLink vertex_link(const PolygonalMap& m, int v);

// Cyclic face-size sequence at v (as encountered along the link cycle).
std::vector<int> face_sequence_at(const PolygonalMap& m, int v);

bool is_semi_equivelar(const PolygonalMap& m, MapType t);

long euler_characteristic(const PolygonalMap& m);

bool is_orientable(const PolygonalMap& m);

bool is_connected(const PolygonalMap& m);

// Any two faces meet in at most one vertex or one common edge.
bool is_polyhedral(const PolygonalMap& m);

// Does `seq` equal `sig` up to rotation and reflection?
bool cyclic_equal(const std::vector<int>& seq, const std::vector<int>& sig);

// --- Flag system -----------------------------------------------------------
// One flag per (face, side, end): 4E flags with three fixed-point-free
// involutions s0 (other end of the side), s1 (other side at the same corner
// of the face), s2 (same side seen from the adjacent face).
struct FlagSystem {
    int n_flags = 0;
    std::vector<int> s0, s1, s2;
    // flag -> (face, position, end) for reference/debugging
    std::vector<std::array<int, 3>> origin;
};

FlagSystem to_flags(const PolygonalMap& m);

bool flags_valid(const FlagSystem& f);

}  // namespace semieq
