#include "semieq/map.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace semieq {

std::string RepParams::to_string() const {
    std::ostringstream os;
    if (kind == Kind::Planar) {
        os << "planar:" << r << "," << s << "," << k;
    } else {
        os << "mobius:" << variant << "," << l << "," << t;
    }
    return os.str();
}

EdgeSides edge_sides(const std::vector<Face>& faces) {
    EdgeSides es;
    for (int fi = 0; fi < (int)faces.size(); ++fi) {
        const Face& f = faces[fi];
        int n = (int)f.size();
        for (int a = 0; a < n; ++a) {
            es[edge_key(f[a], f[(a + 1) % n])].push_back({fi, a});
        }
    }
    return es;
}

bool cyclic_equal(const std::vector<int>& seq, const std::vector<int>& sig) {
    if (seq.size() != sig.size()) return false;
    int n = (int)sig.size();
    for (int refl = 0; refl < 2; ++refl) {
        std::vector<int> d = seq;
        if (refl) std::reverse(d.begin(), d.end());
        for (int i = 0; i < n; ++i) {
            bool ok = true;
            for (int j = 0; j < n; ++j) {
                if (d[(i + j) % n] != sig[j]) { ok = false; break; }
            }
            if (ok) return true;
        }
    }
    return false;
}

namespace {

// Smallest rotation of the face boundary over both directions; used to detect
// duplicate faces irrespective of how their cycles are written down.
Face face_key(const Face& f) {
    Face best;
    int n = (int)f.size();
    for (int refl = 0; refl < 2; ++refl) {
        Face d = f;
        if (refl) std::reverse(d.begin(), d.end());
        for (int r = 0; r < n; ++r) {
            Face cand(n);
            for (int j = 0; j < n; ++j) cand[j] = d[(r + j) % n];
            if (best.empty() || cand < best) best = cand;
        }
    }
    return best;
}

struct Corner {
    int face;
    int other;  // the neighbour on the far side of this corner
};

// neighbour -> the (at most two) corners of v's incident faces touching it
std::map<int, std::vector<Corner>> corner_map(
    const std::vector<Face>& faces,
    const std::vector<std::pair<int, int>>& inc) {
    std::map<int, std::vector<Corner>> nbr;
    for (auto [fi, a] : inc) {
        const Face& f = faces[fi];
        int n = (int)f.size();
        int p = f[(a - 1 + n) % n], q = f[(a + 1) % n];
        nbr[p].push_back({fi, q});
        nbr[q].push_back({fi, p});
    }
    return nbr;
}

// Walk the link of v into an alternating (neighbour, face) cycle; empty on
// failure, with `why` describing the defect.
std::vector<std::pair<int, int>> walk_link(
    const std::vector<Face>& faces,
    const std::vector<std::pair<int, int>>& inc, int v, std::string& why) {
    auto nbr = corner_map(faces, inc);
    for (auto& [w, lst] : nbr) {
        if (lst.size() != 2) {
            why = "link of " + std::to_string(v) + ": neighbour " +
                  std::to_string(w) + " in " + std::to_string(lst.size()) +
                  " corners";
            return {};
        }
    }
    int deg = (int)inc.size();
    std::vector<std::pair<int, int>> cycle;
    int start = nbr.begin()->first;
    int fi0 = nbr[start][0].face;
    int node = nbr[start][0].other;
    cycle.push_back({start, fi0});
    int came_from_face = fi0;
    int steps = 1;
    while (true) {
        std::vector<Corner> opts;
        for (const Corner& c : nbr[node])
            if (c.face != came_from_face) opts.push_back(c);
        if (opts.size() != 1) {
            why = "link of " + std::to_string(v) + " branches at " +
                  std::to_string(node);
            return {};
        }
        if (node == start && opts[0].face == fi0) break;
        cycle.push_back({node, opts[0].face});
        came_from_face = opts[0].face;
        node = opts[0].other;
        if (++steps > 2 * deg + 2) {
            why = "link of " + std::to_string(v) + " does not close";
            return {};
        }
    }
    if ((int)cycle.size() != deg) {
        why = "link of " + std::to_string(v) + " cycle length " +
              std::to_string(cycle.size()) + " != " + std::to_string(deg);
        return {};
    }
    return cycle;
}

std::map<int, std::vector<std::pair<int, int>>> vertex_incidences(
    const std::vector<Face>& faces) {
    std::map<int, std::vector<std::pair<int, int>>> vinc;
    for (int fi = 0; fi < (int)faces.size(); ++fi)
        for (int a = 0; a < (int)faces[fi].size(); ++a)
            vinc[faces[fi][a]].push_back({fi, a});
    return vinc;
}

}  // namespace

ValidityReport validate(const PolygonalMap& m,
                        const std::vector<int>* expect_signature,
                        bool expect_nonorientable) {
    auto fail = [](MapDefect d, std::string detail) {
        return ValidityReport{false, d, std::move(detail)};
    };
    const auto& faces = m.faces;
    if (faces.empty()) return fail(MapDefect::NoFaces, "no faces");
    int nf = (int)faces.size();
    for (const Face& f : faces) {
        if (f.size() < 3)
            return fail(MapDefect::FaceTooSmall,
                        "face with " + std::to_string(f.size()) + " vertices");
        std::set<int> fs(f.begin(), f.end());
        if ((int)fs.size() != (int)f.size())
            return fail(MapDefect::DuplicateVertexInFace,
                        "repeated vertex in a face");
        for (int v : f)
            if (v < 0 || v >= m.n_vertices)
                return fail(MapDefect::VertexOutOfRange,
                            "vertex " + std::to_string(v) + " outside [0," +
                                std::to_string(m.n_vertices) + ")");
    }
    {
        std::set<Face> fkeys;
        for (const Face& f : faces)
            if (!fkeys.insert(face_key(f)).second)
                return fail(MapDefect::DuplicateFace, "duplicate face");
    }

    EdgeSides es = edge_sides(faces);
    for (const auto& [e, sides] : es) {
        if (sides.size() != 2)
            return fail(MapDefect::EdgeNotTwoSided,
                        "edge {" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + "} on " +
                            std::to_string(sides.size()) + " face-sides");
    }

    auto vinc = vertex_incidences(faces);
    long nv = (long)vinc.size(), ne = (long)es.size();
    if ((long)m.n_vertices != nv)
        return fail(MapDefect::Disconnected,
                    "declared " + std::to_string(m.n_vertices) +
                        " vertices, faces use " + std::to_string(nv));
    if (nv - ne + nf != 0)
        return fail(MapDefect::EulerCharNonZero,
                    "euler characteristic " + std::to_string(nv - ne + nf));

    for (const auto& [v, inc] : vinc) {
        std::string why;
        auto cycle = walk_link(faces, inc, v, why);
        if (cycle.empty()) return fail(MapDefect::LinkNotSingleCycle, why);
        if (expect_signature) {
            std::vector<int> sizes;
            for (auto& [w, fi] : cycle) sizes.push_back((int)faces[fi].size());
            if (!cyclic_equal(sizes, *expect_signature))
                return fail(MapDefect::WrongFaceSequence,
                            "vertex " + std::to_string(v) +
                                " has the wrong face sequence");
        }
    }

    if (!is_connected(m))
        return fail(MapDefect::Disconnected, "face complex not connected");

    bool orient = is_orientable(m);
    if (expect_nonorientable && orient)
        return fail(MapDefect::Orientable, "orientable (torus), not Klein");
    if (!expect_nonorientable && !orient)
        return fail(MapDefect::Orientable, "non-orientable, expected orientable");
    return ValidityReport{true, MapDefect::None, "ok"};
}

PolygonalMap from_faces(std::vector<Face> faces, std::optional<MapType> hint) {
    PolygonalMap m;
    m.faces = std::move(faces);
    int mx = -1;
    for (const Face& f : m.faces)
        for (int v : f) mx = std::max(mx, v);
    m.n_vertices = mx + 1;
    m.type_hint = hint;
    const std::vector<int>* sig = hint ? &signature(*hint) : nullptr;
    ValidityReport rep = validate(m, sig, true);
    if (!rep.ok) throw MapError(rep.defect, rep.detail);
    return m;
}

VertexLink vertex_link(const PolygonalMap& m, int v) {
    auto vinc = vertex_incidences(m.faces);
    auto it = vinc.find(v);
    if (it == vinc.end())
        throw MapError(MapDefect::VertexOutOfRange,
                       "vertex " + std::to_string(v) + " not in the map");
    std::string why;
    auto cycle = walk_link(m.faces, it->second, v, why);
    if (cycle.empty()) throw MapError(MapDefect::LinkNotSingleCycle, why);
    return VertexLink{v, std::move(cycle)};
}

std::vector<int> face_sequence_at(const PolygonalMap& m, int v) {
    VertexLink lk = vertex_link(m, v);
    std::vector<int> sizes;
    for (auto& [w, fi] : lk.cycle) sizes.push_back((int)m.faces[fi].size());
    return sizes;
}

bool is_semi_equivelar(const PolygonalMap& m, MapType t) {
    return validate(m, &signature(t), true).ok;
}

long euler_characteristic(const PolygonalMap& m) {
    auto vinc = vertex_incidences(m.faces);
    EdgeSides es = edge_sides(m.faces);
    return (long)vinc.size() - (long)es.size() + (long)m.faces.size();
}

bool is_orientable(const PolygonalMap& m) {
    const auto& faces = m.faces;
    int nf = (int)faces.size();
    EdgeSides es = edge_sides(faces);
    // face -> (other face, same directed start?)
    std::vector<std::vector<std::pair<int, bool>>> fadj(nf);
    for (const auto& [e, sides] : es) {
        if (sides.size() != 2) continue;
        auto [f1, a1] = sides[0];
        auto [f2, a2] = sides[1];
        bool same_dir = faces[f1][a1] == faces[f2][a2];
        fadj[f1].push_back({f2, same_dir});
        fadj[f2].push_back({f1, same_dir});
    }
    std::vector<int> orient(nf, 0);
    for (int root = 0; root < nf; ++root) {
        if (orient[root] != 0) continue;
        orient[root] = 1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int fi = stack.back();
            stack.pop_back();
            for (auto [fj, same_dir] : fadj[fi]) {
                int want = orient[fi] * (same_dir ? -1 : 1);
                if (orient[fj] == 0) {
                    orient[fj] = want;
                    stack.push_back(fj);
                } else if (orient[fj] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_connected(const PolygonalMap& m) {
    int nf = (int)m.faces.size();
    if (nf == 0) return false;
    std::map<int, std::vector<int>> by_vertex;
    for (int fi = 0; fi < nf; ++fi)
        for (int v : m.faces[fi]) by_vertex[v].push_back(fi);
    std::vector<char> seen(nf, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int fi = stack.back();
        stack.pop_back();
        for (int v : m.faces[fi])
            for (int fj : by_vertex[v])
                if (!seen[fj]) {
                    seen[fj] = 1;
                    ++count;
                    stack.push_back(fj);
                }
    }
    return count == nf;
}

bool is_polyhedral(const PolygonalMap& m) {
    const auto& faces = m.faces;
    int nf = (int)faces.size();
    std::vector<std::set<int>> vsets(nf);
    std::vector<std::set<std::pair<int, int>>> eset(nf);
    for (int fi = 0; fi < nf; ++fi) {
        const Face& f = faces[fi];
        int n = (int)f.size();
        vsets[fi] = std::set<int>(f.begin(), f.end());
        for (int a = 0; a < n; ++a)
            eset[fi].insert(edge_key(f[a], f[(a + 1) % n]));
    }
    std::map<int, std::vector<int>> byv;
    for (int fi = 0; fi < nf; ++fi)
        for (int v : vsets[fi]) byv[v].push_back(fi);
    std::set<std::pair<int, int>> pairs;
    for (const auto& [v, fl] : byv)
        for (size_t a = 0; a < fl.size(); ++a)
            for (size_t b = a + 1; b < fl.size(); ++b)
                pairs.insert({fl[a], fl[b]});
    for (auto [a, b] : pairs) {
        std::vector<int> inter;
        std::set_intersection(vsets[a].begin(), vsets[a].end(),
                              vsets[b].begin(), vsets[b].end(),
                              std::back_inserter(inter));
        if (inter.size() > 2) return false;
        if (inter.size() == 2) {
            auto e = edge_key(inter[0], inter[1]);
            if (!eset[a].count(e) || !eset[b].count(e)) return false;
        }
    }
    return true;
}

FlagSystem to_flags(const PolygonalMap& m) {
    // One flag per (face, side position, end-of-side).
    FlagSystem fs;
    std::vector<int> base(m.faces.size());  // first flag id of each face
    int total = 0;
    for (size_t fi = 0; fi < m.faces.size(); ++fi) {
        base[fi] = total;
        total += 2 * (int)m.faces[fi].size();
    }
    fs.n_flags = total;
    fs.s0.assign(total, -1);
    fs.s1.assign(total, -1);
    fs.s2.assign(total, -1);
    fs.origin.resize(total);
    auto id = [&](int fi, int a, int end) { return base[fi] + 2 * a + end; };
    for (int fi = 0; fi < (int)m.faces.size(); ++fi) {
        int n = (int)m.faces[fi].size();
        for (int a = 0; a < n; ++a) {
            for (int end = 0; end < 2; ++end)
                fs.origin[id(fi, a, end)] = {fi, a, end};
            // s0: the other end of the same side
            fs.s0[id(fi, a, 0)] = id(fi, a, 1);
            fs.s0[id(fi, a, 1)] = id(fi, a, 0);
            // s1: the other side of the face at the same corner.  End 0 of
            // side a sits at vertex f[a], as does end 1 of side a-1.
            int b = (a - 1 + n) % n;
            fs.s1[id(fi, a, 0)] = id(fi, b, 1);
            fs.s1[id(fi, b, 1)] = id(fi, a, 0);
        }
    }
    EdgeSides es = edge_sides(m.faces);
    for (const auto& [e, sides] : es) {
        if (sides.size() != 2) continue;
        auto [f1, a1] = sides[0];
        auto [f2, a2] = sides[1];
        // Pair ends carrying the same vertex of the shared edge.
        int u1 = m.faces[f1][a1];
        int u2 = m.faces[f2][a2];
        bool same = (u1 == u2);
        for (int end = 0; end < 2; ++end) {
            int other = same ? end : 1 - end;
            fs.s2[id(f1, a1, end)] = id(f2, a2, other);
            fs.s2[id(f2, a2, other)] = id(f1, a1, end);
        }
    }
    return fs;
}

bool flags_valid(const FlagSystem& f) {
    auto involution = [&](const std::vector<int>& s) {
        for (int i = 0; i < f.n_flags; ++i) {
            if (s[i] < 0 || s[i] >= f.n_flags) return false;
            if (s[i] == i) return false;
            if (s[s[i]] != i) return false;
        }
        return true;
    };
    if ((int)f.s0.size() != f.n_flags || (int)f.s1.size() != f.n_flags ||
        (int)f.s2.size() != f.n_flags)
        return false;
    if (!involution(f.s0) || !involution(f.s1) || !involution(f.s2))
        return false;
    // s0 and s2 commute (their product is an involution on flags).
    for (int i = 0; i < f.n_flags; ++i)
        if (f.s0[f.s2[i]] != f.s2[f.s0[i]]) return false;
    return true;
}

}  // namespace semieq
