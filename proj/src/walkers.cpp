#include "semieq/walkers.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <tuple>

namespace semieq {

namespace {

struct Ctx {
    const PolygonalMap& m;
    EdgeSides es;
    std::vector<VertexLink> links;

    explicit Ctx(const PolygonalMap& mm) : m(mm), es(edge_sides(mm.faces)) {
        links.reserve(m.n_vertices);
        for (int v = 0; v < m.n_vertices; ++v)
            links.push_back(vertex_link(m, v));
    }
    int fsize(int fi) const { return (int)m.faces[fi].size(); }
    const std::vector<std::pair<int, int>>* edge(int a, int b) const {
        auto it = es.find(edge_key(a, b));
        return it == es.end() ? nullptr : &it->second;
    }
    std::pair<int, int> flank_sizes(int a, int b) const {
        const auto* occ = edge(a, b);
        int x = fsize((*occ)[0].first), y = fsize((*occ)[1].first);
        return std::minmax(x, y);
    }
};

struct StepOut {
    int next = -1;
    int leftface = -1;
};

// Generic fixed-crossing step (rules A, B, A1): cross `cross` faces of the
// link of `cur`, starting on the side of `leftface`, and check the crossed
// size pattern against the rule's expected patterns.
std::optional<StepOut> step_cross(const Ctx& c, int prev, int cur,
                                  int leftface, PathRule rule) {
    const auto& seq = c.links[cur].cycle;
    int d = (int)seq.size();
    int i0 = -1;
    for (int i = 0; i < d; ++i)
        if (seq[i].first == prev) {
            if (i0 >= 0) return std::nullopt;
            i0 = i;
        }
    if (i0 < 0) return std::nullopt;
    int fwd_first = seq[i0].second;
    int bwd_first = seq[(i0 - 1 + d) % d].second;
    if (fwd_first != leftface && bwd_first != leftface) return std::nullopt;
    int dirn = (fwd_first == leftface) ? 1 : -1;
    int cross;
    if (rule == PathRule::A) cross = 3;
    else if (rule == PathRule::B) cross = 2;
    else cross = (c.fsize(leftface) == 3) ? 3 : 2;  // A1
    std::vector<int> sizes;
    int j = i0, lastf = -1;
    for (int step = 0; step < cross; ++step) {
        int fc = (dirn == 1) ? seq[j].second : seq[(j - 1 + d) % d].second;
        sizes.push_back(c.fsize(fc));
        lastf = fc;
        j = (j + dirn + d) % d;
    }
    static const std::set<std::vector<int>> exp_a = {{3, 3, 3}};
    static const std::set<std::vector<int>> exp_b = {{4, 4}};
    static const std::set<std::vector<int>> exp_a1 = {{3, 3, 3}, {4, 4}};
    const auto& expect = rule == PathRule::A   ? exp_a
                         : rule == PathRule::B ? exp_b
                                               : exp_a1;
    if (!expect.count(sizes)) return std::nullopt;
    return StepOut{seq[j].first, lastf};
}

// Flank-alternation step (rules A2/A3): the entry edge is flanked (3,3) or
// (4,4); sweep the link from the leftface side and exit along the first
// edge carrying the complementary flank type.
std::optional<StepOut> step_alt(const Ctx& c, int prev, int cur,
                                int leftface) {
    auto ent = c.flank_sizes(prev, cur);
    std::pair<int, int> want;
    if (ent == std::make_pair(3, 3)) want = {4, 4};
    else if (ent == std::make_pair(4, 4)) want = {3, 3};
    else return std::nullopt;
    const auto& seq = c.links[cur].cycle;
    int d = (int)seq.size();
    int i0 = -1;
    for (int i = 0; i < d; ++i)
        if (seq[i].first == prev) {
            if (i0 >= 0) return std::nullopt;
            i0 = i;
        }
    if (i0 < 0) return std::nullopt;
    int fwd_first = seq[i0].second;
    int bwd_first = seq[(i0 - 1 + d) % d].second;
    if (fwd_first != leftface && bwd_first != leftface) return std::nullopt;
    int dirn = (fwd_first == leftface) ? 1 : -1;
    int j = i0, lastf = -1;
    for (int step = 0; step < d; ++step) {
        int fc = (dirn == 1) ? seq[j].second : seq[(j - 1 + d) % d].second;
        lastf = fc;
        j = (j + dirn + d) % d;
        int nxt = seq[j].first;
        if (c.flank_sizes(cur, nxt) == want) return StepOut{nxt, lastf};
    }
    return std::nullopt;
}

// Constant-class step for rule B1: entry and exit edges are (3,4)-flanked;
// the crossed size pattern must belong to the path's step class.
std::optional<StepOut> step_b1(const Ctx& c, int prev, int cur, int leftface,
                               const std::set<std::vector<int>>& pats) {
    if (c.flank_sizes(prev, cur) != std::make_pair(3, 4)) return std::nullopt;
    const auto& seq = c.links[cur].cycle;
    int d = (int)seq.size();
    int i0 = -1;
    for (int i = 0; i < d; ++i)
        if (seq[i].first == prev) {
            if (i0 >= 0) return std::nullopt;
            i0 = i;
        }
    if (i0 < 0) return std::nullopt;
    int fwd_first = seq[i0].second;
    int bwd_first = seq[(i0 - 1 + d) % d].second;
    if (fwd_first != leftface && bwd_first != leftface) return std::nullopt;
    int dirn = (fwd_first == leftface) ? 1 : -1;
    std::vector<int> sizes;
    int j = i0, lastf = -1;
    for (int step = 0; step < d; ++step) {
        int fc = (dirn == 1) ? seq[j].second : seq[(j - 1 + d) % d].second;
        sizes.push_back(c.fsize(fc));
        lastf = fc;
        j = (j + dirn + d) % d;
        int nxt = seq[j].first;
        if (pats.count(sizes) &&
            c.flank_sizes(cur, nxt) == std::make_pair(3, 4))
            return StepOut{nxt, lastf};
    }
    return std::nullopt;
}

TraceResult finish_walk(std::vector<int> walk) {
    TraceResult r;
    r.length = (int)walk.size() - 1;
    std::set<int> seen(walk.begin(), walk.end() - 1);
    r.simple = ((int)seen.size() == r.length);
    r.walk = std::move(walk);
    return r;
}

std::optional<TraceResult> run_walk(
    const Ctx& c, int u, int v, int leftface,
    const std::function<std::optional<StepOut>(int, int, int)>& step) {
    std::vector<int> walk = {u, v};
    int prev = u, cur = v, lf = leftface;
    int limit = 20 * c.m.n_vertices + 40;
    while (true) {
        auto r = step(prev, cur, lf);
        if (!r) return std::nullopt;
        if (cur == u && r->next == v) return finish_walk(std::move(walk));
        walk.push_back(r->next);
        prev = cur;
        cur = r->next;
        lf = r->leftface;
        if ((int)walk.size() > limit) return std::nullopt;
    }
}

}  // namespace

std::string rule_name(PathRule r) {
    switch (r) {
        case PathRule::A: return "A";
        case PathRule::B: return "B";
        case PathRule::A1: return "A1";
        case PathRule::A2: return "A2";
        case PathRule::A3: return "A3";
        case PathRule::B1: return "B1";
    }
    return "?";
}

TraceResult trace(const PolygonalMap& m, PathRule rule, int from, int to) {
    Ctx c(m);
    const auto* occ = c.edge(from, to);
    if (!occ || occ->size() != 2)
        throw RuleInapplicable("start pair is not an edge of the map");
    int f0 = std::min((*occ)[0].first, (*occ)[1].first);
    int f1 = std::max((*occ)[0].first, (*occ)[1].first);

    std::optional<TraceResult> res;
    switch (rule) {
        case PathRule::A:
        case PathRule::B:
        case PathRule::A1:
            res = run_walk(c, from, to, f0, [&](int p, int q, int lf) {
                return step_cross(c, p, q, lf, rule);
            });
            break;
        case PathRule::A2:
        case PathRule::A3: {
            int seed = (rule == PathRule::A2) ? f0 : f1;
            res = run_walk(c, from, to, seed, [&](int p, int q, int lf) {
                return step_alt(c, p, q, lf);
            });
            break;
        }
        case PathRule::B1: {
            static const std::set<std::vector<int>> cls_x = {{4, 3},
                                                             {3, 3, 4}};
            static const std::set<std::vector<int>> cls_y = {{3, 4},
                                                             {4, 3, 3}};
            for (const auto* pats : {&cls_x, &cls_y}) {
                res = run_walk(c, from, to, f0, [&](int p, int q, int lf) {
                    return step_b1(c, p, q, lf, *pats);
                });
                if (res) break;
            }
            break;
        }
    }
    if (!res)
        throw RuleInapplicable("rule " + rule_name(rule) +
                               " does not apply along this edge");
    return *res;
}

namespace {

// Normalize a cycle spec: accept the closed form (first == last) or the open
// form; require >= 3 distinct vertices and every consecutive pair (with
// wrap-around) to be an edge.
std::vector<int> normalize_cycle(const PolygonalMap& m, const EdgeSides& es,
                                 std::vector<int> c) {
    if (c.size() >= 2 && c.front() == c.back()) c.pop_back();
    if (c.size() < 3) throw NotACycle("need at least 3 distinct vertices");
    std::set<int> seen;
    for (int v : c) {
        if (v < 0 || v >= m.n_vertices)
            throw NotACycle("vertex out of range");
        if (!seen.insert(v).second)
            throw NotACycle("repeated vertex in cycle");
    }
    for (size_t i = 0; i < c.size(); ++i)
        if (!es.count(edge_key(c[i], c[(i + 1) % c.size()])))
            throw NotACycle("consecutive vertices are not adjacent");
    return c;
}

}  // namespace

StripClassification classify_strip(const PolygonalMap& m,
                                   const std::vector<int>& cycle) {
    EdgeSides es = edge_sides(m.faces);
    std::vector<int> C = normalize_cycle(m, es, cycle);
    int L = (int)C.size();
    std::set<int> on_c(C.begin(), C.end());

    // The strip: every face meeting the cycle in at least one vertex.
    std::set<int> K;
    for (int fi = 0; fi < (int)m.faces.size(); ++fi)
        for (int v : m.faces[fi])
            if (on_c.count(v)) {
                K.insert(fi);
                break;
            }

    StripClassification out;
    for (int fi : K) out.face_content[(int)m.faces[fi].size()]++;

    // Edge -> strip faces, restricted to K.
    std::map<std::pair<int, int>, std::vector<int>> kes;
    for (int fi : K) {
        const Face& f = m.faces[fi];
        int n = (int)f.size();
        for (int a = 0; a < n; ++a)
            kes[edge_key(f[a], f[(a + 1) % n])].push_back(fi);
    }

    // Boundary circles of the strip, traversed by pivoting around each
    // endpoint through the strip's faces (robust at pinch vertices).
    auto other_face_vertex = [&](int fi, int v, int u) {
        // The neighbour of v inside face fi other than u.
        const Face& f = m.faces[fi];
        int n = (int)f.size();
        for (int a = 0; a < n; ++a)
            if (f[a] == v) {
                int p = f[(a - 1 + n) % n], q = f[(a + 1) % n];
                return (p == u) ? q : p;
            }
        return -1;
    };
    std::set<std::pair<int, int>> visited;  // undirected boundary edges
    std::vector<std::vector<int>> boundaries;
    for (const auto& [e, fs] : kes) {
        if (fs.size() != 1 || visited.count(e)) continue;
        std::vector<int> circle;
        int u = e.first, v = e.second;
        int start_u = u, start_v = v;
        while (true) {
            visited.insert(edge_key(u, v));
            circle.push_back(u);
            // Pivot around v from the unique strip face of edge (u,v).
            int g = kes[edge_key(u, v)][0];
            int pu = u;
            while (true) {
                int w = other_face_vertex(g, v, pu);
                const auto& side = kes[edge_key(v, w)];
                if (side.size() == 1) {
                    u = v;
                    v = w;
                    break;
                }
                int h = (side[0] == g) ? side[1] : side[0];
                pu = w;
                g = h;
            }
            if (u == start_u && v == start_v) break;
        }
        boundaries.push_back(std::move(circle));
    }

    // Standalone strips (some cycle edge bounds only one strip face, i.e. the
    // complex is the strip itself): classify purely by boundary count.
    bool standalone = false;
    for (int i = 0; i < L; ++i) {
        auto it = kes.find(edge_key(C[i], C[(i + 1) % L]));
        if (it == kes.end() || it->second.size() < 2) standalone = true;
    }
    if (standalone) {
        out.kind = (boundaries.size() >= 2) ? StripKind::Cylinder
                                            : StripKind::MobiusStrip;
        out.boundary_cycles = std::move(boundaries);
        return out;
    }

    // Sidedness of the cycle inside the strip: drag a flanking face once
    // around the cycle through the link arcs; returning on the other flank
    // means the cycle is one-sided.
    std::map<int, VertexLink> linkmap;
    for (int v : C) linkmap[v] = vertex_link(m, v);
    const auto& first_occ = es.at(edge_key(C[0], C[1]));
    int f0 = std::min(first_occ[0].first, first_occ[1].first);
    int flank = f0;
    bool two_sided = true;
    bool propagation_ok = true;
    for (int step = 1; step <= L && propagation_ok; ++step) {
        int vi = C[step % L];
        int prev = C[(step - 1) % L];
        int nxt = C[(step + 1) % L];
        const auto& seq = linkmap[vi].cycle;
        int d = (int)seq.size();
        int p = -1, q = -1;
        for (int i = 0; i < d; ++i) {
            if (seq[i].first == prev) p = (p < 0) ? i : -2;
            if (seq[i].first == nxt) q = (q < 0) ? i : -2;
        }
        if (p < 0 || q < 0) {
            propagation_ok = false;
            break;
        }
        int face_p = seq[p].second;
        int face_pm1 = seq[(p - 1 + d) % d].second;
        int face_q = seq[q].second;
        int face_qm1 = seq[(q - 1 + d) % d].second;
        if (flank == face_p) flank = face_qm1;       // arc p..q-1
        else if (flank == face_pm1) flank = face_q;  // arc q..p-1
        else propagation_ok = false;
    }
    if (propagation_ok) two_sided = (flank == f0);

    if (two_sided && boundaries.size() == 2) {
        out.kind = StripKind::Cylinder;
        out.boundary_cycles = std::move(boundaries);
    } else if (!two_sided || out.face_content.size() == 1) {
        // One-sided cycles and homogeneous one-boundary strips are Mobius
        // strips outright; a mixed-content one-boundary strip is the union
        // of a cylinder and a Mobius strip glued along the cycle.
        out.kind = StripKind::MobiusStrip;
        out.boundary_cycles = std::move(boundaries);
    } else {
        out.kind = StripKind::CylinderPlusMobius;
        out.boundary_cycles = {C};
    }
    return out;
}

std::vector<std::vector<int>> row_cycles(const PolygonalMap& m) {
    if (m.rows.empty())
        throw MetadataMissing("map carries no row metadata");
    return m.rows;
}

}  // namespace semieq
