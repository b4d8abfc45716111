#include "semieq/iso.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace semieq {

namespace {

struct BfsResult {
    CanonicalForm form;            // rows of (s0#, s1#, s2#) per flag
    std::vector<int> order;        // discovery index -> flag id
};

BfsResult flag_bfs(const FlagSystem& fs, int start) {
    int N = fs.n_flags;
    std::vector<int> num(N, -1), order;
    order.reserve(N);
    num[start] = 0;
    order.push_back(start);
    const std::vector<int>* invs[3] = {&fs.s0, &fs.s1, &fs.s2};
    for (size_t head = 0; head < order.size(); ++head) {
        int f = order[head];
        for (const auto* inv : invs) {
            int g = (*inv)[f];
            if (num[g] < 0) {
                num[g] = (int)order.size();
                order.push_back(g);
            }
        }
    }
    BfsResult r;
    r.form.reserve(N);
    for (int f : order)
        r.form.push_back({num[fs.s0[f]], num[fs.s1[f]], num[fs.s2[f]]});
    r.order = std::move(order);
    return r;
}

BfsResult minimal_bfs(const FlagSystem& fs) {
    BfsResult best;
    for (int s = 0; s < fs.n_flags; ++s) {
        BfsResult cur = flag_bfs(fs, s);
        if (best.form.empty() || cur.form < best.form) best = std::move(cur);
    }
    return best;
}

int flag_vertex(const PolygonalMap& m, const FlagSystem& fs, int flag) {
    const auto& o = fs.origin[flag];  // (face, position, end)
    const Face& f = m.faces[o[0]];
    return f[(o[1] + o[2]) % (int)f.size()];
}

Face face_class_key(const Face& f) {
    int n = (int)f.size();
    Face best;
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

}  // namespace

CanonicalForm canonical_form(const PolygonalMap& m) {
    FlagSystem fs = to_flags(m);
    return minimal_bfs(fs).form;
}

std::string digest_of(const CanonicalForm& form) {
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix((std::uint64_t)form.size());
    for (const auto& row : form)
        for (int x : row) mix((std::uint64_t)(std::uint32_t)x);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return std::string(buf);
}

std::string canonical_digest(const PolygonalMap& m) {
    return digest_of(canonical_form(m));
}

bool verify_witness(const PolygonalMap& a, const PolygonalMap& b,
                    const std::vector<int>& f) {
    if ((int)f.size() != a.n_vertices || a.n_vertices != b.n_vertices)
        return false;
    std::vector<int> seen(b.n_vertices, 0);
    for (int img : f) {
        if (img < 0 || img >= b.n_vertices || seen[img]) return false;
        seen[img] = 1;
    }
    if (a.faces.size() != b.faces.size()) return false;
    std::map<Face, int> bkeys;
    for (const Face& bf : b.faces) bkeys[face_class_key(bf)]++;
    for (const Face& af : a.faces) {
        Face img(af.size());
        for (size_t i = 0; i < af.size(); ++i) img[i] = f[af[i]];
        auto it = bkeys.find(face_class_key(img));
        if (it == bkeys.end() || it->second == 0) return false;
        it->second--;
    }
    return true;
}

IsoResult are_isomorphic(const PolygonalMap& a, const PolygonalMap& b) {
    IsoResult out;
    if (a.n_vertices != b.n_vertices || a.faces.size() != b.faces.size())
        return out;
    FlagSystem fa = to_flags(a), fb = to_flags(b);
    if (fa.n_flags != fb.n_flags) return out;
    BfsResult ra = minimal_bfs(fa), rb = minimal_bfs(fb);
    if (ra.form != rb.form) return out;
    out.isomorphic = true;
    // Matching flags by canonical number induces the vertex bijection.
    std::vector<int> w(a.n_vertices, -1);
    for (int i = 0; i < fa.n_flags; ++i) {
        int va = flag_vertex(a, fa, ra.order[i]);
        int vb = flag_vertex(b, fb, rb.order[i]);
        w[va] = vb;
    }
    if (verify_witness(a, b, w)) {
        out.witness = std::move(w);
        return out;
    }
    // Canonical forms agree, so a witness exists; recover one independently.
    if (auto alt = backtracking_isomorphism(a, b)) out.witness = *alt;
    return out;
}

std::optional<std::vector<int>> backtracking_isomorphism(
    const PolygonalMap& a, const PolygonalMap& b) {
    int n = a.n_vertices;
    if (n != b.n_vertices || a.faces.size() != b.faces.size()) return {};

    auto adjacency = [](const PolygonalMap& m) {
        std::vector<std::set<int>> adj(m.n_vertices);
        for (const Face& f : m.faces) {
            int k = (int)f.size();
            for (int i = 0; i < k; ++i) {
                adj[f[i]].insert(f[(i + 1) % k]);
                adj[f[(i + 1) % k]].insert(f[i]);
            }
        }
        return adj;
    };
    auto profile = [](const PolygonalMap& m) {
        std::vector<std::multiset<int>> prof(m.n_vertices);
        for (const Face& f : m.faces)
            for (int v : f) prof[v].insert((int)f.size());
        return prof;
    };
    auto adja = adjacency(a), adjb = adjacency(b);
    auto pa = profile(a), pb = profile(b);

    // Order a's vertices so each one (after the first) touches a previous
    // one; keeps the search strongly constrained.
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    order.push_back(0);
    placed[0] = 1;
    for (size_t h = 0; h < order.size(); ++h)
        for (int u : adja[order[h]])
            if (!placed[u]) {
                placed[u] = 1;
                order.push_back(u);
            }
    for (int v = 0; v < n; ++v)
        if (!placed[v]) order.push_back(v);

    std::map<Face, int> bface_count;
    for (const Face& bf : b.faces) bface_count[face_class_key(bf)]++;

    std::vector<int> w(n, -1), used(n, 0);
    std::function<bool(size_t)> go = [&](size_t depth) -> bool {
        if (depth == order.size()) {
            auto counts = bface_count;
            for (const Face& af : a.faces) {
                Face img(af.size());
                for (size_t i = 0; i < af.size(); ++i) img[i] = w[af[i]];
                auto it = counts.find(face_class_key(img));
                if (it == counts.end() || it->second == 0) return false;
                it->second--;
            }
            return true;
        }
        int v = order[depth];
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand] || pa[v] != pb[cand]) continue;
            if (adja[v].size() != adjb[cand].size()) continue;
            bool ok = true;
            for (int u : adja[v])
                if (w[u] >= 0 && !adjb[cand].count(w[u])) {
                    ok = false;
                    break;
                }
            if (ok) {
                // Reverse direction: mapped neighbours of cand must be
                // neighbours of v.
                for (int u = 0; u < n && ok; ++u)
                    if (w[u] >= 0 && adjb[cand].count(w[u]) &&
                        !adja[v].count(u))
                        ok = false;
            }
            if (!ok) continue;
            w[v] = cand;
            used[cand] = 1;
            if (go(depth + 1)) return true;
            w[v] = -1;
            used[cand] = 0;
        }
        return false;
    };
    if (go(0)) return w;
    return {};
}

PolygonalMap dual(const PolygonalMap& m) {
    PolygonalMap d;
    d.n_vertices = (int)m.faces.size();
    d.faces.reserve(m.n_vertices);
    for (int v = 0; v < m.n_vertices; ++v) {
        VertexLink link = vertex_link(m, v);
        Face f;
        for (const auto& [nbr, fc] : link.cycle) f.push_back(fc);
        d.faces.push_back(std::move(f));
    }
    return d;
}

}  // namespace semieq
