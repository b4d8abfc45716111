#include "semieq/reps.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <initializer_list>
#include <set>
#include <sstream>

#include "semieq/iso.hpp"

namespace semieq {

namespace {

inline int mod(int a, int b) {
    int r = a % b;
    return r < 0 ? r + b : r;
}

// Vertex labels are (tag, x, y, z) tuples interned in first-occurrence order.
using Label = std::array<int, 4>;

struct Builder {
    std::map<Label, int> ids;
    std::vector<Face> faces;

    int vert(const Label& L) {
        auto it = ids.find(L);
        if (it != ids.end()) return it->second;
        int id = (int)ids.size();
        ids.emplace(L, id);
        return id;
    }
    void face(std::initializer_list<Label> ls) {
        Face f;
        for (const Label& L : ls) f.push_back(vert(L));
        faces.push_back(std::move(f));
    }
    void face_v(const std::vector<Label>& ls) {
        Face f;
        for (const Label& L : ls) f.push_back(vert(L));
        faces.push_back(std::move(f));
    }

    // Drop faces whose boundary cycle duplicates an earlier one (closure
    // bands emit each chord face twice).
    void dedupe() {
        std::set<Face> seen;
        std::vector<Face> out;
        for (const Face& f : faces) {
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
            if (seen.insert(best).second) out.push_back(f);
        }
        faces = std::move(out);
    }

    PolygonalMap finish(MapType t, RepParams rep,
                        std::vector<std::vector<int>> rows) {
        PolygonalMap m;
        m.n_vertices = (int)ids.size();
        m.faces = std::move(faces);
        m.type_hint = t;
        m.rep = std::move(rep);
        m.rows = std::move(rows);
        return m;
    }
};

// ---------------------------------------------------------------------------
// Planar templates K(r,s,k).  The seam glues row s onto row 0 reversed:
// row-cycle position p of row s := position (k + off - p) mod L of row 0,
// where off is a per-type alignment constant.
// ---------------------------------------------------------------------------

PolygonalMap planar_t36_t44(MapType t, int r, int s, int k) {
    Builder b;
    auto V = [&](int i, int j) -> Label {
        j = mod(j, r);
        if (i == s) return {0, 0, mod(k - j, r), 0};
        return {0, i, j, 0};
    };
    bool quads = (t == MapType::T4_4_4_4);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < r; ++j) {
            if (quads) {
                b.face({V(i, j), V(i, j + 1), V(i + 1, j + 1), V(i + 1, j)});
            } else {
                b.face({V(i, j), V(i, j + 1), V(i + 1, j + 1)});
                b.face({V(i, j), V(i + 1, j + 1), V(i + 1, j)});
            }
        }
    std::vector<std::vector<int>> rows(s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < r; ++j) rows[i].push_back(b.vert(V(i, j)));
    return b.finish(t, RepParams::planar(r, s, k), std::move(rows));
}

PolygonalMap planar_t3344(int r, int s, int k) {
    Builder b;
    auto V = [&](int i, int j) -> Label {
        j = mod(j, r);
        if (i == s) return {0, 0, mod(k - j, r), 0};
        return {0, i, j, 0};
    };
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < r; ++j) {
            if (i % 2 == 0) {
                b.face({V(i, j), V(i, j + 1), V(i + 1, j + 1)});
                b.face({V(i, j), V(i + 1, j + 1), V(i + 1, j)});
            } else {
                b.face({V(i, j), V(i, j + 1), V(i + 1, j + 1), V(i + 1, j)});
            }
        }
    std::vector<std::vector<int>> rows(s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < r; ++j) rows[i].push_back(b.vert(V(i, j)));
    return b.finish(MapType::T3_3_3_4_4, RepParams::planar(r, s, k),
                    std::move(rows));
}

PolygonalMap planar_t33434(int r, int s, int k) {
    Builder b;
    auto V = [&](int i, int j) -> Label {
        j = mod(j, r);
        if (i == s) return {0, 0, mod(k - j, r), 0};
        return {0, i, j, 0};
    };
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < r; ++j) {
            bool quad = (i % 2 == 0) == (j % 2 == 0);
            if (quad) {
                b.face({V(i, j), V(i, j + 1), V(i + 1, j + 1), V(i + 1, j)});
            } else if (i % 2 == 0) {
                b.face({V(i, j), V(i, j + 1), V(i + 1, j)});
                b.face({V(i, j + 1), V(i + 1, j + 1), V(i + 1, j)});
            } else {
                b.face({V(i, j), V(i, j + 1), V(i + 1, j + 1)});
                b.face({V(i, j), V(i + 1, j + 1), V(i + 1, j)});
            }
        }
    std::vector<std::vector<int>> rows(s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < r; ++j) rows[i].push_back(b.vert(V(i, j)));
    return b.finish(MapType::T3_3_4_3_4, RepParams::planar(r, s, k),
                    std::move(rows));
}

PolygonalMap planar_t3636(int r, int s, int k) {
    if (r % 2)
        throw InadmissibleParams("2 | r violated");
    Builder b;
    auto A = [&](int i, int m) -> Label {
        m = mod(m, r);
        if (i == s) return {0, 0, mod(k - m, r), 0};
        return {0, i, m, 0};
    };
    auto B = [&](int i, int j) -> Label { return {1, i, mod(j, r / 2), 0}; };
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < r / 2; ++j) {
            b.face({A(i, 2 * j + 1), A(i, 2 * j + 2), B(i, j)});
            b.face({B(i, j), A(i + 1, 2 * j), A(i + 1, 2 * j + 1)});
            b.face({A(i, 2 * j + 1), A(i, 2 * j), B(i, j - 1),
                    A(i + 1, 2 * j - 1), A(i + 1, 2 * j), B(i, j)});
        }
    std::vector<std::vector<int>> rows(s);
    for (int i = 0; i < s; ++i)
        for (int m = 0; m < r; ++m) rows[i].push_back(b.vert(A(i, m)));
    return b.finish(MapType::T3_6_3_6, RepParams::planar(r, s, k),
                    std::move(rows));
}

PolygonalMap planar_t488(int r, int s, int k) {
    if (r % 4)
        throw InadmissibleParams("4 | r violated");
    int off = (s % 2 == 1) ? 0 : 3;
    Builder b;
    auto V = [&](int i, int j) -> Label {
        j = mod(j, r);
        if (i == s) return {0, 0, mod(k + off - j, r), 0};
        return {0, i, j, 0};
    };
    for (int i = 0; i < s; ++i) {
        int c = (2 * i) % 4;
        for (int j = c; j < r + c; j += 4) {
            b.face({V(i, j), V(i, j + 1), V(i + 1, j + 1), V(i + 1, j)});
            b.face({V(i, j + 1), V(i, j + 2), V(i, j + 3), V(i, j + 4),
                    V(i + 1, j + 4), V(i + 1, j + 3), V(i + 1, j + 2),
                    V(i + 1, j + 1)});
        }
    }
    std::vector<std::vector<int>> rows(s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < r; ++j) rows[i].push_back(b.vert(V(i, j)));
    return b.finish(MapType::T4_8_8, RepParams::planar(r, s, k),
                    std::move(rows));
}

PolygonalMap planar_t31212(int r, int s, int k) {
    if (r % 2)
        throw InadmissibleParams("2 | r violated");
    int off = (s % 2 == 1) ? 1 : 3;
    int m = r / 2;
    Builder b;
    // Row-cycle position 2j is corner-left L(i,j), 2j+1 is corner-right.
    auto pos_to = [&](int i, int p) -> Label {
        p = mod(p, r);
        return {p % 2 == 0 ? 0 : 1, i, p / 2, 0};  // 0 = L, 1 = R
    };
    auto L = [&](int i, int j) -> Label {
        if (i == s) return pos_to(0, k + off - 2 * j);
        return {0, i, mod(j, m), 0};
    };
    auto R = [&](int i, int j) -> Label {
        if (i == s) return pos_to(0, k + off - (2 * j + 1));
        return {1, i, mod(j, m), 0};
    };
    auto Vv = [&](int i, int j) -> Label {
        if (i == s) {
            Label q = pos_to(0, k + off - 2 * j);
            return {2, 0, q[2], 0};
        }
        return {2, i, mod(j, m), 0};
    };
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < m; ++j)
            b.face({L(i, j), R(i, j), Vv(i, j)});
        for (int j = 0; j < m; ++j)
            if ((i + j) % 2 == 0)
                b.face({R(i, j), L(i, j + 1), R(i, j + 1), L(i, j + 2),
                        Vv(i, j + 2), Vv(i + 1, j + 2), L(i + 1, j + 2),
                        R(i + 1, j + 1), L(i + 1, j + 1), R(i + 1, j),
                        Vv(i + 1, j), Vv(i, j)});
    }
    std::vector<std::vector<int>> rows(s);
    for (int i = 0; i < s; ++i)
        for (int p = 0; p < r; ++p)
            rows[i].push_back(b.vert(p % 2 == 0 ? L(i, p / 2) : R(i, p / 2)));
    return b.finish(MapType::T3_12_12, RepParams::planar(r, s, k),
                    std::move(rows));
}

PolygonalMap planar_t4612(int r, int s, int k) {
    if (r % 6 || s % 2)
        throw InadmissibleParams("6 | r and 2 | s violated");
    int off = 1;
    int C = r / 6, R12 = s / 2;
    Builder b;
    auto D = [&](int i, int c, int t) -> Label {
        c = mod(c, C);
        if (i == R12 && 6 <= t && t <= 11) {
            int p = mod(k + off - (6 * c + (t - 6)), r);
            return {0, 0, p / 6, 6 + p % 6};
        }
        return {0, i, c, t};
    };
    for (int i = 0; i < R12; ++i)
        for (int c = 0; c < C; ++c) {
            std::vector<Label> gon;
            for (int t = 0; t < 12; ++t) gon.push_back(D(i, c, t));
            b.face_v(gon);
            b.face({D(i, c, 11), D(i, c, 0), D(i, c + 1, 5), D(i, c + 1, 6)});
            b.face({D(i, c, 1), D(i, c, 2), D(i + 1, c, 7), D(i + 1, c, 8)});
            b.face({D(i, c, 4), D(i, c, 3), D(i + 1, c - 1, 10),
                    D(i + 1, c - 1, 9)});
            b.face({D(i, c, 3), D(i, c, 2), D(i + 1, c, 7), D(i + 1, c, 6),
                    D(i + 1, c - 1, 11), D(i + 1, c - 1, 10)});
            b.face({D(i + 1, c, 9), D(i + 1, c, 8), D(i, c, 1), D(i, c, 0),
                    D(i, c + 1, 5), D(i, c + 1, 4)});
        }
    std::vector<std::vector<int>> rows(s);
    for (int i = 0; i < R12; ++i)
        for (int p = 0; p < r; ++p) {
            rows[2 * i].push_back(b.vert(D(i, p / 6, 6 + p % 6)));
            rows[2 * i + 1].push_back(b.vert(D(i, p / 6, 5 - p % 6)));
        }
    return b.finish(MapType::T4_6_12, RepParams::planar(r, s, k),
                    std::move(rows));
}

PolygonalMap planar_t3464(int r, int s, int k) {
    if (r % 3 || s % 2)
        throw InadmissibleParams("3 | r and 2 | s violated");
    int C = r / 3, R6 = s / 2;
    Builder b;
    auto E = [&](int i, int c, int t) -> Label {
        c = mod(c, C);
        if (i == R6 && 3 <= t && t <= 5) {
            int p = mod(k - (3 * c + (t - 3)), r);
            return {0, 0, p / 3, 3 + p % 3};
        }
        return {0, i, c, t};
    };
    for (int i = 0; i < R6; ++i)
        for (int c = 0; c < C; ++c) {
            std::vector<Label> gon;
            for (int t = 0; t < 6; ++t) gon.push_back(E(i, c, t));
            b.face_v(gon);
            b.face({E(i, c, 5), E(i, c, 0), E(i, c + 1, 2), E(i, c + 1, 3)});
            b.face({E(i, c, 1), E(i, c, 0), E(i + 1, c, 4), E(i + 1, c, 3)});
            b.face({E(i, c, 2), E(i, c, 1), E(i + 1, c - 1, 5),
                    E(i + 1, c - 1, 4)});
            b.face({E(i, c, 0), E(i, c + 1, 2), E(i + 1, c, 4)});
            b.face({E(i, c, 1), E(i + 1, c, 3), E(i + 1, c - 1, 5)});
        }
    std::vector<std::vector<int>> rows(s);
    for (int i = 0; i < R6; ++i)
        for (int p = 0; p < r; ++p) {
            rows[2 * i].push_back(b.vert(E(i, p / 3, 3 + p % 3)));
            rows[2 * i + 1].push_back(b.vert(E(i, p / 3, 2 - p % 3)));
        }
    return b.finish(MapType::T3_4_6_4, RepParams::planar(r, s, k),
                    std::move(rows));
}

// Snub-hex template: the triangular lattice minus the (i + 3j = 0 mod 7)
// sublattice, closed with the reversing seam.  Every attempted closure fails
// validation; exposed only through expand_planar_template.
PolygonalMap planar_t346_raw(int r, int s, int k) {
    Builder b;
    auto removed = [&](int i, int j) { return mod(i + 3 * j, 7) == 0; };
    auto V = [&](int i, int j) -> std::pair<int, int> {
        j = mod(j, r);
        if (i == s) return {0, mod(k - j, r)};
        if (i == -1) return {s - 1, mod(k - j, r)};
        return {i, j};
    };
    std::set<std::set<std::pair<int, int>>> seen;
    auto emit = [&](const std::vector<std::pair<int, int>>& f) {
        std::set<std::pair<int, int>> key(f.begin(), f.end());
        if (!seen.insert(key).second) return;
        std::vector<Label> ls;
        for (auto [a, c] : f) ls.push_back({0, a, c, 0});
        b.face_v(ls);
    };
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < r; ++j) {
            if (removed(i, j)) {
                std::vector<std::pair<int, int>> ring;
                for (auto [a, c] : std::initializer_list<std::pair<int, int>>{
                         {i, j + 1}, {i + 1, j}, {i + 1, j - 1},
                         {i, j - 1}, {i - 1, j}, {i - 1, j + 1}})
                    ring.push_back(V(a, c));
                emit(ring);
            }
            for (auto tri : {std::vector<std::pair<int, int>>{
                                 {i, j}, {i, j + 1}, {i + 1, j}},
                             std::vector<std::pair<int, int>>{
                                 {i, j}, {i + 1, j}, {i + 1, j - 1}}}) {
                std::vector<std::pair<int, int>> imgs;
                bool bad = false;
                for (auto [a, c] : tri) {
                    auto img = V(a, c);
                    if (removed(img.first, img.second)) { bad = true; break; }
                    imgs.push_back(img);
                }
                if (!bad) emit(imgs);
            }
        }
    return b.finish(MapType::T3_3_3_3_6, RepParams::planar(r, s, k), {});
}

// {6^3} is the dual of {3^6}: hexagons indexed by triangulation vertices.
PolygonalMap planar_t63(int r, int s, int k) {
    PolygonalMap tri = planar_t36_t44(MapType::T3_3_3_3_3_3, r, s, k);
    PolygonalMap hex = dual(tri);
    hex.type_hint = MapType::T6_6_6;
    hex.rep = RepParams::planar(r, s, k);
    // Dual rows: the 2r band triangles in strip order Up(0), Down(1),
    // Up(1), Down(2), ...; dual vertex ids equal primal face indices.
    hex.rows.assign(s, {});
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < r; ++j) {
            hex.rows[i].push_back(2 * (i * r + j));
            hex.rows[i].push_back(2 * (i * r + mod(j + 1, r)) + 1);
        }
    return hex;
}

// ---------------------------------------------------------------------------
// Mobius-pair templates K(l,t).  Closure = one extra band whose virtual row
// is the boundary row rotated (or folded), doubled faces deduped, satellites
// identified at half period.  The rotation shifts below are the unique
// choices that close every admissible parameter tuple.
// ---------------------------------------------------------------------------

PolygonalMap mobius_m36(int l, int t) {
    int hb = (l + 1) / 2, ht = (l - 1) / 2;
    Builder b;
    auto V = [&](int i, int j) -> Label { return {0, i, mod(j, l), 0}; };
    for (int i = 0; i < t - 1; ++i)
        for (int j = 0; j < l; ++j) {
            b.face({V(i, j), V(i, j + 1), V(i + 1, j + 1)});
            b.face({V(i, j), V(i + 1, j + 1), V(i + 1, j)});
        }
    for (int j = 0; j < l; ++j) {
        b.face({V(0, j + hb), V(0, j + 1 + hb), V(0, j + 1)});
        b.face({V(0, j + hb), V(0, j + 1), V(0, j)});
    }
    for (int j = 0; j < l; ++j) {
        b.face({V(t - 1, j), V(t - 1, j + 1), V(t - 1, j + 1 + ht)});
        b.face({V(t - 1, j), V(t - 1, j + 1 + ht), V(t - 1, j + ht)});
    }
    b.dedupe();
    std::vector<std::vector<int>> rows(t);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < l; ++j) rows[i].push_back(b.vert(V(i, j)));
    return b.finish(MapType::T3_3_3_3_3_3, RepParams::mobius("plain", l, t),
                    std::move(rows));
}

PolygonalMap mobius_m3344(int l, int t) {
    Builder b;
    auto V = [&](int i, int j) -> Label { return {0, i, mod(j, l), 0}; };
    // Odd l closes with triangle chords, so the first interior band must be
    // quadrangles; even l closes with quad chords and triangles come first.
    int fb = (l % 2 == 1) ? 1 : 0;
    for (int i = 0; i < t - 1; ++i) {
        bool quad_band = ((i % 2) == 0) == (fb == 1);
        for (int j = 0; j < l; ++j) {
            if (quad_band) {
                b.face({V(i, j), V(i, j + 1), V(i + 1, j + 1), V(i + 1, j)});
            } else {
                b.face({V(i, j), V(i, j + 1), V(i + 1, j + 1)});
                b.face({V(i, j), V(i + 1, j + 1), V(i + 1, j)});
            }
        }
    }
    if (l % 2 == 1) {
        int h = (l + 1) / 2;
        for (int j = 0; j < l; ++j) {
            b.face({V(0, j), V(0, j + 1), V(0, j + h)});
            b.face({V(t - 1, j), V(t - 1, j + 1), V(t - 1, j + h)});
        }
    } else {
        int m = l / 2;
        for (int j = 0; j < l; ++j) {
            b.face({V(0, j), V(0, j + 1), V(0, j + m + 1), V(0, j + m)});
            b.face({V(t - 1, j), V(t - 1, j + 1), V(t - 1, j + m + 1),
                    V(t - 1, j + m)});
        }
    }
    b.dedupe();
    std::vector<std::vector<int>> rows(t);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < l; ++j) rows[i].push_back(b.vert(V(i, j)));
    return b.finish(MapType::T3_3_3_4_4,
                    RepParams::mobius(l % 2 ? "mtri" : "mquad", l, t),
                    std::move(rows));
}

PolygonalMap mobius_m3636_chords(int l, int t) {
    int hb = l / 2 - 1, ht = l / 2 + 1;
    Builder b;
    auto A = [&](int i, int m) -> Label { return {0, i, mod(m, l), 0}; };
    auto B = [&](int i, int j) -> Label { return {1, i, mod(j, l / 2), 0}; };
    auto Bb = [&](int j) -> Label { return {2, 0, mod(j, l / 4), 0}; };
    auto Bt = [&](int j) -> Label { return {3, 0, mod(j, l / 4), 0}; };
    for (int i = 0; i < t - 1; ++i)
        for (int j = 0; j < l / 2; ++j) {
            b.face({A(i, 2 * j + 1), A(i, 2 * j + 2), B(i, j)});
            b.face({B(i, j), A(i + 1, 2 * j), A(i + 1, 2 * j + 1)});
            b.face({A(i, 2 * j + 1), A(i, 2 * j), B(i, j - 1),
                    A(i + 1, 2 * j - 1), A(i + 1, 2 * j), B(i, j)});
        }
    for (int j = 0; j < l / 2; ++j) {
        b.face({A(0, 2 * j + 1 + hb), A(0, 2 * j + 2 + hb), Bb(j)});
        b.face({Bb(j), A(0, 2 * j), A(0, 2 * j + 1)});
        b.face({A(0, 2 * j + 1 + hb), A(0, 2 * j + hb), Bb(j - 1),
                A(0, 2 * j - 1), A(0, 2 * j), Bb(j)});
    }
    int i = t - 1;
    for (int j = 0; j < l / 2; ++j) {
        b.face({A(i, 2 * j + 1), A(i, 2 * j + 2), Bt(j)});
        b.face({Bt(j), A(i, 2 * j + ht), A(i, 2 * j + 1 + ht)});
        b.face({A(i, 2 * j + 1), A(i, 2 * j), Bt(j - 1),
                A(i, 2 * j - 1 + ht), A(i, 2 * j + ht), Bt(j)});
    }
    b.dedupe();
    std::vector<std::vector<int>> rows(t);
    for (int q = 0; q < t; ++q)
        for (int m = 0; m < l; ++m) rows[q].push_back(b.vert(A(q, m)));
    return b.finish(MapType::T3_6_3_6, RepParams::mobius("m36", l, t),
                    std::move(rows));
}

PolygonalMap mobius_m3636_core(int l, int t) {
    int half = l / 2;
    Builder b;
    auto A = [&](int i, int m) -> Label { return {0, i, mod(m, l), 0}; };
    auto band = [&](std::function<Label(int)> lowA,
                    std::function<Label(int)> upA,
                    std::function<Label(int)> Bres) {
        for (int j = 0; j < half; ++j) {
            b.face({lowA(2 * j + 1), lowA(2 * j + 2), Bres(j)});
            b.face({Bres(j), upA(2 * j), upA(2 * j + 1)});
            b.face({lowA(2 * j + 1), lowA(2 * j), Bres(j - 1),
                    upA(2 * j - 1), upA(2 * j), Bres(j)});
        }
    };
    for (int i = 0; i < t - 1; ++i)
        band([&, i](int m) { return A(i, m); },
             [&, i](int m) { return A(i + 1, m); },
             [&, i](int j) -> Label { return {1, i, mod(j, half), 0}; });
    band([&](int m) -> Label { return {2, 0, mod(m, half), 0}; },
         [&](int m) { return A(0, m); },
         [&](int j) -> Label { return {3, 0, mod(j, half), 0}; });
    band([&](int m) { return A(t - 1, m); },
         [&](int m) -> Label { return {4, 0, mod(m, half), 0}; },
         [&](int j) -> Label { return {5, 0, mod(j, half), 0}; });
    b.dedupe();
    std::vector<std::vector<int>> rows(t);
    for (int q = 0; q < t; ++q)
        for (int m = 0; m < l; ++m) rows[q].push_back(b.vert(A(q, m)));
    return b.finish(MapType::T3_6_3_6, RepParams::mobius("m", l, t),
                    std::move(rows));
}

PolygonalMap mobius_m31212_chords(int l, int t) {
    int m = l / 2;
    int hb = m / 2, ht = m / 2;
    Builder b;
    auto L = [&](int i, int j) -> Label { return {0, i, mod(j, m), 0}; };
    auto R = [&](int i, int j) -> Label { return {1, i, mod(j, m), 0}; };
    auto Vv = [&](int i, int j) -> Label { return {2, i, mod(j, m), 0}; };
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < m; ++j)
            b.face({L(i, j), R(i, j), Vv(i, j)});
    for (int i = 0; i < t - 1; ++i)
        for (int j = 0; j < m; ++j)
            if ((i + j) % 2 == 0)
                b.face({R(i, j), L(i, j + 1), R(i, j + 1), L(i, j + 2),
                        Vv(i, j + 2), Vv(i + 1, j + 2), L(i + 1, j + 2),
                        R(i + 1, j + 1), L(i + 1, j + 1), R(i + 1, j),
                        Vv(i + 1, j), Vv(i, j)});
    for (int j = 0; j < m; ++j)
        if (mod(-1 + j, 2) == 0)
            b.face({R(0, j + hb), L(0, j + 1 + hb), R(0, j + 1 + hb),
                    L(0, j + 2 + hb), Vv(0, j + 2 + hb), Vv(0, j + 2),
                    L(0, j + 2), R(0, j + 1), L(0, j + 1), R(0, j),
                    Vv(0, j), Vv(0, j + hb)});
    int i = t - 1;
    for (int j = 0; j < m; ++j)
        if ((i + j) % 2 == 0)
            b.face({R(i, j), L(i, j + 1), R(i, j + 1), L(i, j + 2),
                    Vv(i, j + 2), Vv(i, j + 2 + ht), L(i, j + 2 + ht),
                    R(i, j + 1 + ht), L(i, j + 1 + ht), R(i, j + ht),
                    Vv(i, j + ht), Vv(i, j)});
    b.dedupe();
    std::vector<std::vector<int>> rows(t);
    for (int q = 0; q < t; ++q)
        for (int p = 0; p < l; ++p)
            rows[q].push_back(b.vert(p % 2 == 0 ? L(q, p / 2) : R(q, p / 2)));
    return b.finish(MapType::T3_12_12, RepParams::mobius("m312", l, t),
                    std::move(rows));
}

PolygonalMap mobius_m31212_core(int l, int t) {
    int m = l / 2, mc = m / 2, par = 1;
    Builder b;
    auto L = [&](int i, int j) -> Label { return {0, i, mod(j, m), 0}; };
    auto R = [&](int i, int j) -> Label { return {1, i, mod(j, m), 0}; };
    auto Vv = [&](int i, int j) -> Label { return {2, i, mod(j, m), 0}; };
    auto cL = [&](int j) -> Label { return {3, 0, mod(j, mc), 0}; };
    auto cR = [&](int j) -> Label { return {4, 0, mod(j, mc), 0}; };
    auto cV = [&](int j) -> Label { return {5, 0, mod(j, mc), 0}; };
    auto dL = [&](int j) -> Label { return {6, 0, mod(j, mc), 0}; };
    auto dR = [&](int j) -> Label { return {7, 0, mod(j, mc), 0}; };
    auto dV = [&](int j) -> Label { return {8, 0, mod(j, mc), 0}; };
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < m; ++j)
            b.face({L(i, j), R(i, j), Vv(i, j)});
    for (int i = 0; i < t - 1; ++i)
        for (int j = 0; j < m; ++j)
            if ((i + j) % 2 == 0)
                b.face({R(i, j), L(i, j + 1), R(i, j + 1), L(i, j + 2),
                        Vv(i, j + 2), Vv(i + 1, j + 2), L(i + 1, j + 2),
                        R(i + 1, j + 1), L(i + 1, j + 1), R(i + 1, j),
                        Vv(i + 1, j), Vv(i, j)});
    for (int j = 0; j < mc; ++j)
        b.face({cL(j), cR(j), cV(j)});
    for (int j = 0; j < m; ++j)
        if ((j + par) % 2 == 0)
            b.face({cR(j), cL(j + 1), cR(j + 1), cL(j + 2),
                    cV(j + 2), Vv(0, j + 2), L(0, j + 2),
                    R(0, j + 1), L(0, j + 1), R(0, j),
                    Vv(0, j), cV(j)});
    int i = t - 1;
    for (int j = 0; j < mc; ++j)
        b.face({dL(j), dR(j), dV(j)});
    for (int j = 0; j < m; ++j)
        if ((i + j) % 2 == 0)
            b.face({R(i, j), L(i, j + 1), R(i, j + 1), L(i, j + 2),
                    Vv(i, j + 2), dV(j + 2), dL(j + 2),
                    dR(j + 1), dL(j + 1), dR(j),
                    dV(j), Vv(i, j)});
    b.dedupe();
    std::vector<std::vector<int>> rows(t);
    for (int q = 0; q < t; ++q)
        for (int p = 0; p < l; ++p)
            rows[q].push_back(b.vert(p % 2 == 0 ? L(q, p / 2) : R(q, p / 2)));
    return b.finish(MapType::T3_12_12, RepParams::mobius("m", l, t),
                    std::move(rows));
}

PolygonalMap mobius_m4612_rot(int l, int t) {
    int hb = l / 2 - 3, ht = l / 2 + 3;
    int C = l / 6, R12 = t / 2;
    Builder b;
    auto D = [&](int i, int c, int u) -> Label { return {0, i, mod(c, C), u}; };
    for (int i = 0; i < R12; ++i)
        for (int c = 0; c < C; ++c) {
            std::vector<Label> gon;
            for (int u = 0; u < 12; ++u) gon.push_back(D(i, c, u));
            b.face_v(gon);
            b.face({D(i, c, 11), D(i, c, 0), D(i, c + 1, 5), D(i, c + 1, 6)});
        }
    for (int i = 0; i < R12 - 1; ++i)
        for (int c = 0; c < C; ++c) {
            b.face({D(i, c, 1), D(i, c, 2), D(i + 1, c, 7), D(i + 1, c, 8)});
            b.face({D(i, c, 4), D(i, c, 3), D(i + 1, c - 1, 10),
                    D(i + 1, c - 1, 9)});
            b.face({D(i, c, 3), D(i, c, 2), D(i + 1, c, 7), D(i + 1, c, 6),
                    D(i + 1, c - 1, 11), D(i + 1, c - 1, 10)});
            b.face({D(i + 1, c, 9), D(i + 1, c, 8), D(i, c, 1), D(i, c, 0),
                    D(i, c + 1, 5), D(i, c + 1, 4)});
        }
    auto lowpos = [&](int i, int p) -> Label {
        p = mod(p, l);
        return {0, i, p / 6, 6 + p % 6};
    };
    auto Db = [&](int c, int u) -> Label {
        int q = 6 * c + (5 - u);
        return lowpos(0, q + hb);
    };
    for (int c = 0; c < C; ++c) {
        b.face({Db(c, 1), Db(c, 2), D(0, c, 7), D(0, c, 8)});
        b.face({Db(c, 4), Db(c, 3), D(0, c - 1, 10), D(0, c - 1, 9)});
        b.face({Db(c, 3), Db(c, 2), D(0, c, 7), D(0, c, 6),
                D(0, c - 1, 11), D(0, c - 1, 10)});
        b.face({D(0, c, 9), D(0, c, 8), Db(c, 1), Db(c, 0),
                Db(c + 1, 5), Db(c + 1, 4)});
    }
    int iT = R12 - 1;
    auto uppos = [&](int i, int p) -> Label {
        p = mod(p, l);
        return {0, i, p / 6, 5 - (p % 6)};
    };
    auto Dt = [&](int c, int u) -> Label {
        int q = 6 * c + (u - 6);
        return uppos(iT, q + ht);
    };
    for (int c = 0; c < C; ++c) {
        b.face({D(iT, c, 1), D(iT, c, 2), Dt(c, 7), Dt(c, 8)});
        b.face({D(iT, c, 4), D(iT, c, 3), Dt(c - 1, 10), Dt(c - 1, 9)});
        b.face({D(iT, c, 3), D(iT, c, 2), Dt(c, 7), Dt(c, 6),
                Dt(c - 1, 11), Dt(c - 1, 10)});
        b.face({Dt(c, 9), Dt(c, 8), D(iT, c, 1), D(iT, c, 0),
                D(iT, c + 1, 5), D(iT, c + 1, 4)});
    }
    b.dedupe();
    std::vector<std::vector<int>> rows(t);
    for (int i = 0; i < R12; ++i)
        for (int p = 0; p < l; ++p) {
            rows[2 * i].push_back(b.vert(D(i, p / 6, 6 + p % 6)));
            rows[2 * i + 1].push_back(b.vert(D(i, p / 6, 5 - p % 6)));
        }
    return b.finish(MapType::T4_6_12, RepParams::mobius("mrot", l, t),
                    std::move(rows));
}

PolygonalMap mobius_m4612_fold(int l, int t) {
    int C = l / 6, H = C / 2, R12 = t / 2;
    Builder b;
    auto D = [&](int i, int c, int u) -> Label { return {0, i, mod(c, C), u}; };
    for (int i = 0; i < R12; ++i)
        for (int c = 0; c < C; ++c) {
            std::vector<Label> gon;
            for (int u = 0; u < 12; ++u) gon.push_back(D(i, c, u));
            b.face_v(gon);
            b.face({D(i, c, 11), D(i, c, 0), D(i, c + 1, 5), D(i, c + 1, 6)});
        }
    for (int i = 0; i < R12 - 1; ++i)
        for (int c = 0; c < C; ++c) {
            b.face({D(i, c, 1), D(i, c, 2), D(i + 1, c, 7), D(i + 1, c, 8)});
            b.face({D(i, c, 4), D(i, c, 3), D(i + 1, c - 1, 10),
                    D(i + 1, c - 1, 9)});
            b.face({D(i, c, 3), D(i, c, 2), D(i + 1, c, 7), D(i + 1, c, 6),
                    D(i + 1, c - 1, 11), D(i + 1, c - 1, 10)});
            b.face({D(i + 1, c, 9), D(i + 1, c, 8), D(i, c, 1), D(i, c, 0),
                    D(i, c + 1, 5), D(i, c + 1, 4)});
        }
    auto Vb = [&](int c, int u) -> Label {
        c = mod(c, C);
        if (c >= H) { c -= H; u = mod(11 - u, 12); }
        return {1, 0, c, u};
    };
    for (int c = 0; c < C; ++c) {
        std::vector<Label> gon;
        for (int u = 0; u < 12; ++u) gon.push_back(Vb(c, u));
        b.face_v(gon);
        b.face({Vb(c, 11), Vb(c, 0), Vb(c + 1, 5), Vb(c + 1, 6)});
        b.face({Vb(c, 1), Vb(c, 2), D(0, c, 7), D(0, c, 8)});
        b.face({Vb(c, 4), Vb(c, 3), D(0, c - 1, 10), D(0, c - 1, 9)});
        b.face({Vb(c, 3), Vb(c, 2), D(0, c, 7), D(0, c, 6),
                D(0, c - 1, 11), D(0, c - 1, 10)});
        b.face({D(0, c, 9), D(0, c, 8), Vb(c, 1), Vb(c, 0),
                Vb(c + 1, 5), Vb(c + 1, 4)});
    }
    auto Vt = [&](int c, int u) -> Label {
        c = mod(c, C);
        if (c >= H) { c -= H; u = mod(11 - u, 12); }
        return {2, 0, c, u};
    };
    int i = R12 - 1;
    for (int c = 0; c < C; ++c) {
        std::vector<Label> gon;
        for (int u = 0; u < 12; ++u) gon.push_back(Vt(c, u));
        b.face_v(gon);
        b.face({Vt(c, 11), Vt(c, 0), Vt(c + 1, 5), Vt(c + 1, 6)});
        b.face({D(i, c, 1), D(i, c, 2), Vt(c, 7), Vt(c, 8)});
        b.face({D(i, c, 4), D(i, c, 3), Vt(c - 1, 10), Vt(c - 1, 9)});
        b.face({D(i, c, 3), D(i, c, 2), Vt(c, 7), Vt(c, 6),
                Vt(c - 1, 11), Vt(c - 1, 10)});
        b.face({Vt(c, 9), Vt(c, 8), D(i, c, 1), D(i, c, 0),
                D(i, c + 1, 5), D(i, c + 1, 4)});
    }
    b.dedupe();
    std::vector<std::vector<int>> rows(t);
    for (int q = 0; q < R12; ++q)
        for (int p = 0; p < l; ++p) {
            rows[2 * q].push_back(b.vert(D(q, p / 6, 6 + p % 6)));
            rows[2 * q + 1].push_back(b.vert(D(q, p / 6, 5 - p % 6)));
        }
    return b.finish(MapType::T4_6_12, RepParams::mobius("m412", l, t),
                    std::move(rows));
}

PolygonalMap mobius_m3464_rot(int l, int t) {
    int hb = (l - 3) / 2, ht = (l + 3) / 2;
    int C = l / 3, R6 = t / 2;
    Builder b;
    auto E = [&](int i, int c, int u) -> Label { return {0, i, mod(c, C), u}; };
    for (int i = 0; i < R6; ++i)
        for (int c = 0; c < C; ++c) {
            std::vector<Label> gon;
            for (int u = 0; u < 6; ++u) gon.push_back(E(i, c, u));
            b.face_v(gon);
            b.face({E(i, c, 5), E(i, c, 0), E(i, c + 1, 2), E(i, c + 1, 3)});
        }
    for (int i = 0; i < R6 - 1; ++i)
        for (int c = 0; c < C; ++c) {
            b.face({E(i, c, 1), E(i, c, 0), E(i + 1, c, 4), E(i + 1, c, 3)});
            b.face({E(i, c, 2), E(i, c, 1), E(i + 1, c - 1, 5),
                    E(i + 1, c - 1, 4)});
            b.face({E(i, c, 0), E(i, c + 1, 2), E(i + 1, c, 4)});
            b.face({E(i, c, 1), E(i + 1, c, 3), E(i + 1, c - 1, 5)});
        }
    auto lowpos = [&](int i, int p) -> Label {
        p = mod(p, l);
        return {0, i, p / 3, 3 + p % 3};
    };
    auto Eb = [&](int c, int u) -> Label {
        int q = 3 * c + (2 - u);
        return lowpos(0, q + hb);
    };
    for (int c = 0; c < C; ++c) {
        b.face({Eb(c, 1), Eb(c, 0), E(0, c, 4), E(0, c, 3)});
        b.face({Eb(c, 2), Eb(c, 1), E(0, c - 1, 5), E(0, c - 1, 4)});
        b.face({Eb(c, 0), Eb(c + 1, 2), E(0, c, 4)});
        b.face({Eb(c, 1), E(0, c, 3), E(0, c - 1, 5)});
    }
    int iT = R6 - 1;
    auto uppos = [&](int i, int p) -> Label {
        p = mod(p, l);
        return {0, i, p / 3, 2 - (p % 3)};
    };
    auto Et = [&](int c, int u) -> Label {
        int q = 3 * c + (u - 3);
        return uppos(iT, q + ht);
    };
    for (int c = 0; c < C; ++c) {
        b.face({E(iT, c, 1), E(iT, c, 0), Et(c, 4), Et(c, 3)});
        b.face({E(iT, c, 2), E(iT, c, 1), Et(c - 1, 5), Et(c - 1, 4)});
        b.face({E(iT, c, 0), E(iT, c + 1, 2), Et(c, 4)});
        b.face({E(iT, c, 1), Et(c, 3), Et(c - 1, 5)});
    }
    b.dedupe();
    std::vector<std::vector<int>> rows(t);
    for (int q = 0; q < R6; ++q)
        for (int p = 0; p < l; ++p) {
            rows[2 * q].push_back(b.vert(E(q, p / 3, 3 + p % 3)));
            rows[2 * q + 1].push_back(b.vert(E(q, p / 3, 2 - p % 3)));
        }
    return b.finish(MapType::T3_4_6_4, RepParams::mobius("m34", l, t),
                    std::move(rows));
}

PolygonalMap mobius_m3464_fold(int l, int t) {
    int C = l / 3, H = C / 2, R6 = t / 2;
    Builder b;
    auto E = [&](int i, int c, int u) -> Label { return {0, i, mod(c, C), u}; };
    for (int i = 0; i < R6; ++i)
        for (int c = 0; c < C; ++c) {
            std::vector<Label> gon;
            for (int u = 0; u < 6; ++u) gon.push_back(E(i, c, u));
            b.face_v(gon);
            b.face({E(i, c, 5), E(i, c, 0), E(i, c + 1, 2), E(i, c + 1, 3)});
        }
    for (int i = 0; i < R6 - 1; ++i)
        for (int c = 0; c < C; ++c) {
            b.face({E(i, c, 1), E(i, c, 0), E(i + 1, c, 4), E(i + 1, c, 3)});
            b.face({E(i, c, 2), E(i, c, 1), E(i + 1, c - 1, 5),
                    E(i + 1, c - 1, 4)});
            b.face({E(i, c, 0), E(i, c + 1, 2), E(i + 1, c, 4)});
            b.face({E(i, c, 1), E(i + 1, c, 3), E(i + 1, c - 1, 5)});
        }
    auto Vb = [&](int c, int u) -> Label {
        c = mod(c, C);
        if (c >= H) { c -= H; u = 5 - u; }
        return {1, 0, c, u};
    };
    for (int c = 0; c < C; ++c) {
        std::vector<Label> gon;
        for (int u = 0; u < 6; ++u) gon.push_back(Vb(c, u));
        b.face_v(gon);
        b.face({Vb(c, 5), Vb(c, 0), Vb(c + 1, 2), Vb(c + 1, 3)});
        b.face({Vb(c, 1), Vb(c, 0), E(0, c, 4), E(0, c, 3)});
        b.face({Vb(c, 2), Vb(c, 1), E(0, c - 1, 5), E(0, c - 1, 4)});
        b.face({Vb(c, 0), Vb(c + 1, 2), E(0, c, 4)});
        b.face({Vb(c, 1), E(0, c, 3), E(0, c - 1, 5)});
    }
    auto Vt = [&](int c, int u) -> Label {
        c = mod(c, C);
        if (c >= H) { c -= H; u = 5 - u; }
        return {2, 0, c, u};
    };
    int i = R6 - 1;
    for (int c = 0; c < C; ++c) {
        std::vector<Label> gon;
        for (int u = 0; u < 6; ++u) gon.push_back(Vt(c, u));
        b.face_v(gon);
        b.face({Vt(c, 5), Vt(c, 0), Vt(c + 1, 2), Vt(c + 1, 3)});
        b.face({E(i, c, 1), E(i, c, 0), Vt(c, 4), Vt(c, 3)});
        b.face({E(i, c, 2), E(i, c, 1), Vt(c - 1, 5), Vt(c - 1, 4)});
        b.face({E(i, c, 0), E(i, c + 1, 2), Vt(c, 4)});
        b.face({E(i, c, 1), Vt(c, 3), Vt(c - 1, 5)});
    }
    b.dedupe();
    std::vector<std::vector<int>> rows(t);
    for (int q = 0; q < R6; ++q)
        for (int p = 0; p < l; ++p) {
            rows[2 * q].push_back(b.vert(E(q, p / 3, 3 + p % 3)));
            rows[2 * q + 1].push_back(b.vert(E(q, p / 3, 2 - p % 3)));
        }
    return b.finish(MapType::T3_4_6_4, RepParams::mobius("m46", l, t),
                    std::move(rows));
}

// ---------------------------------------------------------------------------
// Admissibility
// ---------------------------------------------------------------------------

std::string planar_reason(MapType t, int r, int s, int k) {
    long n;
    switch (t) {
        case MapType::T3_3_3_3_3_3:
        case MapType::T4_4_4_4:
            if (r < 3) return "r >= 3 violated";
            if (s < 3) return "s >= 3 violated";
            if ((long)r * s < 9) return "r*s >= 9 violated";
            break;
        case MapType::T6_6_6:
            return planar_reason(MapType::T3_3_3_3_3_3, r, s, k);
        case MapType::T3_3_3_4_4:
            if (r < 3) return "r >= 3 violated";
            if (s < 4) return "s >= 4 violated";
            if (s % 2) return "2 | s violated";
            if ((long)r * s < 12) return "r*s >= 12 violated";
            break;
        case MapType::T3_3_4_3_4:
            if (r % 2) return "2 | r violated";
            if (r < 4) return "r >= 4 violated";
            if (s < 3) return "s >= 3 violated";
            if (s % 2 == 0) return "odd s violated";
            if ((long)r * s < 12) return "r*s >= 12 violated";
            if (k % 2) return "even k violated";
            break;
        case MapType::T3_6_3_6:
            if (r % 2) return "2 | r violated";
            if (r < 6) return "r >= 6 violated";
            if (s < 3) return "s >= 3 violated";
            n = 3L * r * s / 2;
            if (n < 27) return "n >= 27 violated";
            if (k % 2 == 0) return "odd k violated";
            break;
        case MapType::T3_3_3_3_6:
            return "no such maps exist";
        case MapType::T4_8_8:
            if (r % 4) return "4 | r violated";
            if (r < 8) return "r >= 8 violated";
            if (s < 3) return "s >= 3 violated";
            if ((long)r * s < 24) return "r*s >= 24 violated";
            if (s % 2 == 1) {
                if (mod(k, 4) != 3) return "k = 3 (mod 4) violated for odd s";
            } else {
                if (s < 4) return "s >= 4 violated";
                if (mod(k, 4) != 2) return "k = 2 (mod 4) violated for even s";
            }
            break;
        case MapType::T3_12_12:
            if (r % 4) return "4 | r violated";
            if (r < 12) return "r >= 12 violated";
            if (s < 3) return "s >= 3 violated";
            n = 3L * r * s / 2;
            if (n % 6) return "6 | n violated";
            if (mod(k, 4) != 2) return "k = 2 (mod 4) violated";
            break;
        case MapType::T4_6_12:
            if (r % 6) return "6 | r violated";
            if (r < 12) return "r >= 12 violated";
            if (s % 2) return "2 | s violated";
            if (s < 4) return "s >= 4 violated";
            n = (long)r * s;
            if (n < 48) return "n >= 48 violated";
            if (n % 12) return "12 | n violated";
            if (mod(k, 6) != 4) return "k = 4 (mod 6) violated";
            break;
        case MapType::T3_4_6_4:
            if (r % 3) return "3 | r violated";
            if (r < 6) return "r >= 6 violated";
            if (s % 2) return "2 | s violated";
            if (s < 4) return "s >= 4 violated";
            if ((long)r * s < 24) return "n >= 24 violated";
            if (mod(k, 3) != 2) return "k = 2 (mod 3) violated";
            break;
    }
    if (k < 0 || k >= r) return "0 <= k < r violated";
    return "";
}

std::string mobius_reason(MapType t, const std::string& v, int l, int tt) {
    switch (t) {
        case MapType::T3_3_3_3_3_3:
            if (v != "plain") return "unknown variant '" + v + "'";
            if (l % 2 == 0) return "odd l violated";
            if (l < 5) return "l >= 5 violated";
            if (tt < 2) return "t >= 2 violated";
            if ((long)tt * l < 10) return "t*l >= 10 violated";
            return "";
        case MapType::T6_6_6:
            // Duals of the {3^6} Mobius-pair maps; same parameter window.
            return mobius_reason(MapType::T3_3_3_3_3_3, v, l, tt);
        case MapType::T3_3_3_4_4:
            if (v != "mtri" && v != "mquad") return "unknown variant '" + v + "'";
            if (v == "mtri" && l % 2 == 0) return "odd l required for mtri";
            if (v == "mquad" && l % 2 == 1) return "even l required for mquad";
            if (tt % 2) return "2 | t violated";
            if (tt < 2) return "t >= 2 violated";
            if (l < 4) return "l >= 4 violated";
            if (tt == 2 && l < 5) return "l >= 5 violated for t = 2";
            if ((long)tt * l < 10) return "t*l >= 10 violated";
            return "";
        case MapType::T3_6_3_6:
            if (v == "m36") {
                if (l % 4) return "4 | l violated";
                if (l < 12) return "l >= 12 violated";
                if (tt < 2) return "t >= 2 violated";
                return "";
            }
            if (v == "m") {
                if (mod(l, 4) != 2) return "l = 2 (mod 4) violated";
                if (l < 10) return "l >= 10 violated";
                if (tt < 1) return "t >= 1 violated";
                return "";
            }
            return "unknown variant '" + v + "'";
        case MapType::T3_12_12:
            if (v == "m312") {
                if (l % 8) return "8 | l violated";
                if (l < 24) return "l >= 24 violated";
                if (tt < 2) return "t >= 2 violated";
                return "";
            }
            if (v == "m") {
                if (mod(l, 8) != 4) return "l = 4 (mod 8) violated";
                if (l < 20) return "l >= 20 violated";
                if (tt < 1) return "t >= 1 violated";
                return "";
            }
            return "unknown variant '" + v + "'";
        case MapType::T4_6_12:
            if (v == "m412") {
                if (l % 12) return "12 | l violated";
                if (l < 24) return "l >= 24 violated";
                if (tt % 2 || tt < 2) return "even t >= 2 violated";
                return "";
            }
            if (v == "mrot") {
                if (mod(l, 12) != 6) return "l = 6 (mod 12) violated";
                if (l < 18) return "l >= 18 violated";
                if (tt % 2 || tt < 2) return "even t >= 2 violated";
                return "";
            }
            return "unknown variant '" + v + "'";
        case MapType::T3_4_6_4:
            if (v == "m34") {
                if (mod(l, 6) != 3) return "l = 3 (mod 6) violated";
                if (l < 9) return "l >= 9 violated";
                if (tt % 2)
                    return "even t violated: every vertex lies in exactly one "
                           "hexagon, so 6 must divide the vertex count t*l, "
                           "which is odd for odd t and l = 3 (mod 6)";
                if (tt < 2) return "t >= 2 violated";
                return "";
            }
            if (v == "m46") {
                if (l % 6) return "6 | l violated";
                if (l < 12) return "l >= 12 violated";
                if (tt % 2 || tt < 2) return "even t >= 2 violated";
                return "";
            }
            return "unknown variant '" + v + "'";
        default:
            return "no Mobius-pair family for this type";
    }
}

}  // namespace

std::vector<std::string> mobius_variants(MapType t) {
    switch (t) {
        case MapType::T3_3_3_3_3_3: return {"plain"};
        case MapType::T6_6_6: return {"plain"};
        case MapType::T3_3_3_4_4: return {"mtri", "mquad"};
        case MapType::T3_6_3_6: return {"m36", "m"};
        case MapType::T3_12_12: return {"m312", "m"};
        case MapType::T4_6_12: return {"m412", "mrot"};
        case MapType::T3_4_6_4: return {"m34", "m46"};
        default: return {};
    }
}

std::string admissibility_reason(MapType t, const RepParams& p) {
    if (p.kind == RepParams::Kind::Planar)
        return planar_reason(t, p.r, p.s, p.k);
    return mobius_reason(t, p.variant, p.l, p.t);
}

bool admissible(MapType t, const RepParams& p) {
    return admissibility_reason(t, p).empty();
}

PolygonalMap expand_planar_template(MapType t, int r, int s, int k) {
    if (r < 1 || s < 1) throw InadmissibleParams("r, s >= 1 required");
    switch (t) {
        case MapType::T3_3_3_3_3_3:
        case MapType::T4_4_4_4: return planar_t36_t44(t, r, s, k);
        case MapType::T6_6_6: return planar_t63(r, s, k);
        case MapType::T3_3_3_4_4: return planar_t3344(r, s, k);
        case MapType::T3_3_4_3_4: return planar_t33434(r, s, k);
        case MapType::T3_6_3_6: return planar_t3636(r, s, k);
        case MapType::T3_3_3_3_6: return planar_t346_raw(r, s, k);
        case MapType::T4_8_8: return planar_t488(r, s, k);
        case MapType::T3_12_12: return planar_t31212(r, s, k);
        case MapType::T4_6_12: return planar_t4612(r, s, k);
        case MapType::T3_4_6_4: return planar_t3464(r, s, k);
    }
    throw InadmissibleParams("unknown type");
}

PolygonalMap build_planar(MapType t, int r, int s, int k) {
    RepParams p = RepParams::planar(r, s, k);
    std::string why = admissibility_reason(t, p);
    if (!why.empty()) throw InadmissibleParams(why);
    PolygonalMap m = expand_planar_template(t, r, s, k);
    ValidityReport rep = validate(m, &signature(t), true);
    if (!rep.ok)
        throw InternalClosureFailure("closure produced a defective complex: " +
                                     rep.detail);
    return m;
}

PolygonalMap build_mobius(MapType t, const std::string& variant, int l,
                          int t_rows) {
    RepParams p = RepParams::mobius(variant, l, t_rows);
    std::string why = admissibility_reason(t, p);
    if (!why.empty()) throw InadmissibleParams(why);
    PolygonalMap m;
    if (t == MapType::T6_6_6) {
        // Dual of the {3^6} Mobius-pair map with the same parameters.
        m = dual(mobius_m36(l, t_rows));
        m.type_hint = MapType::T6_6_6;
        m.rep = p;
        m.rows.clear();
    } else if (t == MapType::T3_3_3_3_3_3) m = mobius_m36(l, t_rows);
    else if (t == MapType::T3_3_3_4_4) m = mobius_m3344(l, t_rows);
    else if (t == MapType::T3_6_3_6)
        m = variant == "m36" ? mobius_m3636_chords(l, t_rows)
                             : mobius_m3636_core(l, t_rows);
    else if (t == MapType::T3_12_12)
        m = variant == "m312" ? mobius_m31212_chords(l, t_rows)
                              : mobius_m31212_core(l, t_rows);
    else if (t == MapType::T4_6_12)
        m = variant == "m412" ? mobius_m4612_fold(l, t_rows)
                              : mobius_m4612_rot(l, t_rows);
    else if (t == MapType::T3_4_6_4)
        m = variant == "m34" ? mobius_m3464_rot(l, t_rows)
                             : mobius_m3464_fold(l, t_rows);
    else
        throw InadmissibleParams("no Mobius-pair family for this type");
    ValidityReport rep = validate(m, &signature(t), true);
    if (!rep.ok)
        throw InternalClosureFailure("closure produced a defective complex: " +
                                     rep.detail);
    return m;
}

PolygonalMap build(MapType t, const RepParams& p) {
    if (p.kind == RepParams::Kind::Planar)
        return build_planar(t, p.r, p.s, p.k);
    return build_mobius(t, p.variant, p.l, p.t);
}

int reduce_k(MapType, int r, int, int k) {
    // k ~ k+2 and k ~ -k; odd r collapses every twist to one class.
    if (r % 2 == 1) return 0;
    return mod(k, 2);
}

long vertex_count(MapType t, const RepParams& p) {
    if (p.kind == RepParams::Kind::Planar) {
        long rs = (long)p.r * p.s;
        switch (t) {
            case MapType::T3_6_3_6:
            case MapType::T3_12_12: return 3 * rs / 2;
            case MapType::T6_6_6: return 2 * rs;
            default: return rs;
        }
    }
    long tl = (long)p.t * p.l;
    switch (t) {
        case MapType::T6_6_6: return 2 * tl;
        case MapType::T3_6_3_6:
        case MapType::T3_12_12:
            if (p.variant == "m") return 3L * p.l * (p.t + 1) / 2;
            return 3 * tl / 2;
        case MapType::T4_6_12:
            if (p.variant == "m412") return (long)p.l * (p.t + 2);
            return tl;
        case MapType::T3_4_6_4:
            if (p.variant == "m46") return (long)p.l * (p.t + 2);
            return tl;
        default:
            return tl;
    }
}

std::vector<RepParams> canonical_reps(MapType t, int n) {
    std::vector<RepParams> out;
    // Planar sweep: one representative k per twist parity class.
    for (int r = 1; r <= n; ++r) {
        for (int s = 1; s <= n; ++s) {
            RepParams probe = RepParams::planar(r, s, 0);
            long cnt = vertex_count(t, probe);
            if (cnt > n) break;
            if (cnt != n) continue;
            std::array<int, 2> best = {-1, -1};  // smallest k per parity class
            for (int k = 0; k < r; ++k) {
                if (!admissible(t, RepParams::planar(r, s, k))) continue;
                int cls = (r % 2 == 1) ? 0 : k % 2;
                if (best[cls] < 0) best[cls] = k;
            }
            for (int cls = 0; cls < 2; ++cls)
                if (best[cls] >= 0)
                    out.push_back(RepParams::planar(r, s, best[cls]));
        }
    }
    // Mobius-pair sweep: every admissible (variant, l, t).
    for (const std::string& v : mobius_variants(t))
        for (int l = 1; l <= n; ++l)
            for (int tt = 1; tt <= n; ++tt) {
                RepParams p = RepParams::mobius(v, l, tt);
                if (vertex_count(t, p) != n) continue;
                if (admissible(t, p)) out.push_back(p);
            }
    return out;
}

}  // namespace semieq
