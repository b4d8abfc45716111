// Canonical forms, digests, witnesses, backtracking oracle, duals.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "semieq/iso.hpp"
#include "semieq/map.hpp"
#include "semieq/reps.hpp"

using namespace semieq;

namespace {

PolygonalMap relabel(const PolygonalMap& m, const std::vector<int>& perm) {
    PolygonalMap out;
    out.n_vertices = m.n_vertices;
    for (const Face& f : m.faces) {
        Face g;
        for (int v : f) g.push_back(perm[v]);
        out.faces.push_back(g);
    }
    return out;
}

}  // namespace

TEST_CASE("canonical form is invariant under vertex relabeling") {
    std::mt19937 rng(20260826);
    for (auto m : {build_planar(MapType::T3_3_3_3_3_3, 4, 3, 0),
                   build_mobius(MapType::T3_3_3_4_4, "mtri", 5, 2),
                   build_planar(MapType::T3_3_4_3_4, 4, 3, 0)}) {
        CanonicalForm base = canonical_form(m);
        std::string dig = canonical_digest(m);
        CHECK(dig.size() == 16);
        CHECK(dig == digest_of(base));
        std::vector<int> perm(m.n_vertices);
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 40; ++trial) {
            std::shuffle(perm.begin(), perm.end(), rng);
            PolygonalMap r = relabel(m, perm);
            // Face order and orientation shuffles are also invisible.
            std::shuffle(r.faces.begin(), r.faces.end(), rng);
            for (Face& f : r.faces)
                if (trial % 2) std::reverse(f.begin(), f.end());
            CHECK(canonical_form(r) == base);
        }
    }
}

TEST_CASE("twist parameter is invisible for odd r") {
    PolygonalMap a = build_planar(MapType::T3_3_3_3_3_3, 7, 4, 1);
    PolygonalMap b = build_planar(MapType::T3_3_3_3_3_3, 7, 4, 3);
    IsoResult res = are_isomorphic(a, b);
    CHECK(res.isomorphic);
    CHECK(verify_witness(a, b, res.witness));
}

TEST_CASE("same n, different row shape: non-isomorphic triangulations") {
    PolygonalMap a = build_planar(MapType::T3_3_3_3_3_3, 3, 12, 0);
    PolygonalMap b = build_planar(MapType::T3_3_3_3_3_3, 4, 9, 0);
    CHECK(a.n_vertices == 36);
    CHECK(b.n_vertices == 36);
    CHECK_FALSE(are_isomorphic(a, b).isomorphic);
    CHECK_FALSE(backtracking_isomorphism(a, b).has_value());
}

TEST_CASE("even-r twist parity: {4^4} splits, {3^6} collapses") {
    // {4^4}: k = 0 and k = 1 give non-isomorphic maps for even r.
    PolygonalMap q0 = build_planar(MapType::T4_4_4_4, 4, 3, 0);
    PolygonalMap q1 = build_planar(MapType::T4_4_4_4, 4, 3, 1);
    PolygonalMap q2 = build_planar(MapType::T4_4_4_4, 4, 3, 2);
    CHECK_FALSE(are_isomorphic(q0, q1).isomorphic);
    CHECK(are_isomorphic(q0, q2).isomorphic);
    CHECK_FALSE(backtracking_isomorphism(q0, q1).has_value());

    // {3^6}: the analogous pair is isomorphic; the explicit bijection below
    // was found by exhaustive search and is machine-verified here.
    PolygonalMap t0 = build_planar(MapType::T3_3_3_3_3_3, 4, 3, 0);
    PolygonalMap t1 = build_planar(MapType::T3_3_3_3_3_3, 4, 3, 1);
    std::vector<int> w = {1, 0, 2, 5, 6, 3, 4, 7, 10, 11, 8, 9};
    CHECK(verify_witness(t0, t1, w));
    IsoResult res = are_isomorphic(t0, t1);
    CHECK(res.isomorphic);
    CHECK(verify_witness(t0, t1, res.witness));

    // Transposed row shape is still distinguished.
    PolygonalMap t34 = build_planar(MapType::T3_3_3_3_3_3, 3, 4, 0);
    CHECK_FALSE(are_isomorphic(t0, t34).isomorphic);
}

TEST_CASE("canonical equality agrees with the backtracking oracle") {
    std::vector<PolygonalMap> maps;
    for (MapType t : kAllTypes) {
        if (t == MapType::T3_3_3_3_6) continue;
        for (long n = 1; n <= 14; ++n)
            for (const RepParams& p : canonical_reps(t, n))
                maps.push_back(build(t, p));
    }
    CHECK(maps.size() >= 8);
    for (size_t i = 0; i < maps.size(); ++i)
        for (size_t j = i; j < maps.size(); ++j) {
            bool canon = canonical_form(maps[i]) == canonical_form(maps[j]);
            auto bt = backtracking_isomorphism(maps[i], maps[j]);
            CAPTURE(i);
            CAPTURE(j);
            CHECK(canon == bt.has_value());
            if (bt) CHECK(verify_witness(maps[i], maps[j], *bt));
        }
}

TEST_CASE("witness verification rejects wrong bijections") {
    PolygonalMap a = build_planar(MapType::T3_3_3_3_3_3, 4, 3, 0);
    std::vector<int> ident(a.n_vertices);
    std::iota(ident.begin(), ident.end(), 0);
    CHECK(verify_witness(a, a, ident));
    std::swap(ident[0], ident[5]);
    CHECK_FALSE(verify_witness(a, a, ident));
    CHECK_FALSE(verify_witness(a, a, std::vector<int>(a.n_vertices, 0)));
}

TEST_CASE("dual of a triangulation is a {6^3} map and vice versa") {
    for (long n : {9L, 12L, 14L}) {
        for (const RepParams& p : canonical_reps(MapType::T3_3_3_3_3_3, n)) {
            PolygonalMap m = build(MapType::T3_3_3_3_3_3, p);
            PolygonalMap d = dual(m);
            CHECK(d.n_vertices == 2 * n);
            ValidityReport rep = validate(d, &signature(MapType::T6_6_6));
            CAPTURE(p.to_string());
            CAPTURE(rep.detail);
            CHECK(rep.ok);
            // Double dual returns the original map up to isomorphism.
            PolygonalMap dd = dual(d);
            CHECK(are_isomorphic(m, dd).isomorphic);
        }
    }
}

TEST_CASE("digest distinguishes the small census") {
    // Distinct types at the same n never share a digest.
    PolygonalMap tri = build_planar(MapType::T3_3_3_3_3_3, 4, 3, 0);
    PolygonalMap qm = build_planar(MapType::T3_3_4_3_4, 4, 3, 0);
    CHECK(tri.n_vertices == qm.n_vertices);
    CHECK(canonical_digest(tri) != canonical_digest(qm));
}
