#include "semieq/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "semieq/iso.hpp"

namespace semieq {

namespace {

// Number of integers l with 0 <= l <= n/d - 1 (rational upper bound).
long slots(long n, long d) {
    if (d <= 0 || n < d) return 0;
    return n / d;
}

long count_36(long n) {
    long total = 0;
    for (long i = 1; i <= 2; ++i) {
        long c = 0;
        for (long m = 3; 3 * m <= n; ++m)
            if (std::gcd(n, 2 * m) == i * m) ++c;
        total += i * c;
    }
    for (long m = 2; 5 * m <= n; ++m)
        if (n % m == 0 && std::gcd(n, 2 * m) == m) ++total;
    return total;
}

long count_44(long n) {
    long total = 0;
    for (long i = 1; i <= 2; ++i) {
        long c = 0;
        for (long m = 3; 3 * m <= n; ++m)
            if (std::gcd(n, 2 * m) == i * m) ++c;
        total += i * c;
    }
    return total;
}

long count_3344(long n) {
    long total = 0;
    // Both weighted terms carry the same side condition, so the weighted sum
    // is three times the set size.
    for (long i = 1; i <= 2; ++i) {
        long c = 0;
        for (long m = 4; 3 * m <= n; m += 2)
            if (std::gcd(n, 2 * m) == m) ++c;
        total += i * c;
    }
    for (long m = 5; m <= n; ++m)
        if (n == 2 * m) ++total;
    for (long m = 4; 4 * m <= n; ++m)
        if (n % (2 * m) == 0) ++total;
    return total;
}

long count_33434(long n) {
    long total = 0;
    for (long m = 3; 2 * m <= n; m += 2)
        if (n % (2 * m) == 0 && n >= 12) ++total;
    return total;
}

long count_488(long n) {
    long total = 0;
    for (long m = 4; 8 * m <= n; m += 2)
        if (n % (4 * m) == 0) total += slots(n, 4 * m);
    for (long m = 3; 8 * m <= n; m += 2)
        if (n % (4 * m) == 0) total += slots(n, 4 * m);
    return total;
}

long count_3636(long n) {
    long total = 0;
    for (long m = 3; 9 * m <= n; ++m)
        if (n % (3 * m) == 0) total += slots(n, 3 * m);
    for (long m = 2; 6 * (3 * m + 1) <= n; ++m)
        if (n % (6 * m + 2) == 0) ++total;
    for (long m = 1; 10 * (m + 2) <= n; ++m)
        if (n % (2 * (m + 2)) == 0) ++total;
    for (long m = 1; 12 * (4 * m + 5) <= n; ++m)
        if (n % (4 * m + 5) == 0) ++total;
    return total;
}

long count_31212(long n) {
    long total = 0;
    for (long m = 3; 9 * m <= n; ++m)
        if (n % (3 * m) == 0) total += slots(n, 6 * m);
    for (long m = 2; 12 * (3 * m + 1) <= n; ++m)
        if (n % (4 * (3 * m + 1)) == 0) ++total;
    for (long m = 1; 20 * (m + 2) <= n; ++m)
        if (n % (4 * (m + 2)) == 0) ++total;
    for (long m = 1; 24 * (4 * m + 5) <= n; ++m)
        if (n % (4 * m + 5) == 0) ++total;
    return total;
}

long count_4612(long n) {
    long total = 0;
    for (long m = 4; 12 * m <= n; m += 2)
        if (n % (6 * m) == 0) total += slots(n, 6 * m);
    for (long m = 2; 24 * m <= n; m += 2)
        if (n % (12 * m) == 0) ++total;
    return total;
}

long count_3464(long n) {
    long total = 0;
    for (long m = 4; 6 * m <= n; m += 2)
        if (n % (3 * m) == 0) total += slots(n, 3 * m);
    for (long m = 2; 9 * m <= n; ++m)
        if ((n - 3 * m) % (6 * m) == 0) ++total;
    for (long m = 2; 12 * m <= n; ++m)
        if (n % (6 * m) == 0) ++total;
    return total;
}

}  // namespace

long formula_count(MapType t, long n) {
    if (n <= 0) return 0;
    switch (t) {
        case MapType::T3_3_3_3_3_3: return count_36(n);
        case MapType::T4_4_4_4: return count_44(n);
        case MapType::T6_6_6:
            return (n % 2 == 0) ? count_36(n / 2) : 0;
        case MapType::T3_3_3_4_4: return count_3344(n);
        case MapType::T3_3_4_3_4: return count_33434(n);
        case MapType::T3_6_3_6: return count_3636(n);
        case MapType::T3_3_3_3_6: return 0;
        case MapType::T4_8_8: return count_488(n);
        case MapType::T3_12_12: return count_31212(n);
        case MapType::T4_6_12: return count_4612(n);
        case MapType::T3_4_6_4: return count_3464(n);
    }
    return 0;
}

long budget_from_env(long fallback) {
    const char* e = std::getenv("SEMIEQ_BUDGET");
    if (!e || !*e) return fallback;
    char* end = nullptr;
    long v = std::strtol(e, &end, 10);
    if (end == e || v <= 0) return fallback;
    return v;
}

CensusEntry enumerate_classes(MapType t, long n) {
    long budget = budget_from_env();
    if (n > budget) {
        std::ostringstream os;
        os << "n = " << n << " exceeds the exploration budget " << budget
           << " (set SEMIEQ_BUDGET to raise it)";
        throw BudgetExceeded(os.str());
    }
    CensusEntry e;
    e.type = t;
    e.n = n;
    e.formula = formula_count(t, n);

    // Every admissible representation at n, pre-reduction: all twists k,
    // not just the reduced representatives, so that a formula overcount is
    // witnessed by concrete tuples collapsing onto one digest.
    std::vector<RepParams> all;
    for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s) {
            RepParams probe = RepParams::planar(r, s, 0);
            long cnt = vertex_count(t, probe);
            if (cnt > n) break;
            if (cnt != n) continue;
            for (int k = 0; k < r; ++k)
                if (admissible(t, RepParams::planar(r, s, k)))
                    all.push_back(RepParams::planar(r, s, k));
        }
    for (const std::string& v : mobius_variants(t))
        for (int l = 1; l <= n; ++l)
            for (int tt = 1; tt <= n; ++tt) {
                RepParams p = RepParams::mobius(v, l, tt);
                if (vertex_count(t, p) != n) continue;
                if (admissible(t, p)) all.push_back(p);
            }

    std::map<std::string, std::vector<RepParams>> by_digest;
    std::vector<std::string> digest_order;
    for (const RepParams& p : all) {
        PolygonalMap m = build(t, p);
        std::string d = canonical_digest(m);
        auto it = by_digest.find(d);
        if (it == by_digest.end()) {
            by_digest.emplace(d, std::vector<RepParams>{p});
            digest_order.push_back(d);
        } else {
            it->second.push_back(p);
        }
    }
    for (const std::string& d : digest_order)
        e.classes.push_back({d, by_digest[d]});
    e.constructed_classes = (long)e.classes.size();
    e.match = (e.constructed_classes == e.formula);
    if (!e.match) {
        for (const ClassEntry& c : e.classes)
            if (c.reps.size() > 1) {
                std::ostringstream os;
                for (size_t i = 0; i < c.reps.size(); ++i)
                    os << (i ? " ~ " : "") << c.reps[i].to_string();
                os << " [" << c.digest << "]";
                e.collision_witnesses.push_back(os.str());
            }
        if (e.constructed_classes > e.formula)
            for (long i = e.formula; i < e.constructed_classes; ++i)
                e.unslotted_digests.push_back(e.classes[i].digest);
        std::ostringstream os;
        os << "formula " << e.formula << " vs " << e.constructed_classes
           << " constructed classes";
        e.note = os.str();
    }
    return e;
}

std::vector<CensusEntry> run_census(const std::vector<MapType>& types,
                                    long n_lo, long n_hi, int workers) {
    long budget = budget_from_env();
    if (n_hi > budget) {
        std::ostringstream os;
        os << "n range reaches " << n_hi << ", beyond the exploration budget "
           << budget << " (set SEMIEQ_BUDGET to raise it)";
        throw BudgetExceeded(os.str());
    }
    std::vector<std::pair<MapType, long>> tasks;
    for (MapType t : types)
        for (long n = n_lo; n <= n_hi; ++n) tasks.emplace_back(t, n);
    std::vector<CensusEntry> out(tasks.size());
    if (workers <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i)
            out[i] = enumerate_classes(tasks[i].first, tasks[i].second);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < tasks.size();
                     i = next.fetch_add(1))
                    out[i] = enumerate_classes(tasks[i].first,
                                               tasks[i].second);
            });
        for (auto& th : pool) th.join();
    }
    return out;
}

std::vector<long> smallest_admissible_n(MapType t, int count, long limit) {
    std::vector<long> out;
    for (long n = 1; n <= limit && (int)out.size() < count; ++n)
        if (!canonical_reps(t, (int)n).empty()) out.push_back(n);
    return out;
}

}  // namespace semieq
