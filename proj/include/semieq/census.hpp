#pragma once
// Census: closed-form counts per (type, n), constructive enumeration of
// isomorphism classes, and the concordance report reconciling the two.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "semieq/map.hpp"
#include "semieq/reps.hpp"
#include "semieq/types.hpp"

namespace semieq {

// Count of non-isomorphic maps with n vertices per the closed formulas,
// transcribed clause by clause.  (The {6^3} count delegates to {3^6} at n/2;
// {3^4,6} is identically 0.)
long formula_count(MapType t, long n);

struct ClassEntry {
    std::string digest;
    // All canonical parameter tuples that produced this digest.
    std::vector<RepParams> reps;
};

struct CensusEntry {
    MapType type = MapType::T3_3_3_3_3_3;
    long n = 0;
    long formula = 0;
    long constructed_classes = 0;
    bool match = false;
    std::vector<ClassEntry> classes;
    // Witnesses for a mismatch: parameter tuples sharing one digest
    // (enumeration collapses them) ...
    std::vector<std::string> collision_witnesses;
    // ... or digests in excess of the formula's slots.
    std::vector<std::string> unslotted_digests;
    std::string note;
};

// Default exploration bound (desk scale).  Overridable via SEMIEQ_BUDGET.
inline constexpr long kDefaultBudget = 120;

long budget_from_env(long fallback = kDefaultBudget);

// Thrown by enumerate_classes when n exceeds the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& msg)
        : std::runtime_error(msg) {}
};

// Build every canonical representation with n vertices, deduplicate by
// canonical digest, and reconcile with formula_count.
CensusEntry enumerate_classes(MapType t, long n);

// Census over an n-range, optionally in parallel.
std::vector<CensusEntry> run_census(const std::vector<MapType>& types,
                                    long n_lo, long n_hi, int workers = 1);

// The smallest `count` vertex numbers admitting at least one constructible
// representation of type t.
std::vector<long> smallest_admissible_n(MapType t, int count, long limit);

}  // namespace semieq
