#pragma once

#include <cstdint>

#include "bigint.hpp"
#include "cover.hpp"
#include "json_io.hpp"

namespace tvlab {

// Exact probability, over independent uniform choices in the B-parts, that
// cover vertex c (in the part of A-side base vertex v) has a chosen
// neighbour: 1 - prod over parts holding a neighbour of (1 - 1/|L(w)|).
// Handles unequal part sizes by taking the product directly.
Rational exact_block_probability(const CoverInstance& inst, int v, int c);

struct CorrelationReport {
    bool pass = false;          // joint <= product of marginals for every subset
    int vertex = -1;            // A-side base vertex examined
    uint64_t outcomes = 0;      // size of the enumerated joint space
    uint32_t subsets_checked = 0;
    // max over subsets of ln(joint) - ln(prod of marginals); <= 0 iff pass
    double worst_log_ratio = 0.0;
    json detail;                // per-vertex marginals as exact rationals
};

inline constexpr uint64_t kCorrelationOutcomeGuard = 10'000'000;

// Enumerates every joint choice of the B-parts relevant to v (those holding
// a neighbour of some c in L(v); the rest are independent and dropped) and
// checks, for every subset I of L(v), that
//   Pr(all of I blocked) <= prod_{c in I} Pr(c blocked)
// in exact integer arithmetic. Guarded by the joint-space size.
CorrelationReport verify_negative_correlation(const CoverInstance& inst, int v,
                                              uint64_t outcome_guard = kCorrelationOutcomeGuard);

struct DependencyCount {
    enum class Mode : uint8_t { SharedBaseNeighbor, SharedRelevantPart };
    Mode mode;
    int vertex = -1;
    long long count = 0; // other A-vertices the blocking event of v depends on
    long long bound = 0; // instance-profile bound the count is checked against
    bool within_bound = false;
};

// SharedBaseNeighbor: A-vertices u != v with a common G-neighbour, bounded by
// delta_A * (delta_B - 1). SharedRelevantPart: u != v whose lists can be
// blocked from a common B-part, bounded by |L(v)| * d_A * (maxpart_B * d_B - 1)
// (equals the uniform-part bound k_A d_A (k_B d_B - 1) when parts are uniform).
DependencyCount dependency_count(const CoverInstance& inst, int v, DependencyCount::Mode mode);

json correlation_report_to_json(const CorrelationReport& r);
json dependency_count_to_json(const DependencyCount& d);

} // namespace tvlab
