#pragma once

#include <cstdint>
#include <vector>

#include "cover.hpp"
#include "json_io.hpp"

namespace tvlab {

// Generators for the extremal families shipped with the tool (CLI names
// --prop 4/6/7/8) plus a seeded random generator. Every "arbitrary" choice
// is pinned: ascending-id blocks, consecutive-id pairs, index-order
// matchings, binary / mixed-radix transversal enumeration — so outputs are
// reproducible byte for byte. Infeasibility of the extremal outputs is never
// assumed; callers verify it with a solver.

// Square construction: complete bipartite base on Delta = 2^(2^k) vertices
// per side, A-parts of size Delta/log4(Delta) split into pairs, B-parts of
// size 2 grouped into blocks of log2(Delta) parts; block transversal j wires
// its chosen vertices to pair slot p and the rest to the twin slot.
// Guarded for k >= 4 (Delta = 2^16) unless forced.
CoverInstance build_prop4(long long k, bool force = false);

// Star construction: |A| = k^k parts of size k over a complete bipartite
// base with |B| = k; the j-th B-transversal (mixed-radix order) is matched
// index-to-index onto L(v_j). A-side cover degree is 1, B-side k^(k-1).
// Guarded for k >= 5 unless forced.
CoverInstance build_prop6(long long k, bool force = false);

// Degree-d variant of the square construction: |A| = d, |B| = (d/2-1)*log2(d),
// A-parts of size d-2, cover max degree <= d. d must be a power of two,
// d >= 8; guarded for d > 32 unless forced.
CoverInstance build_prop7(long long d, bool force = false);

struct GreedyCoverResult {
    CoverInstance instance;
    // Remaining permissible B-transversals: initial count, then one entry
    // per processed A-vertex.
    std::vector<uint64_t> trace;
};

// Greedy covering construction on K_{a_size,k} with all parts of size k:
// each A-vertex installs the complete matching system that forbids the most
// still-permissible B-transversals (lowest enumeration index on ties); once
// none remain, later A-vertices get no edges. Guarded for k >= 4 unless
// forced.
GreedyCoverResult build_prop8_greedy(long long k, long long a_size, bool force = false);

struct CountingDirectionResult {
    bool in_range = false;     // claim applies: a_size * k! < k^k
    bool all_feasible = false; // every enumerated cover admits a transversal
    uint64_t covers_checked = 0;
    uint64_t infeasible_covers = 0;
    bool symmetry_reduced = false; // first A-vertex normalized to the identity system
};

// Exhaustively enumerates every complete-matching cover of K_{a_size,k}
// (all parts size k) and confirms each admits an independent transversal,
// deciding feasibility with the exact solver and cross-checking against an
// independent blocked-mask count. For a_size > 1 the first A-vertex is
// normalized to the identity system (sound: per-part relabeling reaches
// every cover and preserves transversal existence). Only k = 2, 3 with
// a_size <= 4 are allowed; larger inputs throw SizeGuardError.
CountingDirectionResult verify_counting_direction(long long k, long long a_size);

struct RandomCoverParams {
    enum class BaseKind { Complete, Gnp, Circulant };
    int n_a = 1, n_b = 1;         // base vertices per side
    int part_a = 1, part_b = 1;   // uniform part sizes
    BaseKind base = BaseKind::Complete;
    double gnp_p = 0.5;           // edge probability for Gnp
    int circulant_degree = 2;     // v_i ~ w_{(i+t) mod n}, t < degree (needs n_a == n_b)
    double density = 1.0;         // per matched pair keep-probability
    uint64_t seed = 0;
};

// Seeded random instance: chosen base graph, then one uniformly random
// partial matching of the given density per base edge. Output always
// satisfies the cover axioms.
CoverInstance random_cover(const RandomCoverParams& params);

struct UnblockedScan {
    long long max_unblocked = 0; // A-parts left extendable, worst case over leaves
    long long min_unblocked = 0;
    uint64_t leaves = 0;
};

// Walks every complete B-assignment (no pruning) and tracks how many A-parts
// retain an unblocked vertex. The square constructions are verified with
// this: every leaf must leave fewer extendable parts than |A_G|.
UnblockedScan scan_b_transversals(const CoverInstance& inst);

json greedy_trace_to_json(const GreedyCoverResult& result);

} // namespace tvlab
