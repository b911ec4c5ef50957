#pragma once

#include <cstdint>
#include <vector>

#include "cover.hpp"
#include "solvers.hpp"

namespace tvlab {

// Uniform vertex-partitioned hypergraph over the B-side cover vertices of a
// (truncated) instance. An edge is a set of B vertices, one per part, that
// perfectly matches onto some A-part: selecting all of it blocks that A-part
// completely, so B-transversals avoiding every edge are exactly the ones
// that extend to the A side.
struct Hypergraph {
    int edge_size = 0;                     // k_A of the truncated instance
    std::vector<std::vector<int>> parts;   // part -> hg vertex ids (size k_B each)
    std::vector<int> vertex_part;          // hg vertex -> part index
    std::vector<int> vertex_cover_id;      // hg vertex -> cover vertex in the instance
    std::vector<int> part_base_id;         // part index -> B base vertex
    struct Edge {
        std::vector<int> vertices; // sorted hg vertex ids, distinct parts
        int origin_a;              // generating A base vertex
    };
    std::vector<Edge> edges;

    int num_vertices() const { return static_cast<int>(vertex_part.size()); }
    long long max_vertex_degree() const;
};

inline constexpr uint64_t kDefaultEdgeGuard = 10'000'000;

// Builds the hypergraph after truncating every part to exactly k_A / k_B
// lowest-id vertices. One edge per perfect matching of an A-part into
// distinct B-parts (deduplicated per generating vertex). Checks the
// resulting vertex degrees against d_B * d_A^(k_A - 1) for the truncated
// profile, and refuses to enumerate past edge_guard edges.
Hypergraph reduce_to_hypergraph(const CoverInstance& inst,
                                uint64_t edge_guard = kDefaultEdgeGuard);

enum class HypergraphMode : uint8_t { Exact, Randomized };

struct HypergraphSolve {
    SolveStatus status = SolveStatus::GaveUp;
    std::vector<int> choice; // per part, chosen hg vertex (iff Found)
    SolveStats stats;
};

// Finds a transversal of the parts containing no edge: backtracking with
// edge-completion pruning (Exact), or uniform sampling plus resampling of
// the lowest fully-selected edge (Randomized).
HypergraphSolve solve_hypergraph_it(const Hypergraph& hg, HypergraphMode mode,
                                    uint64_t seed = 0,
                                    uint64_t node_budget = kDefaultNodeBudget,
                                    uint64_t round_cap = 0);

// Lifts a hypergraph transversal back to the instance: the chosen cover
// vertices form a B-side choice which extend_partial completes. Guaranteed
// to succeed for edge-free choices of this hypergraph.
Transversal lift_hypergraph_choice(const CoverInstance& inst, const Hypergraph& hg,
                                   const std::vector<int>& choice);

// Whole route: reduce, solve, lift. Note the verdict concerns the truncated
// instance; with uniform part sizes truncation is the identity and the
// verdict matches solve_exact on the original.
SolveOutcome solve_via_hypergraph(const CoverInstance& inst, HypergraphMode mode,
                                  uint64_t seed = 0,
                                  uint64_t node_budget = kDefaultNodeBudget,
                                  uint64_t round_cap = 0,
                                  uint64_t edge_guard = kDefaultEdgeGuard);

} // namespace tvlab
