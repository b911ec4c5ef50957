#pragma once

#include <cstdint>
#include <optional>
#include <variant>

#include "cover.hpp"
#include "json_io.hpp"

namespace tvlab {

enum class SolveStatus : uint8_t { Found, Infeasible, GaveUp };

const char* solve_status_name(SolveStatus s);

struct SolveStats {
    uint64_t nodes = 0;       // part-assignments attempted (exact search)
    uint64_t b_leaves = 0;    // complete B-side assignments reached
    uint64_t rounds = 0;      // resampling rounds (randomized solvers)
    double wall_ms = 0.0;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::GaveUp;
    std::optional<Transversal> transversal; // present iff Found
    SolveStats stats;
};

json solve_outcome_to_json(const SolveOutcome& outcome);

inline constexpr uint64_t kDefaultNodeBudget = 100'000'000;

// Complete backtracking search. B-side parts are assigned first (ascending
// part size, then id), with per-A-part counts of still-unblockable vertices:
// a branch dies as soon as some A-part has every vertex blocked. A complete
// B-assignment surviving propagation always extends greedily to the A side.
// Infeasible is reported only after the whole B space is exhausted.
SolveOutcome solve_exact(const CoverInstance& inst, uint64_t node_budget = kDefaultNodeBudget);

// Randomized local correction: keep one uniformly random choice per B-part;
// while some A-part is fully blocked, redraw every B-part adjacent (in G) to
// the lowest such A-vertex and re-check. On success the A side is filled in
// greedily (lowest unblocked vertex per part). Deterministic per seed.
// round_cap 0 means 1000 * |A_G|.
SolveOutcome solve_moser_tardos(const CoverInstance& inst, uint64_t seed,
                                uint64_t round_cap = 0);

struct BlockedPart {
    int base_vertex; // first A-part with every vertex blocked
};

// Given a complete B-side choice, pick the lowest unblocked vertex in every
// A-part, or report the first part where none exists.
std::variant<Transversal, BlockedPart> extend_partial(const CoverInstance& inst,
                                                      const Transversal& b_choice);

} // namespace tvlab
