#include "solvers.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "rng.hpp"

namespace tvlab {

const char* solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Found: return "FOUND";
        case SolveStatus::Infeasible: return "INFEASIBLE";
        case SolveStatus::GaveUp: return "GAVE_UP";
    }
    return "?";
}

json solve_outcome_to_json(const SolveOutcome& outcome) {
    json j;
    j["status"] = solve_status_name(outcome.status);
    if (outcome.transversal) {
        // choice[i] is the cover vertex picked for base vertex i
        j["transversal"] = outcome.transversal->choice;
    }
    j["stats"] = json{{"nodes", tag_uint(outcome.stats.nodes)},
                      {"b_leaves", tag_uint(outcome.stats.b_leaves)},
                      {"rounds", tag_uint(outcome.stats.rounds)},
                      {"wall_ms", tag_float(outcome.stats.wall_ms)}};
    return j;
}

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void require_validated(const CoverInstance& inst) {
    if (!inst.validated()) throw std::logic_error("solver needs a validated instance");
}

// Shared bookkeeping for everything that walks B-assignments: per-A-cover-
// vertex count of chosen blocking neighbours, and per-A-part count of
// vertices that are still free. The matching condition caps blocked[] per
// chosen part at one, which is what makes undo exact.
struct BlockState {
    explicit BlockState(const CoverInstance& inst)
        : inst_(inst),
          blocked_(inst.num_cover(), 0),
          free_count_(inst.num_base(), 0),
          dead_parts_(0) {
        for (int v : inst.base_of_side(Side::A))
            free_count_[v] = static_cast<int>(inst.part(v).size());
    }

    void choose(int b_cover) {
        for (int a : inst_.cover_neighbors(b_cover)) {
            if (blocked_[a]++ == 0) {
                if (--free_count_[inst_.cover_owner[a]] == 0) ++dead_parts_;
            }
        }
    }

    void unchoose(int b_cover) {
        for (int a : inst_.cover_neighbors(b_cover)) {
            if (--blocked_[a] == 0) {
                if (free_count_[inst_.cover_owner[a]]++ == 0) --dead_parts_;
            }
        }
    }

    bool consistent() const { return dead_parts_ == 0; }
    bool vertex_free(int a_cover) const { return blocked_[a_cover] == 0; }
    int part_free_count(int base_v) const { return free_count_[base_v]; }

private:
    const CoverInstance& inst_;
    std::vector<int> blocked_;
    std::vector<int> free_count_;
    int dead_parts_;
};

// B parts in fail-first order: ascending size, ties by id.
std::vector<int> ordered_b_parts(const CoverInstance& inst) {
    std::vector<int> order = inst.base_of_side(Side::B);
    std::stable_sort(order.begin(), order.end(), [&](int u, int v) {
        return inst.part(u).size() < inst.part(v).size();
    });
    return order;
}

Transversal greedy_extension(const CoverInstance& inst, const BlockState& state,
                             const std::vector<int>& b_choice) {
    Transversal t;
    t.choice.assign(inst.num_base(), -1);
    for (int w : inst.base_of_side(Side::B)) t.choice[w] = b_choice[w];
    for (int v : inst.base_of_side(Side::A)) {
        for (int c : inst.part(v)) {
            if (state.vertex_free(c)) {
                t.choice[v] = c;
                break;
            }
        }
        if (t.choice[v] < 0) throw std::logic_error("extension from consistent state failed");
    }
    return t;
}

} // namespace

SolveOutcome solve_exact(const CoverInstance& inst, uint64_t node_budget) {
    require_validated(inst);
    Timer timer;
    SolveOutcome outcome;
    BlockState state(inst);
    std::vector<int> order = ordered_b_parts(inst);
    std::vector<int> b_choice(inst.num_base(), -1);

    enum class Walk { Found, Exhausted, Budget };
    auto dfs = [&](auto&& self, size_t depth) -> Walk {
        if (depth == order.size()) {
            ++outcome.stats.b_leaves;
            outcome.transversal = greedy_extension(inst, state, b_choice);
            return Walk::Found;
        }
        int w = order[depth];
        for (int b : inst.part(w)) {
            if (++outcome.stats.nodes > node_budget) return Walk::Budget;
            state.choose(b);
            if (state.consistent()) {
                b_choice[w] = b;
                Walk sub = self(self, depth + 1);
                if (sub != Walk::Exhausted) return sub; // keep state for Found
                b_choice[w] = -1;
            }
            state.unchoose(b);
        }
        return Walk::Exhausted;
    };

    switch (dfs(dfs, 0)) {
        case Walk::Found: outcome.status = SolveStatus::Found; break;
        case Walk::Exhausted: outcome.status = SolveStatus::Infeasible; break;
        case Walk::Budget: outcome.status = SolveStatus::GaveUp; break;
    }
    outcome.stats.wall_ms = timer.ms();
    return outcome;
}

SolveOutcome solve_moser_tardos(const CoverInstance& inst, uint64_t seed, uint64_t round_cap) {
    require_validated(inst);
    Timer timer;
    SolveOutcome outcome;
    const auto& a_parts = inst.base_of_side(Side::A);
    const auto& b_parts = inst.base_of_side(Side::B);
    if (round_cap == 0) round_cap = 1000 * std::max<uint64_t>(1, a_parts.size());

    Rng rng(seed);
    BlockState state(inst);
    std::vector<int> b_choice(inst.num_base(), -1);
    auto draw = [&](int w) {
        const auto& part = inst.part(w);
        int b = part[static_cast<size_t>(rng.next_below(part.size()))];
        if (b_choice[w] >= 0) state.unchoose(b_choice[w]);
        b_choice[w] = b;
        state.choose(b);
    };
    for (int w : b_parts) draw(w);

    auto first_violated = [&]() -> int {
        for (int v : a_parts)
            if (state.part_free_count(v) == 0) return v;
        return -1;
    };

    int violated = first_violated();
    while (violated >= 0) {
        if (outcome.stats.rounds >= round_cap) {
            outcome.status = SolveStatus::GaveUp;
            outcome.stats.wall_ms = timer.ms();
            return outcome;
        }
        ++outcome.stats.rounds;
        // Redraw every variable the bad event depends on: all B-parts
        // adjacent to the violated A-vertex, in ascending id order.
        for (int w : inst.base_neighbors(violated)) draw(w);
        violated = first_violated();
    }

    outcome.status = SolveStatus::Found;
    outcome.transversal = greedy_extension(inst, state, b_choice);
    outcome.stats.wall_ms = timer.ms();
    return outcome;
}

std::variant<Transversal, BlockedPart> extend_partial(const CoverInstance& inst,
                                                      const Transversal& b_choice) {
    require_validated(inst);
    if (static_cast<int>(b_choice.choice.size()) != inst.num_base())
        throw std::invalid_argument("partial transversal has wrong shape");

    const size_t words = inst.opposite_words();
    std::vector<uint64_t> chosen(words, 0);
    for (int w : inst.base_of_side(Side::B)) {
        int c = b_choice.choice[w];
        if (c < 0 || c >= inst.num_cover() || inst.cover_owner[c] != w)
            throw std::invalid_argument("B-side choice missing or outside its part");
        int idx = inst.side_index(c);
        chosen[idx / 64] |= uint64_t{1} << (idx % 64);
    }

    Transversal t;
    t.choice.assign(inst.num_base(), -1);
    for (int w : inst.base_of_side(Side::B)) t.choice[w] = b_choice.choice[w];
    for (int v : inst.base_of_side(Side::A)) {
        for (int c : inst.part(v)) {
            const uint64_t* row = inst.opposite_bits(c);
            bool blocked = false;
            for (size_t i = 0; i < words; ++i) {
                if (row[i] & chosen[i]) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) {
                t.choice[v] = c;
                break;
            }
        }
        if (t.choice[v] < 0) return BlockedPart{v};
    }
    return t;
}

} // namespace tvlab
