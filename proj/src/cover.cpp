#include "cover.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace tvlab {

const char* violation_name(ViolationCode code) {
    switch (code) {
        case ViolationCode::None: return "None";
        case ViolationCode::NonBipartiteBaseEdge: return "NonBipartiteBaseEdge";
        case ViolationCode::EmptyPart: return "EmptyPart";
        case ViolationCode::SideMismatch: return "SideMismatch";
        case ViolationCode::StrayEdge: return "StrayEdge";
        case ViolationCode::MatchingViolation: return "MatchingViolation";
    }
    return "?";
}

bool CoverInstance::cover_adjacent(int x, int y) const {
    const auto& adj = cover_adj_[x];
    return std::binary_search(adj.begin(), adj.end(), y);
}

void CoverInstance::finalize() {
    const int nb = num_base();
    const int nc = num_cover();

    parts_.assign(nb, {});
    for (int c = 0; c < nc; ++c) {
        int owner = cover_owner[c];
        if (owner < 0 || owner >= nb) throw std::out_of_range("cover owner out of range");
        parts_[owner].push_back(c);
    }
    for (auto& p : parts_) std::sort(p.begin(), p.end());

    base_adj_.assign(nb, {});
    for (auto [u, v] : base_edges) {
        base_adj_[u].push_back(v);
        base_adj_[v].push_back(u);
    }
    for (auto& a : base_adj_) std::sort(a.begin(), a.end());

    cover_adj_.assign(nc, {});
    for (auto [x, y] : cover_edges) {
        cover_adj_[x].push_back(y);
        cover_adj_[y].push_back(x);
    }
    for (auto& a : cover_adj_) std::sort(a.begin(), a.end());

    a_base_.clear();
    b_base_.clear();
    for (int v = 0; v < nb; ++v) (base_side[v] == Side::A ? a_base_ : b_base_).push_back(v);

    a_cover_.clear();
    b_cover_.clear();
    side_index_.assign(nc, -1);
    for (int c = 0; c < nc; ++c) {
        auto& bucket = base_side[cover_owner[c]] == Side::A ? a_cover_ : b_cover_;
        side_index_[c] = static_cast<int>(bucket.size());
        bucket.push_back(c);
    }
    num_a_cover_ = static_cast<int>(a_cover_.size());
    num_b_cover_ = static_cast<int>(b_cover_.size());

    // Row c holds a bitset over the opposite side's dense indices. Same-side
    // edges (invalid instances) are simply not representable here; validation
    // reports them from the raw edge list before any solver runs.
    words_per_row_ = (static_cast<size_t>(std::max(num_a_cover_, num_b_cover_)) + 63) / 64;
    if (words_per_row_ == 0) words_per_row_ = 1;
    bits_.assign(words_per_row_ * static_cast<size_t>(nc), 0);
    for (auto [x, y] : cover_edges) {
        Side sx = base_side[cover_owner[x]];
        Side sy = base_side[cover_owner[y]];
        if (sx == sy) continue;
        bits_[x * words_per_row_ + side_index_[y] / 64] |= uint64_t{1} << (side_index_[y] % 64);
        bits_[y * words_per_row_ + side_index_[x] / 64] |= uint64_t{1} << (side_index_[x] % 64);
    }
    validated_ = false;
}

ValidationReport validate_cover(CoverInstance& inst) {
    ValidationReport report;
    auto fail = [&](ViolationCode code, std::string msg, std::vector<long long> witness) {
        report.ok = false;
        report.code = code;
        report.message = std::move(msg);
        report.witness = std::move(witness);
    };

    // Axiom 1: every base edge joins side A to side B.
    for (auto [u, v] : inst.base_edges) {
        if (inst.base_side[u] == inst.base_side[v]) {
            fail(ViolationCode::NonBipartiteBaseEdge,
                 "base edge joins two vertices on side " +
                     std::string(1, side_letter(inst.base_side[u])),
                 {inst.base_label[u], inst.base_label[v]});
            return report;
        }
    }

    // Axiom 2: the owner map partitions V(H) with no empty part.
    for (int v = 0; v < inst.num_base(); ++v) {
        if (inst.parts_[v].empty()) {
            fail(ViolationCode::EmptyPart,
                 "base vertex owns no cover vertex", {inst.base_label[v]});
            return report;
        }
    }

    // Axioms 3-5, one pass over cover edges in file order. A same-side edge
    // contradicts the agreement of L with the bipartitions (SideMismatch); an
    // A-B edge between non-adjacent owners contradicts "cover respects G"
    // (StrayEdge); a doubled neighbour inside one part breaks the matching
    // condition (MatchingViolation).
    std::unordered_set<uint64_t> seen; // (cover vertex, owner of other end)
    seen.reserve(inst.cover_edges.size() * 2);
    for (auto [x, y] : inst.cover_edges) {
        int ov = inst.cover_owner[x];
        int ow = inst.cover_owner[y];
        if (inst.base_side[ov] == inst.base_side[ow]) {
            fail(ViolationCode::SideMismatch,
                 "cover edge joins two cover vertices on side " +
                     std::string(1, side_letter(inst.base_side[ov])),
                 {inst.cover_label[x], inst.cover_label[y]});
            return report;
        }
        if (!std::binary_search(inst.base_adj_[ov].begin(), inst.base_adj_[ov].end(), ow)) {
            fail(ViolationCode::StrayEdge,
                 "cover edge between parts of non-adjacent base vertices",
                 {inst.cover_label[x], inst.cover_label[y],
                  inst.base_label[ov], inst.base_label[ow]});
            return report;
        }
        auto key = [&](int c, int opposite_owner) {
            return (static_cast<uint64_t>(c) << 32) |
                   static_cast<uint32_t>(opposite_owner);
        };
        if (!seen.insert(key(x, ow)).second) {
            fail(ViolationCode::MatchingViolation,
                 "cover vertex has two neighbours in one part",
                 {inst.cover_label[x], inst.base_label[ow]});
            return report;
        }
        if (!seen.insert(key(y, ov)).second) {
            fail(ViolationCode::MatchingViolation,
                 "cover vertex has two neighbours in one part",
                 {inst.cover_label[y], inst.base_label[ov]});
            return report;
        }
    }

    inst.validated_ = true;
    return report;
}

DegreeProfile degree_profile(const CoverInstance& inst) {
    if (!inst.validated()) throw std::logic_error("degree_profile on unvalidated instance");
    DegreeProfile p;
    bool have_a = false, have_b = false;
    for (int v = 0; v < inst.num_base(); ++v) {
        long long deg = static_cast<long long>(inst.base_neighbors(v).size());
        long long sz = static_cast<long long>(inst.part(v).size());
        if (inst.base_side[v] == Side::A) {
            p.delta_a = std::max(p.delta_a, deg);
            p.k_a = have_a ? std::min(p.k_a, sz) : sz;
            have_a = true;
        } else {
            p.delta_b = std::max(p.delta_b, deg);
            p.k_b = have_b ? std::min(p.k_b, sz) : sz;
            have_b = true;
        }
    }
    for (int c = 0; c < inst.num_cover(); ++c) {
        long long deg = static_cast<long long>(inst.cover_neighbors(c).size());
        if (inst.base_side[inst.cover_owner[c]] == Side::A)
            p.d_a = std::max(p.d_a, deg);
        else
            p.d_b = std::max(p.d_b, deg);
    }
    // Matching condition: a cover vertex has at most one neighbour per
    // adjacent part, so its degree is bounded by its owner's G-degree.
    if (p.d_a > p.delta_a || p.d_b > p.delta_b)
        throw std::logic_error("cover degree exceeds base degree on a validated instance");
    return p;
}

IndependenceCheck is_independent_transversal(const CoverInstance& inst, const Transversal& t) {
    if (!inst.validated())
        throw std::logic_error("transversal check needs a validated instance");
    IndependenceCheck result;
    const int nb = inst.num_base();
    if (static_cast<int>(t.choice.size()) != nb) {
        result.error = IndependenceCheck::Error::MissingChoice;
        result.error_vertex = static_cast<int>(t.choice.size());
        return result;
    }
    for (int v = 0; v < nb; ++v) {
        int c = t.choice[v];
        if (c < 0) {
            result.error = IndependenceCheck::Error::MissingChoice;
            result.error_vertex = v;
            return result;
        }
        if (c >= inst.num_cover() || inst.cover_owner[c] != v) {
            result.error = IndependenceCheck::Error::ChoiceOutsidePart;
            result.error_vertex = v;
            return result;
        }
    }

    // Chosen B-side vertices as a bitset; every potential conflict is an A-B
    // edge, so it suffices to intersect each chosen A vertex's neighbour row.
    const size_t words = inst.opposite_words();
    std::vector<uint64_t> chosen_b(words, 0);
    for (int w : inst.base_of_side(Side::B)) {
        int idx = inst.side_index(t.choice[w]);
        chosen_b[idx / 64] |= uint64_t{1} << (idx % 64);
    }
    for (int v : inst.base_of_side(Side::A)) {
        const uint64_t* row = inst.opposite_bits(t.choice[v]);
        for (size_t w = 0; w < words; ++w) {
            uint64_t hit = row[w] & chosen_b[w];
            if (hit != 0) {
                int b_index = static_cast<int>(w * 64 + std::countr_zero(hit));
                int b_vertex = inst.side_vertices(Side::B)[b_index];
                result.witness_edge = {t.choice[v], b_vertex};
                return result;
            }
        }
    }
    result.independent = true;
    return result;
}

} // namespace tvlab
