#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tvlab {

enum class Side : uint8_t { A, B };

inline char side_letter(Side s) { return s == Side::A ? 'A' : 'B'; }

// Why a given instance is not a correspondence cover. The classes map onto
// the cover axioms: base bipartiteness, nonempty parts, edges only between
// parts of adjacent base vertices, one matching per base edge, and agreement
// of the cover's bipartition with the owners' sides.
enum class ViolationCode : uint8_t {
    None,
    NonBipartiteBaseEdge, // base edge inside one side
    EmptyPart,            // base vertex owning no cover vertex
    SideMismatch,         // cover edge joining two same-side cover vertices
    StrayEdge,            // cover edge whose owners are non-adjacent in G
    MatchingViolation,    // cover vertex with two neighbours in one part
};

const char* violation_name(ViolationCode code);

struct ValidationReport {
    bool ok = true;
    ViolationCode code = ViolationCode::None;
    std::string message;
    // Witness ids (original labels); meaning depends on the code.
    std::vector<long long> witness;
};

struct DegreeProfile {
    long long delta_a = 0; // max degree of G over side-A base vertices
    long long delta_b = 0;
    long long d_a = 0;     // max degree of H over side-A cover vertices
    long long d_b = 0;
    long long k_a = 0;     // min part size over side-A parts (0 if the side is empty)
    long long k_b = 0;

    bool operator==(const DegreeProfile&) const = default;
};

// One cover vertex chosen per base vertex; -1 marks "not chosen yet".
struct Transversal {
    std::vector<int> choice;
};

struct IndependenceCheck {
    enum class Error : uint8_t { None, MissingChoice, ChoiceOutsidePart };
    bool independent = false;
    Error error = Error::None;
    int error_vertex = -1;                    // base vertex for the error cases
    std::optional<std::pair<int, int>> witness_edge; // violating cover edge
};

// A bipartite correspondence-cover instance: base graph G with sides A/B,
// cover graph H whose vertices are partitioned into parts L(v) by owner.
// Ids are dense and assigned in load/file order; derived structures
// (parts, adjacency, bitsets) are rebuilt deterministically from the edge
// lists. Once validated, instances are immutable and safe to share.
class CoverInstance {
public:
    CoverInstance() = default;

    // Raw structure. Original labels are kept for reporting only; all
    // internal references use dense ids.
    std::vector<Side> base_side;                     // by base id
    std::vector<long long> base_label;               // dense id -> original label
    std::vector<std::pair<int, int>> base_edges;
    std::vector<int> cover_owner;                    // by cover id
    std::vector<long long> cover_label;
    std::vector<std::pair<int, int>> cover_edges;

    int num_base() const { return static_cast<int>(base_side.size()); }
    int num_cover() const { return static_cast<int>(cover_owner.size()); }

    // Derived views (valid after finalize()).
    const std::vector<int>& part(int base_id) const { return parts_[base_id]; }
    const std::vector<int>& base_neighbors(int base_id) const { return base_adj_[base_id]; }
    const std::vector<int>& cover_neighbors(int cover_id) const { return cover_adj_[cover_id]; }
    bool cover_adjacent(int x, int y) const;

    // Bitset over the opposite side's cover vertices, one word-span per
    // vertex; solvers and the transversal checker test membership against
    // these instead of scanning edge lists.
    const uint64_t* opposite_bits(int cover_id) const {
        return bits_.data() + static_cast<size_t>(cover_id) * words_per_row_;
    }
    size_t opposite_words() const { return words_per_row_; }
    // Dense index of a cover vertex within its own side (A or B).
    int side_index(int cover_id) const { return side_index_[cover_id]; }
    int side_count(Side s) const { return s == Side::A ? num_a_cover_ : num_b_cover_; }
    const std::vector<int>& side_vertices(Side s) const {
        return s == Side::A ? a_cover_ : b_cover_;
    }
    const std::vector<int>& base_of_side(Side s) const {
        return s == Side::A ? a_base_ : b_base_;
    }

    bool validated() const { return validated_; }

    // Rebuild all derived structure from the raw vectors. Call once after
    // filling the raw fields (loaders and generators do this).
    void finalize();

    friend ValidationReport validate_cover(CoverInstance& inst);

private:
    std::vector<std::vector<int>> parts_;
    std::vector<std::vector<int>> base_adj_;
    std::vector<std::vector<int>> cover_adj_;
    std::vector<int> side_index_;
    std::vector<int> a_cover_, b_cover_;
    std::vector<int> a_base_, b_base_;
    std::vector<uint64_t> bits_;
    size_t words_per_row_ = 0;
    int num_a_cover_ = 0, num_b_cover_ = 0;
    bool validated_ = false;
};

// Checks the five cover axioms in order and reports the first violation.
// On success marks the instance validated.
ValidationReport validate_cover(CoverInstance& inst);

// The six parameters (delta_A, delta_B, d_A, d_B, k_A, k_B) read off a
// validated instance. Asserts the matching-condition consequence
// d_A <= delta_A, d_B <= delta_B.
DegreeProfile degree_profile(const CoverInstance& inst);

// True iff t picks one vertex from each part and no cover edge joins two
// chosen vertices; returns one violating edge otherwise.
IndependenceCheck is_independent_transversal(const CoverInstance& inst, const Transversal& t);

} // namespace tvlab
