#include "analysis.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <stdexcept>

namespace tvlab {

namespace {

void require_a_vertex(const CoverInstance& inst, int v) {
    if (!inst.validated()) throw std::logic_error("analysis needs a validated instance");
    if (v < 0 || v >= inst.num_base() || inst.base_side[v] != Side::A)
        throw std::invalid_argument("vertex must be an A-side base vertex");
}

} // namespace

Rational exact_block_probability(const CoverInstance& inst, int v, int c) {
    require_a_vertex(inst, v);
    if (c < 0 || c >= inst.num_cover() || inst.cover_owner[c] != v)
        throw std::invalid_argument("cover vertex is not in the part of v");

    // Matching condition: at most one neighbour per part, so each adjacent
    // part contributes an independent miss factor (|L(w)|-1)/|L(w)|.
    Rational miss = Rational::one();
    for (int b : inst.cover_neighbors(c)) {
        uint64_t size = inst.part(inst.cover_owner[b]).size();
        miss = miss * Rational(size - 1, size);
    }
    return Rational::one() - miss;
}

CorrelationReport verify_negative_correlation(const CoverInstance& inst, int v,
                                              uint64_t outcome_guard) {
    require_a_vertex(inst, v);
    CorrelationReport report;
    report.vertex = v;

    const auto& list = inst.part(v);
    const int k = static_cast<int>(list.size());
    if (k > 20) throw SizeGuardError("subset check limited to parts of size <= 20");

    // Parts relevant to v: those containing a neighbour of some c in L(v).
    // Ascending part id fixes the mixed-radix enumeration order.
    std::set<int> relevant_set;
    for (int c : list)
        for (int b : inst.cover_neighbors(c)) relevant_set.insert(inst.cover_owner[b]);
    std::vector<int> relevant(relevant_set.begin(), relevant_set.end());

    uint64_t outcomes = 1;
    for (int w : relevant) {
        uint64_t size = inst.part(w).size();
        if (outcomes > outcome_guard / size)
            throw SizeGuardError("joint outcome space exceeds guard");
        outcomes *= size;
    }
    report.outcomes = outcomes;

    // block_bits[p][i]: which of L(v) gets blocked when part p picks index i.
    std::vector<std::vector<uint32_t>> block_bits(relevant.size());
    for (size_t p = 0; p < relevant.size(); ++p) {
        const auto& part = inst.part(relevant[p]);
        block_bits[p].assign(part.size(), 0);
        for (int ci = 0; ci < k; ++ci) {
            for (int b : inst.cover_neighbors(list[ci])) {
                if (inst.cover_owner[b] != relevant[p]) continue;
                auto it = std::lower_bound(part.begin(), part.end(), b);
                block_bits[p][static_cast<size_t>(it - part.begin())] |= uint32_t{1} << ci;
            }
        }
    }

    // Count outcomes per exact blocked-set, then zeta-transform so
    // superset_count[I] = #outcomes blocking at least I. Enumeration is
    // mixed-radix over the relevant parts in ascending id order.
    std::vector<uint64_t> superset_count(size_t{1} << k, 0);
    auto enumerate = [&](auto&& self, size_t p, uint32_t blocked) -> void {
        if (p == relevant.size()) {
            ++superset_count[blocked];
            return;
        }
        for (uint32_t bits : block_bits[p]) self(self, p + 1, blocked | bits);
    };
    enumerate(enumerate, 0, 0);
    for (int bit = 0; bit < k; ++bit)
        for (uint32_t mask = 0; mask < (uint32_t{1} << k); ++mask)
            if (!(mask & (uint32_t{1} << bit)))
                superset_count[mask] += superset_count[mask | (uint32_t{1} << bit)];

    // Pr(all of I) <= prod marginals  <=>  N_I * total^(|I|-1) <= prod N_{c}.
    report.pass = true;
    report.worst_log_ratio = -std::numeric_limits<double>::infinity();
    BigUint total(outcomes);
    for (uint32_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
        int size = std::popcount(mask);
        if (size < 2) continue;
        ++report.subsets_checked;
        BigUint lhs = BigUint(superset_count[mask]) *
                      BigUint::pow(total, static_cast<uint64_t>(size - 1));
        BigUint rhs(1);
        for (int bit = 0; bit < k; ++bit)
            if (mask & (uint32_t{1} << bit))
                rhs *= BigUint(superset_count[uint32_t{1} << bit]);
        if (lhs > rhs) report.pass = false;
        if (!lhs.is_zero() && !rhs.is_zero()) {
            report.worst_log_ratio =
                std::max(report.worst_log_ratio, lhs.log_natural() - rhs.log_natural());
        } else if (!lhs.is_zero() && rhs.is_zero()) {
            report.worst_log_ratio = std::numeric_limits<double>::infinity();
        }
    }
    if (report.worst_log_ratio == -std::numeric_limits<double>::infinity())
        report.worst_log_ratio = 0.0;

    json marginals = json::array();
    for (int ci = 0; ci < k; ++ci) {
        Rational pr(BigUint(superset_count[uint32_t{1} << ci]), BigUint(outcomes));
        marginals.push_back(json{{"cover_vertex", inst.cover_label[list[ci]]},
                                 {"probability", tag_exact(pr)}});
    }
    json joint;
    joint["all_blocked"] =
        tag_exact(Rational(BigUint(superset_count[(uint32_t{1} << k) - 1]), BigUint(outcomes)));
    report.detail = json{{"marginals", marginals}, {"joint", joint}};
    return report;
}

DependencyCount dependency_count(const CoverInstance& inst, int v,
                                 DependencyCount::Mode mode) {
    require_a_vertex(inst, v);
    DependencyCount result;
    result.mode = mode;
    result.vertex = v;
    DegreeProfile profile = degree_profile(inst);

    if (mode == DependencyCount::Mode::SharedBaseNeighbor) {
        std::set<int> others;
        for (int w : inst.base_neighbors(v))
            for (int u : inst.base_neighbors(w))
                if (u != v) others.insert(u);
        result.count = static_cast<long long>(others.size());
        result.bound = profile.delta_a * (profile.delta_b - 1);
    } else {
        // Parts from which L(v) can be blocked, then every other A-vertex
        // that can also be blocked from one of them.
        std::set<int> relevant;
        for (int c : inst.part(v))
            for (int b : inst.cover_neighbors(c)) relevant.insert(inst.cover_owner[b]);
        std::set<int> others;
        for (int w : relevant) {
            for (int b : inst.part(w)) {
                for (int a : inst.cover_neighbors(b)) {
                    int u = inst.cover_owner[a];
                    if (u != v) others.insert(u);
                }
            }
        }
        result.count = static_cast<long long>(others.size());
        long long max_b_part = 0;
        for (int w : inst.base_of_side(Side::B))
            max_b_part = std::max(max_b_part, static_cast<long long>(inst.part(w).size()));
        result.bound = static_cast<long long>(inst.part(v).size()) * profile.d_a *
                       (max_b_part * profile.d_b - 1);
        if (result.bound < 0) result.bound = 0; // no cover edges at all
    }
    result.within_bound = result.count <= result.bound;
    return result;
}

json correlation_report_to_json(const CorrelationReport& r) {
    json j;
    j["check"] = "correlation";
    j["vertex"] = r.vertex;
    j["pass"] = r.pass;
    j["outcomes"] = tag_uint(r.outcomes);
    j["subsets_checked"] = tag_uint(r.subsets_checked);
    j["worst_log_ratio"] = tag_float(r.worst_log_ratio);
    j["detail"] = r.detail;
    return j;
}

json dependency_count_to_json(const DependencyCount& d) {
    json j;
    j["check"] = "deps";
    j["mode"] = d.mode == DependencyCount::Mode::SharedBaseNeighbor ? "cond3" : "cond2";
    j["vertex"] = d.vertex;
    j["count"] = tag_int(d.count);
    j["bound"] = tag_int(d.bound);
    j["within_bound"] = d.within_bound;
    return j;
}

} // namespace tvlab
