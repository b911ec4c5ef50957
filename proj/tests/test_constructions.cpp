#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "constructions.hpp"
#include "hypergraph.hpp"
#include "json_io.hpp"
#include "oracle.hpp"
#include "rng.hpp"
#include "solvers.hpp"

using namespace tvlab;

TEST_CASE("square construction has the advertised shape") {
    CoverInstance inst = build_prop4(2);
    CHECK(inst.base_of_side(Side::A).size() == 16);
    CHECK(inst.base_of_side(Side::B).size() == 16);
    CHECK(inst.side_count(Side::A) == 128); // 16 parts of 8
    CHECK(inst.side_count(Side::B) == 32);  // 16 parts of 2

    DegreeProfile p = degree_profile(inst);
    CHECK(p.delta_a == 16);
    CHECK(p.delta_b == 16);
    CHECK(p.k_a == 8);
    CHECK(p.k_b == 2);
    CHECK(p.d_b == 16); // every B cover vertex is wired once per A-vertex
    CHECK(p.d_a == 4);  // pair slots receive one edge per part of their block
}

TEST_CASE("square construction: at most two free pairs per block") {
    CoverInstance inst = build_prop4(2);
    const auto& b_parts = inst.base_of_side(Side::B);
    // Blocks are consecutive runs of four B-parts. For every block and every
    // local assignment, at most 2 of the 16 A-parts keep a free vertex in
    // the pair slot owned by that block.
    for (int block = 0; block < 4; ++block) {
        for (int assignment = 0; assignment < 16; ++assignment) {
            std::vector<int> chosen;
            for (int t = 0; t < 4; ++t) {
                const auto& part = inst.part(b_parts[block * 4 + t]);
                chosen.push_back(part[(assignment >> t) & 1]);
            }
            int free_pairs = 0;
            for (int j : inst.base_of_side(Side::A)) {
                const auto& list = inst.part(j);
                for (int slot : {2 * block, 2 * block + 1}) {
                    bool blocked = false;
                    for (int b : chosen)
                        blocked = blocked || inst.cover_adjacent(list[slot], b);
                    if (!blocked) {
                        ++free_pairs;
                        break;
                    }
                }
            }
            CHECK(free_pairs <= 2);
        }
    }
}

TEST_CASE("square construction scan: every assignment strands the A side") {
    CoverInstance inst = build_prop4(2);
    UnblockedScan scan = scan_b_transversals(inst);
    CHECK(scan.leaves == 65536);
    CHECK(scan.max_unblocked <= 8);
    CHECK(scan.max_unblocked < 16); // hence no independent transversal
}

TEST_CASE("star construction shape and infeasibility") {
    CoverInstance inst2 = build_prop6(2);
    CHECK(inst2.side_count(Side::A) == 8);
    CHECK(inst2.side_count(Side::B) == 4);
    DegreeProfile p2 = degree_profile(inst2);
    CHECK(p2.d_a == 1);
    CHECK(p2.d_b == 2);
    CHECK(solve_exact(inst2).status == SolveStatus::Infeasible);
    CHECK_FALSE(testing::oracle_feasible(inst2));

    CoverInstance inst3 = build_prop6(3);
    CHECK(inst3.base_of_side(Side::A).size() == 27);
    DegreeProfile p3 = degree_profile(inst3);
    CHECK(p3.d_a == 1);
    CHECK(p3.d_b == 9);
    CHECK(solve_exact(inst3).status == SolveStatus::Infeasible);
}

TEST_CASE("degree-d construction validates and is infeasible at d = 8") {
    CoverInstance inst = build_prop7(8);
    CHECK(inst.base_of_side(Side::A).size() == 8);
    CHECK(inst.base_of_side(Side::B).size() == 9); // 3 blocks of log2(8) parts
    DegreeProfile p = degree_profile(inst);
    CHECK(p.k_a == 6); // d - 2
    CHECK(p.k_b == 2);
    CHECK(std::max(p.d_a, p.d_b) <= 8);
    CHECK(solve_exact(inst).status == SolveStatus::Infeasible);
}

TEST_CASE("degree-16 construction has the advertised shape") {
    CoverInstance inst = build_prop7(16);
    CHECK(inst.base_of_side(Side::A).size() == 16);
    CHECK(inst.base_of_side(Side::B).size() == 28);
    DegreeProfile p = degree_profile(inst);
    CHECK(p.k_a == 14);
    CHECK(p.k_b == 2);
    CHECK(std::max(p.d_a, p.d_b) <= 16);
    // infeasibility of d=16 runs in the acceptance suite (bigger search)
}

TEST_CASE("size guards refuse desk-scale violations unless forced") {
    CHECK_THROWS_AS(build_prop4(4), SizeGuardError);
    CHECK_THROWS_AS(build_prop6(5), SizeGuardError);
    CHECK_THROWS_AS(build_prop7(64), SizeGuardError);
    CHECK_THROWS_AS(build_prop8_greedy(4, 2), SizeGuardError);
    CHECK_THROWS_AS(build_prop7(12), std::invalid_argument); // not a power of two
    CHECK_THROWS_AS(build_prop4(1), std::invalid_argument);

    // forcing works where the output is still buildable
    CoverInstance forced = build_prop6(5, true);
    CHECK(forced.base_of_side(Side::A).size() == 3125);
}

TEST_CASE("greedy construction trace and infeasibility at k = 2") {
    GreedyCoverResult g = build_prop8_greedy(2, 3);
    REQUIRE(g.trace.size() == 4);
    CHECK(g.trace[0] == 4);
    CHECK(g.trace[1] == 2);
    CHECK(g.trace[2] == 0);
    CHECK(g.trace[3] == 0); // third A-vertex has nothing left to forbid
    CHECK(solve_exact(g.instance).status == SolveStatus::Infeasible);
    CHECK_FALSE(testing::oracle_feasible(g.instance));

    // below the counting threshold the greedy cover cannot block everything
    GreedyCoverResult small = build_prop8_greedy(2, 1);
    CHECK(small.trace.back() == 2);
    CHECK(solve_exact(small.instance).status == SolveStatus::Found);
}

TEST_CASE("greedy steps always forbid at least the guaranteed fraction") {
    for (auto [k, a_size] : std::vector<std::pair<long long, long long>>{{2, 3}, {2, 2}, {3, 15}, {3, 7}}) {
        GreedyCoverResult g = build_prop8_greedy(k, a_size);
        uint64_t tuples = 1, kfact = 1;
        for (long long i = 0; i < k; ++i) tuples *= static_cast<uint64_t>(k);
        for (long long i = 2; i <= k; ++i) kfact *= static_cast<uint64_t>(i);
        for (size_t i = 0; i + 1 < g.trace.size(); ++i) {
            uint64_t before = g.trace[i], after = g.trace[i + 1];
            CHECK(after <= before);
            if (before > 0) CHECK((before - after) * tuples >= kfact * before);
        }
    }
    // k = 3 at the greedy threshold: all 27 transversals forbidden
    GreedyCoverResult g = build_prop8_greedy(3, 15);
    CHECK(g.trace.back() == 0);
    CHECK(solve_exact(g.instance).status == SolveStatus::Infeasible);
}

TEST_CASE("counting direction: exhaustive certification at k = 2") {
    CountingDirectionResult r = verify_counting_direction(2, 1);
    CHECK(r.in_range);
    CHECK(r.all_feasible);
    CHECK(r.covers_checked == 4); // (k!)^k systems for the single A-vertex
    CHECK_FALSE(r.symmetry_reduced);

    // a_size = 2 is outside the claim (2 * 2! = 4 = 2^2)
    r = verify_counting_direction(2, 2);
    CHECK_FALSE(r.in_range);
    CHECK(r.covers_checked == 0);

    r = verify_counting_direction(3, 1);
    CHECK(r.in_range);
    CHECK(r.all_feasible);
    CHECK(r.covers_checked == 216);

    CHECK_THROWS_AS(verify_counting_direction(4, 1), SizeGuardError);
    CHECK_THROWS_AS(verify_counting_direction(3, 5), SizeGuardError);
}

TEST_CASE("random cover respects its parameters") {
    RandomCoverParams params;
    params.n_a = 4;
    params.n_b = 5;
    params.part_a = 3;
    params.part_b = 2;
    params.base = RandomCoverParams::BaseKind::Complete;
    params.density = 0.0;
    params.seed = 5;
    CoverInstance empty = random_cover(params);
    CHECK(empty.cover_edges.empty());
    CHECK(solve_exact(empty).status == SolveStatus::Found);
    CHECK(solve_moser_tardos(empty, 1).status == SolveStatus::Found);
    CHECK(solve_via_hypergraph(empty, HypergraphMode::Exact).status == SolveStatus::Found);

    // density 1 with equal part sizes: a perfect matching on every base edge
    params.part_a = 2;
    params.density = 1.0;
    CoverInstance full = random_cover(params);
    CHECK(full.cover_edges.size() == full.base_edges.size() * 2);
    DegreeProfile p = degree_profile(full);
    CHECK(p.d_a == p.delta_a);
    CHECK(p.d_b == p.delta_b);

    // circulant base has exact degree
    params.n_b = 4;
    params.base = RandomCoverParams::BaseKind::Circulant;
    params.circulant_degree = 2;
    CoverInstance ring = random_cover(params);
    DegreeProfile rp = degree_profile(ring);
    CHECK(rp.delta_a == 2);
    CHECK(rp.delta_b == 2);

    CHECK_THROWS_AS(random_cover(RandomCoverParams{.n_a = 0}), std::invalid_argument);
    RandomCoverParams bad;
    bad.density = 1.5;
    CHECK_THROWS_AS(random_cover(bad), std::invalid_argument);
}

TEST_CASE("generators are deterministic") {
    CHECK(dump_report(instance_to_json(build_prop4(2))) ==
          dump_report(instance_to_json(build_prop4(2))));
    CHECK(dump_report(instance_to_json(build_prop6(3))) ==
          dump_report(instance_to_json(build_prop6(3))));
    RandomCoverParams params;
    params.n_a = 6;
    params.n_b = 6;
    params.part_a = 2;
    params.part_b = 3;
    params.base = RandomCoverParams::BaseKind::Gnp;
    params.gnp_p = 0.5;
    params.density = 0.7;
    params.seed = 1234;
    CHECK(dump_report(instance_to_json(random_cover(params))) ==
          dump_report(instance_to_json(random_cover(params))));
    params.seed = 1235;
    CHECK(dump_report(instance_to_json(random_cover(params))) !=
          dump_report(instance_to_json(random_cover({.n_a = 6,
                                                     .n_b = 6,
                                                     .part_a = 2,
                                                     .part_b = 3,
                                                     .base = RandomCoverParams::BaseKind::Gnp,
                                                     .gnp_p = 0.5,
                                                     .density = 0.7,
                                                     .seed = 1234}))));
}

TEST_CASE("every generator output passes validation") {
    // builders validate internally; re-validate through the public path
    for (CoverInstance inst : {build_prop4(2), build_prop6(2), build_prop6(3), build_prop7(8),
                               build_prop7(16), build_prop8_greedy(2, 3).instance,
                               build_prop8_greedy(3, 15).instance}) {
        CoverInstance reloaded = instance_from_json(instance_to_json(inst));
        CHECK(validate_cover(reloaded).ok);
    }
}
