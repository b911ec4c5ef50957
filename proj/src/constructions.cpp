#include "constructions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "rng.hpp"
#include "solvers.hpp"

namespace tvlab {

namespace {

class InstanceBuilder {
public:
    int add_base(Side side) {
        int id = static_cast<int>(inst_.base_side.size());
        inst_.base_side.push_back(side);
        inst_.base_label.push_back(id);
        return id;
    }

    int add_cover(int owner) {
        int id = static_cast<int>(inst_.cover_owner.size());
        inst_.cover_owner.push_back(owner);
        inst_.cover_label.push_back(id);
        return id;
    }

    void add_base_edge(int u, int v) { inst_.base_edges.emplace_back(u, v); }
    void add_cover_edge(int x, int y) { inst_.cover_edges.emplace_back(x, y); }

    void reserve(size_t base, size_t cover, size_t base_edges, size_t cover_edges) {
        inst_.base_side.reserve(base);
        inst_.base_label.reserve(base);
        inst_.cover_owner.reserve(cover);
        inst_.cover_label.reserve(cover);
        inst_.base_edges.reserve(base_edges);
        inst_.cover_edges.reserve(cover_edges);
    }

    // Generators must emit valid covers; a violation here is a bug.
    CoverInstance finish() {
        inst_.finalize();
        ValidationReport report = validate_cover(inst_);
        if (!report.ok)
            throw std::logic_error("generator produced an invalid cover: " + report.message);
        return std::move(inst_);
    }

private:
    CoverInstance inst_;
};

bool is_power_of_two(long long v) { return v > 0 && (v & (v - 1)) == 0; }

long long ipow(long long base, long long exp) {
    long long r = 1;
    for (long long i = 0; i < exp; ++i) {
        if (r > (1LL << 61) / base) throw std::overflow_error("construction size overflows");
        r *= base;
    }
    return r;
}

uint64_t factorial_u64(long long k) {
    uint64_t f = 1;
    for (long long i = 2; i <= k; ++i) f *= static_cast<uint64_t>(i);
    return f;
}

// Shared wiring for the two square constructions: a complete bipartite base
// with `num_a` A-vertices, `num_blocks` blocks of `block_size` B-parts of
// size 2, and A-parts of 2*num_blocks vertices laid out as consecutive
// (p, twin) pairs, one pair per block. Block transversal j (binary over the
// block's parts, bit t = second vertex of part t) sends chosen vertices to
// pair slot p of A-part j and the others to the twin.
CoverInstance build_paired_square(long long num_a, long long num_blocks,
                                  long long block_size) {
    const long long num_b = num_blocks * block_size;
    const long long a_part = 2 * num_blocks;
    const long long transversals = 1LL << block_size; // == num_a in both uses

    InstanceBuilder b;
    b.reserve(static_cast<size_t>(num_a + num_b),
              static_cast<size_t>(num_a * a_part + num_b * 2),
              static_cast<size_t>(num_a * num_b),
              static_cast<size_t>(num_blocks * transversals * block_size * 2));

    std::vector<int> a_base(static_cast<size_t>(num_a));
    for (auto& v : a_base) v = b.add_base(Side::A);
    std::vector<int> b_base(static_cast<size_t>(num_b));
    for (auto& w : b_base) w = b.add_base(Side::B);
    for (int v : a_base)
        for (int w : b_base) b.add_base_edge(v, w);

    // cover vertices: A parts first (pair-major), then B parts
    std::vector<std::vector<int>> a_cover(static_cast<size_t>(num_a));
    for (long long j = 0; j < num_a; ++j) {
        a_cover[j].resize(static_cast<size_t>(a_part));
        for (long long i = 0; i < a_part; ++i) a_cover[j][i] = b.add_cover(a_base[j]);
    }
    std::vector<std::array<int, 2>> b_cover(static_cast<size_t>(num_b));
    for (long long w = 0; w < num_b; ++w) {
        b_cover[w][0] = b.add_cover(b_base[w]);
        b_cover[w][1] = b.add_cover(b_base[w]);
    }

    for (long long block = 0; block < num_blocks; ++block) {
        for (long long j = 0; j < transversals; ++j) {
            int p = a_cover[j][2 * block];
            int twin = a_cover[j][2 * block + 1];
            for (long long t = 0; t < block_size; ++t) {
                int bit = static_cast<int>((j >> t) & 1);
                const auto& part = b_cover[block * block_size + t];
                b.add_cover_edge(part[bit], p);
                b.add_cover_edge(part[1 - bit], twin);
            }
        }
    }
    return b.finish();
}

} // namespace

CoverInstance build_prop4(long long k, bool force) {
    if (k < 2) throw std::invalid_argument("square construction needs k >= 2");
    if (k >= 4 && !force)
        throw SizeGuardError("k >= 4 means 2^(2^k) >= 65536 base vertices per side; force to build");
    const long long delta = ipow(2, ipow(2, k)); // 2^(2^k)
    const long long log2_delta = ipow(2, k);
    const long long num_blocks = delta / log2_delta;
    return build_paired_square(delta, num_blocks, log2_delta);
}

CoverInstance build_prop7(long long d, bool force) {
    if (d < 8 || !is_power_of_two(d))
        throw std::invalid_argument("degree-d square construction needs a power of two d >= 8");
    if (d > 32 && !force) throw SizeGuardError("d > 32 is past desk scale; force to build");
    long long log2_d = std::countr_zero(static_cast<unsigned long long>(d));
    return build_paired_square(d, d / 2 - 1, log2_d);
}

CoverInstance build_prop6(long long k, bool force) {
    if (k < 2) throw std::invalid_argument("star construction needs k >= 2");
    if (k >= 5 && !force)
        throw SizeGuardError("k >= 5 means k^k A-parts of size k; force to build");
    const long long tuples = ipow(k, k);

    InstanceBuilder b;
    b.reserve(static_cast<size_t>(tuples + k), static_cast<size_t>((tuples + k) * k),
              static_cast<size_t>(tuples * k), static_cast<size_t>(tuples * k));
    std::vector<int> a_base(static_cast<size_t>(tuples));
    for (auto& v : a_base) v = b.add_base(Side::A);
    std::vector<int> b_base(static_cast<size_t>(k));
    for (auto& w : b_base) w = b.add_base(Side::B);
    for (int v : a_base)
        for (int w : b_base) b.add_base_edge(v, w);

    std::vector<std::vector<int>> a_cover(static_cast<size_t>(tuples));
    for (long long j = 0; j < tuples; ++j)
        for (long long i = 0; i < k; ++i) a_cover[j].push_back(b.add_cover(a_base[j]));
    std::vector<std::vector<int>> b_cover(static_cast<size_t>(k));
    for (long long w = 0; w < k; ++w)
        for (long long i = 0; i < k; ++i) b_cover[w].push_back(b.add_cover(b_base[w]));

    // Tuple j, digit w (little-endian base k) picks the vertex of part w that
    // is matched to slot w of L(v_j).
    for (long long j = 0; j < tuples; ++j) {
        long long rest = j;
        for (long long w = 0; w < k; ++w) {
            long long digit = rest % k;
            rest /= k;
            b.add_cover_edge(a_cover[j][w], b_cover[w][digit]);
        }
    }
    return b.finish();
}

namespace {

// All permutations of {0..k-1} in lexicographic order.
std::vector<std::vector<int>> all_permutations(long long k) {
    std::vector<int> perm(static_cast<size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Bitmask over the k^k B-transversals (little-endian digits, digit w = part
// w's choice) that a complete matching system fully blocks: transversal t is
// in the mask iff every list slot c has sigma_w(c) == t_w for some w.
using Mask = std::vector<uint64_t>;

Mask blocked_mask(const std::vector<const std::vector<int>*>& sigma, long long k,
                  long long tuples) {
    Mask mask((static_cast<size_t>(tuples) + 63) / 64, 0);
    std::vector<long long> digits(static_cast<size_t>(k));
    for (long long t = 0; t < tuples; ++t) {
        long long rest = t;
        for (long long w = 0; w < k; ++w) {
            digits[w] = rest % k;
            rest /= k;
        }
        bool all_hit = true;
        for (long long c = 0; c < k && all_hit; ++c) {
            bool hit = false;
            for (long long w = 0; w < k && !hit; ++w)
                hit = (*sigma[w])[static_cast<size_t>(c)] == digits[w];
            all_hit = hit;
        }
        if (all_hit) mask[t / 64] |= uint64_t{1} << (t % 64);
    }
    return mask;
}

uint64_t popcount(const Mask& m) {
    uint64_t n = 0;
    for (uint64_t w : m) n += static_cast<uint64_t>(std::popcount(w));
    return n;
}

// Decompose a system index into per-part permutation pointers (little-endian
// base k! digits).
std::vector<const std::vector<int>*> system_at(const std::vector<std::vector<int>>& perms,
                                               long long k, uint64_t index) {
    std::vector<const std::vector<int>*> sigma(static_cast<size_t>(k));
    uint64_t rest = index;
    for (long long w = 0; w < k; ++w) {
        sigma[w] = &perms[rest % perms.size()];
        rest /= perms.size();
    }
    return sigma;
}

} // namespace

GreedyCoverResult build_prop8_greedy(long long k, long long a_size, bool force) {
    if (k < 2 || a_size < 1)
        throw std::invalid_argument("greedy construction needs k >= 2 and a_size >= 1");
    if (k >= 4 && !force)
        throw SizeGuardError("k >= 4 scores (k!)^k systems per A-vertex; force to build");

    const long long tuples = ipow(k, k);
    const auto perms = all_permutations(k);
    uint64_t num_systems = 1;
    for (long long w = 0; w < k; ++w) num_systems *= perms.size();

    // Precompute the blocked mask of every system once.
    std::vector<Mask> masks(num_systems);
    for (uint64_t s = 0; s < num_systems; ++s)
        masks[s] = blocked_mask(system_at(perms, k, s), k, tuples);

    InstanceBuilder b;
    std::vector<int> a_base(static_cast<size_t>(a_size));
    for (auto& v : a_base) v = b.add_base(Side::A);
    std::vector<int> b_base(static_cast<size_t>(k));
    for (auto& w : b_base) w = b.add_base(Side::B);
    for (int v : a_base)
        for (int w : b_base) b.add_base_edge(v, w);
    std::vector<std::vector<int>> a_cover(static_cast<size_t>(a_size));
    for (long long j = 0; j < a_size; ++j)
        for (long long i = 0; i < k; ++i) a_cover[j].push_back(b.add_cover(a_base[j]));
    std::vector<std::vector<int>> b_cover(static_cast<size_t>(k));
    for (long long w = 0; w < k; ++w)
        for (long long i = 0; i < k; ++i) b_cover[w].push_back(b.add_cover(b_base[w]));

    Mask remaining((static_cast<size_t>(tuples) + 63) / 64, 0);
    for (long long t = 0; t < tuples; ++t) remaining[t / 64] |= uint64_t{1} << (t % 64);

    GreedyCoverResult result;
    result.trace.push_back(popcount(remaining));
    Mask overlap(remaining.size());
    for (long long j = 0; j < a_size; ++j) {
        if (result.trace.back() == 0) {
            result.trace.push_back(0); // nothing left to forbid: no edges for v_j
            continue;
        }
        uint64_t best_score = 0;
        uint64_t best_system = 0;
        for (uint64_t s = 0; s < num_systems; ++s) {
            for (size_t w = 0; w < overlap.size(); ++w) overlap[w] = masks[s][w] & remaining[w];
            uint64_t score = popcount(overlap);
            if (score > best_score) {
                best_score = score;
                best_system = s;
            }
        }
        auto sigma = system_at(perms, k, best_system);
        for (long long w = 0; w < k; ++w)
            for (long long c = 0; c < k; ++c)
                b.add_cover_edge(a_cover[j][c],
                                 b_cover[w][(*sigma[w])[static_cast<size_t>(c)]]);
        for (size_t w = 0; w < remaining.size(); ++w) remaining[w] &= ~masks[best_system][w];
        result.trace.push_back(popcount(remaining));
    }
    result.instance = b.finish();
    return result;
}

json greedy_trace_to_json(const GreedyCoverResult& result) {
    json arr = json::array();
    for (uint64_t v : result.trace) arr.push_back(tag_uint(v));
    return arr;
}

namespace {

// Lean rebuild for the counting-direction sweep: base skeleton is fixed,
// only the cover edges change between covers.
CoverInstance make_complete_cover_skeleton(long long a_size, long long k,
                                           std::vector<std::vector<int>>& a_cover,
                                           std::vector<std::vector<int>>& b_cover) {
    InstanceBuilder b;
    std::vector<int> a_base(static_cast<size_t>(a_size));
    for (auto& v : a_base) v = b.add_base(Side::A);
    std::vector<int> b_base(static_cast<size_t>(k));
    for (auto& w : b_base) w = b.add_base(Side::B);
    for (int v : a_base)
        for (int w : b_base) b.add_base_edge(v, w);
    a_cover.assign(static_cast<size_t>(a_size), {});
    for (long long j = 0; j < a_size; ++j)
        for (long long i = 0; i < k; ++i) a_cover[j].push_back(b.add_cover(a_base[j]));
    b_cover.assign(static_cast<size_t>(k), {});
    for (long long w = 0; w < k; ++w)
        for (long long i = 0; i < k; ++i) b_cover[w].push_back(b.add_cover(b_base[w]));
    // no cover edges yet: callers install them and re-finalize
    return b.finish();
}

} // namespace

CountingDirectionResult verify_counting_direction(long long k, long long a_size) {
    if (k != 2 && k != 3)
        throw SizeGuardError("counting-direction sweep supports k = 2 or 3 only");
    if (a_size < 1) throw std::invalid_argument("a_size must be >= 1");
    if (a_size > 4) throw SizeGuardError("counting-direction sweep supports a_size <= 4");

    CountingDirectionResult result;
    // Claim range: a_size < k^k / k!, checked exactly.
    const long long tuples = ipow(k, k);
    const uint64_t kfact = factorial_u64(k);
    result.in_range = static_cast<uint64_t>(a_size) * kfact < static_cast<uint64_t>(tuples);
    if (!result.in_range) return result;

    const auto perms = all_permutations(k);
    uint64_t num_systems = 1;
    for (long long w = 0; w < k; ++w) num_systems *= perms.size();
    std::vector<Mask> masks(num_systems);
    for (uint64_t s = 0; s < num_systems; ++s)
        masks[s] = blocked_mask(system_at(perms, k, s), k, tuples);
    const Mask full = [&] {
        Mask m((static_cast<size_t>(tuples) + 63) / 64, 0);
        for (long long t = 0; t < tuples; ++t) m[t / 64] |= uint64_t{1} << (t % 64);
        return m;
    }();

    std::vector<std::vector<int>> a_cover, b_cover;
    CoverInstance skeleton = make_complete_cover_skeleton(a_size, k, a_cover, b_cover);

    result.symmetry_reduced = a_size > 1;
    const long long free_vertices = result.symmetry_reduced ? a_size - 1 : a_size;
    uint64_t combos = 1;
    for (long long i = 0; i < free_vertices; ++i) combos *= num_systems;

    std::vector<uint64_t> chosen(static_cast<size_t>(a_size), 0); // system per A-vertex
    for (uint64_t combo = 0; combo < combos; ++combo) {
        uint64_t rest = combo;
        for (long long j = result.symmetry_reduced ? 1 : 0; j < a_size; ++j) {
            chosen[j] = rest % num_systems;
            rest /= num_systems;
        }

        CoverInstance inst = skeleton;
        inst.cover_edges.clear();
        for (long long j = 0; j < a_size; ++j) {
            auto sigma = system_at(perms, k, chosen[j]);
            for (long long w = 0; w < k; ++w)
                for (long long c = 0; c < k; ++c)
                    inst.cover_edges.emplace_back(a_cover[j][c],
                                                  b_cover[w][(*sigma[w])[static_cast<size_t>(c)]]);
        }
        inst.finalize();
        ValidationReport report = validate_cover(inst);
        if (!report.ok) throw std::logic_error("matching-system cover failed validation");

        bool feasible = solve_exact(inst).status == SolveStatus::Found;

        // Independent route: feasible iff the union of the chosen systems'
        // blocked masks misses some transversal.
        Mask blocked(full.size(), 0);
        for (long long j = 0; j < a_size; ++j)
            for (size_t w = 0; w < blocked.size(); ++w) blocked[w] |= masks[chosen[j]][w];
        bool mask_feasible = false;
        for (size_t w = 0; w < blocked.size(); ++w)
            if ((blocked[w] & full[w]) != full[w]) mask_feasible = true;
        if (feasible != mask_feasible)
            throw std::logic_error("exact solver disagrees with blocked-mask count");

        ++result.covers_checked;
        if (!feasible) ++result.infeasible_covers;
    }
    result.all_feasible = result.infeasible_covers == 0;
    return result;
}

CoverInstance random_cover(const RandomCoverParams& params) {
    if (params.n_a < 1 || params.n_b < 1 || params.part_a < 1 || params.part_b < 1)
        throw std::invalid_argument("random cover needs positive sides and part sizes");
    if (params.density < 0.0 || params.density > 1.0)
        throw std::invalid_argument("density must lie in [0, 1]");
    if (params.base == RandomCoverParams::BaseKind::Gnp &&
        (params.gnp_p < 0.0 || params.gnp_p > 1.0))
        throw std::invalid_argument("gnp_p must lie in [0, 1]");
    if (params.base == RandomCoverParams::BaseKind::Circulant) {
        if (params.n_a != params.n_b)
            throw std::invalid_argument("circulant base needs n_a == n_b");
        if (params.circulant_degree < 0 || params.circulant_degree > params.n_b)
            throw std::invalid_argument("circulant degree must lie in [0, n]");
    }

    Rng rng(params.seed);
    InstanceBuilder b;
    std::vector<int> a_base(static_cast<size_t>(params.n_a));
    for (auto& v : a_base) v = b.add_base(Side::A);
    std::vector<int> b_base(static_cast<size_t>(params.n_b));
    for (auto& w : b_base) w = b.add_base(Side::B);

    std::vector<std::pair<int, int>> base_pairs;
    switch (params.base) {
        case RandomCoverParams::BaseKind::Complete:
            for (int v = 0; v < params.n_a; ++v)
                for (int w = 0; w < params.n_b; ++w)
                    base_pairs.emplace_back(a_base[v], b_base[w]);
            break;
        case RandomCoverParams::BaseKind::Gnp:
            for (int v = 0; v < params.n_a; ++v)
                for (int w = 0; w < params.n_b; ++w)
                    if (rng.next_unit() < params.gnp_p)
                        base_pairs.emplace_back(a_base[v], b_base[w]);
            break;
        case RandomCoverParams::BaseKind::Circulant:
            for (int v = 0; v < params.n_a; ++v)
                for (int t = 0; t < params.circulant_degree; ++t)
                    base_pairs.emplace_back(a_base[v], b_base[(v + t) % params.n_b]);
            break;
    }
    for (auto [u, v] : base_pairs) b.add_base_edge(u, v);

    std::vector<std::vector<int>> a_cover(static_cast<size_t>(params.n_a));
    for (int v = 0; v < params.n_a; ++v)
        for (int i = 0; i < params.part_a; ++i) a_cover[v].push_back(b.add_cover(a_base[v]));
    std::vector<std::vector<int>> b_cover(static_cast<size_t>(params.n_b));
    for (int w = 0; w < params.n_b; ++w)
        for (int i = 0; i < params.part_b; ++i) b_cover[w].push_back(b.add_cover(b_base[w]));

    // One random injection of the smaller part into the larger per base
    // edge, thinned by the density.
    const int m = std::min(params.part_a, params.part_b);
    std::vector<int> image(static_cast<size_t>(std::max(params.part_a, params.part_b)));
    for (auto [v, w] : base_pairs) {
        std::iota(image.begin(), image.end(), 0);
        for (size_t i = image.size(); i > 1; --i)
            std::swap(image[i - 1], image[static_cast<size_t>(rng.next_below(i))]);
        for (int i = 0; i < m; ++i) {
            bool keep = params.density >= 1.0 || rng.next_unit() < params.density;
            if (!keep) continue;
            int a_idx = params.part_a <= params.part_b ? i : image[i];
            int b_idx = params.part_a <= params.part_b ? image[i] : i;
            b.add_cover_edge(a_cover[v - a_base[0]][a_idx], b_cover[w - b_base[0]][b_idx]);
        }
    }
    return b.finish();
}

UnblockedScan scan_b_transversals(const CoverInstance& inst) {
    if (!inst.validated()) throw std::logic_error("scan needs a validated instance");
    UnblockedScan scan;
    const auto& a_parts = inst.base_of_side(Side::A);
    const auto& b_parts = inst.base_of_side(Side::B);
    const long long num_a = static_cast<long long>(a_parts.size());
    scan.min_unblocked = num_a;

    // Same bookkeeping as the exact solver, but without pruning: every leaf
    // is visited and scored.
    std::vector<int> blocked(inst.num_cover(), 0);
    std::vector<int> free_count(inst.num_base(), 0);
    long long dead = 0;
    for (int v : a_parts) free_count[v] = static_cast<int>(inst.part(v).size());

    auto walk = [&](auto&& self, size_t depth) -> void {
        if (depth == b_parts.size()) {
            ++scan.leaves;
            long long unblocked = num_a - dead;
            scan.max_unblocked = std::max(scan.max_unblocked, unblocked);
            scan.min_unblocked = std::min(scan.min_unblocked, unblocked);
            return;
        }
        for (int c : inst.part(b_parts[depth])) {
            for (int a : inst.cover_neighbors(c))
                if (blocked[a]++ == 0 && --free_count[inst.cover_owner[a]] == 0) ++dead;
            self(self, depth + 1);
            for (int a : inst.cover_neighbors(c))
                if (--blocked[a] == 0 && free_count[inst.cover_owner[a]]++ == 0) --dead;
        }
    };
    walk(walk, 0);
    if (scan.leaves == 0) scan.min_unblocked = 0;
    return scan;
}

} // namespace tvlab
