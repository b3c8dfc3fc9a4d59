#include "turan/stability.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "turan/canonical.hpp"
#include "turan/coloring.hpp"
#include "turan/counting.hpp"
#include "turan/errors.hpp"
#include "turan/rng.hpp"

namespace turan {

namespace {

int partition_cost(const Graph& g, const std::vector<int>& assign) {
    int cost = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            bool same = assign[u] == assign[v];
            bool edge = g.has_edge(u, v);
            if (same == edge) ++cost;  // edge inside a class, or missing across
        }
    return cost;
}

std::vector<std::uint64_t> class_masks(const std::vector<int>& assign, int k) {
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(k), 0);
    for (std::size_t v = 0; v < assign.size(); ++v) masks[static_cast<std::size_t>(assign[v])] |= 1ull << v;
    std::vector<std::uint64_t> out;
    for (std::uint64_t m : masks)
        if (m) out.push_back(m);
    // first-use order: sort by lowest vertex
    std::sort(out.begin(), out.end(),
              [](std::uint64_t a, std::uint64_t b) { return std::countr_zero(a) < std::countr_zero(b); });
    return out;
}

// Branch and bound over assignments in first-use class order, so each
// partition is visited once rather than k! times.
struct ExactDistance {
    const Graph& g;
    int k;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    int best = std::numeric_limits<int>::max();
    std::vector<int> assign;
    std::vector<int> best_assign;
    std::vector<std::uint64_t> masks;
    std::uint64_t placed = 0;

    ExactDistance(const Graph& g_, int k_, std::uint64_t budget_)
        : g(g_), k(k_), budget(budget_), assign(static_cast<std::size_t>(g_.n()), 0),
          masks(static_cast<std::size_t>(k_), 0) {}

    void rec(int v, int used, int cost) {
        if (cost >= best) return;
        if (v == g.n()) {
            best = cost;
            best_assign = assign;
            return;
        }
        if (++nodes > budget) throw BudgetExceeded("exact distance budget exceeded", nodes, 0);
        const std::uint64_t bit = 1ull << v;
        const std::uint64_t nbrs = g.neighbors(v);
        const int limit = std::min(used, k - 1);
        for (int c = 0; c <= limit; ++c) {
            const std::uint64_t inside = masks[static_cast<std::size_t>(c)];
            const std::uint64_t outside = placed & ~inside;
            const int inc = std::popcount(nbrs & inside) + std::popcount(outside & ~nbrs);
            assign[static_cast<std::size_t>(v)] = c;
            masks[static_cast<std::size_t>(c)] |= bit;
            placed |= bit;
            rec(v + 1, c == used ? used + 1 : used, cost + inc);
            masks[static_cast<std::size_t>(c)] &= ~bit;
            placed &= ~bit;
        }
    }
};

PartitionDistance heuristic_distance(const Graph& g, int k, const DistanceOptions& opts) {
    Rng rng(opts.seed);
    const int n = g.n();
    PartitionDistance result;
    result.mode = DistanceMode::Heuristic;
    bool have = false;
    for (int restart = 0; restart < std::max(1, opts.restarts); ++restart) {
        std::vector<int> assign(static_cast<std::size_t>(n));
        for (auto& a : assign) a = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
        int cost = partition_cost(g, assign);
        for (bool improved = true; improved;) {
            improved = false;
            int best_delta = 0;
            int move_v = -1, move_c = -1, swap_u = -1, swap_w = -1;
            for (int v = 0; v < n; ++v)
                for (int c = 0; c < k; ++c) {
                    if (c == assign[static_cast<std::size_t>(v)]) continue;
                    std::vector<int> trial = assign;
                    trial[static_cast<std::size_t>(v)] = c;
                    int delta = partition_cost(g, trial) - cost;
                    if (delta < best_delta) {
                        best_delta = delta;
                        move_v = v;
                        move_c = c;
                        swap_u = -1;
                    }
                }
            for (int u = 0; u < n; ++u)
                for (int w = u + 1; w < n; ++w) {
                    if (assign[static_cast<std::size_t>(u)] == assign[static_cast<std::size_t>(w)]) continue;
                    std::vector<int> trial = assign;
                    std::swap(trial[static_cast<std::size_t>(u)], trial[static_cast<std::size_t>(w)]);
                    int delta = partition_cost(g, trial) - cost;
                    if (delta < best_delta) {
                        best_delta = delta;
                        swap_u = u;
                        swap_w = w;
                        move_v = -1;
                    }
                }
            if (best_delta < 0) {
                if (move_v >= 0)
                    assign[static_cast<std::size_t>(move_v)] = move_c;
                else
                    std::swap(assign[static_cast<std::size_t>(swap_u)], assign[static_cast<std::size_t>(swap_w)]);
                cost += best_delta;
                improved = true;
            }
        }
        if (!have || cost < result.cost) {
            result.cost = cost;
            result.classes = class_masks(assign, k);
            have = true;
        }
    }
    return result;
}

}  // namespace

PartitionDistance multipartite_distance(const Graph& g, int k, DistanceMode mode, const DistanceOptions& opts) {
    if (k < 1) throw InvalidInstance("at least one class is required");
    if (mode == DistanceMode::Heuristic) return heuristic_distance(g, k, opts);
    ExactDistance search(g, k, opts.max_nodes);
    search.rec(0, 0, 0);
    PartitionDistance result;
    result.cost = search.best;
    result.classes = class_masks(search.best_assign, k);
    result.mode = DistanceMode::Exact;
    return result;
}

StabilityVerdict classify(int n, const Graph& h, const Graph& f, const SearchConfig& cfg) {
    const int chi_f = chromatic_number(f);
    if (chi_f <= chromatic_number(h)) throw InvalidInstance("classification requires chi(h) < chi(f)");
    const int k = chi_f - 1;
    if (k > 8) throw InvalidInstance("classification supports chi(f) - 1 <= 8");

    StabilityVerdict verdict;
    verdict.n = n;
    verdict.h_graph6 = emit_graph6(h);
    verdict.f_graph6 = emit_graph6(f);
    verdict.k = k;

    ExtremalReport report = ex_brute(n, h, f, cfg);
    verdict.ex_value = report.value;
    verdict.witnesses = report.witnesses;
    verdict.suppressed_witnesses = report.suppressed;
    verdict.turan_host_count = count_copies_multipartite(h, turan_parts(n, k));
    OptimizationResult opt = optimize_parts(h, n, k, OptimizeMode::Exact, {});
    verdict.best_host_count = opt.count;
    verdict.best_parts = opt.best;

    if (verdict.ex_value == verdict.turan_host_count)
        verdict.classification = Classification::TuranGood;
    else if (verdict.ex_value == verdict.best_host_count)
        verdict.classification = Classification::WeaklyTuranGood;
    else
        verdict.classification = Classification::Neither;

    for (const std::string& w : report.witnesses)
        verdict.witness_distances.push_back(multipartite_distance(parse_graph6(w), k, DistanceMode::Exact));
    return verdict;
}

ProfileTable near_extremal_profile(int n, const Graph& h, const Graph& f, std::uint64_t slack,
                                   const SearchConfig& cfg) {
    const int chi_f = chromatic_number(f);
    if (chi_f < 2) throw InvalidInstance("profile requires f to have an edge");
    ProfileTable table;
    table.slack = slack;
    table.k = chi_f - 1;

    // first pass: the optimum; second pass: everything within slack of it
    bool have = false;
    enumerate_free(n, f, cfg, [&](const Graph& g) {
        Count c = count_copies(h, g);
        if (!have || c > table.ex_value) {
            table.ex_value = c;
            have = true;
        }
        return true;
    });
    if (!have) return table;

    Count threshold = table.ex_value;
    Count slack_count(slack);
    threshold = threshold > slack_count ? threshold - slack_count : Count();

    enumerate_free(n, f, cfg, [&](const Graph& g) {
        Count c = count_copies(h, g);
        if (c < threshold) return true;
        ProfileRow row;
        row.graph6 = canonical_labeling(g).bytes;
        row.count = std::move(c);
        // distance on the relabeled graph, so the partition matches the emitted graph6
        row.distance = multipartite_distance(parse_graph6(row.graph6), table.k, DistanceMode::Exact);
        table.rows.push_back(std::move(row));
        return true;
    });
    std::sort(table.rows.begin(), table.rows.end(), [](const ProfileRow& a, const ProfileRow& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.graph6 < b.graph6;
    });
    return table;
}

}  // namespace turan
