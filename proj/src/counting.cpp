#include "turan/counting.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <vector>

#include "turan/canonical.hpp"
#include "turan/errors.hpp"

namespace turan {

namespace {

// Maps non-isolated pattern vertices component by component, each vertex
// ordered after one of its neighbors, so candidate sets stay narrow. Isolated
// pattern vertices contribute a falling-factorial tail instead of branches.
struct HomPlan {
    std::vector<int> order;                  // core vertices of h in mapping order
    std::vector<std::vector<int>> anchors;   // per position, earlier positions adjacent in h
    int isolated = 0;
};

HomPlan plan_pattern(const Graph& h) {
    HomPlan plan;
    int n = h.n();
    std::vector<bool> placed(n, false);
    for (int v = 0; v < n; ++v)
        if (h.degree(v) == 0) {
            ++plan.isolated;
            placed[v] = true;
        }
    // components in order of a max-degree start vertex, grown by greedy
    // "most placed neighbors" BFS
    for (;;) {
        int start = -1;
        for (int v = 0; v < n; ++v)
            if (!placed[v] && (start < 0 || h.degree(v) > h.degree(start))) start = v;
        if (start < 0) break;
        placed[start] = true;
        plan.order.push_back(start);
        for (;;) {
            int next = -1, best_links = 0, best_deg = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                int links = 0;
                for (int u : plan.order) links += h.has_edge(u, v) ? 1 : 0;
                if (links == 0) continue;
                if (links > best_links || (links == best_links && h.degree(v) > best_deg)) {
                    next = v;
                    best_links = links;
                    best_deg = h.degree(v);
                }
            }
            if (next < 0) break;  // component exhausted
            placed[next] = true;
            plan.order.push_back(next);
        }
    }
    plan.anchors.resize(plan.order.size());
    for (std::size_t i = 0; i < plan.order.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (h.has_edge(plan.order[j], plan.order[i])) plan.anchors[i].push_back(static_cast<int>(j));
    return plan;
}

struct HomSearch {
    const Graph& g;
    const HomPlan& plan;
    std::array<int, 64> image{};
    unsigned __int128 leaves = 0;
    bool stop_at_first;
    bool found = false;

    HomSearch(const Graph& host, const HomPlan& p, bool first_only)
        : g(host), plan(p), stop_at_first(first_only) {}

    void run(std::size_t depth, std::uint64_t used) {
        if (depth == plan.order.size()) {
            if (leaves == ~static_cast<unsigned __int128>(0))
                throw UnsupportedScale("injective homomorphism count exceeds 128 bits");
            ++leaves;
            found = true;
            return;
        }
        std::uint64_t cand = g.full_mask() & ~used;
        for (int a : plan.anchors[depth]) cand &= g.neighbors(image[a]);
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            image[depth] = w;
            run(depth + 1, used | (1ull << w));
            if (stop_at_first && found) return;
        }
    }
};

}  // namespace

Count count_injective_homs(const Graph& h, const Graph& g) {
    if (h.n() > g.n()) return Count();
    HomPlan plan = plan_pattern(h);
    HomSearch search(g, plan, false);
    search.run(0, 0);
    Count total = Count::from_uint128(search.leaves);
    // isolated pattern vertices pick distinct leftover host vertices
    if (plan.isolated > 0)
        total = total * Count::falling_factorial(static_cast<std::uint64_t>(g.n() - plan.order.size()),
                                                 static_cast<std::uint64_t>(plan.isolated));
    return total;
}

Count count_copies(const Graph& h, const Graph& g) {
    Count homs = count_injective_homs(h, g);
    if (homs.is_zero()) return homs;
    return homs.div_exact(automorphism_count(h));
}

Count copy_degree(const Graph& h, const Graph& g, int v) {
    if (v < 0 || v >= g.n()) throw InvalidInstance("vertex index out of range");
    Count all = count_copies(h, g);
    if (g.n() == 1) return all;  // every copy contains the only vertex
    return all - count_copies(h, g.without_vertex(v));
}

bool is_free(const Graph& g, const Graph& f) {
    if (f.n() > g.n()) return true;
    HomPlan plan = plan_pattern(f);
    if (static_cast<int>(plan.order.size()) + plan.isolated > g.n()) return true;
    HomSearch search(g, plan, true);
    search.run(0, 0);
    return !search.found;
}

}  // namespace turan
