#include "turan/coloring.hpp"

#include <algorithm>
#include <bit>

#include "turan/errors.hpp"

namespace turan {

namespace {

void clique_extend(const Graph& g, int size, std::uint64_t cand, int& best) {
    if (size + std::popcount(cand) <= best) return;
    if (!cand) {
        best = std::max(best, size);
        return;
    }
    while (cand) {
        if (size + std::popcount(cand) <= best) return;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        clique_extend(g, size + 1, cand & g.neighbors(v), best);
    }
}

// Backtracking over vertices in index order; a new class may open only after
// all earlier classes were tried, so each partition appears exactly once.
struct ColoringEnum {
    const Graph& g;
    int limit;
    std::vector<std::uint64_t> classes;
    const std::function<bool(const ColoringWitness&)>& fn;
    bool stopped = false;

    ColoringEnum(const Graph& graph, int k, const std::function<bool(const ColoringWitness&)>& cb)
        : g(graph), limit(k), fn(cb) {}

    void run(int v) {
        if (stopped) return;
        if (v == g.n()) {
            ColoringWitness w{static_cast<int>(classes.size()), classes};
            if (!fn(w)) stopped = true;
            return;
        }
        for (std::size_t c = 0; c < classes.size(); ++c) {
            if (classes[c] & g.neighbors(v)) continue;
            classes[c] |= 1ull << v;
            run(v + 1);
            classes[c] &= ~(1ull << v);
            if (stopped) return;
        }
        if (static_cast<int>(classes.size()) < limit) {
            classes.push_back(1ull << v);
            run(v + 1);
            classes.pop_back();
        }
    }
};

std::optional<ColoringWitness> find_coloring(const Graph& g, int k) {
    std::optional<ColoringWitness> out;
    for_each_coloring(g, k, [&](const ColoringWitness& w) {
        out = w;
        return false;
    });
    return out;
}

ColoringWitness greedy_coloring(const Graph& g) {
    // DSATUR: color the vertex seeing the most distinct neighbor colors
    int n = g.n();
    std::vector<int> color(n, -1);
    std::vector<std::uint64_t> classes;
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            std::uint64_t seen = 0;
            std::uint64_t nb = g.neighbors(v);
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[u] >= 0) seen |= 1ull << color[u];
            }
            int sat = std::popcount(seen);
            if (sat > pick_sat || (sat == pick_sat && g.degree(v) > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = g.degree(v);
            }
        }
        int c = 0;
        while (c < static_cast<int>(classes.size()) && (classes[c] & g.neighbors(pick))) ++c;
        if (c == static_cast<int>(classes.size())) classes.push_back(0);
        classes[c] |= 1ull << pick;
        color[pick] = c;
    }
    return ColoringWitness{static_cast<int>(classes.size()), classes};
}

// neighbor mask of v re-indexed after deleting v (same packing as without_vertex)
std::uint64_t shifted_neighbors(const Graph& f, int v) {
    std::uint64_t mask = f.neighbors(v);
    std::uint64_t low = (1ull << v) - 1;
    return (mask & low) | ((mask >> (v + 1)) << v);
}

}  // namespace

int clique_number(const Graph& g) {
    int best = 1;
    clique_extend(g, 0, g.full_mask(), best);
    return best;
}

void for_each_coloring(const Graph& g, int k, const std::function<bool(const ColoringWitness&)>& fn) {
    if (k < 1) return;
    ColoringEnum e(g, k, fn);
    e.run(0);
}

std::vector<ColoringWitness> enumerate_colorings(const Graph& g, int k) {
    std::vector<ColoringWitness> out;
    for_each_coloring(g, k, [&](const ColoringWitness& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

ColoringWitness chromatic_witness(const Graph& g) {
    ColoringWitness ub = greedy_coloring(g);
    int lb = clique_number(g);
    for (int k = lb; k < ub.k; ++k) {
        if (auto w = find_coloring(g, k)) return *w;
    }
    return ub;
}

int chromatic_number(const Graph& g) {
    return chromatic_witness(g).k;
}

CriticalityReport criticality(const Graph& f) {
    CriticalityReport rep;
    rep.chi = chromatic_number(f);
    for (int v = 0; v < f.n(); ++v) {
        int after = f.n() == 1 ? 0 : chromatic_number(f.without_vertex(v));
        if (after < rep.chi) rep.critical_vertices.push_back(v);
    }
    for (auto [u, v] : f.edges()) {
        if (chromatic_number(f.without_edge(u, v)) < rep.chi) rep.critical_edges.emplace_back(u, v);
    }
    return rep;
}

CriticalRDetail critical_r_detail(const Graph& f) {
    CriticalRDetail detail;
    int chi = chromatic_number(f);
    int k = chi - 1;
    if (k < 1) return detail;  // no classes to meet
    for (int v = 0; v < f.n(); ++v) {
        if (f.n() == 1) break;
        Graph minus = f.without_vertex(v);
        if (chromatic_number(minus) >= chi) continue;  // not color-critical
        std::uint64_t nv = shifted_neighbors(f, v);
        for_each_coloring(minus, k, [&](const ColoringWitness& w) {
            for (std::size_t c = 0; c < w.classes.size(); ++c) {
                int hit = std::popcount(w.classes[c] & nv);
                if (hit < 1) continue;
                if (!detail.r || hit < *detail.r) {
                    detail.r = hit;
                    detail.vertex = v;
                    detail.coloring = w;
                    detail.class_index = static_cast<int>(c);
                }
            }
            return true;
        });
    }
    return detail;
}

std::optional<int> critical_r(const Graph& f) {
    return critical_r_detail(f).r;
}

namespace {

struct SafetySearch {
    const Graph& h;
    int r;
    const std::vector<int>& sizes;
    std::uint64_t max_nodes;
    std::uint64_t nodes = 0;
    std::vector<int> part_of;
    std::vector<int> used;
    std::vector<int> inside_deg;
    int inside_edges = 0;
    std::optional<EmbeddingWitness> hit;

    SafetySearch(const Graph& pattern, int bound, const std::vector<int>& part_sizes, std::uint64_t budget)
        : h(pattern), r(bound), sizes(part_sizes), max_nodes(budget),
          part_of(pattern.n(), -1), used(part_sizes.size(), 0), inside_deg(pattern.n(), 0) {}

    bool run(int v) {  // returns false on budget exhaustion
        if (++nodes > max_nodes) return false;
        if (v == h.n()) {
            if (inside_edges >= 1) {
                EmbeddingWitness w;
                w.part_of = part_of;
                for (auto [a, b] : h.edges())
                    if (part_of[a] == part_of[b]) w.inside_edges.emplace_back(a, b);
                hit = std::move(w);
            }
            return true;
        }
        bool fresh_size_seen[65] = {};
        for (std::size_t p = 0; p < sizes.size(); ++p) {
            if (used[p] >= sizes[p]) continue;
            if (used[p] == 0) {
                // empty parts of equal size are interchangeable
                if (fresh_size_seen[sizes[p]]) continue;
                fresh_size_seen[sizes[p]] = true;
            }
            int new_inside = 0;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                if (part_of[u] == static_cast<int>(p) && h.has_edge(u, v)) {
                    ++new_inside;
                    if (inside_deg[u] + 1 > r - 1) ok = false;
                }
            }
            if (!ok || new_inside > r - 1) continue;
            part_of[v] = static_cast<int>(p);
            ++used[p];
            inside_deg[v] = new_inside;
            inside_edges += new_inside;
            for (int u = 0; u < v; ++u)
                if (part_of[u] == static_cast<int>(p) && h.has_edge(u, v)) ++inside_deg[u];
            if (!run(v + 1)) return false;
            for (int u = 0; u < v; ++u)
                if (part_of[u] == static_cast<int>(p) && h.has_edge(u, v)) --inside_deg[u];
            inside_edges -= new_inside;
            inside_deg[v] = 0;
            --used[p];
            part_of[v] = -1;
            if (hit) return true;
        }
        return true;
    }
};

}  // namespace

SafetyVerdict embedding_safety_check(const Graph& h, int r, const std::vector<int>& part_sizes,
                                     std::uint64_t max_nodes) {
    if (part_sizes.empty()) throw InvalidInstance("at least one part is required");
    for (int s : part_sizes) {
        if (s < 1 || s > kMaxVertices) throw InvalidInstance("part sizes must be between 1 and 64");
    }
    SafetySearch search(h, r, part_sizes, max_nodes);
    bool complete = search.run(0);
    if (search.hit) return SafetyVerdict{Safety::Unsafe, std::move(search.hit), search.nodes};
    if (!complete) return SafetyVerdict{Safety::Inconclusive, std::nullopt, search.nodes};
    return SafetyVerdict{Safety::Safe, std::nullopt, search.nodes};
}

}  // namespace turan
