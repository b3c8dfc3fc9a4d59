#include "turan/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "turan/errors.hpp"

namespace turan {

namespace {

// ---- ordered partitions ----

struct Part {
    int n = 0;
    int cells = 0;
    std::array<int, 64> order{};    // vertices grouped by cell
    std::array<int, 65> start{};    // start[c] .. start[c+1] spans cell c
    std::array<int, 64> cell_of{};  // vertex -> cell index
};

Part unit_partition(int n) {
    Part p;
    p.n = n;
    p.cells = 1;
    for (int v = 0; v < n; ++v) p.order[v] = v;
    p.start[0] = 0;
    p.start[1] = n;
    return p;
}

void rebuild_cell_of(Part& p) {
    for (int c = 0; c < p.cells; ++c)
        for (int i = p.start[c]; i < p.start[c + 1]; ++i) p.cell_of[p.order[i]] = c;
}

// Neighbor counts per cell, packed 7 bits apiece (counts <= 64), 9 per limb.
// Keys reference only cell indices and counts, so refinement commutes with
// any relabeling: that is what makes the final certificate canonical.
using Key = std::array<std::uint64_t, 8>;

void refine(const Graph& g, Part& p) {
    const int n = p.n;
    for (;;) {
        std::array<std::uint64_t, 64> mask{};
        for (int c = 0; c < p.cells; ++c) {
            std::uint64_t m = 0;
            for (int i = p.start[c]; i < p.start[c + 1]; ++i) m |= 1ull << p.order[i];
            mask[c] = m;
        }
        std::array<Key, 64> key{};
        for (int v = 0; v < n; ++v) {
            for (int c = 0; c < p.cells; ++c) {
                std::uint64_t cnt = static_cast<std::uint64_t>(std::popcount(g.neighbors(v) & mask[c]));
                key[v][c / 9] |= cnt << (7 * (c % 9));
            }
        }
        Part np;
        np.n = n;
        int w = 0;
        bool split = false;
        for (int c = 0; c < p.cells; ++c) {
            int b = p.start[c], e = p.start[c + 1];
            int len = e - b;
            std::array<int, 64> buf;
            std::copy(p.order.begin() + b, p.order.begin() + e, buf.begin());
            std::stable_sort(buf.begin(), buf.begin() + len, [&](int a, int bb) { return key[a] < key[bb]; });
            int i = 0;
            while (i < len) {
                int j = i;
                while (j < len && key[buf[j]] == key[buf[i]]) ++j;
                np.start[np.cells++] = w;
                for (int t = i; t < j; ++t) np.order[w++] = buf[t];
                if (j - i != len) split = true;
                i = j;
            }
        }
        np.start[np.cells] = n;
        rebuild_cell_of(np);
        p = np;
        if (!split) return;
    }
}

Part individualize(const Part& p, int v) {
    Part np;
    np.n = p.n;
    int w = 0;
    for (int c = 0; c < p.cells; ++c) {
        int b = p.start[c], e = p.start[c + 1];
        if (p.cell_of[v] != c) {
            np.start[np.cells++] = w;
            for (int i = b; i < e; ++i) np.order[w++] = p.order[i];
        } else {
            np.start[np.cells++] = w;
            np.order[w++] = v;
            np.start[np.cells++] = w;
            for (int i = b; i < e; ++i)
                if (p.order[i] != v) np.order[w++] = p.order[i];
        }
    }
    np.start[np.cells] = p.n;
    rebuild_cell_of(np);
    return np;
}

// ---- search ----

struct UnionFind {
    std::array<int, 64> parent;
    void init(int n) {
        for (int v = 0; v < n; ++v) parent[v] = v;
    }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void merge(int a, int b) { parent[find(a)] = find(b); }
};

bool is_automorphism(const Graph& g, const std::vector<int>& gamma) {
    for (int u = 0; u < g.n(); ++u) {
        std::uint64_t row = g.neighbors(u);
        std::uint64_t mapped = 0;
        std::uint64_t r = row;
        while (r) {
            int v = std::countr_zero(r);
            r &= r - 1;
            mapped |= 1ull << gamma[v];
        }
        if (mapped != g.neighbors(gamma[u])) return false;
    }
    return true;
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::string first_cert, best_cert;
    std::vector<int> first_lab, best_lab;
    std::vector<std::vector<int>> gens;
    std::vector<int> prefix;
    std::uint64_t nodes = 0;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.n()) {}

    void record_automorphism(const std::vector<int>& lab_a, const std::vector<int>& lab_b) {
        // relabeled(lab_a) == relabeled(lab_b) implies lab_b^{-1} . lab_a is an automorphism
        std::vector<int> inv(n), gamma(n);
        for (int v = 0; v < n; ++v) inv[lab_b[v]] = v;
        bool identity = true;
        for (int v = 0; v < n; ++v) {
            gamma[v] = inv[lab_a[v]];
            identity &= gamma[v] == v;
        }
        if (identity) return;
        if (!is_automorphism(g, gamma)) throw std::logic_error("canonical search derived a non-automorphism");
        for (const auto& known : gens)
            if (known == gamma) return;
        gens.push_back(std::move(gamma));
    }

    void leaf(const Part& p) {
        std::vector<int> lab(n);
        for (int i = 0; i < n; ++i) lab[p.order[i]] = i;
        std::string cert = emit_graph6(g.relabeled(lab));
        if (first_cert.empty()) {
            first_cert = cert;
            first_lab = lab;
            best_cert = std::move(cert);
            best_lab = std::move(lab);
            return;
        }
        if (cert == first_cert) record_automorphism(lab, first_lab);
        if (cert < best_cert) {
            best_cert = std::move(cert);
            best_lab = std::move(lab);
        } else if (cert == best_cert && best_cert != first_cert) {
            record_automorphism(lab, best_lab);
        }
    }

    // Skip a branch vertex lying in the orbit of an already-explored sibling
    // under automorphisms that fix the individualized prefix pointwise: its
    // subtree is an exact mirror and contributes no new certificates.
    bool orbit_pruned(int v, const std::vector<int>& explored) {
        if (explored.empty() || gens.empty()) return false;
        UnionFind uf;
        uf.init(n);
        for (const auto& gamma : gens) {
            bool fixes = true;
            for (int u : prefix)
                if (gamma[u] != u) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int u = 0; u < n; ++u) uf.merge(u, gamma[u]);
        }
        for (int u : explored)
            if (uf.find(u) == uf.find(v)) return true;
        return false;
    }

    void explore(const Part& p) {
        if (++nodes > 200'000'000ull) throw UnsupportedScale("canonical labeling search exceeded its node budget");
        if (p.cells == n) {
            leaf(p);
            return;
        }
        int tc = 0;
        while (p.start[tc + 1] - p.start[tc] == 1) ++tc;
        std::vector<int> cand(p.order.begin() + p.start[tc], p.order.begin() + p.start[tc + 1]);
        std::vector<int> explored;
        for (int v : cand) {
            if (orbit_pruned(v, explored)) continue;
            explored.push_back(v);
            prefix.push_back(v);
            Part child = individualize(p, v);
            refine(g, child);
            explore(child);
            prefix.pop_back();
        }
    }
};

}  // namespace

CanonResult canonical_labeling(const Graph& g) {
    Part p = unit_partition(g.n());
    refine(g, p);
    CanonSearch search(g);
    search.explore(p);
    return CanonResult{std::move(search.best_lab), std::move(search.best_cert), std::move(search.gens)};
}

Graph canonical_graph(const Graph& g) {
    return g.relabeled(canonical_labeling(g).labeling);
}

CanonicalForm canonical(const Graph& g) {
    CanonResult r = canonical_labeling(g);
    return CanonicalForm{std::move(r.bytes), automorphism_count(g)};
}

// ---- explicit automorphism enumeration ----

namespace {

struct AutSearch {
    const Graph& g;
    int n;
    std::uint64_t max_nodes;
    std::uint64_t nodes = 0;
    std::array<int, 64> order{};
    std::array<std::uint64_t, 64> degree_mask{};  // vertices of equal degree
    std::vector<int> phi;
    std::uint64_t used = 0;
    std::uint64_t count = 0;
    std::vector<std::vector<int>>* sink;

    AutSearch(const Graph& graph, std::uint64_t budget, std::vector<std::vector<int>>* out)
        : g(graph), n(graph.n()), max_nodes(budget), phi(graph.n(), -1), sink(out) {
        std::array<int, 64> deg{};
        for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.begin() + n, [&](int a, int b) { return deg[a] > deg[b]; });
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u)
                if (deg[u] == deg[v]) degree_mask[v] |= 1ull << u;
    }

    void run(int depth) {
        if (++nodes > max_nodes) throw UnsupportedScale("automorphism enumeration exceeded its node budget");
        if (depth == n) {
            ++count;
            if (sink) sink->push_back(phi);
            return;
        }
        int v = order[depth];
        std::uint64_t cand = degree_mask[v] & ~used;
        for (int d = 0; d < depth && cand; ++d) {
            int u = order[d];
            // image must agree with adjacency and non-adjacency alike
            cand &= g.has_edge(u, v) ? g.neighbors(phi[u]) : (~g.neighbors(phi[u]) & g.full_mask());
        }
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            phi[v] = w;
            used |= 1ull << w;
            run(depth + 1);
            used &= ~(1ull << w);
            phi[v] = -1;
        }
    }
};

}  // namespace

std::vector<std::vector<int>> all_automorphisms(const Graph& g, std::uint64_t max_nodes) {
    std::vector<std::vector<int>> out;
    AutSearch s(g, max_nodes, &out);
    s.run(0);
    return out;
}

std::uint64_t automorphism_count(const Graph& g, std::uint64_t max_nodes) {
    AutSearch s(g, max_nodes, nullptr);
    s.run(0);
    return s.count;
}

std::vector<int> vertex_orbits(int n, const std::vector<std::vector<int>>& perms) {
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& perm : perms)
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(perm[v]);
            if (a != b) parent[a] = b;
        }
    std::vector<int> orbit(n);
    std::vector<int> rep_id(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (rep_id[r] < 0) rep_id[r] = next++;
        orbit[v] = rep_id[r];
    }
    return orbit;
}

}  // namespace turan
