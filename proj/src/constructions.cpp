#include "turan/constructions.hpp"

#include <bit>
#include <numeric>

#include "turan/coloring.hpp"
#include "turan/errors.hpp"
#include "turan/multipartite.hpp"

namespace turan {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw InvalidInstance(what);
}

Graph clique(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

bool is_clique_mask(const Graph& g, std::uint64_t mask) {
    for (std::uint64_t rest = mask; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if ((g.neighbors(v) & rest) != rest) return false;
    }
    return true;
}

}  // namespace

Graph build(const FamilySpec& spec) {
    const auto& p = spec.params;
    switch (spec.kind) {
        case FamilyKind::Clique:
            require(p.size() == 1 && p[0] >= 1, "clique takes one positive order");
            return clique(p[0]);
        case FamilyKind::Path:
            require(p.size() == 1 && p[0] >= 1, "path takes one positive order");
            return path(p[0]);
        case FamilyKind::Cycle: {
            require(p.size() == 1 && p[0] >= 3, "cycle takes one order >= 3");
            Graph g = path(p[0]);
            g.add_edge(p[0] - 1, 0);
            return g;
        }
        case FamilyKind::Star: {
            require(p.size() == 1 && p[0] >= 1, "star takes one positive leaf count");
            require(p[0] + 1 <= kMaxVertices, "star exceeds 64 vertices");
            Graph g(p[0] + 1);
            for (int v = 1; v <= p[0]; ++v) g.add_edge(0, v);
            return g;
        }
        case FamilyKind::CompleteMultipartite:
            return realize(PartSizes(p));
        case FamilyKind::Turan:
            require(p.size() == 2, "turan takes n and k");
            return realize(turan_parts(p[0], p[1]));
        case FamilyKind::UnionOfCliques: {
            require(!p.empty(), "unionOfCliques takes at least one order");
            int total = 0;
            for (int s : p) {
                require(s >= 1, "clique orders must be positive");
                total += s;
            }
            require(total <= kMaxVertices, "union exceeds 64 vertices");
            Graph g(total);
            int start = 0;
            for (int s : p) {
                for (int u = start; u < start + s; ++u)
                    for (int v = u + 1; v < start + s; ++v) g.add_edge(u, v);
                start += s;
            }
            return g;
        }
        case FamilyKind::BookF2: {
            require(p.empty(), "bookF2 takes no parameters");
            Graph g(5);
            g.add_edge(0, 1);
            g.add_edge(0, 2);
            g.add_edge(1, 2);
            g.add_edge(0, 3);
            g.add_edge(0, 4);
            g.add_edge(3, 4);
            return g;
        }
    }
    throw InvalidInstance("unknown family kind");
}

Graph disjoint_union(const Graph& h, const Graph& h_prime) {
    require(h.n() + h_prime.n() <= kMaxVertices, "disjoint union exceeds 64 vertices");
    Graph g(h.n() + h_prime.n());
    for (auto [u, v] : h.edges()) g.add_edge(u, v);
    for (auto [u, v] : h_prime.edges()) g.add_edge(u + h.n(), v + h.n());
    return g;
}

Graph build_h2(const H2Spec& spec) {
    require(spec.x != 0 && (spec.x & ~spec.h.full_mask()) == 0, "x must be a nonempty vertex set of h");
    require(spec.y != 0 && (spec.y & ~spec.h_prime.full_mask()) == 0, "y must be a nonempty vertex set of hPrime");
    require(is_clique_mask(spec.h, spec.x), "x must induce a clique in h");
    require(is_clique_mask(spec.h_prime, spec.y), "y must induce a clique in hPrime");
    Graph g = disjoint_union(spec.h, spec.h_prime);
    for (auto [y, x] : spec.pattern) {
        require(x >= 0 && x < spec.h.n() && ((spec.x >> x) & 1), "pattern endpoint outside x");
        require(y >= 0 && y < spec.h_prime.n() && ((spec.y >> y) & 1), "pattern endpoint outside y");
        g.add_edge(y + spec.h.n(), x);
    }
    return g;
}

namespace {

// Is there a clique of size k containing `v` and avoiding `forbid`?
bool clique_through(const Graph& g, int v, std::uint64_t forbid, int k) {
    struct Search {
        const Graph& g;
        int k;
        bool grow(std::uint64_t chosen, std::uint64_t cand, int size) const {
            if (size == k) return true;
            if (size + std::popcount(cand) < k) return false;
            while (cand) {
                int u = std::countr_zero(cand);
                cand &= cand - 1;
                if (grow(chosen | (1ull << u), cand & g.neighbors(u), size + 1)) return true;
            }
            return false;
        }
    };
    if ((forbid >> v) & 1) return false;
    return Search{g, k}.grow(1ull << v, g.neighbors(v) & ~forbid, 1);
}

}  // namespace

H3Result assemble_h3(const H3Spec& spec) {
    const int base = spec.h.n();
    const int k = spec.anchors;
    require(k >= 1, "at least one anchor is required");
    require(base + k <= kMaxVertices, "assembled graph exceeds 64 vertices");
    Graph g = disjoint_union(spec.h, clique(k));
    for (auto [u, v] : spec.extra_edges) {
        if (u > v) std::swap(u, v);
        require(u >= 0 && u < base, "extra edge must start at a base vertex");
        require(v >= base && v < base + k, "extra edge must end at an anchor");
        g.add_edge(u, v);
    }

    H3Result result{g, true, ""};
    for (int i = 0; i < k; ++i) {
        std::uint64_t later = 0;
        for (int j = i + 1; j < k; ++j) later |= 1ull << (base + j);
        if (!clique_through(g, base + i, later, k)) {
            result.valid = false;
            result.reason = "clique " + std::to_string(i + 1);
            return result;
        }
    }
    if (chromatic_number(g) != k) {
        result.valid = false;
        result.reason = "chromatic";
    }
    return result;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(i, i + 5);                // spokes
        g.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return g;
}

}  // namespace turan
