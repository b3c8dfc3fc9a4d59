#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "turan/canonical.hpp"
#include "turan/constructions.hpp"
#include "turan/graph.hpp"
#include "turan/rng.hpp"

using turan::FamilyKind;
using turan::FamilySpec;
using turan::Graph;

namespace {

Graph family(FamilyKind kind, std::vector<int> params) { return turan::build({kind, std::move(params)}); }

// closure of the generator set under composition, as permutation vectors
std::size_t group_order(int n, const std::vector<std::vector<int>>& gens) {
    std::set<std::vector<int>> seen;
    std::vector<int> id(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
    seen.insert(id);
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& p : frontier)
            for (const auto& g : gens) {
                std::vector<int> q(static_cast<std::size_t>(n));
                for (int v = 0; v < n; ++v)
                    q[static_cast<std::size_t>(v)] =
                        g[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])];
                if (seen.insert(q).second) next.push_back(std::move(q));
            }
        frontier = std::move(next);
    }
    return seen.size();
}

}  // namespace

TEST_SUITE("canonical") {

TEST_CASE("certificates are invariant under relabeling") {
    turan::Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng.below(9));
        Graph g = oracle::random_graph(rng, n, 0.5);
        Graph shuffled = g.relabeled(oracle::random_permutation(rng, n));
        CHECK(turan::canonical(g).bytes == turan::canonical(shuffled).bytes);
    }
}

TEST_CASE("certificates separate non-isomorphic graphs (complete catalogues)") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<Graph> classes = oracle::catalogue(n);
        std::set<std::string> bytes;
        for (const Graph& g : classes) bytes.insert(turan::canonical(g).bytes);
        CHECK(bytes.size() == classes.size());
    }
}

TEST_CASE("certificates agree with pairwise isomorphism on random pairs") {
    turan::Rng rng(32);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng.below(6));
        Graph a = oracle::random_graph(rng, n, 0.5);
        Graph b = oracle::random_graph(rng, n, 0.5);
        bool same_bytes = turan::canonical(a).bytes == turan::canonical(b).bytes;
        CHECK(same_bytes == oracle::isomorphic(a, b));
    }
}

TEST_CASE("cospectral-style pairs with equal degree sequences are separated") {
    // C6 vs two disjoint triangles: both 2-regular on 6 vertices
    Graph c6 = family(FamilyKind::Cycle, {6});
    Graph two_k3 = family(FamilyKind::UnionOfCliques, {3, 3});
    CHECK(turan::canonical(c6).bytes != turan::canonical(two_k3).bytes);
    // K_{3,3} vs the triangular prism: both 3-regular on 6 vertices
    Graph k33 = family(FamilyKind::CompleteMultipartite, {3, 3});
    Graph prism = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    CHECK(turan::canonical(k33).bytes != turan::canonical(prism).bytes);
}

TEST_CASE("automorphism orders match a permutation-scan oracle") {
    std::vector<Graph> cases = {
        family(FamilyKind::Path, {3}),
        family(FamilyKind::Path, {4}),
        family(FamilyKind::Clique, {4}),
        family(FamilyKind::Cycle, {5}),
        family(FamilyKind::Cycle, {6}),
        family(FamilyKind::Star, {3}),
        family(FamilyKind::UnionOfCliques, {2, 2}),
        family(FamilyKind::BookF2, {}),
        family(FamilyKind::CompleteMultipartite, {3, 3}),
        family(FamilyKind::CompleteMultipartite, {2, 2, 2}),
    };
    for (const Graph& g : cases) CHECK(turan::automorphism_count(g) == oracle::automorphisms(g));

    turan::Rng rng(33);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng.below(7));
        Graph g = oracle::random_graph(rng, n, 0.5);
        CHECK(turan::automorphism_count(g) == oracle::automorphisms(g));
    }
}

TEST_CASE("known automorphism group orders") {
    CHECK(turan::automorphism_count(family(FamilyKind::Cycle, {5})) == 10);     // dihedral
    CHECK(turan::automorphism_count(family(FamilyKind::Clique, {4})) == 24);    // symmetric
    CHECK(turan::automorphism_count(family(FamilyKind::Path, {3})) == 2);       // one reflection
    CHECK(turan::automorphism_count(family(FamilyKind::Cycle, {6})) == 12);
    CHECK(turan::automorphism_count(family(FamilyKind::BookF2, {})) == 8);
    CHECK(turan::automorphism_count(family(FamilyKind::CompleteMultipartite, {3, 3})) == 72);
    CHECK(turan::automorphism_count(family(FamilyKind::CompleteMultipartite, {2, 2, 2})) == 48);
    CHECK(turan::automorphism_count(turan::petersen()) == 120);
    CHECK(oracle::automorphisms(turan::petersen()) == 120);
}

TEST_CASE("canonical_graph realizes its own certificate") {
    turan::Rng rng(34);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng.below(8));
        Graph g = oracle::random_graph(rng, n, 0.5);
        turan::CanonResult res = turan::canonical_labeling(g);
        Graph relabeled = g.relabeled(res.labeling);
        CHECK(turan::emit_graph6(relabeled) == res.bytes);
        CHECK(turan::canonical_graph(g) == relabeled);
        // labeling is a permutation
        std::vector<bool> hit(static_cast<std::size_t>(n), false);
        for (int v : res.labeling) {
            REQUIRE(v >= 0);
            REQUIRE(v < n);
            hit[static_cast<std::size_t>(v)] = true;
        }
        for (bool b : hit) CHECK(b);
    }
}

TEST_CASE("all_automorphisms lists exactly the adjacency-preserving bijections") {
    turan::Rng rng(35);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng.below(5));
        Graph g = oracle::random_graph(rng, n, 0.5);
        auto perms = turan::all_automorphisms(g);
        CHECK(perms.size() == oracle::automorphisms(g));
        std::set<std::vector<int>> distinct(perms.begin(), perms.end());
        CHECK(distinct.size() == perms.size());
        for (const auto& p : perms)
            for (auto [u, v] : g.edges())
                CHECK(g.has_edge(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]));
    }
}

TEST_CASE("labeling generators generate the full automorphism group") {
    std::vector<Graph> cases = {
        family(FamilyKind::Cycle, {5}),
        family(FamilyKind::Clique, {4}),
        family(FamilyKind::CompleteMultipartite, {2, 2, 2}),
        family(FamilyKind::BookF2, {}),
        turan::petersen(),
    };
    for (const Graph& g : cases) {
        turan::CanonResult res = turan::canonical_labeling(g);
        CHECK(group_order(g.n(), res.generators) == turan::automorphism_count(g));
    }
}

TEST_CASE("vertex orbits match reachability under automorphisms") {
    // star: center alone, leaves together
    Graph star = family(FamilyKind::Star, {3});
    auto orbits = turan::vertex_orbits(star.n(), turan::all_automorphisms(star));
    CHECK(orbits[0] != orbits[1]);
    CHECK(orbits[1] == orbits[2]);
    CHECK(orbits[2] == orbits[3]);
    // path on 4: ends vs middles
    Graph p4 = family(FamilyKind::Path, {4});
    auto p4_orbits = turan::vertex_orbits(p4.n(), turan::all_automorphisms(p4));
    CHECK(p4_orbits[0] == p4_orbits[3]);
    CHECK(p4_orbits[1] == p4_orbits[2]);
    CHECK(p4_orbits[0] != p4_orbits[1]);
    // cycle: a single orbit
    Graph c5 = family(FamilyKind::Cycle, {5});
    auto c5_orbits = turan::vertex_orbits(c5.n(), turan::all_automorphisms(c5));
    for (int v = 1; v < 5; ++v) CHECK(c5_orbits[static_cast<std::size_t>(v)] == c5_orbits[0]);

    // random graphs: v,w share an orbit iff some enumerated automorphism maps v to w
    turan::Rng rng(36);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng.below(5));
        Graph g = oracle::random_graph(rng, n, 0.5);
        auto perms = turan::all_automorphisms(g);
        auto orb = turan::vertex_orbits(g.n(), perms);
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w) {
                bool reachable = false;
                for (const auto& p : perms)
                    if (p[static_cast<std::size_t>(v)] == w) reachable = true;
                CHECK((orb[static_cast<std::size_t>(v)] == orb[static_cast<std::size_t>(w)]) ==
                      reachable);
            }
    }
}

}  // TEST_SUITE
