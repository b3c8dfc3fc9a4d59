#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "turan/canonical.hpp"
#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/errors.hpp"
#include "turan/graph.hpp"
#include "turan/multipartite.hpp"
#include "turan/report_json.hpp"
#include "turan/rng.hpp"
#include "turan/stability.hpp"

using turan::Classification;
using turan::DistanceMode;
using turan::DistanceOptions;
using turan::FamilyKind;
using turan::Graph;
using turan::SearchConfig;

namespace {

Graph family(FamilyKind kind, std::vector<int> params) { return turan::build({kind, std::move(params)}); }

// recompute the edit cost of the reported class masks and check they
// partition the vertex set into at most k nonempty classes
int mask_cost(const Graph& g, const std::vector<std::uint64_t>& classes, int k) {
    if (classes.empty() || classes.size() > static_cast<std::size_t>(k)) return -1;
    std::uint64_t seen = 0;
    for (std::uint64_t m : classes) {
        if (m == 0 || (m & seen)) return -1;
        seen |= m;
    }
    if (seen != g.full_mask()) return -1;
    int cost = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            bool same = false;
            for (std::uint64_t m : classes)
                if (((m >> u) & 1) && ((m >> v) & 1)) same = true;
            if (same == g.has_edge(u, v)) ++cost;
        }
    return cost;
}

}  // namespace

TEST_SUITE("stability") {

TEST_CASE("exact distances on fixed graphs") {
    CHECK(turan::multipartite_distance(family(FamilyKind::Cycle, {5}), 2, DistanceMode::Exact).cost == 3);
    CHECK(turan::multipartite_distance(turan::realize(turan::turan_parts(7, 3)), 3, DistanceMode::Exact).cost == 0);
    Graph octa_minus = turan::realize(turan::PartSizes({2, 2, 2})).without_edge(0, 2);
    CHECK(turan::multipartite_distance(octa_minus, 3, DistanceMode::Exact).cost == 1);
    CHECK(turan::multipartite_distance(Graph(5), 1, DistanceMode::Exact).cost == 0);
    CHECK(turan::multipartite_distance(family(FamilyKind::Clique, {4}), 1, DistanceMode::Exact).cost == 6);
}

TEST_CASE("exact distance matches the assignment sweep on random graphs") {
    turan::Rng rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + static_cast<int>(rng.below(5));
        int k = 1 + static_cast<int>(rng.below(3));
        Graph g = oracle::random_graph(rng, n, 0.5);
        turan::PartitionDistance d = turan::multipartite_distance(g, k, DistanceMode::Exact);
        CHECK(d.cost == oracle::multipartite_distance(g, k));
        CHECK(d.mode == DistanceMode::Exact);
        CHECK(mask_cost(g, d.classes, k) == d.cost);
    }
}

TEST_CASE("zero distance characterizes complete multipartite graphs") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : oracle::catalogue(n)) {
            // g is complete multipartite with <= 3 parts iff the complement
            // splits into at most 3 components, each a clique
            Graph co = g.complement();
            std::vector<int> comp(static_cast<std::size_t>(n), -1);
            int classes = 0;
            bool cliques = true;
            for (int v = 0; v < n; ++v) {
                if (comp[static_cast<std::size_t>(v)] >= 0) continue;
                std::vector<int> members;
                std::vector<int> stack = {v};
                comp[static_cast<std::size_t>(v)] = classes;
                while (!stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    members.push_back(u);
                    for (int w = 0; w < n; ++w)
                        if (co.has_edge(u, w) && comp[static_cast<std::size_t>(w)] < 0) {
                            comp[static_cast<std::size_t>(w)] = classes;
                            stack.push_back(w);
                        }
                }
                for (std::size_t a = 0; a < members.size(); ++a)
                    for (std::size_t b = a + 1; b < members.size(); ++b)
                        if (!co.has_edge(members[a], members[b])) cliques = false;
                ++classes;
            }
            bool is_multipartite = cliques && classes <= 3;
            bool zero = turan::multipartite_distance(g, 3, DistanceMode::Exact).cost == 0;
            CHECK(zero == is_multipartite);
        }
    }
}

TEST_CASE("the heuristic never undercuts the exact distance") {
    turan::Rng rng(515);
    int matches = 0, total = 0;
    for (int trial = 0; trial < 80; ++trial) {
        int n = 4 + static_cast<int>(rng.below(4));
        int k = 2 + static_cast<int>(rng.below(2));
        Graph g = oracle::random_graph(rng, n, 0.5);
        int exact = turan::multipartite_distance(g, k, DistanceMode::Exact).cost;
        turan::PartitionDistance h = turan::multipartite_distance(g, k, DistanceMode::Heuristic);
        CHECK(h.cost >= exact);
        CHECK(h.mode == DistanceMode::Heuristic);
        CHECK(mask_cost(g, h.classes, k) == h.cost);
        if (h.cost == exact) ++matches;
        ++total;
    }
    // seeded local search with default restarts should land on the optimum
    // on nearly every instance this small
    CHECK(matches * 100 >= total * 95);
}

TEST_CASE("heuristic distances are seed-reproducible") {
    turan::Rng source(99);
    Graph g = oracle::random_graph(source, 8, 0.5);
    DistanceOptions opts;
    opts.seed = 7;
    turan::PartitionDistance a = turan::multipartite_distance(g, 3, DistanceMode::Heuristic, opts);
    turan::PartitionDistance b = turan::multipartite_distance(g, 3, DistanceMode::Heuristic, opts);
    CHECK(a.cost == b.cost);
    CHECK(a.classes == b.classes);
}

TEST_CASE("distance validates inputs and honors the node budget") {
    CHECK_THROWS_AS((void)turan::multipartite_distance(Graph(4), 0, DistanceMode::Exact),
                    turan::InvalidInstance);
    DistanceOptions starved;
    starved.max_nodes = 2;
    CHECK_THROWS_AS((void)turan::multipartite_distance(family(FamilyKind::Cycle, {7}), 3,
                                                       DistanceMode::Exact, starved),
                    turan::BudgetExceeded);
}

TEST_CASE("classification of the octahedron instance") {
    turan::StabilityVerdict v =
        turan::classify(6, family(FamilyKind::Clique, {3}), family(FamilyKind::Clique, {4}), SearchConfig{});
    CHECK(v.n == 6);
    CHECK(v.k == 3);
    CHECK(v.ex_value.as_uint64() == 8);
    CHECK(v.turan_host_count.as_uint64() == 8);
    CHECK(v.best_host_count.as_uint64() == 8);
    CHECK(v.classification == Classification::TuranGood);
    CHECK(v.best_parts.sizes() == std::vector<int>({2, 2, 2}));
    REQUIRE(v.witnesses.size() == 1);
    CHECK(v.witnesses[0] == turan::canonical(turan::realize(turan::PartSizes({2, 2, 2}))).bytes);
    REQUIRE(v.witness_distances.size() == 1);
    CHECK(v.witness_distances[0].cost == 0);
    CHECK(v.small_n);
}

TEST_CASE("classification of the four-cycle in book-free hosts") {
    turan::StabilityVerdict v =
        turan::classify(7, family(FamilyKind::Cycle, {4}), family(FamilyKind::BookF2, {}), SearchConfig{});
    CHECK(v.k == 2);
    CHECK(v.ex_value.as_uint64() == 18);
    CHECK(v.classification == Classification::TuranGood);
    CHECK(v.best_parts.sizes() == std::vector<int>({4, 3}));
    REQUIRE(v.witnesses.size() == 3);
    CHECK(v.witnesses[0] == "F?~v_");
    CHECK(v.witnesses[1] == "F?~vg");
    CHECK(v.witnesses[2] == "F]oxw");
    REQUIRE(v.witness_distances.size() == 3);
    CHECK(v.witness_distances[0].cost == 0);
    CHECK(v.witness_distances[1].cost == 1);
    CHECK(v.witness_distances[2].cost == 1);
    CHECK(v.suppressed_witnesses == 0);
}

TEST_CASE("classification of edges in pentagon-free hosts") {
    turan::StabilityVerdict v =
        turan::classify(6, family(FamilyKind::Clique, {2}), family(FamilyKind::Cycle, {5}), SearchConfig{});
    CHECK(v.k == 2);
    CHECK(v.ex_value.as_uint64() == 9);
    CHECK(v.classification == Classification::TuranGood);
    CHECK(v.best_parts.sizes() == std::vector<int>({3, 3}));
}

TEST_CASE("classification rejects hosts whose chromatic bound cannot separate") {
    CHECK_THROWS_AS((void)turan::classify(6, family(FamilyKind::Clique, {3}),
                                          family(FamilyKind::Clique, {3}), SearchConfig{}),
                    turan::InvalidInstance);
    CHECK_THROWS_AS((void)turan::classify(5, family(FamilyKind::Clique, {4}),
                                          family(FamilyKind::Clique, {3}), SearchConfig{}),
                    turan::InvalidInstance);
}

TEST_CASE("verdict invariants tie the counts, witnesses, and distances together") {
    struct Instance {
        int n;
        Graph h, f;
    };
    std::vector<Instance> instances = {
        {5, family(FamilyKind::Clique, {2}), family(FamilyKind::Clique, {3})},
        {6, family(FamilyKind::Clique, {3}), family(FamilyKind::Clique, {4})},
        {6, family(FamilyKind::Path, {3}), family(FamilyKind::Clique, {3})},
        {6, family(FamilyKind::Cycle, {4}), family(FamilyKind::BookF2, {})},
    };
    for (const auto& inst : instances) {
        turan::StabilityVerdict v = turan::classify(inst.n, inst.h, inst.f, SearchConfig{});
        CHECK(v.ex_value >= v.best_host_count);
        CHECK(v.best_host_count >= v.turan_host_count);
        CHECK(v.turan_host_count == turan::count_copies_multipartite(inst.h, turan::turan_parts(inst.n, v.k)));
        CHECK(v.witness_distances.size() == v.witnesses.size());
        bool any_zero = false;
        for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
            Graph w = turan::parse_graph6(v.witnesses[i]);
            CHECK(turan::is_free(w, inst.f));
            CHECK(turan::count_copies(inst.h, w) == v.ex_value);
            CHECK(turan::multipartite_distance(w, v.k, DistanceMode::Exact).cost ==
                  v.witness_distances[i].cost);
            if (v.witness_distances[i].cost == 0) any_zero = true;
        }
        if (v.classification == Classification::TuranGood) {
            CHECK(v.ex_value == v.turan_host_count);
            CHECK(any_zero);
        }
        if (any_zero) CHECK(v.classification != Classification::Neither);
    }
}

TEST_CASE("slack zero reproduces exactly the extremal witnesses") {
    Graph k3 = family(FamilyKind::Clique, {3});
    Graph k4 = family(FamilyKind::Clique, {4});
    turan::ProfileTable t = turan::near_extremal_profile(7, k3, k4, 0, SearchConfig{});
    CHECK(t.ex_value.as_uint64() == 12);
    CHECK(t.k == 3);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].graph6 == "FF~vW");
    CHECK(t.rows[0].count.as_uint64() == 12);
    CHECK(t.rows[0].distance.cost == 0);

    Graph k2 = family(FamilyKind::Clique, {2});
    turan::ProfileTable e = turan::near_extremal_profile(5, k2, k3, 0, SearchConfig{});
    REQUIRE(e.rows.size() == 1);
    CHECK(e.rows[0].graph6 == turan::canonical(turan::realize(turan::PartSizes({3, 2}))).bytes);
    CHECK(e.rows[0].count.as_uint64() == 6);
    // the pentagon sits one edge below the bound, so it only joins at slack 1
    turan::ProfileTable e1 = turan::near_extremal_profile(5, k2, k3, 1, SearchConfig{});
    std::string c5 = turan::canonical(family(FamilyKind::Cycle, {5})).bytes;
    bool has_c5 = false;
    for (const auto& row : e1.rows)
        if (row.graph6 == c5) has_c5 = true;
    CHECK(has_c5);
    CHECK(e1.rows.size() > e.rows.size());
}

TEST_CASE("the slack-two triangle profile on seven vertices") {
    Graph k3 = family(FamilyKind::Clique, {3});
    Graph k4 = family(FamilyKind::Clique, {4});
    turan::ProfileTable t = turan::near_extremal_profile(7, k3, k4, 2, SearchConfig{});
    REQUIRE(t.rows.size() == 3);
    CHECK(t.rows[0].graph6 == "FF~vW");
    CHECK(t.rows[0].count.as_uint64() == 12);
    CHECK(t.rows[0].distance.cost == 0);
    CHECK(t.rows[1].graph6 == "FI~tw");
    CHECK(t.rows[1].count.as_uint64() == 10);
    CHECK(t.rows[1].distance.cost == 1);
    CHECK(t.rows[2].graph6 == "FqN~o");
    CHECK(t.rows[2].count.as_uint64() == 10);
    CHECK(t.rows[2].distance.cost == 3);
}

TEST_CASE("profile rows are sorted and their fields recompute") {
    Graph k2 = family(FamilyKind::Clique, {2});
    Graph k3 = family(FamilyKind::Clique, {3});
    turan::ProfileTable t = turan::near_extremal_profile(6, k2, k3, 2, SearchConfig{});
    CHECK(t.ex_value.as_uint64() == 9);
    CHECK(t.slack == 2);
    REQUIRE(!t.rows.empty());
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        const auto& a = t.rows[i - 1];
        const auto& b = t.rows[i];
        bool ordered = a.count > b.count || (a.count == b.count && a.graph6 < b.graph6);
        CHECK(ordered);
    }
    for (const auto& row : t.rows) {
        Graph g = turan::parse_graph6(row.graph6);
        CHECK(turan::canonical(g).bytes == row.graph6);
        CHECK(turan::is_free(g, k3));
        CHECK(turan::count_copies(k2, g) == row.count);
        CHECK(turan::multipartite_distance(g, 2, DistanceMode::Exact).cost == row.distance.cost);
        CHECK(mask_cost(g, row.distance.classes, 2) == row.distance.cost);
        CHECK(row.count.as_uint64() + 2 >= 9);
    }
}

TEST_CASE("profile csv lists the rows behind a fixed header") {
    Graph k3 = family(FamilyKind::Clique, {3});
    Graph k4 = family(FamilyKind::Clique, {4});
    turan::ProfileTable t = turan::near_extremal_profile(6, k3, k4, 1, SearchConfig{});
    std::string csv = turan::profile_csv(t);
    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "graph6,count,distance,partition");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        REQUIRE(rows < t.rows.size());
        std::istringstream fields(line);
        std::string g6, count, distance, partition;
        REQUIRE(std::getline(fields, g6, ','));
        REQUIRE(std::getline(fields, count, ','));
        REQUIRE(std::getline(fields, distance, ','));
        REQUIRE(std::getline(fields, partition));
        CHECK(g6 == t.rows[rows].graph6);
        CHECK(count == t.rows[rows].count.str());
        CHECK(distance == std::to_string(t.rows[rows].distance.cost));
        CHECK(!partition.empty());
        ++rows;
    }
    CHECK(rows == t.rows.size());
}

}  // TEST_SUITE
