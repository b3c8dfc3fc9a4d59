#pragma once

// Canonical labeling by individualization-refinement with automorphism
// pruning, plus exact automorphism enumeration by induced backtracking.
// The two are independent code paths on purpose: automorphism counts
// cross-check the canonical machinery in the test suite.

#include <cstdint>
#include <string>
#include <vector>

#include "turan/bigint.hpp"
#include "turan/graph.hpp"

namespace turan {

struct CanonResult {
    std::vector<int> labeling;                 // vertex -> canonical index
    std::string bytes;                         // graph6 of the relabeled graph
    std::vector<std::vector<int>> generators;  // automorphisms found during the search
};

struct CanonicalForm {
    std::string bytes;
    std::uint64_t aut_order;
};

// Invariant: two graphs get equal bytes iff they are isomorphic.
CanonResult canonical_labeling(const Graph& g);
CanonicalForm canonical(const Graph& g);
Graph canonical_graph(const Graph& g);

// Every adjacency-preserving bijection of g onto itself, enumerated
// explicitly. Throws UnsupportedScale past the node budget.
std::vector<std::vector<int>> all_automorphisms(const Graph& g, std::uint64_t max_nodes = 50'000'000);
std::uint64_t automorphism_count(const Graph& g, std::uint64_t max_nodes = 50'000'000);

// Orbit id per vertex under the group generated by perms (union-find closure).
std::vector<int> vertex_orbits(int n, const std::vector<std::vector<int>>& perms);

}  // namespace turan
