#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

enum class FamilyKind {
    Clique,
    Path,
    Cycle,
    Star,
    CompleteMultipartite,
    Turan,
    UnionOfCliques,
    BookF2,
};

struct FamilySpec {
    FamilyKind kind;
    std::vector<int> params;
};

// The named graph with a fixed vertex order: cliques/paths/cycles label 0..n-1
// along the structure, stars put the center at 0, multipartite families lay
// parts out as consecutive blocks (largest first), unionOfCliques keeps the
// given block order, and bookF2 is the two triangles (0,1,2) and (0,3,4).
Graph build(const FamilySpec& spec);

// Second graph relabeled to h.n()..h.n()+hPrime.n()-1.
Graph disjoint_union(const Graph& h, const Graph& h_prime);

// Two graphs with designated cliques, plus a wiring pattern between them.
// Each pattern pair (y, x) joins vertex y of hPrime to vertex x of h; the
// pattern must stay inside the designated cliques.
struct H2Spec {
    Graph h;
    std::uint64_t x = 0;  // clique in h
    Graph h_prime;
    std::uint64_t y = 0;  // clique in hPrime
    std::vector<std::pair<int, int>> pattern;
};

Graph build_h2(const H2Spec& spec);

// A base graph plus `anchors` new vertices v_1..v_k forming a clique, wired
// into the base by extraEdges. Edges are given in assembled coordinates and
// must join a base vertex to an anchor.
struct H3Spec {
    Graph h;
    int anchors = 1;
    std::vector<std::pair<int, int>> extra_edges;
};

// reason is empty when valid, "clique i" when no K_k contains v_i while
// avoiding v_j for j > i, and "chromatic" when the chromatic number is not k.
struct H3Result {
    Graph graph;
    bool valid = false;
    std::string reason;
};

H3Result assemble_h3(const H3Spec& spec);

Graph petersen();

}  // namespace turan
