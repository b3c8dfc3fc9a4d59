#pragma once

// Exact chromatic numbers, proper-coloring enumeration, color-criticality,
// and the bounded refutation search for within-part embeddings.

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct ColoringWitness {
    int k;                               // classes used
    std::vector<std::uint64_t> classes;  // independent sets, first-use order
};

int clique_number(const Graph& g);
int chromatic_number(const Graph& g);
ColoringWitness chromatic_witness(const Graph& g);

// Every proper coloring with at most k classes, one representative per
// partition into color classes. Callback returns false to stop early.
// k below the chromatic number yields an empty stream, not an error.
void for_each_coloring(const Graph& g, int k, const std::function<bool(const ColoringWitness&)>& fn);
std::vector<ColoringWitness> enumerate_colorings(const Graph& g, int k);

struct CriticalityReport {
    int chi;
    std::vector<int> critical_vertices;  // deleting the vertex drops chi
    std::vector<std::pair<int, int>> critical_edges;
};
CriticalityReport criticality(const Graph& f);

struct CriticalRDetail {
    std::optional<int> r;
    int vertex = -1;            // achieving color-critical vertex
    ColoringWitness coloring;   // achieving coloring of f minus that vertex
    int class_index = -1;
};

// Minimum over color-critical vertices v, over proper (chi-1)-colorings of
// f - v, over classes meeting N(v), of |N(v) intersect class|.
CriticalRDetail critical_r_detail(const Graph& f);
std::optional<int> critical_r(const Graph& f);

enum class Safety { Safe, Unsafe, Inconclusive };

struct EmbeddingWitness {
    std::vector<int> part_of;                       // h vertex -> part index
    std::vector<std::pair<int, int>> inside_edges;  // h edges landing inside a part
};

struct SafetyVerdict {
    Safety verdict;
    std::optional<EmbeddingWitness> witness;
    std::uint64_t nodes = 0;
};

// Can a copy of h use a within-part edge after graphs of max degree < r are
// embedded into the parts of a complete multipartite host? Exhaustive over
// placements of h; Unsafe comes with the embedding that realizes it.
SafetyVerdict embedding_safety_check(const Graph& h, int r, const std::vector<int>& part_sizes,
                                     std::uint64_t max_nodes = 50'000'000);

}  // namespace turan
