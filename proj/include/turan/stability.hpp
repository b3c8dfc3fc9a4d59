#pragma once

// Edit distance to complete multipartite graphs with at most k classes, and
// the instance classifier built on exact extremal search.

#include <cstdint>
#include <string>
#include <vector>

#include "turan/bigint.hpp"
#include "turan/extremal.hpp"
#include "turan/graph.hpp"
#include "turan/multipartite.hpp"

namespace turan {

enum class DistanceMode { Exact, Heuristic };

struct PartitionDistance {
    int cost = 0;  // edges inside classes + nonadjacent cross-class pairs
    std::vector<std::uint64_t> classes;  // nonempty classes, first-use order
    DistanceMode mode = DistanceMode::Exact;
};

struct DistanceOptions {
    int restarts = 32;                       // heuristic mode
    std::uint64_t seed = 1;                  // heuristic mode
    std::uint64_t max_nodes = 200'000'000;   // exact mode assignment budget
};

// Minimum edit distance from g to a complete multipartite graph on the same
// vertices with at most k parts (empty parts allowed). Exact mode proves the
// minimum; heuristic mode is an upper bound from seeded local search.
PartitionDistance multipartite_distance(const Graph& g, int k, DistanceMode mode,
                                        const DistanceOptions& opts = {});

enum class Classification { TuranGood, WeaklyTuranGood, Neither };

// Finite-n verdict; the small_n flag records that it is evidence at this n,
// not an asymptotic statement.
struct StabilityVerdict {
    int n = 0;
    std::string h_graph6;
    std::string f_graph6;
    int k = 0;  // chi(f) - 1
    Count ex_value;
    Count turan_host_count;
    Count best_host_count;
    PartSizes best_parts{std::vector<int>{1}};
    Classification classification = Classification::Neither;
    std::vector<std::string> witnesses;
    std::vector<PartitionDistance> witness_distances;
    std::uint64_t suppressed_witnesses = 0;
    bool small_n = true;
};

StabilityVerdict classify(int n, const Graph& h, const Graph& f, const SearchConfig& cfg);

struct ProfileRow {
    std::string graph6;  // canonical
    Count count;
    PartitionDistance distance;
};

struct ProfileTable {
    Count ex_value;
    std::uint64_t slack = 0;
    int k = 0;
    std::vector<ProfileRow> rows;  // count descending, then graph6 ascending
};

// Every f-free class on n vertices with count within slack of the optimum,
// with its exact multipartite distance.
ProfileTable near_extremal_profile(int n, const Graph& h, const Graph& f, std::uint64_t slack,
                                   const SearchConfig& cfg);

}  // namespace turan
