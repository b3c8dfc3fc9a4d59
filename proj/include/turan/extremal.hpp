#pragma once

// Exact ex(n,h,f) by isomorph-free exhaustive generation of f-free graphs
// (canonical augmentation by vertex extension), Zykov symmetrization as a
// seeded heuristic improver, and the per-vertex copy-degree audit.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "turan/bigint.hpp"
#include "turan/graph.hpp"

namespace turan {

// Enumeration is practical up to n = 12 or so; the hard cap guards the API.
inline constexpr int kEnumerationCap = 12;

struct SearchConfig {
    std::uint64_t max_nodes = 50'000'000;  // candidate extensions examined
    bool maximal_only = false;             // emit only edge-maximal f-free graphs
    int parallelism = 1;
};

struct GenerationStats {
    std::uint64_t nodes = 0;    // candidate extensions examined
    std::uint64_t classes = 0;  // isomorphism classes visited, all levels
    std::uint64_t emitted = 0;  // level-n classes delivered
};

// One representative per isomorphism class of f-free graphs on n vertices,
// in an order independent of cfg.parallelism. Emit returns false to stop.
// Throws BudgetExceeded with progress counts when max_nodes runs out.
void enumerate_free(int n, const Graph& f, const SearchConfig& cfg,
                    const std::function<bool(const Graph&)>& emit, GenerationStats* stats = nullptr);
std::vector<Graph> enumerate_free(int n, const Graph& f, const SearchConfig& cfg);

struct ExtremalReport {
    Count value;                          // ex(n, h, f)
    std::vector<std::string> witnesses;   // canonical graph6, capped
    std::vector<Count> min_copy_degree;   // per witness: min over v of copy_degree
    std::uint64_t suppressed = 0;         // witnesses beyond the cap
    std::uint64_t generated = 0;          // isomorphism classes visited, all levels
};

inline constexpr std::size_t kWitnessCap = 64;

ExtremalReport ex_brute(int n, const Graph& h, const Graph& f, const SearchConfig& cfg);

enum class ZykovStatus { Improved, Unchanged, Refused };

struct ZykovOutcome {
    Graph graph;  // modified on Improved, the input otherwise
    ZykovStatus status;
};

// Replace u's neighborhood by the common neighborhood of s (minus u itself).
// Accepted only when the h-count strictly increases; refused with the input
// graph when the replacement would create a copy of `forbidden`.
ZykovOutcome zykov_step(const Graph& g, const Graph& h, const Graph& forbidden, int u, std::uint64_t s);

// Called after every accepted step with the restart index, the new graph,
// and its h-count; run 0 starts from g0, later runs from random seeds.
using StepObserver = std::function<void(int run, const Graph& g, const Count& count)>;

// Sweeps single-vertex Zykov steps over ordered nonadjacent pairs to a
// fixpoint, restarting from random K_{k+1}-free graphs; returns the best
// graph seen. Its h-count is a certified lower bound for ex(n,h,K_{k+1}).
Graph symmetrize_search(const Graph& g0, const Graph& h, int k, int restarts, std::uint64_t seed,
                        const StepObserver& observer = {});

struct DegreeAuditRow {
    std::string witness;
    Count min_copy_degree;
    double ratio;  // min_copy_degree / reference_min
};

struct DegreeAudit {
    std::vector<std::pair<int, Count>> reference;  // T(n,k) copy degree per part size
    Count reference_min;
    std::vector<DegreeAuditRow> rows;
};

// Per-witness minimum copy degree against the Turán-graph reference values.
DegreeAudit min_copy_degree_audit(const ExtremalReport& report, const Graph& h, int k);

}  // namespace turan
