#pragma once

// Complete multipartite hosts described by part sizes alone. Copy counts in
// such hosts come from a closed formula over proper colorings of the pattern,
// so no host graph is ever materialized for counting.

#include <cstdint>
#include <vector>

#include "turan/bigint.hpp"
#include "turan/graph.hpp"

namespace turan {

class PartSizes {
  public:
    explicit PartSizes(std::vector<int> sizes);  // normalizes to nonincreasing order
    const std::vector<int>& sizes() const { return sizes_; }
    int total() const;
    int count() const { return static_cast<int>(sizes_.size()); }
    bool operator==(const PartSizes& o) const = default;

  private:
    std::vector<int> sizes_;
};

// n mod k parts of size ceil(n/k), the rest floor(n/k).
PartSizes turan_parts(int n, int k);

Graph realize(const PartSizes& p);

// Sum over partitions of V(h) into independent classes and injective
// class-to-part assignments of falling-factorial products, divided by |Aut(h)|.
Count count_copies_multipartite(const Graph& h, const PartSizes& p);

struct Rational {
    std::int64_t num, den;
};
Rational min_part_fraction(const PartSizes& p);

enum class OptimizeMode { Exact, HillClimb };

struct PartMove {
    int donor_size, recipient_size;  // sizes before the move
    std::vector<int> parts_after;
};

struct OptimizationResult {
    PartSizes best;
    Count count;
    OptimizeMode mode;
    std::vector<PartSizes> co_optimal;  // every maximizer found
    std::vector<PartMove> moves;        // improving path of the winning run
};

struct OptimizeOptions {
    int restarts = 8;
    std::uint64_t seed = 1;
    std::uint64_t max_candidates = 5'000'000;  // exact-mode budget
};

// Maximize copies of h over part-size vectors of n into k positive parts.
// Exact mode enumerates every candidate; ties prefer the most balanced vector
// and the full co-optimal list is reported.
OptimizationResult optimize_parts(const Graph& h, int n, int k, OptimizeMode mode,
                                  const OptimizeOptions& opts = {});

}  // namespace turan
