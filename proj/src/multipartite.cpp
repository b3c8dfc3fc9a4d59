#include "turan/multipartite.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "turan/canonical.hpp"
#include "turan/coloring.hpp"
#include "turan/errors.hpp"
#include "turan/rng.hpp"

namespace turan {

PartSizes::PartSizes(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw InvalidInstance("at least one part is required");
    int sum = 0;
    for (int s : sizes_) {
        if (s < 1) throw InvalidInstance("part sizes must be positive");
        sum += s;
    }
    if (sum > kMaxVertices) throw InvalidInstance("total size exceeds 64 vertices");
    std::sort(sizes_.begin(), sizes_.end(), std::greater<int>());
}

int PartSizes::total() const {
    return std::accumulate(sizes_.begin(), sizes_.end(), 0);
}

PartSizes turan_parts(int n, int k) {
    if (k < 1 || k > n) throw InvalidInstance("turan parts require 1 <= k <= n");
    if (n > kMaxVertices) throw InvalidInstance("total size exceeds 64 vertices");
    std::vector<int> sizes;
    for (int i = 0; i < n % k; ++i) sizes.push_back(n / k + 1);
    for (int i = n % k; i < k; ++i) sizes.push_back(n / k);
    return PartSizes(sizes);
}

Graph realize(const PartSizes& p) {
    Graph g(p.total());
    int start = 0;
    std::vector<std::pair<int, int>> spans;
    for (int s : p.sizes()) {
        spans.emplace_back(start, start + s);
        start += s;
    }
    for (std::size_t a = 0; a < spans.size(); ++a)
        for (std::size_t b = a + 1; b < spans.size(); ++b)
            for (int u = spans[a].first; u < spans[a].second; ++u)
                for (int v = spans[b].first; v < spans[b].second; ++v) g.add_edge(u, v);
    return g;
}

namespace {

unsigned __int128 checked_mul(unsigned __int128 a, std::uint64_t b) {
    if (a != 0 && b != 0 && a > ~static_cast<unsigned __int128>(0) / b)
        throw UnsupportedScale("multipartite count exceeds 128 bits per term");
    return a * b;
}

std::uint64_t falling_u64(int n, int k) {
    // fits: n <= 64, k <= 64, and each term below is checked by the caller
    unsigned __int128 r = 1;
    for (int i = 0; i < k; ++i) r = checked_mul(r, static_cast<std::uint64_t>(n - i));
    if (r > UINT64_MAX) throw UnsupportedScale("falling factorial exceeds 64 bits");
    return static_cast<std::uint64_t>(r);
}

}  // namespace

Count count_copies_multipartite(const Graph& h, const PartSizes& p) {
    const auto& sizes = p.sizes();
    const int k = p.count();
    Count homs;
    // injective homs = sum over partitions into independent classes times
    // injective assignments of classes to (distinguishable) parts
    for_each_coloring(h, k, [&](const ColoringWitness& w) {
        std::vector<int> class_sizes;
        for (std::uint64_t mask : w.classes) class_sizes.push_back(std::popcount(mask));
        const int c = static_cast<int>(class_sizes.size());
        std::function<void(int, std::uint64_t, unsigned __int128)> assign =
            [&](int cls, std::uint64_t used, unsigned __int128 product) {
                if (cls == c) {
                    homs += Count::from_uint128(product);
                    return;
                }
                for (int part = 0; part < k; ++part) {
                    if ((used >> part) & 1) continue;
                    if (sizes[part] < class_sizes[cls]) continue;
                    assign(cls + 1, used | (1ull << part),
                           checked_mul(product, falling_u64(sizes[part], class_sizes[cls])));
                }
            };
        assign(0, 0, 1);
        return true;
    });
    if (homs.is_zero()) return homs;
    return homs.div_exact(automorphism_count(h));
}

Rational min_part_fraction(const PartSizes& p) {
    std::int64_t num = p.sizes().back();
    std::int64_t den = p.total();
    std::int64_t g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

namespace {

// Most balanced wins ties: compare ascending vectors lexicographically.
bool more_balanced(const PartSizes& a, const PartSizes& b) {
    const auto& as = a.sizes();
    const auto& bs = b.sizes();
    for (std::size_t i = as.size(); i-- > 0;) {
        if (as[i] != bs[i]) return as[i] > bs[i];
    }
    return false;
}

void enumerate_partitions(int n, int k, int max_part, std::vector<int>& acc,
                          const std::function<void(const std::vector<int>&)>& fn) {
    if (k == 1) {
        if (n <= max_part) {
            acc.push_back(n);
            fn(acc);
            acc.pop_back();
        }
        return;
    }
    int lo = (n + k - 1) / k;
    for (int first = std::min(max_part, n - (k - 1)); first >= lo; --first) {
        acc.push_back(first);
        enumerate_partitions(n - first, k - 1, first, acc, fn);
        acc.pop_back();
    }
}

std::vector<int> random_composition(int n, int k, Rng& rng) {
    std::vector<int> sizes(k, 0);
    for (int i = 0; i < n; ++i) ++sizes[rng.below(static_cast<std::uint64_t>(k))];
    for (auto& s : sizes) {
        while (s == 0) {
            auto big = std::max_element(sizes.begin(), sizes.end());
            --*big;
            ++s;
        }
    }
    return sizes;
}

}  // namespace

OptimizationResult optimize_parts(const Graph& h, int n, int k, OptimizeMode mode, const OptimizeOptions& opts) {
    if (k < 1 || k > n || n > kMaxVertices) throw InvalidInstance("optimize_parts requires 1 <= k <= n <= 64");

    if (mode == OptimizeMode::Exact) {
        std::uint64_t candidates = 0;
        std::vector<int> acc;
        OptimizationResult result{PartSizes(std::vector<int>{1}), Count(), OptimizeMode::Exact, {}, {}};
        bool have = false;
        enumerate_partitions(n, k, n, acc, [&](const std::vector<int>& sizes) {
            if (++candidates > opts.max_candidates)
                throw BudgetExceeded("exact part optimization exceeded its candidate budget", candidates, 0);
            PartSizes p(sizes);
            Count c = count_copies_multipartite(h, p);
            if (!have || c > result.count) {
                result.best = p;
                result.count = c;
                result.co_optimal.clear();
                result.co_optimal.push_back(p);
                have = true;
            } else if (c == result.count) {
                result.co_optimal.push_back(p);
                if (more_balanced(p, result.best)) result.best = p;
            }
        });
        return result;
    }

    // hill climbing over single-vertex moves between parts
    Rng rng(opts.seed);
    OptimizationResult result{turan_parts(n, k), Count(), OptimizeMode::HillClimb, {}, {}};
    bool have = false;
    for (int run = 0; run <= opts.restarts; ++run) {
        PartSizes current = run == 0 ? turan_parts(n, k) : PartSizes(random_composition(n, k, rng));
        Count current_count = count_copies_multipartite(h, current);
        std::vector<PartMove> moves;
        for (;;) {
            PartSizes best_next = current;
            Count best_count = current_count;
            PartMove best_move{};
            bool improved = false;
            const auto& sizes = current.sizes();
            for (int i = 0; i < current.count(); ++i) {
                if (sizes[i] < 2) continue;
                for (int j = 0; j < current.count(); ++j) {
                    if (i == j) continue;
                    std::vector<int> next = sizes;
                    --next[i];
                    ++next[j];
                    PartSizes cand(next);
                    Count c = count_copies_multipartite(h, cand);
                    if (c > best_count || (improved && c == best_count && more_balanced(cand, best_next))) {
                        best_next = cand;
                        best_count = c;
                        best_move = PartMove{sizes[i], sizes[j], cand.sizes()};
                        improved = true;
                    }
                }
            }
            if (!improved) break;
            current = best_next;
            current_count = best_count;
            moves.push_back(best_move);
        }
        if (!have || current_count > result.count ||
            (current_count == result.count && more_balanced(current, result.best))) {
            if (!have || current_count > result.count) result.co_optimal.clear();
            result.best = current;
            result.count = current_count;
            result.moves = moves;
            have = true;
        }
        if (current_count == result.count &&
            std::find(result.co_optimal.begin(), result.co_optimal.end(), current) == result.co_optimal.end())
            result.co_optimal.push_back(current);
    }
    return result;
}

}  // namespace turan
