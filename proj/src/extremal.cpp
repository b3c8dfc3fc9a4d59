#include "turan/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <thread>

#include "turan/canonical.hpp"
#include "turan/counting.hpp"
#include "turan/errors.hpp"
#include "turan/multipartite.hpp"
#include "turan/rng.hpp"

namespace turan {

namespace {

std::uint64_t permute_mask(std::uint64_t mask, const std::vector<int>& perm) {
    std::uint64_t out = 0;
    while (mask) {
        int v = std::countr_zero(mask);
        mask &= mask - 1;
        out |= 1ull << perm[v];
    }
    return out;
}

// Minimum mask of each orbit of Aut(parent) acting on vertex subsets, in
// ascending order. Extending the parent by two masks of one orbit gives
// isomorphic children, so one representative per orbit suffices.
std::vector<std::uint64_t> mask_orbit_reps(int m, const std::vector<std::vector<int>>& gens) {
    const std::uint64_t total = 1ull << m;
    std::vector<std::uint64_t> reps;
    if (gens.empty()) {
        reps.resize(total);
        for (std::uint64_t i = 0; i < total; ++i) reps[i] = i;
        return reps;
    }
    std::vector<char> seen(total, 0);
    std::vector<std::uint64_t> stack;
    for (std::uint64_t m0 = 0; m0 < total; ++m0) {
        if (seen[m0]) continue;
        reps.push_back(m0);
        seen[m0] = 1;
        stack.assign(1, m0);
        while (!stack.empty()) {
            std::uint64_t cur = stack.back();
            stack.pop_back();
            for (const auto& p : gens) {
                std::uint64_t nxt = permute_mask(cur, p);
                if (!seen[nxt]) {
                    seen[nxt] = 1;
                    stack.push_back(nxt);
                }
            }
        }
    }
    return reps;
}

Graph extend(const Graph& parent, std::uint64_t mask) {
    Graph child(parent.n() + 1);
    for (auto [u, v] : parent.edges()) child.add_edge(u, v);
    while (mask) {
        int u = std::countr_zero(mask);
        mask &= mask - 1;
        child.add_edge(u, parent.n());
    }
    return child;
}

bool is_maximal_free(const Graph& g, const Graph& f) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v) && is_free(g.with_edge(u, v), f)) return false;
    return true;
}

// Canonical augmentation: a child is kept iff its new vertex lies in the
// automorphism orbit of the vertex the canonical labeling places last, so
// each isomorphism class survives through exactly one parent and mask orbit.
struct Generator {
    int n;
    const Graph& f;
    const SearchConfig& cfg;
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> classes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> out_of_budget{false};

    bool accept(const Graph& child, const CanonResult& canon) const {
        const int added = child.n() - 1;
        int last = -1;
        for (int v = 0; v < child.n(); ++v)
            if (canon.labeling[v] == added) {
                last = v;
                break;
            }
        if (last == added) return true;
        std::vector<int> orbit = vertex_orbits(child.n(), canon.generators);
        return orbit[last] == orbit[added];
    }

    template <typename Fn>
    void for_each_child(const Graph& parent, Fn&& fn) {
        const auto gens = canonical_labeling(parent).generators;
        for (std::uint64_t rep : mask_orbit_reps(parent.n(), gens)) {
            if (stop.load(std::memory_order_relaxed)) return;
            if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > cfg.max_nodes) {
                out_of_budget.store(true);
                stop.store(true);
                return;
            }
            Graph child = extend(parent, rep);
            if (!is_free(child, f)) continue;
            if (!accept(child, canonical_labeling(child))) continue;
            classes.fetch_add(1, std::memory_order_relaxed);
            fn(child);
        }
    }

    // sink returns false to stop the whole enumeration
    template <typename Sink>
    bool dfs(const Graph& g, const Sink& sink) {
        if (g.n() == n) return sink(g);
        bool keep_going = true;
        for_each_child(g, [&](const Graph& child) {
            if (keep_going && !dfs(child, sink)) {
                keep_going = false;
                stop.store(true);
            }
        });
        return keep_going;
    }

    void collect_roots(const Graph& g, int depth, std::vector<Graph>& out) {
        if (g.n() == depth) {
            out.push_back(g);
            return;
        }
        for_each_child(g, [&](const Graph& child) { collect_roots(child, depth, out); });
    }
};

}  // namespace

void enumerate_free(int n, const Graph& f, const SearchConfig& cfg,
                    const std::function<bool(const Graph&)>& emit, GenerationStats* stats) {
    if (n < 1 || n > kEnumerationCap) throw InvalidInstance("enumeration supports 1 <= n <= 12");
    if (cfg.max_nodes == 0) throw InvalidInstance("node budget must be positive");

    Generator gen{n, f, cfg};
    std::uint64_t emitted = 0;
    auto deliver = [&](const Graph& g) {
        if (cfg.maximal_only && !is_maximal_free(g, f)) return true;
        ++emitted;
        return emit(g);
    };

    auto finish = [&] {
        if (stats) {
            stats->nodes = gen.nodes.load();
            stats->classes = gen.classes.load();
            stats->emitted = emitted;
        }
        if (gen.out_of_budget.load())
            throw BudgetExceeded("generation budget exceeded", gen.nodes.load(), emitted);
    };

    Graph root;  // K1
    if (!is_free(root, f)) {
        finish();
        return;
    }
    gen.classes.fetch_add(1);
    if (n == 1) {
        deliver(root);
        finish();
        return;
    }

    const int split = std::min(7, n - 1);
    if (cfg.parallelism <= 1) {
        gen.dfs(root, deliver);
        finish();
        return;
    }

    // Deterministic parallelism: DFS order equals concatenating each split-level
    // subtree's output in the order the split-level roots are first reached.
    std::vector<Graph> roots;
    gen.collect_roots(root, split, roots);
    if (gen.out_of_budget.load()) finish();

    const int workers = std::max(1, std::min<int>(cfg.parallelism, static_cast<int>(roots.size())));
    std::vector<std::vector<Graph>> buffers(roots.size());
    std::vector<char> done(roots.size(), 0);
    std::mutex mu;
    std::condition_variable cv;
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));

    auto work = [&](int w) {
        try {
            for (std::size_t i = static_cast<std::size_t>(w); i < roots.size();
                 i += static_cast<std::size_t>(workers)) {
                if (!gen.stop.load()) {
                    std::vector<Graph>& buf = buffers[i];
                    gen.dfs(roots[i], [&](const Graph& g) {
                        if (!cfg.maximal_only || is_maximal_free(g, f)) buf.push_back(g);
                        return true;
                    });
                }
                {
                    std::lock_guard<std::mutex> lk(mu);
                    done[i] = 1;
                }
                cv.notify_all();
            }
        } catch (...) {
            failures[static_cast<std::size_t>(w)] = std::current_exception();
            gen.stop.store(true);
            std::lock_guard<std::mutex> lk(mu);
            for (std::size_t i = static_cast<std::size_t>(w); i < roots.size();
                 i += static_cast<std::size_t>(workers))
                done[i] = 1;
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);

    bool consumer_stopped = false;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        {
            std::unique_lock<std::mutex> lk(mu);
            cv.wait(lk, [&] { return done[i] != 0; });
        }
        if (consumer_stopped) continue;
        for (const Graph& g : buffers[i]) {
            ++emitted;
            if (!emit(g)) {
                consumer_stopped = true;
                gen.stop.store(true);
                break;
            }
        }
        buffers[i].clear();
    }
    for (auto& t : pool) t.join();
    for (auto& e : failures)
        if (e) std::rethrow_exception(e);
    finish();
}

std::vector<Graph> enumerate_free(int n, const Graph& f, const SearchConfig& cfg) {
    std::vector<Graph> out;
    enumerate_free(n, f, cfg, [&](const Graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

ExtremalReport ex_brute(int n, const Graph& h, const Graph& f, const SearchConfig& cfg) {
    ExtremalReport report;
    std::vector<Graph> winners;
    bool have = false;
    GenerationStats stats;
    enumerate_free(
        n, f, cfg,
        [&](const Graph& g) {
            Count c = count_copies(h, g);
            if (!have || c > report.value) {
                report.value = c;
                winners.clear();
                winners.push_back(g);
                report.suppressed = 0;
                have = true;
            } else if (c == report.value) {
                if (winners.size() < kWitnessCap)
                    winners.push_back(g);
                else
                    ++report.suppressed;
            }
            return true;
        },
        &stats);
    report.generated = stats.classes;
    for (const Graph& g : winners) {
        report.witnesses.push_back(canonical_labeling(g).bytes);
        Count best;
        for (int v = 0; v < g.n(); ++v) {
            Count d = copy_degree(h, g, v);
            if (v == 0 || d < best) best = d;
        }
        report.min_copy_degree.push_back(best);
    }
    return report;
}

namespace {

// Homomorphism counts compare exactly like copy counts (same divisor), so
// the sweep avoids recomputing |Aut(h)| at every candidate step.
struct StepResult {
    Graph graph;
    Count homs;
    ZykovStatus status;
};

StepResult try_step(const Graph& g, const Graph& h, const Graph& forbidden, int u, std::uint64_t s,
                    const Count& current_homs) {
    Graph next = g;
    std::uint64_t old_nbrs = g.neighbors(u);
    std::uint64_t common = g.full_mask();
    for (std::uint64_t rest = s; rest;) {
        int w = std::countr_zero(rest);
        rest &= rest - 1;
        common &= g.neighbors(w);
    }
    common &= ~(1ull << u);
    for (std::uint64_t rest = old_nbrs; rest;) {
        int w = std::countr_zero(rest);
        rest &= rest - 1;
        next.remove_edge(u, w);
    }
    for (std::uint64_t rest = common; rest;) {
        int w = std::countr_zero(rest);
        rest &= rest - 1;
        next.add_edge(u, w);
    }
    if (!is_free(next, forbidden)) return {g, current_homs, ZykovStatus::Refused};
    Count homs = count_injective_homs(h, next);
    if (homs > current_homs) return {std::move(next), std::move(homs), ZykovStatus::Improved};
    return {g, current_homs, ZykovStatus::Unchanged};
}

std::uint64_t find_clique_mask(const Graph& g, int r, std::uint64_t chosen, std::uint64_t cand, int size) {
    if (size == r) return chosen;
    if (size + std::popcount(cand) < r) return 0;
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        std::uint64_t hit = find_clique_mask(g, r, chosen | (1ull << v), cand & g.neighbors(v), size + 1);
        if (hit) return hit;
    }
    return 0;
}

std::uint64_t find_clique_mask(const Graph& g, int r) {
    return find_clique_mask(g, r, 0, g.full_mask(), 0);
}

Graph random_free_graph(int n, const Graph& forbidden, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(0.5)) g.add_edge(u, v);
    // knock out found copies edge by edge until none remain
    for (std::uint64_t mask; (mask = find_clique_mask(g, forbidden.n())) != 0;) {
        std::vector<int> verts;
        for (std::uint64_t rest = mask; rest;) {
            verts.push_back(std::countr_zero(rest));
            rest &= rest - 1;
        }
        std::uint64_t pairs = static_cast<std::uint64_t>(verts.size()) * (verts.size() - 1) / 2;
        std::uint64_t pick = rng.below(pairs);
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b) {
                if (pick == 0) {
                    g.remove_edge(verts[a], verts[b]);
                    a = verts.size();
                    break;
                }
                --pick;
            }
    }
    return g;
}

}  // namespace

ZykovOutcome zykov_step(const Graph& g, const Graph& h, const Graph& forbidden, int u, std::uint64_t s) {
    if (u < 0 || u >= g.n()) throw InvalidInstance("vertex out of range");
    if (s == 0) throw InvalidInstance("s must be nonempty");
    if ((s & ~g.full_mask()) != 0) throw InvalidInstance("s contains vertices outside the graph");
    if ((s >> u) & 1) throw InvalidInstance("u must not lie in s");
    StepResult r = try_step(g, h, forbidden, u, s, count_injective_homs(h, g));
    return {std::move(r.graph), r.status};
}

Graph symmetrize_search(const Graph& g0, const Graph& h, int k, int restarts, std::uint64_t seed,
                        const StepObserver& observer) {
    if (k < 1) throw InvalidInstance("k must be at least 1");
    if (restarts < 0) throw InvalidInstance("restart count must be nonnegative");
    Graph forbidden(k + 1);
    for (int u = 0; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v) forbidden.add_edge(u, v);
    if (!is_free(g0, forbidden)) throw InvalidInstance("seed graph already contains the forbidden clique");

    const std::uint64_t aut_h = automorphism_count(h);
    Rng rng(seed);
    Graph best = g0;
    Count best_homs = count_injective_homs(h, g0);

    auto run = [&](Graph g, int run_index) {
        Count homs = count_injective_homs(h, g);
        for (bool changed = true; changed;) {
            changed = false;
            for (int u = 0; u < g.n(); ++u)
                for (int v = 0; v < g.n(); ++v) {
                    if (u == v || g.has_edge(u, v)) continue;
                    StepResult r = try_step(g, h, forbidden, u, 1ull << v, homs);
                    if (r.status == ZykovStatus::Improved) {
                        g = std::move(r.graph);
                        homs = std::move(r.homs);
                        changed = true;
                        if (observer) observer(run_index, g, homs.div_exact(aut_h));
                    }
                }
        }
        if (homs > best_homs) {
            best = g;
            best_homs = homs;
        }
    };

    run(g0, 0);
    for (int r = 1; r <= restarts; ++r) run(random_free_graph(g0.n(), forbidden, rng), r);
    return best;
}

DegreeAudit min_copy_degree_audit(const ExtremalReport& report, const Graph& h, int k) {
    if (report.witnesses.empty()) throw InvalidInstance("audit requires at least one witness");
    auto to_double = [](const Count& c) { return std::stod(c.str()); };

    DegreeAudit audit;
    const int n = parse_graph6(report.witnesses.front()).n();
    PartSizes parts = turan_parts(n, k);
    Graph t = realize(parts);
    int start = 0, prev = -1;
    for (int s : parts.sizes()) {
        if (s != prev) audit.reference.emplace_back(s, copy_degree(h, t, start));
        prev = s;
        start += s;
    }
    audit.reference_min = audit.reference.front().second;
    for (const auto& [size, d] : audit.reference)
        if (d < audit.reference_min) audit.reference_min = d;

    for (std::size_t i = 0; i < report.witnesses.size(); ++i) {
        Graph g = parse_graph6(report.witnesses[i]);
        Count min_deg;
        if (i < report.min_copy_degree.size()) {
            min_deg = report.min_copy_degree[i];
        } else {
            for (int v = 0; v < g.n(); ++v) {
                Count d = copy_degree(h, g, v);
                if (v == 0 || d < min_deg) min_deg = d;
            }
        }
        double ratio = audit.reference_min.is_zero() ? 0.0 : to_double(min_deg) / to_double(audit.reference_min);
        audit.rows.push_back({report.witnesses[i], min_deg, ratio});
    }
    return audit;
}

}  // namespace turan
