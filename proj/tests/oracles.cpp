#include "oracles.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace oracle {

using turan::Graph;

Graph decode_graph6(const std::string& text) {
    std::size_t pos = 0;
    auto take = [&]() -> int {
        if (pos >= text.size()) throw std::runtime_error("graph6 oracle: truncated");
        int c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw std::runtime_error("graph6 oracle: byte out of range");
        return c - 63;
    };
    long n = take();
    if (n == 63) {  // long form: 18-bit order
        n = 0;
        for (int i = 0; i < 3; ++i) n = n * 64 + take();
    }
    if (n > 64) throw std::runtime_error("graph6 oracle: order too large");
    Graph g(static_cast<int>(n));
    int bits = 0, have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (have == 0) {
                bits = take();
                have = 6;
            }
            if (bits & (1 << (have - 1))) g.add_edge(i, j);
            --have;
        }
    }
    if (pos != text.size()) throw std::runtime_error("graph6 oracle: trailing bytes");
    return g;
}

std::string encode_graph6(const Graph& g) {
    std::string out;
    int n = g.n();
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + (n >> 12)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int bits = 0, have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            bits = (bits << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(bits + 63));
                bits = have = 0;
            }
        }
    }
    if (have > 0) out.push_back(static_cast<char>((bits << (6 - have)) + 63));
    return out;
}

namespace {

std::uint64_t homs_rec(const Graph& h, const Graph& g, std::vector<int>& img, std::uint64_t used) {
    int next = static_cast<int>(img.size());
    if (next == h.n()) return 1;
    std::uint64_t total = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (used & (1ull << v)) continue;
        bool ok = true;
        for (int placed = 0; placed < next && ok; ++placed)
            if (h.has_edge(placed, next) && !g.has_edge(img[static_cast<std::size_t>(placed)], v))
                ok = false;
        if (!ok) continue;
        img.push_back(v);
        total += homs_rec(h, g, img, used | (1ull << v));
        img.pop_back();
    }
    return total;
}

}  // namespace

std::uint64_t injective_homs(const Graph& h, const Graph& g) {
    std::vector<int> img;
    return homs_rec(h, g, img, 0);
}

std::uint64_t automorphisms(const Graph& g) {
    int n = g.n();
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t total = 0;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (g.has_edge(i, j) !=
                    g.has_edge(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]))
                    ok = false;
        if (ok) ++total;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

std::uint64_t copies(const Graph& h, const Graph& g) {
    std::uint64_t homs = injective_homs(h, g);
    std::uint64_t aut = automorphisms(h);
    if (homs % aut != 0) throw std::logic_error("copies oracle: count not divisible by |Aut|");
    return homs / aut;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    int n = a.n();
    std::vector<int> da, db;
    for (int v = 0; v < n; ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (a.has_edge(i, j) !=
                    b.has_edge(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]))
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

std::vector<Graph> catalogue(int n) {
    int pairs = n * (n - 1) / 2;
    std::vector<Graph> reps;
    for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
        Graph g(n);
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (mask & (1ull << bit)) g.add_edge(i, j);
        bool seen = false;
        for (const Graph& r : reps)
            if (isomorphic(g, r)) {
                seen = true;
                break;
            }
        if (!seen) reps.push_back(g);
    }
    return reps;
}

namespace {

bool colorable_rec(const Graph& g, int k, std::vector<int>& color, int v) {
    if (v == g.n()) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.has_edge(u, v) && color[static_cast<std::size_t>(u)] == c) ok = false;
        if (!ok) continue;
        color[static_cast<std::size_t>(v)] = c;
        if (colorable_rec(g, k, color, v + 1)) return true;
    }
    return false;
}

std::uint64_t colorings_rec(const Graph& g, int k, std::vector<int>& color, int v) {
    if (v == g.n()) return 1;
    std::uint64_t total = 0;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.has_edge(u, v) && color[static_cast<std::size_t>(u)] == c) ok = false;
        if (!ok) continue;
        color[static_cast<std::size_t>(v)] = c;
        total += colorings_rec(g, k, color, v + 1);
    }
    return total;
}

}  // namespace

int chromatic(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
    for (int k = 1;; ++k)
        if (colorable_rec(g, k, color, 0)) return k;
}

std::uint64_t labeled_colorings(const Graph& g, int k) {
    std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
    return colorings_rec(g, k, color, 0);
}

int multipartite_distance(const Graph& g, int k) {
    int n = g.n();
    std::vector<int> cls(static_cast<std::size_t>(n), 0);
    int best = n * n;
    // all assignments vertex -> class; class count bounded by k
    while (true) {
        int cost = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                bool same = cls[static_cast<std::size_t>(i)] == cls[static_cast<std::size_t>(j)];
                if (same == g.has_edge(i, j)) ++cost;
            }
        best = std::min(best, cost);
        int v = n - 1;
        while (v >= 0 && cls[static_cast<std::size_t>(v)] == k - 1) cls[static_cast<std::size_t>(v--)] = 0;
        if (v < 0) break;
        ++cls[static_cast<std::size_t>(v)];
    }
    return best;
}

Graph random_graph(turan::Rng& rng, int n, double p) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(p)) g.add_edge(i, j);
    return g;
}

std::vector<int> random_permutation(turan::Rng& rng, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(p[static_cast<std::size_t>(i)],
                  p[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i + 1)))]);
    return p;
}

CmdResult run_cmd(const std::string& cmd) {
    std::string full = cmd + " 2>&1";
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace oracle
