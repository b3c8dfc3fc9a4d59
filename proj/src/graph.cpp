#include "turan/graph.hpp"

#include <bit>

#include "turan/errors.hpp"

namespace turan {

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices) throw InvalidInstance("graph order must be between 1 and 64");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw InvalidInstance("vertex index out of range");
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t rest = adj_[u] & ~((u == 63) ? ~0ull : ((1ull << (u + 1)) - 1));
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidInstance("self-loops are not supported");
    adj_[u] |= 1ull << v;
    adj_[v] |= 1ull << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(1ull << v);
    adj_[v] &= ~(1ull << u);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, std::popcount(adj_[v]));
    return d;
}

Graph Graph::without_vertex(int v) const {
    check_vertex(v);
    if (n_ == 1) throw InvalidInstance("cannot delete the last vertex");
    Graph g(n_ - 1);
    std::uint64_t low = (1ull << v) - 1;
    for (int u = 0; u < n_; ++u) {
        if (u == v) continue;
        std::uint64_t row = adj_[u];
        std::uint64_t packed = (row & low) | ((row >> (v + 1)) << v);
        g.adj_[u < v ? u : u - 1] = packed;
    }
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    Graph g = *this;
    g.remove_edge(u, v);
    return g;
}

Graph Graph::with_edge(int u, int v) const {
    Graph g = *this;
    g.add_edge(u, v);
    return g;
}

Graph Graph::relabeled(const std::vector<int>& new_label) const {
    if (static_cast<int>(new_label.size()) != n_) throw InvalidInstance("relabeling has wrong length");
    std::uint64_t seen = 0;
    for (int v = 0; v < n_; ++v) {
        if (new_label[v] < 0 || new_label[v] >= n_) throw InvalidInstance("relabeling out of range");
        seen |= 1ull << new_label[v];
    }
    if (seen != full_mask()) throw InvalidInstance("relabeling is not a permutation");
    Graph g(n_);
    for (int u = 0; u < n_; ++u) {
        std::uint64_t row = adj_[u];
        while (row) {
            int v = std::countr_zero(row);
            row &= row - 1;
            g.adj_[new_label[u]] |= 1ull << new_label[v];
        }
    }
    return g;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int v = 0; v < n_; ++v) g.adj_[v] = (~adj_[v] & full_mask()) & ~(1ull << v);
    return g;
}

// ---- graph6 ----

namespace {

constexpr int kG6Min = 63;   // '?'
constexpr int kG6Max = 126;  // '~'

int g6_value(char c) {
    int v = static_cast<unsigned char>(c);
    if (v < kG6Min || v > kG6Max) throw ParseError("graph6: invalid character");
    return v - kG6Min;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("graph6: malformed header (empty input)");
    std::size_t pos = 0;
    long long n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~') throw ParseError("graph6: vertex count out of range");
        if (text.size() < 4) throw ParseError("graph6: malformed header (truncated long form)");
        n = (static_cast<long long>(g6_value(text[1])) << 12) | (g6_value(text[2]) << 6) | g6_value(text[3]);
        pos = 4;
    } else {
        n = g6_value(text[0]);
        pos = 1;
    }
    if (n < 1 || n > kMaxVertices) throw ParseError("graph6: vertex count out of range");

    std::size_t bits_needed = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t chars_needed = (bits_needed + 5) / 6;
    if (text.size() - pos < chars_needed) throw ParseError("graph6: truncated edge data");
    if (text.size() - pos > chars_needed) throw ParseError("graph6: trailing garbage");

    Graph g(static_cast<int>(n));
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int chunk = g6_value(text[pos + bit / 6]);
            if ((chunk >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    }
    // standard requires zero padding in the final character
    for (; bit < chars_needed * 6; ++bit) {
        int chunk = g6_value(text[pos + bit / 6]);
        if ((chunk >> (5 - bit % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kG6Min + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(kG6Min + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(kG6Min + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(kG6Min + (n & 63)));
    }
    int chunk = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            chunk = (chunk << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kG6Min + chunk));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>(kG6Min + (chunk << (6 - filled))));
    return out;
}

}  // namespace turan
