#pragma once

// Simple undirected graphs on at most 64 vertices. Each adjacency row is one
// 64-bit word, so neighborhood intersections are single AND instructions.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace turan {

inline constexpr int kMaxVertices = 64;

class Graph {
  public:
    Graph() : n_(1) {}
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    std::uint64_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const;
    int max_degree() const;

    // All-ones mask over the vertex set.
    std::uint64_t full_mask() const { return n_ == 64 ? ~0ull : (1ull << n_) - 1; }

    Graph without_vertex(int v) const;  // remaining vertices shift down
    Graph without_edge(int u, int v) const;
    Graph with_edge(int u, int v) const;
    // new index of v is new_label[v]; new_label must be a permutation of 0..n-1
    Graph relabeled(const std::vector<int>& new_label) const;
    Graph complement() const;

    bool operator==(const Graph& o) const = default;

  private:
    int n_;
    std::array<std::uint64_t, kMaxVertices> adj_{};
    void check_vertex(int v) const;
};

// graph6 codec (printable ASCII, upper triangle column-major, 6 bits per char).
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

}  // namespace turan
