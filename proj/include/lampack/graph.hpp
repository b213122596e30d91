#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lampack {

// Normalized as (min, max) by make_edge.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Immutable simple undirected graph on vertices 0..n-1.
/// Adjacency is stored as one 64-bit neighborhood mask per vertex,
/// which bounds the size at 62 (the graph6 short-form limit).
class Graph {
public:
    static constexpr int kMaxVertices = 62;

    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[u] >> v) & 1ULL;
    }

    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const;
    std::vector<int> neighbor_list(int v) const;
    std::vector<Edge> edges() const;  // lexicographically sorted

    std::uint64_t vertex_mask() const {
        return n_ == 0 ? 0ULL : (~0ULL >> (64 - n_));
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) +
                                    " out of range for graph on " +
                                    std::to_string(n_) + " vertices");
    }

private:
    int n_;
    std::vector<std::uint64_t> adj_;
};

/// A 3-vertex path with a structurally distinguished center.
/// The endpoint pair is unordered; endpoints are kept sorted.
struct VertexPath3 {
    int center;
    std::array<int, 2> ends;

    VertexPath3(int center_, int end_a, int end_b);

    std::array<int, 3> vertices() const { return {ends[0], center, ends[1]}; }

    std::uint64_t vertex_mask() const {
        return (1ULL << center) | (1ULL << ends[0]) | (1ULL << ends[1]);
    }

    // Both center-endpoint pairs are edges of g.
    bool valid_in(const Graph& g) const;

    // The three vertices induce a triangle in g (endpoints adjacent).
    bool induces_triangle(const Graph& g) const;

    bool uses_edge(const Edge& e) const {
        return e == make_edge(center, ends[0]) || e == make_edge(center, ends[1]);
    }

    bool operator==(const VertexPath3& other) const {
        return center == other.center && ends == other.ends;
    }
    auto operator<=>(const VertexPath3& other) const = default;
};

/// Result of a vertex deletion: the induced subgraph relabeled to
/// 0..n-|S|-1 together with the old->new label map (-1 = deleted).
struct DeletionResult {
    Graph graph;
    std::vector<int> new_label;
};

DeletionResult delete_vertices(const Graph& g, const std::vector<int>& s);
Graph delete_edges(const Graph& g, const std::vector<Edge>& es);
DeletionResult delete_path(const Graph& g, const VertexPath3& l);

}  // namespace lampack
