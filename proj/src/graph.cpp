#include "lampack/graph.hpp"

#include <algorithm>
#include <bit>

namespace lampack {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count must be in [0, 62], got " +
                                    std::to_string(n));
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (const auto& [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        adj_[u] |= 1ULL << v;
        adj_[v] |= 1ULL << u;
    }
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; v++) twice += std::popcount(adj_[v]);
    return twice / 2;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

std::vector<int> Graph::neighbor_list(int v) const {
    std::vector<int> out;
    for (std::uint64_t m = neighbors(v); m; m &= m - 1)
        out.push_back(std::countr_zero(m));
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; u++)
        for (std::uint64_t m = adj_[u] >> (u + 1) << (u + 1); m; m &= m - 1)
            out.emplace_back(u, std::countr_zero(m));
    return out;
}

VertexPath3::VertexPath3(int center_, int end_a, int end_b)
    : center(center_), ends{std::min(end_a, end_b), std::max(end_a, end_b)} {
    if (end_a == end_b || end_a == center_ || end_b == center_)
        throw std::invalid_argument("3-vertex path needs three distinct vertices");
}

bool VertexPath3::valid_in(const Graph& g) const {
    return g.has_edge(center, ends[0]) && g.has_edge(center, ends[1]);
}

bool VertexPath3::induces_triangle(const Graph& g) const {
    return valid_in(g) && g.has_edge(ends[0], ends[1]);
}

DeletionResult delete_vertices(const Graph& g, const std::vector<int>& s) {
    std::uint64_t drop = 0;
    for (int v : s) {
        g.check_vertex(v);
        drop |= 1ULL << v;
    }
    std::vector<int> new_label(g.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); v++)
        if (!((drop >> v) & 1ULL)) new_label[v] = next++;
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (new_label[u] >= 0 && new_label[v] >= 0)
            edges.emplace_back(new_label[u], new_label[v]);
    return {Graph(next, edges), std::move(new_label)};
}

Graph delete_edges(const Graph& g, const std::vector<Edge>& es) {
    std::uint64_t drop_of[Graph::kMaxVertices] = {};
    for (const auto& [u, v] : es) {
        if (!g.has_edge(u, v))
            throw std::invalid_argument("cannot delete non-edge (" +
                                        std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        drop_of[u] |= 1ULL << v;
        drop_of[v] |= 1ULL << u;
    }
    std::vector<Edge> keep;
    for (const auto& [u, v] : g.edges())
        if (!((drop_of[u] >> v) & 1ULL)) keep.emplace_back(u, v);
    return Graph(g.vertex_count(), keep);
}

DeletionResult delete_path(const Graph& g, const VertexPath3& l) {
    if (!l.valid_in(g))
        throw std::invalid_argument("path is not a 3-vertex path of the graph");
    auto [a, b, c] = l.vertices();
    return delete_vertices(g, {a, b, c});
}

}  // namespace lampack
