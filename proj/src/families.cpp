#include "lampack/families.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "lampack/structure.hpp"

namespace lampack {

Graph gen_net() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
}

Graph gen_class_A(int steps) {
    if (steps < 0) throw std::invalid_argument("steps must be >= 0");
    std::vector<Edge> edges = gen_net().edges();
    int n = 6;
    int leaf = 3;  // expand the leaf hanging off triangle vertex 0 each round
    for (int s = 0; s < steps; s++) {
        // Grow the current leaf into a triangle {leaf, n, n+1}; the old
        // leaf keeps its support edge and a fresh leaf n+2 hangs off n.
        edges.emplace_back(leaf, n);
        edges.emplace_back(leaf, n + 1);
        edges.emplace_back(n, n + 1);
        edges.emplace_back(n, n + 2);
        leaf = n + 2;
        n += 3;
    }
    return Graph(n, edges);
}

bool is_class_A(const Graph& g) {
    if (g.vertex_count() == 0 || !is_connected(g)) return false;
    auto profile = triangle_profile(g);
    int leaves = 0;
    for (int v = 0; v < g.vertex_count(); v++) {
        int d = g.degree(v);
        if (d > 3 || d == 0) return false;
        if (d == 1) {
            leaves++;
        } else if (profile.vertex_triangle_count[v] != 1) {
            return false;
        }
    }
    return leaves == 3;
}

namespace {

HGraph attach_triangle(const Graph& a) {
    // Leaves of a, in label order.
    std::vector<int> leaves;
    for (int v = 0; v < a.vertex_count(); v++)
        if (a.degree(v) == 1) leaves.push_back(v);
    if (leaves.size() != 3)
        throw std::invalid_argument("base graph must have exactly three leaves");
    int n = a.vertex_count();
    std::vector<Edge> edges = a.edges();
    std::array<int, 3> t{n, n + 1, n + 2};
    edges.emplace_back(t[0], t[1]);
    edges.emplace_back(t[0], t[2]);
    edges.emplace_back(t[1], t[2]);
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++)
            if (i != j) edges.emplace_back(leaves[i], t[j]);
    return {Graph(n + 3, edges), t};
}

}  // namespace

HGraph gen_H() { return attach_triangle(gen_net()); }

HGraph gen_H_extended(int steps) { return attach_triangle(gen_class_A(steps)); }

namespace {

// Cycle of length len on labels base..base+len-1, with the
// distinguished edge between the first two labels.
void add_cycle(std::vector<Edge>& edges, int base, int len) {
    for (int i = 0; i < len; i++)
        edges.push_back(make_edge(base + i, base + (i + 1) % len));
}

}  // namespace

RGraph gen_R(int la, int lb) {
    if (la < 3 || lb < 3) throw std::invalid_argument("cycle lengths must be >= 3");
    std::vector<Edge> edges;
    add_cycle(edges, 0, la);
    add_cycle(edges, la, lb);
    int z = la + lb;
    edges.emplace_back(0, z);
    edges.emplace_back(1, z);
    edges.emplace_back(la, z);
    edges.emplace_back(la + 1, z);
    return {Graph(z + 1, edges), make_edge(0, 1), make_edge(la, la + 1)};
}

QGraph gen_Q(int la, int lb) {
    if (la < 3 || lb < 3) throw std::invalid_argument("cycle lengths must be >= 3");
    std::vector<Edge> edges;
    add_cycle(edges, 0, la);
    add_cycle(edges, la, lb);
    int z1 = la + lb, z2 = la + lb + 1;
    for (int z : {z1, z2}) {
        edges.emplace_back(0, z);
        edges.emplace_back(1, z);
        edges.emplace_back(la, z);
        edges.emplace_back(la + 1, z);
    }
    edges.emplace_back(z1, z2);
    return {Graph(z2 + 1, edges), make_edge(z1, z2)};
}

Graph sample_cubic(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("cubic graphs need even n >= 4");
    if (n > Graph::kMaxVertices)
        throw std::invalid_argument("n exceeds the vertex limit");
    std::mt19937_64 rng(seed);
    while (true) {
        std::vector<int> stubs;
        for (int v = 0; v < n; v++) stubs.insert(stubs.end(), 3, v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::set<Edge> edges;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || !edges.insert(make_edge(u, v)).second) ok = false;
        }
        if (ok) return Graph(n, {edges.begin(), edges.end()});
    }
}

}  // namespace lampack
