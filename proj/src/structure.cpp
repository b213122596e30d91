#include "lampack/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <functional>

namespace lampack {

namespace {

std::uint64_t reachable(const Graph& g, int start, std::uint64_t allowed) {
    std::uint64_t vis = 1ULL << start;
    std::uint64_t frontier = vis;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1)
            next |= g.neighbors(std::countr_zero(m));
        frontier = next & allowed & ~vis;
        vis |= frontier;
    }
    return vis;
}

}  // namespace

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    return reachable(g, 0, g.vertex_mask()) == g.vertex_mask();
}

bool is_claw_free(const Graph& g) {
    int n = g.vertex_count();
    for (int c = 0; c < n; c++) {
        auto nbrs = g.neighbor_list(c);
        if (nbrs.size() < 3) continue;
        for (std::size_t i = 0; i < nbrs.size(); i++)
            for (std::size_t j = i + 1; j < nbrs.size(); j++) {
                if (g.has_edge(nbrs[i], nbrs[j])) continue;
                for (std::size_t k = j + 1; k < nbrs.size(); k++)
                    if (!g.has_edge(nbrs[i], nbrs[k]) && !g.has_edge(nbrs[j], nbrs[k]))
                        return false;
            }
    }
    return true;
}

bool is_cubic(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    for (int v = 0; v < n; v++)
        if (g.degree(v) != 3) return false;
    return true;
}

namespace {

// Unit-vertex-capacity max flow on the split network, via BFS
// augmenting paths. Node 2v = "in", 2v+1 = "out".
class VertexFlow {
public:
    explicit VertexFlow(const Graph& g) : n_(g.vertex_count()) {
        cap_.assign(4 * n_ * n_, 0);
        for (int v = 0; v < n_; v++) cap_[idx(in(v), out(v))] = 1;
        for (const auto& [u, v] : g.edges()) {
            cap_[idx(out(u), in(v))] = n_;
            cap_[idx(out(v), in(u))] = n_;
        }
    }

    int max_flow(int s, int t) {
        auto cap = cap_;  // fresh residual network per query
        cap[idx(in(s), out(s))] = n_;
        cap[idx(in(t), out(t))] = n_;
        int total = 0;
        std::vector<int> prev(2 * n_);
        while (true) {
            std::fill(prev.begin(), prev.end(), -1);
            std::vector<int> queue{out(s)};
            prev[out(s)] = out(s);
            for (std::size_t qi = 0; qi < queue.size() && prev[in(t)] < 0; qi++) {
                int a = queue[qi];
                for (int b = 0; b < 2 * n_; b++)
                    if (prev[b] < 0 && cap[idx(a, b)] > 0) {
                        prev[b] = a;
                        queue.push_back(b);
                    }
            }
            if (prev[in(t)] < 0) return total;
            for (int b = in(t); b != out(s); b = prev[b]) {
                cap[idx(prev[b], b)]--;
                cap[idx(b, prev[b])]++;
            }
            total++;
        }
    }

private:
    int n_;
    std::vector<int> cap_;
    int in(int v) const { return 2 * v; }
    int out(int v) const { return 2 * v + 1; }
    std::size_t idx(int a, int b) const {
        return static_cast<std::size_t>(a) * 2 * n_ + b;
    }
};

}  // namespace

int vertex_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    bool complete = true;
    for (int v = 0; v < n && complete; v++)
        if (g.degree(v) != n - 1) complete = false;
    if (complete) return n - 1;

    VertexFlow flow(g);
    int best = n;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (!g.has_edge(u, v)) best = std::min(best, flow.max_flow(u, v));
    return best;
}

BlockDecomposition block_decomposition(const Graph& g) {
    int n = g.vertex_count();
    BlockDecomposition out;
    std::vector<int> num(n, -1), low(n, 0);
    std::vector<Edge> stack;
    std::vector<bool> is_cut(n, false);
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int v, int parent) {
        num[v] = low[v] = timer++;
        int children = 0;
        for (int w : g.neighbor_list(v)) {
            if (w == parent) {
                parent = -2;  // skip the tree edge once; parallel edges don't exist
                continue;
            }
            if (num[w] < 0) {
                children++;
                stack.emplace_back(v, w);
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) {
                    if (num[v] > 0 || children > 1) is_cut[v] = true;
                    std::uint64_t verts = 0;
                    Edge top;
                    do {
                        top = stack.back();
                        stack.pop_back();
                        verts |= (1ULL << top.first) | (1ULL << top.second);
                    } while (top != Edge(v, w));
                    std::vector<int> block;
                    for (std::uint64_t m = verts; m; m &= m - 1)
                        block.push_back(std::countr_zero(m));
                    out.blocks.push_back(std::move(block));
                }
            } else if (num[w] < num[v]) {
                stack.emplace_back(v, w);
                low[v] = std::min(low[v], num[w]);
            }
        }
    };

    for (int v = 0; v < n; v++)
        if (num[v] < 0 && g.degree(v) > 0) dfs(v, -1);

    for (int v = 0; v < n; v++)
        if (is_cut[v]) out.cut_vertices.push_back(v);

    std::vector<int> block_count(n, 0);
    for (const auto& block : out.blocks)
        for (int v : block) block_count[v]++;
    for (const auto& block : out.blocks) {
        std::vector<int> bd;
        for (int v : block)
            if (block_count[v] > 1) bd.push_back(v);
        if (bd.size() == 1) out.end_block_count++;
        out.boundary.push_back(std::move(bd));
    }
    return out;
}

TriangleProfile triangle_profile(const Graph& g) {
    int n = g.vertex_count();
    TriangleProfile out;
    out.vertex_triangle_count.assign(n, 0);
    for (const auto& e : g.edges()) out.edge_triangle_count[e] = 0;
    for (int a = 0; a < n; a++)
        for (std::uint64_t mb = g.neighbors(a) >> (a + 1) << (a + 1); mb; mb &= mb - 1) {
            int b = std::countr_zero(mb);
            std::uint64_t mc = g.neighbors(a) & g.neighbors(b);
            for (mc = mc >> (b + 1) << (b + 1); mc; mc &= mc - 1) {
                int c = std::countr_zero(mc);
                out.triangles.push_back({a, b, c});
                out.vertex_triangle_count[a]++;
                out.vertex_triangle_count[b]++;
                out.vertex_triangle_count[c]++;
                out.edge_triangle_count[make_edge(a, b)]++;
                out.edge_triangle_count[make_edge(a, c)]++;
                out.edge_triangle_count[make_edge(b, c)]++;
            }
        }
    return out;
}

EdgeTripleClass classify_edge_triple(const Graph& g, const std::array<Edge, 3>& es) {
    std::array<Edge, 3> e;
    for (int i = 0; i < 3; i++) {
        e[i] = make_edge(es[i].first, es[i].second);
        if (!g.has_edge(e[i].first, e[i].second))
            throw std::invalid_argument("edge triple contains a non-edge");
    }
    if (e[0] == e[1] || e[0] == e[2] || e[1] == e[2])
        throw std::invalid_argument("edge triple must contain three distinct edges");

    auto profile = triangle_profile(g);
    for (int v = 0; v < g.vertex_count(); v++)
        if (profile.vertex_triangle_count[v] != 1)
            throw StructureError(
                "graph is not a triangle blow-up: vertex " + std::to_string(v) +
                " lies in " + std::to_string(profile.vertex_triangle_count[v]) +
                " triangles");

    // Common endpoint of all three edges -> claw (other endpoints are
    // distinct automatically in a simple graph).
    for (int v : {e[0].first, e[0].second})
        if ((v == e[1].first || v == e[1].second) &&
            (v == e[2].first || v == e[2].second))
            return EdgeTripleClass::kClaw;

    std::uint64_t covered = 0;
    for (const auto& [u, v] : e) covered |= (1ULL << u) | (1ULL << v);
    if (std::popcount(covered) == 3) return EdgeTripleClass::kTriangle;

    // Split into components of the edge-induced subgraph: either a
    // 3-edge path/matching (connected path handled below as kNone) or
    // a 2-edge path plus a lone edge.
    int shared = -1, lone = -1;
    for (int i = 0; i < 3 && lone < 0; i++) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        std::uint64_t mi = (1ULL << e[i].first) | (1ULL << e[i].second);
        std::uint64_t mj = (1ULL << e[j].first) | (1ULL << e[j].second);
        std::uint64_t mk = (1ULL << e[k].first) | (1ULL << e[k].second);
        if ((mi & mj) == 0 && (mi & mk) == 0 && (mj & mk) != 0) {
            lone = i;
            shared = std::countr_zero(mj & mk);
        }
    }
    if (lone < 0) return EdgeTripleClass::kNone;  // connected (path) or matching

    const Edge& le = e[lone];
    const Edge pe1 = e[(lone + 1) % 3], pe2 = e[(lone + 2) % 3];
    bool path_in_triangle = profile.edge_triangle_count.at(pe1) == 1 &&
                            profile.edge_triangle_count.at(pe2) == 1;
    if (!path_in_triangle) return EdgeTripleClass::kNone;

    // Connector edge of vertex v (its unique incident non-triangle edge).
    auto connector = [&](int v) -> Edge {
        for (int w : g.neighbor_list(v)) {
            Edge c = make_edge(v, w);
            if (profile.edge_triangle_count.at(c) == 0) return c;
        }
        throw StructureError("vertex " + std::to_string(v) + " has no connector edge");
    };

    std::uint64_t lone_mask = (1ULL << le.first) | (1ULL << le.second);
    std::uint64_t path_mask = covered & ~lone_mask;

    if (profile.edge_triangle_count.at(le) == 0) {
        Graph rest = delete_edges(g, {e[0], e[1], e[2]});
        if (!is_connected(rest)) return EdgeTripleClass::kDanglingCut;
        return EdgeTripleClass::kNone;
    }

    // Lone edge lies in a triangle D: locate D's third vertex.
    int third = -1;
    for (const auto& t : profile.triangles) {
        std::uint64_t tm = (1ULL << t[0]) | (1ULL << t[1]) | (1ULL << t[2]);
        if ((tm & lone_mask) == lone_mask) third = std::countr_zero(tm & ~lone_mask);
    }
    Edge d = connector(third);
    Edge t_edge = connector(shared);
    Graph cut = delete_edges(g, d == t_edge ? std::vector<Edge>{d}
                                            : std::vector<Edge>{d, t_edge});
    std::uint64_t comp = reachable(cut, le.first, cut.vertex_mask());
    if ((comp & path_mask) == 0) return EdgeTripleClass::kSeparatedTriangles;
    return EdgeTripleClass::kNone;
}

}  // namespace lampack
