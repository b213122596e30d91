#include "lampack/constructive.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "lampack/structure.hpp"

namespace lampack {

namespace {

std::array<int, 3> sorted_triple(int a, int b, int c) {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

// Deterministic path covering a triangle: middle vertex as center.
VertexPath3 triangle_path(const std::array<int, 3>& t) {
    return VertexPath3(t[1], t[0], t[2]);
}

}  // namespace

BlowupMap triangle_blowup(const Graph& f) {
    if (!is_cubic(f)) throw std::invalid_argument("blow-up base must be cubic");
    int n = f.vertex_count();
    if (3 * n > Graph::kMaxVertices)
        throw std::invalid_argument("blow-up would exceed the vertex limit");

    BlowupMap m{.base = f, .blown = Graph(0), .triangle = {}, .alpha = {},
                .alpha_inv = {}, .owner = {}};
    m.owner.assign(3 * n, 0);
    std::vector<Edge> edges;
    // Port i of vertex v (vertex 3v+i) faces v's i-th smallest neighbor.
    auto port = [&](int v, int u) {
        auto nbrs = f.neighbor_list(v);
        int i = static_cast<int>(std::find(nbrs.begin(), nbrs.end(), u) - nbrs.begin());
        return 3 * v + i;
    };
    for (int v = 0; v < n; v++) {
        m.triangle.push_back({3 * v, 3 * v + 1, 3 * v + 2});
        for (int i = 0; i < 3; i++) m.owner[3 * v + i] = v;
        edges.emplace_back(3 * v, 3 * v + 1);
        edges.emplace_back(3 * v, 3 * v + 2);
        edges.emplace_back(3 * v + 1, 3 * v + 2);
    }
    for (const auto& [u, w] : f.edges()) {
        Edge lifted = make_edge(port(u, w), port(w, u));
        edges.push_back(lifted);
        m.alpha[{u, w}] = lifted;
        m.alpha_inv[lifted] = {u, w};
    }
    m.blown = Graph(3 * n, edges);
    return m;
}

std::optional<BlowupMap> recognize_blowup(const Graph& g) {
    if (!is_cubic(g)) return std::nullopt;
    auto profile = triangle_profile(g);
    for (int count : profile.vertex_triangle_count)
        if (count != 1) return std::nullopt;

    int nb = g.vertex_count() / 3;
    std::vector<int> owner(g.vertex_count(), -1);
    std::vector<std::array<int, 3>> tris;
    for (const auto& t : profile.triangles)
        if (owner[t[0]] < 0 && owner[t[1]] < 0 && owner[t[2]] < 0) {
            for (int v : t) owner[v] = static_cast<int>(tris.size());
            tris.push_back(t);
        }
    if (static_cast<int>(tris.size()) != nb) return std::nullopt;

    std::vector<Edge> base_edges;
    std::map<Edge, Edge> alpha, alpha_inv;
    for (const auto& e : g.edges()) {
        if (profile.edge_triangle_count.at(e) > 0) continue;
        Edge be = make_edge(owner[e.first], owner[e.second]);
        if (be.first == be.second) return std::nullopt;
        if (alpha.count(be)) return std::nullopt;  // contraction not simple
        alpha[be] = e;
        alpha_inv[e] = be;
        base_edges.push_back(be);
    }
    Graph base(nb, base_edges);
    if (!is_cubic(base)) return std::nullopt;
    return BlowupMap{.base = std::move(base), .blown = g, .triangle = std::move(tris),
                     .alpha = std::move(alpha), .alpha_inv = std::move(alpha_inv),
                     .owner = std::move(owner)};
}

namespace {

bool match_rec(const std::array<std::uint64_t, Graph::kMaxVertices>& adj,
               std::uint64_t unmatched, std::vector<Edge>& out) {
    if (unmatched == 0) return true;
    int u = std::countr_zero(unmatched);
    for (std::uint64_t m = adj[u] & unmatched; m; m &= m - 1) {
        int w = std::countr_zero(m);
        out.emplace_back(u, w);
        if (match_rec(adj, unmatched & ~((1ULL << u) | (1ULL << w)), out))
            return true;
        out.pop_back();
    }
    return false;
}

}  // namespace

std::vector<std::vector<int>> two_factor_containing_path(const Graph& a,
                                                         const VertexPath3& j) {
    if (!is_cubic(a)) throw std::invalid_argument("2-factor host must be cubic");
    if (!j.valid_in(a)) throw std::invalid_argument("path is not a path of the graph");

    std::array<std::uint64_t, Graph::kMaxVertices> adj{};
    for (int v = 0; v < a.vertex_count(); v++) adj[v] = a.neighbors(v);
    for (int e : {0, 1}) {
        adj[j.center] &= ~(1ULL << j.ends[e]);
        adj[j.ends[e]] &= ~(1ULL << j.center);
    }
    std::vector<Edge> matching;
    if (!match_rec(adj, a.vertex_mask(), matching))
        throw ConstructionError(
            "no perfect matching avoiding the path: 2-factor construction failed");

    std::array<std::uint64_t, Graph::kMaxVertices> cyc{};
    for (int v = 0; v < a.vertex_count(); v++) cyc[v] = a.neighbors(v);
    for (const auto& [u, w] : matching) {
        cyc[u] &= ~(1ULL << w);
        cyc[w] &= ~(1ULL << u);
    }
    std::vector<std::vector<int>> cycles;
    std::uint64_t todo = a.vertex_mask();
    while (todo) {
        int start = std::countr_zero(todo);
        std::vector<int> cycle{start};
        todo &= ~(1ULL << start);
        int prev = -1, at = start;
        while (true) {
            std::uint64_t next = cyc[at] & ~(prev >= 0 ? (1ULL << prev) : 0ULL);
            int to = std::countr_zero(next);  // degree 2: unique way forward
            if (to == start) break;
            cycle.push_back(to);
            todo &= ~(1ULL << to);
            prev = at;
            at = to;
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

namespace {

// Lift a base cycle (vertex sequence) to the Hamiltonian cycle of the
// corresponding blown subgraph: each triangle is traversed
// enter-middle-exit between its two lifted cycle edges.
std::vector<int> lift_cycle(const BlowupMap& m, const std::vector<int>& base_cycle) {
    int k = static_cast<int>(base_cycle.size());
    std::vector<int> out;
    auto endpoint_owned = [&](const Edge& blown_edge, int base_vertex) {
        return m.owner[blown_edge.first] == base_vertex ? blown_edge.first
                                                        : blown_edge.second;
    };
    for (int i = 0; i < k; i++) {
        int v = base_cycle[i];
        int vp = base_cycle[(i + k - 1) % k];
        int vn = base_cycle[(i + 1) % k];
        Edge in_e = m.alpha.at(make_edge(vp, v));
        Edge out_e = m.alpha.at(make_edge(v, vn));
        int in = endpoint_owned(in_e, v);
        int exit = endpoint_owned(out_e, v);
        const auto& tri = m.triangle[v];
        int mid = tri[0] + tri[1] + tri[2] - in - exit;
        out.push_back(in);
        out.push_back(mid);
        out.push_back(exit);
    }
    return out;
}

// Cut a Hamiltonian cycle of length 3k into k paths, rotated so that
// start..start+2 is the first component; direction dir is +1 or -1.
std::vector<VertexPath3> cut_cycle(const std::vector<int>& cycle, int start, int dir) {
    int len = static_cast<int>(cycle.size());
    std::vector<VertexPath3> out;
    for (int t = 0; t < len; t += 3) {
        int a = cycle[((start + dir * t) % len + len) % len];
        int b = cycle[((start + dir * (t + 1)) % len + len) % len];
        int c = cycle[((start + dir * (t + 2)) % len + len) % len];
        out.emplace_back(b, a, c);
    }
    return out;
}

// Cut so that l is a component. l's center must sit between its two
// endpoints on the cycle.
std::vector<VertexPath3> cut_cycle_at(const std::vector<int>& cycle,
                                      const VertexPath3& l) {
    int len = static_cast<int>(cycle.size());
    for (int j = 0; j < len; j++) {
        if (cycle[j] != l.center) continue;
        int before = cycle[(j + len - 1) % len];
        int after = cycle[(j + 1) % len];
        for (int end : {0, 1})
            if (before == l.ends[end] && after == l.ends[1 - end])
                return cut_cycle(cycle, (j + len - 1) % len, 1);
    }
    throw ConstructionError("prescribed path does not lie on the lifted cycle");
}

struct BasePathAnchor {
    VertexPath3 base_path;   // S' in the base graph
    int x, z1;               // l = x - center - z1 with x in the center's triangle
};

BasePathAnchor base_anchor(const BlowupMap& m, const VertexPath3& l) {
    int c = l.center;
    int t0 = m.owner[c];
    const auto& tri = m.triangle[t0];
    auto in_tri = [&](int v) { return v == tri[0] || v == tri[1] || v == tri[2]; };
    int x, z1;
    if (in_tri(l.ends[0]) && !in_tri(l.ends[1])) {
        x = l.ends[0];
        z1 = l.ends[1];
    } else if (in_tri(l.ends[1]) && !in_tri(l.ends[0])) {
        x = l.ends[1];
        z1 = l.ends[0];
    } else {
        throw ConstructionError("path does not have exactly one endpoint in the "
                                "center's triangle");
    }
    int s = tri[0] + tri[1] + tri[2] - c - x;
    // The unique non-triangle edge at s.
    Edge s_conn{-1, -1};
    for (int w : m.blown.neighbor_list(s))
        if (m.owner[w] != t0) s_conn = make_edge(s, w);
    auto s_base = m.alpha_inv.at(s_conn);
    auto z_base = m.alpha_inv.at(make_edge(c, z1));
    int s1p = s_base.first == t0 ? s_base.second : s_base.first;
    int z1p = z_base.first == t0 ? z_base.second : z_base.first;
    return {VertexPath3(t0, s1p, z1p), x, z1};
}

// Shortest non-spanning cycle through the 3-vertex base path, found by
// exhaustive simple-path search between the path's endpoints avoiding
// its center.
std::vector<int> nonspanning_cycle_through(const Graph& base,
                                           const VertexPath3& s_prime) {
    int n = base.vertex_count();
    int from = s_prime.ends[1], to = s_prime.ends[0], center = s_prime.center;
    std::vector<int> best;
    std::vector<int> path{from};
    std::uint64_t used = (1ULL << from) | (1ULL << center);

    std::function<void(int)> dfs = [&](int at) {
        if (!best.empty() && path.size() + 1 >= best.size()) return;
        for (int w : base.neighbor_list(at)) {
            if (w == to) {
                if (static_cast<int>(path.size()) + 2 < n) {
                    best = path;
                    best.push_back(to);
                }
                continue;
            }
            if ((used >> w) & 1ULL) continue;
            used |= 1ULL << w;
            path.push_back(w);
            dfs(w);
            path.pop_back();
            used &= ~(1ULL << w);
        }
    };
    dfs(from);
    if (best.empty())
        throw ConstructionError("no non-spanning cycle through the base path");
    best.push_back(center);  // close the cycle: z1' ... s1' t0
    return best;
}

}  // namespace

LambdaPacking blowup_factor(const BlowupMap& m, const VertexPath3& l,
                            BlowupFactorMode mode) {
    if (!l.valid_in(m.blown))
        throw std::invalid_argument("l is not a 3-vertex path of the blown graph");
    bool tri_l = l.induces_triangle(m.blown);

    if (mode == BlowupFactorMode::kAllTriangle) {
        if (!tri_l)
            throw std::invalid_argument("all-triangle mode requires a triangle path");
        LambdaPacking p;
        int home = m.owner[l.center];
        for (int v = 0; v < m.base.vertex_count(); v++)
            p.paths.push_back(v == home ? l : triangle_path(m.triangle[v]));
        return p;
    }
    if (tri_l)
        throw std::invalid_argument("mode requires a non-triangle path");

    BasePathAnchor anchor = base_anchor(m, l);
    LambdaPacking p;

    if (mode == BlowupFactorMode::kNoTriangle) {
        auto cycles = two_factor_containing_path(m.base, anchor.base_path);
        for (const auto& base_cycle : cycles) {
            auto lifted = lift_cycle(m, base_cycle);
            if ((lifted.size()) % 3 != 0)
                throw ConstructionError("lifted cycle length not divisible by 3");
            bool has_l = std::find(lifted.begin(), lifted.end(), l.center) !=
                         lifted.end();
            auto parts = has_l ? cut_cycle_at(lifted, l) : cut_cycle(lifted, 1, 1);
            p.paths.insert(p.paths.end(), parts.begin(), parts.end());
        }
        return p;
    }

    // Mixed mode: a non-spanning cycle through S', triangles elsewhere.
    auto base_cycle = nonspanning_cycle_through(m.base, anchor.base_path);
    auto lifted = lift_cycle(m, base_cycle);
    auto parts = cut_cycle_at(lifted, l);
    p.paths.insert(p.paths.end(), parts.begin(), parts.end());
    std::uint64_t on_cycle = 0;
    for (int v : base_cycle) on_cycle |= 1ULL << v;
    for (int v = 0; v < m.base.vertex_count(); v++)
        if (!((on_cycle >> v) & 1ULL)) p.paths.push_back(triangle_path(m.triangle[v]));
    return p;
}

}  // namespace lampack
