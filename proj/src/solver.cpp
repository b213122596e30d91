#include "lampack/solver.hpp"

#include <algorithm>
#include <bit>

namespace lampack {

std::uint64_t LambdaPacking::covered() const {
    std::uint64_t m = 0;
    for (const auto& p : paths) m |= p.vertex_mask();
    return m;
}

namespace {

enum class PathFilter { kAny, kTriangleOnly, kNonTriangleOnly };

struct BudgetHit {};

// Branch-and-bound over the lowest-index uncovered vertex. Branches are
// every admissible 3-vertex path through that vertex in (center,
// endpoints) lexicographic order, plus "leave uncovered" when maximizing.
class Search {
public:
    Search(const Graph& g, std::uint64_t active,
           const std::array<std::uint64_t, Graph::kMaxVertices>& allowed,
           bool factor_mode, PathFilter filter, std::uint64_t budget)
        : g_(g), allowed_(allowed), active_(active), factor_mode_(factor_mode),
          filter_(filter), budget_(budget) {}

    // Entry points. Both may throw BudgetHit.
    void solve_from(std::uint64_t covered, std::vector<VertexPath3>& prefix) {
        current_ = prefix;
        if (factor_mode_ && std::popcount(active_ & ~covered) % 3 != 0) return;
        recurse(active_ & ~covered);
    }

    bool found() const { return best_size_ >= 0; }
    const std::vector<VertexPath3>& best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

    bool admissible(const VertexPath3& p) const {
        if (filter_ == PathFilter::kAny) return true;
        bool tri = g_.has_edge(p.ends[0], p.ends[1]);
        return (filter_ == PathFilter::kTriangleOnly) == tri;
    }

    std::vector<VertexPath3> paths_through(int v, std::uint64_t uncovered) const {
        std::vector<VertexPath3> out;
        for (std::uint64_t mc = allowed_[v] & uncovered; mc; mc &= mc - 1) {
            int c = std::countr_zero(mc);
            for (std::uint64_t mw = allowed_[c] & uncovered & ~(1ULL << v); mw;
                 mw &= mw - 1)
                out.emplace_back(c, v, std::countr_zero(mw));
        }
        std::uint64_t ends = allowed_[v] & uncovered;
        for (std::uint64_t ma = ends; ma; ma &= ma - 1) {
            int a = std::countr_zero(ma);
            for (std::uint64_t mb = ends & ~(ma ^ (ma - 1)); mb; mb &= mb - 1)
                out.emplace_back(v, a, std::countr_zero(mb));
        }
        std::erase_if(out, [&](const VertexPath3& p) { return !admissible(p); });
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    // Returns true to stop the search (first factor found).
    bool recurse(std::uint64_t uncovered) {
        if (++nodes_ > budget_) throw BudgetHit{};
        if (uncovered == 0) {
            record();
            return factor_mode_;
        }
        if (!prune_check(uncovered)) return false;
        int v = std::countr_zero(uncovered);
        for (const auto& p : paths_through(v, uncovered)) {
            current_.push_back(p);
            bool stop = recurse(uncovered & ~p.vertex_mask());
            current_.pop_back();
            if (stop) return true;
        }
        if (!factor_mode_) {
            record();  // v may stay uncovered in a maximum packing
            return recurse(uncovered & ~(1ULL << v));
        }
        return false;
    }

    void record() {
        if (static_cast<int>(current_.size()) > best_size_) {
            best_size_ = static_cast<int>(current_.size());
            best_ = current_;
        }
    }

    // Component analysis of the surviving uncovered vertices: in factor
    // mode any component with size != 0 mod 3 is a dead end; when
    // maximizing, per-component capacity bounds the incumbent.
    bool prune_check(std::uint64_t uncovered) {
        std::uint64_t rest = uncovered;
        int capacity = 0;
        while (rest) {
            int v = std::countr_zero(rest);
            std::uint64_t comp = 1ULL << v, frontier = comp;
            while (frontier) {
                std::uint64_t next = 0;
                for (std::uint64_t m = frontier; m; m &= m - 1)
                    next |= allowed_[std::countr_zero(m)];
                frontier = next & rest & ~comp;
                comp |= frontier;
            }
            int size = std::popcount(comp);
            if (factor_mode_ && size % 3 != 0) return false;
            capacity += size / 3;
            rest &= ~comp;
        }
        if (!factor_mode_ &&
            static_cast<int>(current_.size()) + capacity <= best_size_)
            return false;
        return true;
    }

    const Graph& g_;
    const std::array<std::uint64_t, Graph::kMaxVertices>& allowed_;
    std::uint64_t active_;
    bool factor_mode_;
    PathFilter filter_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<VertexPath3> current_, best_;
    int best_size_ = -1;
};

struct Prepared {
    std::uint64_t active = 0;
    std::array<std::uint64_t, Graph::kMaxVertices> allowed{};
};

Prepared prepare(const Graph& g, const PackingConstraints& c) {
    if (c.required_path && c.required_edge)
        throw std::invalid_argument("required_edge and required_path cannot both be set");
    Prepared p;
    p.active = g.vertex_mask();
    for (int v : c.deleted_vertices) {
        g.check_vertex(v);
        p.active &= ~(1ULL << v);
    }
    for (int v = 0; v < g.vertex_count(); v++)
        p.allowed[v] = g.neighbors(v) & p.active;
    for (const auto& [u, v] : c.forbidden_edges) {
        if (!g.has_edge(u, v))
            throw std::invalid_argument("forbidden edge is not an edge of the graph");
        p.allowed[u] &= ~(1ULL << v);
        p.allowed[v] &= ~(1ULL << u);
    }
    if (c.required_edge) {
        auto [u, v] = *c.required_edge;
        if (!g.has_edge(u, v))
            throw std::invalid_argument("required edge is not an edge of the graph");
        if (!((p.allowed[u] >> v) & 1ULL))
            throw std::invalid_argument("required edge is deleted or forbidden");
    }
    if (c.required_path) {
        const auto& rp = *c.required_path;
        if (!rp.valid_in(g))
            throw std::invalid_argument("required path is not a path of the graph");
        for (int x : rp.vertices())
            if (!((p.active >> x) & 1ULL))
                throw std::invalid_argument("required path uses a deleted vertex");
        if (!((p.allowed[rp.center] >> rp.ends[0]) & 1ULL) ||
            !((p.allowed[rp.center] >> rp.ends[1]) & 1ULL))
            throw std::invalid_argument("required path uses a forbidden edge");
    }
    return p;
}

SolveResult run(const Graph& g, const PackingConstraints& c, bool factor_mode,
                PathFilter filter, std::uint64_t budget) {
    Prepared prep = prepare(g, c);
    Search search(g, prep.active, prep.allowed, factor_mode, filter, budget);
    SolveResult result;
    try {
        if (c.required_edge) {
            // Branch first on the paths containing the required edge.
            auto [u, v] = *c.required_edge;
            std::vector<VertexPath3> cands;
            for (int center : {u, v}) {
                int other = center == u ? v : u;
                for (std::uint64_t m = prep.allowed[center] & ~(1ULL << other); m;
                     m &= m - 1)
                    cands.emplace_back(center, other, std::countr_zero(m));
            }
            std::erase_if(cands,
                          [&](const VertexPath3& p) { return !search.admissible(p); });
            std::sort(cands.begin(), cands.end());
            for (const auto& p : cands) {
                std::vector<VertexPath3> prefix{p};
                search.solve_from(p.vertex_mask(), prefix);
                if (factor_mode && search.found()) break;
            }
        } else if (c.required_path) {
            std::vector<VertexPath3> prefix{*c.required_path};
            search.solve_from(c.required_path->vertex_mask(), prefix);
        } else {
            std::vector<VertexPath3> prefix;
            search.solve_from(0, prefix);
        }
    } catch (const BudgetHit&) {
        result.status = SolveStatus::kBudgetExceeded;
        result.nodes = search.nodes();
        return result;
    }
    result.nodes = search.nodes();
    if (search.found()) {
        result.status = SolveStatus::kSolved;
        result.packing.paths = search.best();
    } else {
        result.status = SolveStatus::kInfeasible;
    }
    return result;
}

}  // namespace

SolveResult max_packing(const Graph& g, const PackingConstraints& c,
                        std::uint64_t node_budget) {
    return run(g, c, /*factor_mode=*/false, PathFilter::kAny, node_budget);
}

SolveResult has_factor(const Graph& g, const PackingConstraints& c,
                       std::uint64_t node_budget) {
    return run(g, c, /*factor_mode=*/true, PathFilter::kAny, node_budget);
}

SolveResult factor_respecting_triangles(const Graph& g, TriangleMode mode,
                                        std::uint64_t node_budget) {
    PathFilter filter = mode == TriangleMode::kAllTriangle
                            ? PathFilter::kTriangleOnly
                            : PathFilter::kNonTriangleOnly;
    return run(g, PackingConstraints::none(), /*factor_mode=*/true, filter,
               node_budget);
}

namespace {

// Oracle enumeration, deliberately naive and structurally independent
// of the branch-and-bound above: list every 3-vertex path, then try
// every family of pairwise-disjoint paths in index order.
void brute_rec(const std::vector<VertexPath3>& all,
               const std::optional<Edge>& required_edge, std::size_t from,
               std::uint64_t used, std::vector<VertexPath3>& cur,
               std::vector<VertexPath3>& best) {
    bool satisfied = !required_edge;
    if (required_edge)
        for (const auto& p : cur)
            if (p.uses_edge(*required_edge)) satisfied = true;
    if (satisfied && cur.size() > best.size()) best = cur;
    for (std::size_t i = from; i < all.size(); i++) {
        if (all[i].vertex_mask() & used) continue;
        cur.push_back(all[i]);
        brute_rec(all, required_edge, i + 1, used | all[i].vertex_mask(), cur, best);
        cur.pop_back();
    }
}

}  // namespace

LambdaPacking brute_force_max_packing(const Graph& g, const PackingConstraints& c) {
    if (g.vertex_count() > 12)
        throw std::invalid_argument("brute-force oracle is limited to n <= 12");
    std::uint64_t deleted = 0;
    for (int v : c.deleted_vertices) {
        g.check_vertex(v);
        deleted |= 1ULL << v;
    }
    auto forbidden = [&](int u, int v) {
        for (const auto& e : c.forbidden_edges)
            if (e == make_edge(u, v)) return true;
        return false;
    };
    std::vector<VertexPath3> all;
    int n = g.vertex_count();
    for (int center = 0; center < n; center++) {
        if ((deleted >> center) & 1ULL) continue;
        auto nbrs = g.neighbor_list(center);
        for (std::size_t i = 0; i < nbrs.size(); i++)
            for (std::size_t j = i + 1; j < nbrs.size(); j++) {
                int a = nbrs[i], b = nbrs[j];
                if ((deleted >> a) & 1ULL || (deleted >> b) & 1ULL) continue;
                if (forbidden(center, a) || forbidden(center, b)) continue;
                all.emplace_back(center, a, b);
            }
    }
    std::vector<VertexPath3> cur, best;
    if (c.required_path) {
        if (std::find(all.begin(), all.end(), *c.required_path) == all.end())
            throw std::invalid_argument("required path not available under constraints");
        cur.push_back(*c.required_path);
        std::uint64_t used = c.required_path->vertex_mask();
        brute_rec(all, c.required_edge, 0, used, cur, best);
    } else {
        brute_rec(all, c.required_edge, 0, 0, cur, best);
    }
    return LambdaPacking{best};
}

void validate_packing(const LambdaPacking& p, const Graph& g,
                      const PackingConstraints& c, bool require_factor) {
    std::uint64_t active = g.vertex_mask();
    for (int v : c.deleted_vertices) {
        g.check_vertex(v);
        active &= ~(1ULL << v);
    }
    std::uint64_t covered = 0;
    for (const auto& path : p.paths) {
        if (!path.valid_in(g))
            throw std::invalid_argument("packing contains an invalid path");
        std::uint64_t m = path.vertex_mask();
        if (m & covered)
            throw std::invalid_argument("packing paths are not vertex-disjoint");
        if (m & ~active)
            throw std::invalid_argument("packing uses a deleted vertex");
        for (const auto& e : c.forbidden_edges)
            if (path.uses_edge(make_edge(e.first, e.second)))
                throw std::invalid_argument("packing uses a forbidden edge");
        covered |= m;
    }
    if (c.required_path &&
        std::find(p.paths.begin(), p.paths.end(), *c.required_path) == p.paths.end())
        throw std::invalid_argument("packing is missing the required path");
    if (c.required_edge) {
        bool ok = false;
        for (const auto& path : p.paths)
            if (path.uses_edge(make_edge(c.required_edge->first,
                                         c.required_edge->second)))
                ok = true;
        if (!ok) throw std::invalid_argument("packing is missing the required edge");
    }
    if (require_factor && covered != active)
        throw std::invalid_argument("packing is not a factor");
}

int lambda_number(const Graph& g, std::uint64_t node_budget) {
    auto r = max_packing(g, PackingConstraints::none(), node_budget);
    if (r.status != SolveStatus::kSolved)
        throw std::runtime_error("lambda computation exceeded the node budget");
    return r.packing.size();
}

}  // namespace lampack
