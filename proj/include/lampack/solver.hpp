#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lampack/graph.hpp"

namespace lampack {

/// A set of vertex-disjoint 3-vertex paths in a host graph.
struct LambdaPacking {
    std::vector<VertexPath3> paths;

    int size() const { return static_cast<int>(paths.size()); }
    std::uint64_t covered() const;
};

/// Constraint family for packing queries: G - {x,y}, G - E, "factor
/// containing e", "factor containing L".
struct PackingConstraints {
    std::optional<VertexPath3> required_path;  // must appear as a component
    std::optional<Edge> required_edge;         // must lie inside a component
    std::vector<Edge> forbidden_edges;         // no component may use these
    std::vector<int> deleted_vertices;         // removed before packing

    static PackingConstraints none() { return {}; }
};

enum class SolveStatus {
    kSolved,           // max_packing: optimum found; has_factor: factor found
    kInfeasible,       // definitively no packing/factor satisfies the constraints
    kBudgetExceeded,   // node budget tripped; result is unknown, never "no"
};

struct SolveResult {
    SolveStatus status = SolveStatus::kInfeasible;
    LambdaPacking packing;   // meaningful iff status == kSolved
    std::uint64_t nodes = 0; // search nodes expended
};

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

/// Maximum-cardinality packing under constraints. Deterministic:
/// candidate paths are branched in (center, endpoints) order and the
/// first-found optimum is kept. kInfeasible only when the required
/// edge/path cannot appear in any packing.
SolveResult max_packing(const Graph& g, const PackingConstraints& c,
                        std::uint64_t node_budget = kDefaultNodeBudget);

/// Factor decision: a packing covering every surviving vertex, or a
/// definitive "none exists". Exits early on the first factor found.
SolveResult has_factor(const Graph& g, const PackingConstraints& c,
                       std::uint64_t node_budget = kDefaultNodeBudget);

enum class TriangleMode {
    kAllTriangle,  // every component's vertices induce a triangle
    kNoTriangle,   // no component's vertices induce a triangle
};

SolveResult factor_respecting_triangles(const Graph& g, TriangleMode mode,
                                        std::uint64_t node_budget = kDefaultNodeBudget);

/// Independent oracle: exhaustive enumeration over families of disjoint
/// paths, no shared pruning with the branch-and-bound path. n <= 12.
LambdaPacking brute_force_max_packing(const Graph& g, const PackingConstraints& c);

/// Re-validates a packing against its host graph and constraints;
/// throws std::invalid_argument on any violation. When require_factor
/// is set, the packing must cover every non-deleted vertex.
void validate_packing(const LambdaPacking& p, const Graph& g,
                      const PackingConstraints& c, bool require_factor);

/// lambda(G): size of a maximum unconstrained packing.
int lambda_number(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace lampack
