#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "lampack/graph.hpp"
#include "lampack/solver.hpp"

namespace lampack {

struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Triangle blow-up of a cubic base graph: each base vertex v becomes a
/// triangle, and each base edge becomes the unique non-triangle edge
/// between the two triangles (the bijection alpha).
struct BlowupMap {
    Graph base;
    Graph blown;
    std::vector<std::array<int, 3>> triangle;  // base vertex -> its triangle, sorted
    std::map<Edge, Edge> alpha;                // base edge -> non-triangle blown edge
    std::map<Edge, Edge> alpha_inv;

    int base_vertex_of(int blown_vertex) const { return owner.at(blown_vertex); }
    std::vector<int> owner;  // blown vertex -> base vertex
};

BlowupMap triangle_blowup(const Graph& f);

/// Reconstructs the blow-up structure of a graph that is a triangle
/// blow-up of some simple cubic graph (every vertex in exactly one
/// triangle, contraction simple); nullopt if the graph is not of that
/// shape. The recognized base is relabeled 0..n/3-1 in triangle order.
std::optional<BlowupMap> recognize_blowup(const Graph& g);

/// A 2-factor (spanning disjoint cycles, as vertex sequences) whose
/// edge set contains both edges of j. Works on cubic 2-connected
/// graphs, via the complement of a perfect matching of a - E(j).
std::vector<std::vector<int>> two_factor_containing_path(const Graph& a,
                                                         const VertexPath3& j);

enum class BlowupFactorMode {
    kAllTriangle,   // every component induces a triangle (requires triangle l)
    kNoTriangle,    // no component induces a triangle (requires non-triangle l)
    kMixed,         // l's component plus at least one triangle component
};

/// A path factor of the blown graph containing l as a component, with
/// triangle structure dictated by the mode.
LambdaPacking blowup_factor(const BlowupMap& m, const VertexPath3& l,
                            BlowupFactorMode mode);

}  // namespace lampack
