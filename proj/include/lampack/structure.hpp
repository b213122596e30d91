#pragma once

#include <array>
#include <map>
#include <vector>

#include "lampack/graph.hpp"

namespace lampack {

/// Block-cut decomposition. A block is a maximal 2-connected subgraph
/// or a bridge edge; isolated vertices form no block. A block's
/// boundary vertices are those shared with another block; a block with
/// exactly one boundary vertex is an end-block.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;      // vertex sets, each sorted
    std::vector<int> cut_vertices;             // sorted
    std::vector<std::vector<int>> boundary;    // per block, sorted
    int end_block_count = 0;
};

struct TriangleProfile {
    std::vector<std::array<int, 3>> triangles;  // each sorted, list sorted
    std::vector<int> vertex_triangle_count;
    std::map<Edge, int> edge_triangle_count;    // only edges of the graph
};

bool is_connected(const Graph& g);
bool is_claw_free(const Graph& g);
bool is_cubic(const Graph& g);

// Size of a minimum vertex cut; n-1 for complete graphs, 0 for
// disconnected or single-vertex graphs.
int vertex_connectivity(const Graph& g);

BlockDecomposition block_decomposition(const Graph& g);
TriangleProfile triangle_profile(const Graph& g);

/// Classification of a 3-edge set in a triangle blow-up of a cubic
/// 2-connected graph. Exactly the obstruction shapes whose removal
/// destroys every path factor (kNone = removable).
enum class EdgeTripleClass {
    kClaw,                // three edges sharing one endpoint
    kTriangle,            // the edge-induced subgraph is a triangle
    kDanglingCut,         // path-in-triangle + lone non-triangle edge, removal disconnects
    kSeparatedTriangles,  // path-in-triangle + lone triangle edge in separated triangles
    kNone,
};

struct StructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requires every vertex of g to lie in exactly one triangle (the
// blow-up shape); throws StructureError otherwise.
EdgeTripleClass classify_edge_triple(const Graph& g, const std::array<Edge, 3>& es);

}  // namespace lampack
