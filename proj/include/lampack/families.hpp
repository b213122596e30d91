#pragma once

#include <cstdint>
#include <utility>

#include "lampack/graph.hpp"

namespace lampack {

/// The net: a triangle with one pendant leaf per triangle vertex.
/// Labels: triangle 0,1,2; leaf i+3 hangs off triangle vertex i.
Graph gen_net();

/// A member of the three-leaf triangle-chain family with 6 + 3*steps
/// vertices, grown from the net by repeatedly expanding a leaf into a
/// triangle carrying a fresh pendant leaf.
Graph gen_class_A(int steps);

/// Recognizer for the family: connected, max degree 3, every vertex of
/// degree 2 or 3 in exactly one triangle, exactly three leaves.
bool is_class_A(const Graph& g);

/// The 9-vertex graph H: a net joined to an extra triangle T, each net
/// leaf adjacent to the two non-matching T vertices. Returns H and T's
/// vertex triple.
struct HGraph {
    Graph graph;
    std::array<int, 3> t;  // the distinguished triangle
};
HGraph gen_H();

/// H with the net replaced by gen_class_A(steps).
HGraph gen_H_extended(int steps);

/// Two cycles of lengths la, lb plus one apex z adjacent to the
/// endpoints of one distinguished edge per cycle. Returns the graph and
/// the distinguished edges a, b.
struct RGraph {
    Graph graph;
    Edge a, b;
};
RGraph gen_R(int la, int lb);

/// Two cycles plus two apexes z1, z2 (each adjacent to the endpoints of
/// one distinguished edge per cycle) and the edge e = z1 z2.
struct QGraph {
    Graph graph;
    Edge e;
};
QGraph gen_Q(int la, int lb);

/// Seeded configuration-model cubic sampler with rejection of loops and
/// parallel edges; retries until simple. n must be even, >= 4.
Graph sample_cubic(int n, std::uint64_t seed);

}  // namespace lampack
