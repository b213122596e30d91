#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <numeric>

#include "lampack/constructive.hpp"
#include "lampack/families.hpp"
#include "lampack/graph6.hpp"
#include "lampack/structure.hpp"

using namespace lampack;

namespace {

// Deliberately naive re-implementations, independent of the library's
// bit tricks, used as oracles over the whole small corpus.

bool claw_free_naive(const Graph& g) {
    int n = g.vertex_count();
    for (int c = 0; c < n; c++)
        for (int a = 0; a < n; a++)
            for (int b = a + 1; b < n; b++)
                for (int d = b + 1; d < n; d++) {
                    if (a == c || b == c || d == c) continue;
                    if (g.has_edge(c, a) && g.has_edge(c, b) && g.has_edge(c, d) &&
                        !g.has_edge(a, b) && !g.has_edge(a, d) && !g.has_edge(b, d))
                        return false;
                }
    return true;
}

int connectivity_naive(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1 || !is_connected(g)) return 0;
    for (int k = 0; k < n - 1; k++) {
        // try every k-subset as a cut
        std::vector<int> pick(k);
        std::function<bool(int, int)> rec = [&](int start, int depth) {
            if (depth == k) {
                auto r = delete_vertices(g, pick);
                return r.graph.vertex_count() > 1 && !is_connected(r.graph);
            }
            for (int v = start; v < n; v++) {
                pick[depth] = v;
                if (rec(v + 1, depth + 1)) return true;
            }
            return false;
        };
        if (rec(0, 0)) return k;
    }
    return n - 1;
}

Graph blown_k4() { return triangle_blowup(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})).blown; }

}  // namespace

TEST_CASE("claw-freeness on named graphs") {
    CHECK(is_claw_free(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})));
    CHECK(!is_claw_free(Graph(4, {{0, 1}, {0, 2}, {0, 3}})));
    CHECK(is_claw_free(gen_net()));
}

TEST_CASE("claw-freeness agrees with brute force over the corpus") {
    for (const auto& g : read_graph6_file(FIXTURE_DIR "/connected_le7.g6"))
        CHECK(is_claw_free(g) == claw_free_naive(g));
}

TEST_CASE("connectivity on named graphs") {
    CHECK(vertex_connectivity(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 3);
    CHECK(vertex_connectivity(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})) == 2);
    CHECK(vertex_connectivity(gen_net()) == 1);
    CHECK(vertex_connectivity(Graph(1)) == 0);
    CHECK(vertex_connectivity(Graph(2, {{0, 1}})) == 1);
    CHECK(vertex_connectivity(Graph(3, {{0, 1}})) == 0);
}

TEST_CASE("connectivity agrees with exhaustive cut search, n <= 6") {
    for (const auto& g : read_graph6_file(FIXTURE_DIR "/connected_le7.g6")) {
        if (g.vertex_count() > 6) break;
        CHECK(vertex_connectivity(g) == connectivity_naive(g));
    }
}

TEST_CASE("block decomposition of named graphs") {
    auto p4 = block_decomposition(Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(p4.blocks.size() == 3);
    CHECK(p4.end_block_count == 2);
    CHECK(p4.cut_vertices == std::vector<int>{1, 2});

    auto c5 = block_decomposition(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
    CHECK(c5.blocks.size() == 1);
    CHECK(c5.end_block_count == 0);
    CHECK(c5.cut_vertices.empty());

    auto net = block_decomposition(gen_net());
    CHECK(net.blocks.size() == 4);
    CHECK(net.end_block_count == 3);
    CHECK(net.cut_vertices == std::vector<int>{0, 1, 2});
}

TEST_CASE("block-tree identity over the corpus") {
    for (const auto& g : read_graph6_file(FIXTURE_DIR "/connected_le7.g6")) {
        auto bd = block_decomposition(g);
        int sum = 0;
        for (const auto& b : bd.blocks) sum += static_cast<int>(b.size()) - 1;
        CHECK(sum == g.vertex_count() - 1);
        if (bd.blocks.size() >= 2) CHECK(bd.end_block_count >= 2);
    }
}

TEST_CASE("triangle profile of named graphs") {
    auto c6 = triangle_profile(
        Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}));
    CHECK(c6.triangles.empty());

    auto k4 = triangle_profile(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    CHECK(k4.triangles.size() == 4);
    for (int v = 0; v < 4; v++) CHECK(k4.vertex_triangle_count[v] == 3);
    for (const auto& [e, c] : k4.edge_triangle_count) CHECK(c == 2);

    auto net = triangle_profile(gen_net());
    CHECK(net.triangles.size() == 1);
    CHECK(net.vertex_triangle_count == std::vector<int>{1, 1, 1, 0, 0, 0});
}

TEST_CASE("blown graphs have the one-triangle-per-vertex shape") {
    Graph g = blown_k4();
    auto tp = triangle_profile(g);
    CHECK(tp.triangles.size() == 4);
    for (int v = 0; v < g.vertex_count(); v++)
        CHECK(tp.vertex_triangle_count[v] == 1);
    for (const auto& [e, c] : tp.edge_triangle_count) CHECK(c <= 1);
}

TEST_CASE("edge triple classification on a blown K4") {
    Graph g = blown_k4();
    auto tp = triangle_profile(g);
    REQUIRE(tp.triangles.size() == 4);

    // the three edges of one blown triangle
    auto t = tp.triangles[0];
    std::array<Edge, 3> tri = {make_edge(t[0], t[1]), make_edge(t[0], t[2]),
                               make_edge(t[1], t[2])};
    CHECK(classify_edge_triple(g, tri) == EdgeTripleClass::kTriangle);

    // three edges at one vertex with distinct far endpoints
    int v = 0;
    auto nb = g.neighbor_list(v);
    REQUIRE(nb.size() == 3);
    std::array<Edge, 3> claw = {make_edge(v, nb[0]), make_edge(v, nb[1]),
                                make_edge(v, nb[2])};
    CHECK(classify_edge_triple(g, claw) == EdgeTripleClass::kClaw);

    // two edges of one triangle plus a far-away non-triangle edge: removable
    Edge far{-1, -1};
    for (const auto& [e, c] : tp.edge_triangle_count)
        if (c == 0 && e.first != t[0] && e.first != t[1] && e.first != t[2] &&
            e.second != t[0] && e.second != t[1] && e.second != t[2])
            far = e;
    REQUIRE(far.first >= 0);
    std::array<Edge, 3> mixed = {make_edge(t[0], t[1]), make_edge(t[0], t[2]), far};
    CHECK(classify_edge_triple(g, mixed) == EdgeTripleClass::kNone);

    // precondition violations are structure errors
    CHECK_THROWS_AS(classify_edge_triple(gen_net(), tri), StructureError);
}

TEST_CASE("claw classification needs distinct far endpoints") {
    Graph g = blown_k4();
    auto tp = triangle_profile(g);
    auto t = tp.triangles[0];
    // two triangle edges meet at t[0] but close into a triangle with the third
    std::array<Edge, 3> shared = {make_edge(t[0], t[1]), make_edge(t[0], t[2]),
                                  make_edge(t[1], t[2])};
    CHECK(classify_edge_triple(g, shared) != EdgeTripleClass::kClaw);
}
