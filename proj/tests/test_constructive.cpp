#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "lampack/constructive.hpp"
#include "lampack/families.hpp"
#include "lampack/graph6.hpp"
#include "lampack/solver.hpp"
#include "lampack/structure.hpp"

using namespace lampack;

namespace {

Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

std::vector<Graph> cubic_bases(int max_n) {
    std::vector<Graph> out;
    for (const auto& g : read_graph6_file(FIXTURE_DIR "/cubic_le10.g6"))
        if (g.vertex_count() <= max_n && vertex_connectivity(g) >= 2)
            out.push_back(g);
    return out;
}

void check_factor_shape(const Graph& blown, const LambdaPacking& p,
                        const VertexPath3& l, BlowupFactorMode mode) {
    validate_packing(p, blown, PackingConstraints::none(), true);
    REQUIRE(std::find(p.paths.begin(), p.paths.end(), l) != p.paths.end());
    int tri = 0;
    for (const auto& path : p.paths) tri += path.induces_triangle(blown);
    switch (mode) {
        case BlowupFactorMode::kAllTriangle: CHECK(tri == p.size()); break;
        case BlowupFactorMode::kNoTriangle: CHECK(tri == 0); break;
        case BlowupFactorMode::kMixed: CHECK(tri >= 1); break;
    }
}

}  // namespace

TEST_CASE("blow-up wiring") {
    auto m = triangle_blowup(k4());
    CHECK(m.blown.vertex_count() == 12);
    CHECK(m.blown.edge_count() == 18);  // 4 triangles + 6 connector edges
    CHECK(is_cubic(m.blown));
    CHECK(is_claw_free(m.blown));
    auto tp = triangle_profile(m.blown);
    for (int v = 0; v < 12; v++) CHECK(tp.vertex_triangle_count[v] == 1);
    // alpha is a bijection base-edges -> non-triangle blown edges
    CHECK(m.alpha.size() == 6);
    std::set<Edge> images;
    for (const auto& [be, le] : m.alpha) {
        CHECK(m.blown.has_edge(le.first, le.second));
        CHECK(tp.edge_triangle_count.at(le) == 0);
        images.insert(le);
        CHECK(m.alpha_inv.at(le) == be);
    }
    CHECK(images.size() == 6);
    CHECK_THROWS_AS(triangle_blowup(gen_net()), std::invalid_argument);
}

TEST_CASE("recognition inverts construction") {
    for (const auto& base : cubic_bases(8)) {
        auto m = triangle_blowup(base);
        auto rec = recognize_blowup(m.blown);
        REQUIRE(rec.has_value());
        CHECK(rec->base.vertex_count() == base.vertex_count());
        CHECK(rec->base.edge_count() == base.edge_count());
        CHECK(is_cubic(rec->base));
        // owners of a triangle agree and respect alpha
        for (const auto& [be, le] : rec->alpha) {
            CHECK(rec->base.has_edge(be.first, be.second));
            CHECK(rec->base_vertex_of(le.first) == be.first);
            CHECK(rec->base_vertex_of(le.second) == be.second);
        }
    }
}

TEST_CASE("non-blow-ups are turned away") {
    CHECK(!recognize_blowup(k4()).has_value());
    CHECK(!recognize_blowup(gen_net()).has_value());
    CHECK(!recognize_blowup(Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}))
               .has_value());
}

TEST_CASE("2-factor through a chosen 3-vertex path") {
    for (const auto& base : cubic_bases(8)) {
        for (int c = 0; c < base.vertex_count(); c++) {
            auto nb = base.neighbor_list(c);
            VertexPath3 j(c, nb[0], nb[1]);
            // guaranteed to exist in a 2-connected cubic graph
            auto cycles = two_factor_containing_path(base, j);
            // spanning, disjoint, all real cycle edges, and j's edges present
            std::set<int> seen;
            bool has_e1 = false, has_e2 = false;
            for (const auto& cyc : cycles) {
                REQUIRE(cyc.size() >= 3);
                for (std::size_t i = 0; i < cyc.size(); i++) {
                    int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
                    CHECK(base.has_edge(u, v));
                    CHECK(seen.insert(u).second);  // each vertex on one cycle once
                    if (make_edge(u, v) == make_edge(c, nb[0])) has_e1 = true;
                    if (make_edge(u, v) == make_edge(c, nb[1])) has_e2 = true;
                }
            }
            CHECK(static_cast<int>(seen.size()) == base.vertex_count());
            CHECK(has_e1);
            CHECK(has_e2);
        }
    }
}

TEST_CASE("factor construction matches the path's triangle type") {
    for (const auto& base : cubic_bases(6)) {
        auto m = triangle_blowup(base);
        const Graph& g = m.blown;
        for (int c = 0; c < g.vertex_count(); c++) {
            auto nb = g.neighbor_list(c);
            for (std::size_t i = 0; i < nb.size(); i++)
                for (std::size_t j = i + 1; j < nb.size(); j++) {
                    VertexPath3 l(c, nb[i], nb[j]);
                    if (l.induces_triangle(g)) {
                        auto p = blowup_factor(m, l, BlowupFactorMode::kAllTriangle);
                        check_factor_shape(g, p, l, BlowupFactorMode::kAllTriangle);
                        CHECK_THROWS_AS(
                            blowup_factor(m, l, BlowupFactorMode::kNoTriangle),
                            std::invalid_argument);
                    } else {
                        auto p = blowup_factor(m, l, BlowupFactorMode::kNoTriangle);
                        check_factor_shape(g, p, l, BlowupFactorMode::kNoTriangle);
                        auto q = blowup_factor(m, l, BlowupFactorMode::kMixed);
                        check_factor_shape(g, q, l, BlowupFactorMode::kMixed);
                        // the solver agrees a factor through l exists
                        PackingConstraints c2;
                        c2.required_path = l;
                        CHECK(has_factor(g, c2).status == SolveStatus::kSolved);
                    }
                }
        }
    }
}

TEST_CASE("both pure modes coexist on a blown K4") {
    auto m = triangle_blowup(k4());
    CHECK(factor_respecting_triangles(m.blown, TriangleMode::kAllTriangle).status ==
          SolveStatus::kSolved);
    CHECK(factor_respecting_triangles(m.blown, TriangleMode::kNoTriangle).status ==
          SolveStatus::kSolved);
}
