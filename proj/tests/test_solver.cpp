#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lampack/families.hpp"
#include "lampack/graph6.hpp"
#include "lampack/solver.hpp"
#include "lampack/structure.hpp"

using namespace lampack;

namespace {
Graph c6() { return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}); }
}  // namespace

TEST_CASE("basic maxima") {
    auto r = max_packing(c6(), PackingConstraints::none());
    REQUIRE(r.status == SolveStatus::kSolved);
    CHECK(r.packing.size() == 2);
    validate_packing(r.packing, c6(), PackingConstraints::none(), true);

    CHECK(lambda_number(Graph(3, {{0, 1}, {1, 2}})) == 1);
    CHECK(lambda_number(Graph(2, {{0, 1}})) == 0);
    CHECK(lambda_number(Graph(0)) == 0);
    CHECK(lambda_number(gen_net()) == 1);
}

TEST_CASE("factor decisions") {
    CHECK(has_factor(c6(), PackingConstraints::none()).status == SolveStatus::kSolved);
    CHECK(has_factor(gen_net(), PackingConstraints::none()).status ==
          SolveStatus::kInfeasible);
    // wrong residue can never have a factor
    CHECK(has_factor(Graph(4, {{0, 1}, {1, 2}, {2, 3}}), PackingConstraints::none())
              .status == SolveStatus::kInfeasible);
}

TEST_CASE("agreement with the exhaustive oracle across the corpus") {
    for (const auto& g : read_graph6_file(FIXTURE_DIR "/connected_le7.g6")) {
        auto fast = max_packing(g, PackingConstraints::none());
        REQUIRE(fast.status == SolveStatus::kSolved);
        auto slow = brute_force_max_packing(g, PackingConstraints::none());
        CHECK(fast.packing.size() == slow.size());
    }
}

TEST_CASE("packing size adds up over components") {
    // triangle + path, disjoint
    Graph g(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}});
    CHECK(lambda_number(g) == 2);
    Graph h(5, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(lambda_number(h) == 1);
}

TEST_CASE("constraints shape the solution") {
    Graph g = c6();

    PackingConstraints req;
    req.required_edge = Edge{2, 3};
    auto r = max_packing(g, req);
    REQUIRE(r.status == SolveStatus::kSolved);
    bool used = false;
    for (const auto& p : r.packing.paths) used |= p.uses_edge({2, 3});
    CHECK(used);

    PackingConstraints path;
    path.required_path = VertexPath3(1, 0, 2);
    auto rp = has_factor(g, path);
    REQUIRE(rp.status == SolveStatus::kSolved);
    CHECK(std::find(rp.packing.paths.begin(), rp.packing.paths.end(),
                    VertexPath3(1, 0, 2)) != rp.packing.paths.end());

    PackingConstraints forb;
    forb.forbidden_edges = {{0, 1}, {3, 4}};
    auto rf = has_factor(g, forb);
    // C6 factors must cut two opposite edges; forbidding 0-1 and 3-4 leaves one
    CHECK(rf.status == SolveStatus::kSolved);
    forb.forbidden_edges = {{0, 1}, {2, 3}};
    CHECK(has_factor(g, forb).status == SolveStatus::kInfeasible);

    PackingConstraints del;
    del.deleted_vertices = {0};
    CHECK(max_packing(g, del).packing.size() == 1);
}

TEST_CASE("inconsistent constraints are rejected") {
    Graph g = c6();
    PackingConstraints c;
    c.required_edge = Edge{0, 2};  // not an edge
    CHECK_THROWS_AS(max_packing(g, c), std::invalid_argument);

    PackingConstraints both;
    both.required_edge = Edge{0, 1};
    both.required_path = VertexPath3(1, 0, 2);
    CHECK_THROWS_AS(max_packing(g, both), std::invalid_argument);

    PackingConstraints clash;
    clash.required_path = VertexPath3(1, 0, 2);
    clash.deleted_vertices = {1};
    CHECK_THROWS_AS(max_packing(g, clash), std::invalid_argument);

    PackingConstraints forb_req;
    forb_req.required_edge = Edge{0, 1};
    forb_req.forbidden_edges = {{0, 1}};
    CHECK_THROWS_AS(max_packing(g, forb_req), std::invalid_argument);
}

TEST_CASE("budget trips are reported, never converted to answers") {
    Graph big = sample_cubic(40, 7);
    auto r = max_packing(big, PackingConstraints::none(), 5);
    CHECK(r.status == SolveStatus::kBudgetExceeded);
    CHECK(r.nodes >= 5);
}

TEST_CASE("validate_packing catches every kind of lie") {
    Graph g = c6();
    LambdaPacking ok{{VertexPath3(1, 0, 2), VertexPath3(4, 3, 5)}};
    validate_packing(ok, g, PackingConstraints::none(), true);

    LambdaPacking overlap{{VertexPath3(1, 0, 2), VertexPath3(3, 2, 4)}};
    CHECK_THROWS_AS(validate_packing(overlap, g, PackingConstraints::none(), false),
                    std::invalid_argument);

    LambdaPacking phantom{{VertexPath3(1, 0, 3)}};  // 1-3 not an edge
    CHECK_THROWS_AS(validate_packing(phantom, g, PackingConstraints::none(), false),
                    std::invalid_argument);

    LambdaPacking partial{{VertexPath3(1, 0, 2)}};
    CHECK_THROWS_AS(validate_packing(partial, g, PackingConstraints::none(), true),
                    std::invalid_argument);

    PackingConstraints forb;
    forb.forbidden_edges = {{0, 1}};
    CHECK_THROWS_AS(validate_packing(ok, g, forb, true), std::invalid_argument);

    PackingConstraints del;
    del.deleted_vertices = {0};
    CHECK_THROWS_AS(validate_packing(ok, g, del, false), std::invalid_argument);
}

TEST_CASE("triangle-respecting factor modes on a blown K4") {
    Graph tri_base(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto blown = [&] {
        // built by hand so this test does not lean on the constructive module
        std::vector<Edge> es;
        // vertices 3v,3v+1,3v+2 per base vertex; ports by neighbor rank
        for (int v = 0; v < 4; v++) {
            es.emplace_back(3 * v, 3 * v + 1);
            es.emplace_back(3 * v, 3 * v + 2);
            es.emplace_back(3 * v + 1, 3 * v + 2);
        }
        for (const auto& [u, v] : tri_base.edges()) {
            auto rank = [&](int at, int of) {
                auto nb = tri_base.neighbor_list(at);
                return static_cast<int>(std::find(nb.begin(), nb.end(), of) -
                                        nb.begin());
            };
            es.emplace_back(3 * u + rank(u, v), 3 * v + rank(v, u));
        }
        return Graph(12, es);
    }();
    auto all_tri = factor_respecting_triangles(blown, TriangleMode::kAllTriangle);
    REQUIRE(all_tri.status == SolveStatus::kSolved);
    for (const auto& p : all_tri.packing.paths) CHECK(p.induces_triangle(blown));
    auto no_tri = factor_respecting_triangles(blown, TriangleMode::kNoTriangle);
    REQUIRE(no_tri.status == SolveStatus::kSolved);
    for (const auto& p : no_tri.packing.paths) CHECK(!p.induces_triangle(blown));
}

TEST_CASE("oracle size guard") {
    CHECK_THROWS_AS(brute_force_max_packing(Graph(13), PackingConstraints::none()),
                    std::invalid_argument);
}
