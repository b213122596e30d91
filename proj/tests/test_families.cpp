#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lampack/families.hpp"
#include "lampack/solver.hpp"
#include "lampack/structure.hpp"

using namespace lampack;

TEST_CASE("the net") {
    Graph n = gen_net();
    CHECK(n.vertex_count() == 6);
    std::vector<int> degs;
    for (int v = 0; v < 6; v++) degs.push_back(n.degree(v));
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{1, 1, 1, 3, 3, 3});
    CHECK(is_claw_free(n));
    CHECK(is_class_A(n));
    CHECK(has_factor(n, PackingConstraints::none()).status == SolveStatus::kInfeasible);
}

TEST_CASE("leaf-triangle expansion keeps every family property") {
    for (int k = 0; k <= 8; k++) {
        Graph g = gen_class_A(k);
        CHECK(g.vertex_count() == 6 + 3 * k);
        CHECK(is_class_A(g));
        CHECK(is_claw_free(g));
        CHECK(has_factor(g, PackingConstraints::none()).status ==
              SolveStatus::kInfeasible);
    }
    CHECK_THROWS_AS(gen_class_A(-1), std::invalid_argument);
}

TEST_CASE("family recognizer rejects near misses") {
    CHECK(!is_class_A(Graph(3, {{0, 1}, {1, 2}, {0, 2}})));  // no leaves
    CHECK(!is_class_A(Graph(4, {{0, 1}, {0, 2}, {0, 3}})));  // center in no triangle
    CHECK(!is_class_A(Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}})));
}

TEST_CASE("the 9-vertex graph H") {
    auto [h, t] = gen_H();
    CHECK(h.vertex_count() == 9);
    for (int v = 0; v < 9; v++) {
        bool in_t = std::find(t.begin(), t.end(), v) != t.end();
        CHECK(h.degree(v) == (in_t ? 4 : 3));
    }
    CHECK(is_claw_free(h));
    CHECK(vertex_connectivity(h) == 3);

    // removing the distinguished triangle leaves the factor-free base
    auto rest = delete_vertices(h, {t[0], t[1], t[2]});
    CHECK(is_class_A(rest.graph));
    CHECK(has_factor(rest.graph, PackingConstraints::none()).status ==
          SolveStatus::kInfeasible);

    // removing any 3-vertex path inside the triangle does too
    for (int c : t) {
        std::vector<int> others;
        for (int v : t)
            if (v != c) others.push_back(v);
        VertexPath3 l(c, others[0], others[1]);
        REQUIRE(l.valid_in(h));
        PackingConstraints del;
        del.deleted_vertices = {l.vertices()[0], l.vertices()[1], l.vertices()[2]};
        CHECK(has_factor(h, del).status == SolveStatus::kInfeasible);
    }
}

TEST_CASE("H generalizes over the whole family") {
    for (int k : {1, 2}) {
        auto [h, t] = gen_H_extended(k);
        CHECK(h.vertex_count() == 9 + 3 * k);
        CHECK(is_claw_free(h));
        for (int c : t) {
            std::vector<int> others;
            for (int v : t)
                if (v != c) others.push_back(v);
            VertexPath3 l(c, others[0], others[1]);
            PackingConstraints del;
            del.deleted_vertices = {l.vertices()[0], l.vertices()[1],
                                    l.vertices()[2]};
            CHECK(has_factor(h, del).status == SolveStatus::kInfeasible);
        }
    }
}

TEST_CASE("the apex-of-two-cycles graph R") {
    auto [g, a, b] = gen_R(4, 4);
    CHECK(g.vertex_count() == 9);
    CHECK(is_claw_free(g));
    CHECK(vertex_connectivity(g) == 1);
    for (const Edge& e : {a, b}) {
        PackingConstraints c;
        c.required_edge = e;
        CHECK(has_factor(g, c).status == SolveStatus::kInfeasible);
    }
    // without the edge requirement a factor does exist
    CHECK(has_factor(g, PackingConstraints::none()).status == SolveStatus::kSolved);
    CHECK_THROWS_AS(gen_R(2, 4), std::invalid_argument);
}

TEST_CASE("the two-apex graph Q") {
    auto [g, e] = gen_Q(5, 5);
    CHECK(g.vertex_count() == 12);
    CHECK(is_claw_free(g));
    CHECK(vertex_connectivity(g) == 2);
    PackingConstraints c;
    c.required_edge = e;
    CHECK(has_factor(g, c).status == SolveStatus::kInfeasible);
    CHECK(has_factor(g, PackingConstraints::none()).status == SolveStatus::kSolved);
    CHECK_THROWS_AS(gen_Q(4, 2), std::invalid_argument);
}

TEST_CASE("cubic sampler yields simple cubic graphs, reproducibly") {
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
        Graph g = sample_cubic(12, seed);
        CHECK(is_cubic(g));
        CHECK(g == sample_cubic(12, seed));
    }
    CHECK(!(sample_cubic(12, 1) == sample_cubic(12, 2)));
    CHECK_THROWS_AS(sample_cubic(5, 1), std::invalid_argument);
}
