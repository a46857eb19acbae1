#include <doctest.h>

#include <random>
#include <set>

#include "qec/distance.hpp"
#include "qec/errors.hpp"
#include "qec/graph.hpp"
#include "qec/random_graphs.hpp"

#include "helpers.hpp"

using namespace qec;

TEST_CASE("edge normalization and validation") {
    Graph g(3, {{2, 0}, {0, 2}, {1, 0}});
    CHECK(g.edge_count() == 2);
    CHECK(g.edges()[0] == Edge{0, 1});
    CHECK(g.edges()[1] == Edge{0, 2});
    CHECK(g.adjacent(2, 0));
    CHECK_FALSE(g.adjacent(1, 2));

    CHECK_THROWS_AS(Graph(3, {{0, 0}}), precondition_error);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), precondition_error);
    CHECK_THROWS_AS(Graph(-1, {}), precondition_error);
}

TEST_CASE("families") {
    const Graph k3 = make_family("complete", {3});
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});

    const Graph e4 = make_family("empty", {4});
    CHECK(e4.vertex_count() == 4);
    CHECK(e4.edge_count() == 0);

    const Graph two_k3 = make_family("disjoint-union-of-completes", {2, 3});
    CHECK(two_k3.vertex_count() == 6);
    CHECK(two_k3.edge_count() == 6);
    CHECK(two_k3.adjacent(0, 1));
    CHECK(two_k3.adjacent(3, 5));
    CHECK_FALSE(two_k3.adjacent(2, 3));

    const Graph mixed = make_family("disjoint-union", {2, 1, 1, 3});
    CHECK(mixed.vertex_count() == 5); // 2K1 + K3
    CHECK(mixed.edge_count() == 3);

    CHECK_THROWS_AS(make_family("hypercube", {3}), parse_error);
    CHECK_THROWS_AS(make_family("complete", {0}), parse_error);
    CHECK_THROWS_AS(make_family("cycle", {2}), parse_error);
    CHECK_THROWS_AS(make_family("complete", {2, 2}), parse_error);
}

TEST_CASE("regular degree detection") {
    CHECK(cycle_graph(5).regular_degree() == 2);
    CHECK(complete_graph(4).regular_degree() == 3);
    CHECK(empty_graph(3).regular_degree() == 0);
    CHECK_FALSE(path_graph(3).regular_degree().has_value());
    CHECK(test::octahedron().regular_degree() == 4);
}

TEST_CASE("distance matrices of named graphs") {
    const DistanceMatrix p4 = distance_matrix(path_graph(4));
    CHECK(p4.d(0, 0) == 0);
    CHECK(p4.d(0, 1) == 1);
    CHECK(p4.d(0, 2) == 2);
    CHECK(p4.d(0, 3) == 3);

    const DistanceMatrix k3 = distance_matrix(complete_graph(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(k3.d(i, j) == (i == j ? 0 : 1));

    const DistanceMatrix c5 = distance_matrix(cycle_graph(5));
    CHECK(c5.d(0, 2) == 2);
    CHECK(c5.d(0, 3) == 2);
}

TEST_CASE("disconnected graphs are rejected with the unreached vertex named") {
    const Graph g = disjoint_union(complete_graph(2), complete_graph(2));
    try {
        distance_matrix(g);
        FAIL("expected precondition_error");
    } catch (const precondition_error& e) {
        CHECK(std::string(e.what()).find("vertex 2") != std::string::npos);
    }
}

TEST_CASE("corona construction") {
    // K2 (.) K1 is the path on 4 vertices
    const Graph p4ish = corona(complete_graph(2), complete_graph(1));
    CHECK(p4ish.vertex_count() == 4);
    CHECK(p4ish.edge_count() == 3);
    const DistanceMatrix d = distance_matrix(p4ish);
    CHECK(d.d.maxCoeff() == 3); // diameter of P4

    // K2 (.) E2 is the double star: adjacent centers with two leaves each
    const Graph ds = corona(complete_graph(2), empty_graph(2));
    CHECK(ds.vertex_count() == 6);
    CHECK(ds.edge_count() == 5);
    auto deg = ds.degrees();
    CHECK(deg[0] == 3);
    CHECK(deg[3] == 3);
    CHECK(deg[1] == 1);
    CHECK(deg[4] == 1);

    // one pendant per vertex
    const Graph c5p = corona(cycle_graph(5), empty_graph(1));
    CHECK(c5p.vertex_count() == 10);
    CHECK(c5p.edge_count() == cycle_graph(5).edge_count() + 5);
}

TEST_CASE("join with K1") {
    const Graph star = join_k1(empty_graph(4));
    CHECK(star.vertex_count() == 5);
    CHECK(star.edge_count() == 4);
    CHECK(star.degrees()[0] == 4);

    const Graph wheel = join_k1(cycle_graph(4));
    CHECK(wheel.vertex_count() == 5);
    CHECK(wheel.edge_count() == 8);

    const Graph k4 = join_k1(complete_graph(3));
    CHECK(k4.edge_count() == 6);
    CHECK(k4.regular_degree() == 3);
}

TEST_CASE("corona distance matrix fixtures") {
    // (K2, K1): block order (0,o),(0,x),(1,o),(1,x); the two pendants sit
    // at distance 3.
    const DistanceMatrix d = corona_distance_matrix(complete_graph(2), complete_graph(1));
    CHECK(d.n == 4);
    CHECK(d.d(1, 3) == 3);
    CHECK(d.d(0, 2) == 1);
    CHECK(d.d(1, 2) == 2);

    // (C4, E1): pendants across the cycle diameter are 4 apart
    const DistanceMatrix dc = corona_distance_matrix(cycle_graph(4), empty_graph(1));
    CHECK(dc.d.maxCoeff() == 4);
    CHECK(dc.d == distance_matrix(corona(cycle_graph(4), empty_graph(1))).d);

    CHECK_THROWS_AS(corona_distance_matrix(disjoint_union(complete_graph(2), complete_graph(2)),
                                           complete_graph(1)),
                    precondition_error);
    CHECK_THROWS_AS(corona_distance_matrix(complete_graph(1), complete_graph(1)),
                    precondition_error);
}

TEST_CASE("corona distance matrix equals BFS on 200 random pairs") {
    std::mt19937_64 rng(20240811);
    int done = 0;
    while (done < 200) {
        const Graph g = random_connected_graph(rng, 2, 6);
        const Graph h = random_graph(rng, 1 + static_cast<int>(uniform_below(rng, 4)));
        const Graph c = corona(g, h);
        CHECK(c.vertex_count() == g.vertex_count() * (1 + h.vertex_count()));
        CHECK(is_connected(c));

        const DistanceMatrix direct = corona_distance_matrix(g, h);
        const DistanceMatrix bfs = distance_matrix(c);
        REQUIRE(direct.d == bfs.d); // exact integer equality

        // structural invariants of every BFS matrix
        CHECK(bfs.d.diagonal().isZero());
        CHECK(bfs.d == bfs.d.transpose().eval());
        ++done;
    }
}

TEST_CASE("triangle inequality on random distance matrices") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 25; ++t) {
        const Graph g = random_connected_graph(rng, 2, 8);
        const DistanceMatrix dm = distance_matrix(g);
        const int n = dm.n;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x != y) CHECK(dm.d(x, y) >= 1);
                for (int z = 0; z < n; ++z)
                    CHECK(dm.d(x, z) <= dm.d(x, y) + dm.d(y, z));
            }
    }
}
