#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "rcr/oracle.hpp"

using namespace rcr;

TEST_CASE("BFS distance field", "[oracle]") {
    Graph g = Graph::cayley(Params::create(3, 1, 3));
    DistanceField f = bfs_distances(g, origin());
    CHECK(f.at(g, origin()) == 0);
    CHECK(f.at(g, Vertex{0, 1}) == 1);
    CHECK(*std::max_element(f.dist.begin(), f.dist.end()) == 6);

    std::int64_t row = std::accumulate(f.dist.begin(), f.dist.end(), std::int64_t{0});
    CHECK(row >= 54);
    CHECK(row <= 94);

    // the field changes by at most one across every edge
    bool lipschitz = true;
    g.for_each_edge([&](Vertex u, const Neighbour& nb) {
        if (std::abs(f.at(g, u) - f.at(g, nb.v)) > 1) lipschitz = false;
    });
    CHECK(lipschitz);
}

TEST_CASE("BFS diameter and total distance", "[oracle]") {
    CHECK(bfs_diameter(Graph::cayley(Params::create(3, 1, 3))) == 6);
    CHECK(bfs_diameter(Graph::cayley(Params::create(4, 2, 4))) == 6);
    CHECK(bfs_total_distance(Graph::cayley(Params::create(3, 1, 3))) == 74);

    // the single-source shortcut presumes vertex-transitivity
    Graph minus = build_general(3, 1, 4);
    CHECK_THROWS_AS(bfs_diameter(minus, SourcePolicy::transitive_single), std::invalid_argument);
    CHECK(bfs_diameter(minus, SourcePolicy::all_sources) == bfs_diameter(minus));
}

TEST_CASE("shortest-path enumeration", "[oracle]") {
    Graph g = Graph::cayley(Params::create(3, 1, 3));

    PathEnumeration self = enumerate_shortest_paths(g, origin(), origin());
    REQUIRE(self.paths.size() == 1);
    CHECK(self.paths[0].size() == 1);

    PathEnumeration ring = enumerate_shortest_paths(g, origin(), Vertex{0, 1});
    CHECK(ring.paths.size() == 1);  // the unique ring-edge geodesic

    PathEnumeration far = enumerate_shortest_paths(g, origin(), Vertex{0b111, 0});
    CHECK(far.complete);
    CHECK(!far.paths.empty());
    for (const Path& path : far.paths) {
        CHECK(path.size() == 7);
        CHECK(valid_path(g, path));
    }

    PathEnumeration capped = enumerate_shortest_paths(g, origin(), Vertex{0b111, 0}, 2);
    CHECK_FALSE(capped.complete);
    CHECK(capped.paths.size() == 2);
}

TEST_CASE("t-neighbour census", "[oracle]") {
    for (auto [n, d, r] : std::vector<std::tuple<int, int, int>>{{3, 1, 3}, {4, 2, 4}}) {
        Graph g = Graph::cayley(Params::create(n, d, r));
        Census c = t_neighbour_census(g, origin());
        CHECK(c.counts[0] == 1);
        CHECK(c.counts[1] == d + 2);
        CHECK(std::accumulate(c.counts.begin(), c.counts.end(), std::int64_t{0}) ==
              g.vertex_count());
        // identical at every base on a vertex-transitive graph
        for (std::int64_t i = 0; i < g.vertex_count(); i += 7)
            CHECK(t_neighbour_census(g, g.vertex_at(i)).counts == c.counts);
    }
}

TEST_CASE("non-transitivity witnesses", "[oracle]") {
    // frozen from the exhaustive census oracle
    struct Expect {
        int n, d, r, t;
        std::int64_t far_count, near_count;
    };
    for (Expect e : {Expect{3, 1, 4, 2, 4, 5}, Expect{3, 1, 5, 3, 8, 10}, Expect{4, 1, 5, 2, 5, 6}}) {
        Graph g = build_general(e.n, e.d, e.r);
        auto w = non_transitivity_witness(g);
        REQUIRE(w.has_value());
        CHECK(w->t == e.t);
        CHECK(w->count_at_far_base == e.far_count);
        CHECK(w->count_at_near_base == e.near_count);
    }

    CHECK_FALSE(non_transitivity_witness(build_general(3, 1, 3)).has_value());
    CHECK_THROWS_AS(non_transitivity_witness(build_general(7, 1, 3)), std::invalid_argument);
    CHECK_THROWS_AS(non_transitivity_witness(Graph::cayley(Params::create(3, 1, 3))),
                    std::invalid_argument);
}

TEST_CASE("exhaustive minimum bisection", "[oracle]") {
    Graph g = Graph::cayley(Params::create(3, 1, 3));
    BisectionResult b = brute_force_bisection(g);
    CHECK(b.cut == 4);
    CHECK(b.half.size() == 12);

    // recount the witness cut
    std::vector<char> in_half(static_cast<size_t>(g.vertex_count()), 0);
    for (const Vertex& v : b.half) in_half[static_cast<size_t>(g.index(v))] = 1;
    std::int64_t cut = 0;
    g.for_each_edge([&](Vertex u, const Neighbour& nb) {
        if (in_half[static_cast<size_t>(g.index(u))] != in_half[static_cast<size_t>(g.index(nb.v))])
            ++cut;
    });
    CHECK(cut == 4);

    CHECK(brute_force_bisection(Graph::cayley(Params::create(2, 2, 3))).cut == 6);
    CHECK(brute_force_bisection(Graph::cayley(Params::create(2, 1, 4))).cut == 4);

    CHECK_THROWS_AS(brute_force_bisection(Graph::cayley(Params::create(4, 2, 4))), BudgetError);
}
