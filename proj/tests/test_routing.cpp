#include <catch2/catch_amalgamated.hpp>

#include "rcr/oracle.hpp"
#include "rcr/routing.hpp"

using namespace rcr;

namespace {
std::uint64_t bits(const std::string& s) {
    std::uint64_t a = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == '1') a |= std::uint64_t{1} << i;
    return a;
}
}  // namespace

TEST_CASE("sorted schedule, dr = n", "[routing]") {
    Params p = Params::create(3, 1, 3);
    SortedSchedule all = sorted_schedule(p, bits("111"), 0);
    CHECK(all.y == std::vector<int>{0, 0, 0, 1, 2, 3});
    CHECK(all.tstar == 2);

    SortedSchedule empty = sorted_schedule(p, 0, 2);
    CHECK(empty.y == std::vector<int>{0, 2, 3});
    CHECK(empty.tstar == 1);
    CHECK(empty.s == 0);

    SortedSchedule two = sorted_schedule(p, bits("110"), 1);
    CHECK(two.y == std::vector<int>{0, 0, 1, 1, 3});
    CHECK(two.tstar == 3);

    CHECK_THROWS_AS(sorted_schedule(Params::create(4, 2, 4), 1, 0), std::logic_error);
}

TEST_CASE("leaps, dr = n", "[routing]") {
    Params p = Params::create(3, 1, 3);
    LeapPair ones_at_zero = leaps_case1(p, bits("111"), 0);
    CHECK(ones_at_zero.leap1 == 0);
    CHECK(ones_at_zero.leap2 == 1);

    LeapPair ones_at_half = leaps_case1(p, bits("111"), p.r / 2);
    CHECK(ones_at_half.leap1 == 1);
    CHECK(ones_at_half.leap2 == 1);

    LeapPair two = leaps_case1(p, bits("110"), 1);
    CHECK(two.leap1 == 1);
    CHECK(two.leap2 == 2);
}

TEST_CASE("candidate schedules, dr = n", "[routing]") {
    Params p = Params::create(3, 1, 3);

    auto [f1, s1] = candidate_sequences_case1(p, bits("111"), 0);
    CHECK(std::min(sequence_cost(f1, p.r), sequence_cost(s1, p.r)) == 3);  // dist = n + r = 6

    auto [f2, s2] = candidate_sequences_case1(p, bits("110"), 1);
    CHECK(std::min(sequence_cost(f2, p.r), sequence_cost(s2, p.r)) == 1);

    // no set bits: both candidates collapse to the ring geodesic
    for (int x = 0; x < p.r; ++x)
        CHECK(sequence_cost(optimal_sequence(p, Vertex{0, x}), p.r) == std::min(x, p.r - x));
}

TEST_CASE("early/late schedules, dr >= 2n", "[routing]") {
    Params p = Params::create(4, 2, 4);
    YzSchedules yz = yz_schedules(p, bits("1111"));
    CHECK(yz.y == std::vector<int>{0, 0, 1, 1});
    CHECK(yz.z == std::vector<int>{2, 2, 3, 3});
    CHECK(yz.q == std::vector<int>{0, 0, 0, 0});

    Params q = Params::create(3, 2, 3);
    YzSchedules one = yz_schedules(q, bits("100"));
    CHECK(one.y == std::vector<int>{0});
    CHECK(one.q == std::vector<int>{0});
    CHECK(one.z == std::vector<int>{1});

    CHECK(yz_schedules(p, 0).bits.empty());
    CHECK_THROWS_AS(yz_schedules(Params::create(3, 1, 3), 1), std::logic_error);
}

TEST_CASE("leaps, dr >= 2n", "[routing]") {
    Params p = Params::create(4, 2, 4);
    YzSchedules yz = yz_schedules(p, bits("1111"));
    CHECK(leap1_case2(p, yz, 0) == 1);                       // h = 3 witness
    CHECK(leap1_case2(p, yz, 2) == p.cover - 2);             // x above every early position
    CHECK(leap2_case2(p, yz, 3) == 1);                       // upper half, l = 2 witness
    CHECK_THROWS_AS(leap1_case2(p, yz, 3), std::invalid_argument);  // wrong half
    CHECK_THROWS_AS(leap2_case2(p, yz, 1), std::invalid_argument);
    CHECK(min_ring_cost(p, bits("1111"), 0) == 2);
    CHECK(min_ring_cost(p, bits("1111"), 2) == 2);
    CHECK(distance_from_origin(p, Vertex{bits("1111"), 0}) == 6);
    CHECK(distance_from_origin(p, Vertex{bits("1111"), 2}) == 6);
}

TEST_CASE("distance from the origin", "[routing]") {
    Params cc3 = Params::create(3, 1, 3);
    CHECK(distance_from_origin(cc3, Vertex{bits("111"), 0}) == 6);
    CHECK(distance_from_origin(cc3, Vertex{bits("110"), 1}) == 3);
    for (auto [n, d, r] : std::vector<std::tuple<int, int, int>>{{3, 1, 3}, {4, 2, 4}, {6, 3, 4}}) {
        Params p = Params::create(n, d, r);
        for (int x = 0; x < r; ++x)
            CHECK(distance_from_origin(p, Vertex{0, x}) == std::min(x, r - x));
    }
}

TEST_CASE("optimal sequences and path realization", "[routing]") {
    Params p = Params::create(3, 1, 3);

    AxSequence trivial = optimal_sequence(p, Vertex{0, 2});
    CHECK(trivial.positions == std::vector<int>{0, 2});
    CHECK(trivial.directions.empty());

    AxSequence two = optimal_sequence(p, Vertex{bits("110"), 1});
    CHECK(sequence_cost(two, p.r) == 1);

    Params q = Params::create(4, 2, 4);
    AxSequence full = optimal_sequence(q, Vertex{bits("1111"), 0});
    CHECK(sequence_cost(full, q.r) == 2);

    // a one-step ring schedule realizes a single ring edge
    AxSequence step;
    step.positions = {0, 1};
    std::vector<Vertex> path = realize_path(p, step);
    REQUIRE(path.size() == 2);
    CHECK(path[0] == origin());
    CHECK(path[1] == Vertex{0, 1});

    // the length-6 route to the all-ones vertex, validated edge by edge
    Graph g = Graph::cayley(p);
    std::vector<Vertex> long_path = realize_path(p, optimal_sequence(p, Vertex{bits("111"), 0}));
    CHECK(long_path.size() == 7);
    CHECK(valid_path(g, long_path));
    CHECK(long_path.front() == origin());
    CHECK(long_path.back() == Vertex{bits("111"), 0});

    AxSequence bad;
    bad.positions = {0, 0, 1};
    bad.directions = {2};  // direction 2 is not flippable at position 0 when d = 1
    CHECK_THROWS_AS(realize_path(p, bad), std::invalid_argument);
}

TEST_CASE("pairwise distance and translated paths", "[routing]") {
    Params p = Params::create(3, 1, 3);
    Vertex u{bits("100"), 1}, v{bits("100"), 2};
    CHECK(distance(p, u, u) == 0);
    CHECK(distance(p, u, v) == 1);

    std::vector<Vertex> path = shortest_path(p, u, v);
    CHECK(path.front() == u);
    CHECK(path.back() == v);
    CHECK(path.size() == 2);
}

TEST_CASE("router equals BFS on all pairs", "[routing][slow]") {
    for (auto [n, d, r] : std::vector<std::tuple<int, int, int>>{
             {3, 1, 3}, {3, 2, 3}, {4, 2, 4}, {4, 4, 3}, {6, 2, 3}, {6, 3, 4}}) {
        Params p = Params::create(n, d, r);
        Graph g = Graph::cayley(p);
        bool ok = true;
        for (std::int64_t i = 0; i < g.vertex_count() && ok; ++i) {
            DistanceField f = bfs_distances(g, g.vertex_at(i));
            for (std::int64_t j = 0; j < g.vertex_count(); ++j)
                if (distance(p, g.vertex_at(i), g.vertex_at(j)) != f.dist[static_cast<size_t>(j)]) {
                    ok = false;
                    break;
                }
        }
        INFO(p.name());
        CHECK(ok);
    }
}

TEST_CASE("routing at the word-size limit needs no graph", "[routing]") {
    // n = 64 is far beyond enumeration; distances still come from the formulas
    Params cc64 = Params::create(64, 1, 64);
    std::uint64_t ones = word_mask(64);
    CHECK(distance_from_origin(cc64, Vertex{ones, 0}) == 128);  // n + r
    AxSequence seq = optimal_sequence(cc64, Vertex{ones, 0});
    CHECK(sequence_cost(seq, cc64.r) == 64);
    std::vector<Vertex> path = realize_path(cc64, seq);
    CHECK(path.size() == 129);
    CHECK(path.back() == Vertex{ones, 0});

    Params wide = Params::create(64, 2, 64);
    CHECK(distance_from_origin(wide, Vertex{ones, 0}) == 126);  // n + 2*cover - 2
    CHECK(distance_from_origin(wide, Vertex{ones, 32}) == 96);  // n + floor(r/2)
    std::vector<Vertex> p2 = realize_path(wide, optimal_sequence(wide, Vertex{ones, 32}));
    CHECK(p2.size() == 97);
    CHECK(p2.back() == Vertex{ones, 32});
}

TEST_CASE("mirror symmetry of the ring cost", "[routing]") {
    for (auto [n, d, r] : std::vector<std::tuple<int, int, int>>{{3, 1, 3}, {4, 2, 4}, {3, 2, 3}}) {
        Params p = Params::create(n, d, r);
        bool ok = true;
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << n) && ok; ++a)
            for (int x = 0; x < r; ++x)
                if (min_ring_cost(p, a, x) != min_ring_cost(p, ring_mirror(p, a), (r - x) % r))
                    ok = false;
        INFO(p.name());
        CHECK(ok);
    }
}
