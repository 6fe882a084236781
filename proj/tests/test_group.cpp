#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rcr/group.hpp"

using namespace rcr;

namespace {
std::uint64_t bits(const std::string& s) {  // "110" -> a_1=1, a_2=1, a_3=0
    std::uint64_t a = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == '1') a |= std::uint64_t{1} << i;
    return a;
}
}  // namespace

TEST_CASE("parameter validation", "[group]") {
    CHECK_NOTHROW(Params::create(3, 1, 3));
    CHECK_NOTHROW(Params::create(4, 2, 4));
    CHECK_THROWS_AS(Params::create(3, 1, 4), std::invalid_argument);   // 4 not divisible by 3
    CHECK_THROWS_AS(Params::create(3, 1, 2), std::invalid_argument);   // r >= 3
    CHECK_THROWS_AS(Params::create(3, 4, 3), std::invalid_argument);   // d <= n
    CHECK_THROWS_AS(Params::create(1, 1, 3), std::invalid_argument);   // n >= 2
    CHECK_THROWS_AS(Params::create(65, 1, 65), std::invalid_argument); // word-sized bit vectors

    Params p = Params::create(5, 2, 5);
    CHECK(p.cover == 3);
    CHECK(p.slack == 1);
    CHECK(p.multiplicity() == 2);
}

TEST_CASE("cyclic shift", "[group]") {
    int n = 3;
    CHECK(shift(unit_vec(1, n), 1, n) == unit_vec(2, n));
    CHECK(shift(unit_vec(3, n), 1, n) == unit_vec(1, n));  // wraparound
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        std::uint64_t a = rng() & word_mask(n);
        CHECK(shift(a, 0, n) == a);
        CHECK(shift(a, n, n) == a);
        std::int64_t i = static_cast<std::int64_t>(rng() % 19) - 9;
        std::int64_t j = static_cast<std::int64_t>(rng() % 19) - 9;
        CHECK(shift(shift(a, i, n), j, n) == shift(a, i + j, n));
    }
}

TEST_CASE("group multiplication and inverse", "[group]") {
    Params p = Params::create(3, 1, 3);
    CHECK(multiply(p, origin(), Vertex{bits("110"), 2}) == Vertex{bits("110"), 2});
    CHECK(multiply(p, Vertex{0, 1}, Vertex{bits("100"), 0}) == Vertex{bits("010"), 1});
    CHECK(multiply(p, Vertex{bits("010"), 1}, Vertex{bits("100"), 2}) == origin());

    CHECK(inverse(p, origin()) == origin());
    CHECK(inverse(p, Vertex{bits("010"), 1}) == Vertex{bits("100"), 2});

    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        Vertex u{rng() & word_mask(p.n), static_cast<int>(rng() % 3)};
        CHECK(multiply(p, u, inverse(p, u)) == origin());
    }
}

TEST_CASE("direction sets", "[group]") {
    Params a = Params::create(3, 1, 3);
    CHECK(direction_set(a, 0) == std::vector<int>{1});
    CHECK(direction_set(a, 1) == std::vector<int>{2});
    CHECK(direction_set(a, 2) == std::vector<int>{3});

    Params b = Params::create(4, 2, 4);
    CHECK(direction_set(b, 1) == std::vector<int>{3, 4});
    CHECK(direction_set(b, 2) == std::vector<int>{1, 2});  // 5 = 1, 6 = 2 mod 4

    for (int x = 0; x < b.r; ++x)
        for (int j = 1; j <= b.n; ++j) {
            auto ds = direction_set(b, x);
            CHECK(in_direction_set(b, j, x) ==
                  (std::find(ds.begin(), ds.end(), j) != ds.end()));
        }
}

TEST_CASE("mirrored direction sets for the general family", "[group]") {
    CHECK(direction_set_minus(3, 1, 0) == std::vector<int>{1});
    CHECK(direction_set_minus(3, 1, 1) == std::vector<int>{3});
    CHECK(direction_set_minus(3, 1, 2) == std::vector<int>{2});
    CHECK(direction_set_minus(3, 1, 3) == std::vector<int>{1});
    CHECK(direction_set_minus(4, 2, 3) == std::vector<int>{3, 4});
    for (int d = 1; d <= 3; ++d)
        CHECK(direction_set_minus(6, d, 0) == direction_set(Params::create(6, d, 6), 0));
}

TEST_CASE("connection set", "[group]") {
    Params p = Params::create(3, 1, 3);
    auto s = connection_set(p);
    REQUIRE(s.size() == 3);
    CHECK(s[0] == Vertex{0, 1});
    CHECK(s[1] == Vertex{0, 2});
    CHECK(s[2] == Vertex{bits("100"), 0});

    for (int n = 2; n <= 6; ++n)
        for (int d = 1; d <= n; ++d)
            for (int r = 3; r <= 8; ++r) {
                if ((d * r) % n != 0) continue;
                Params q = Params::create(n, d, r);
                auto cs = connection_set(q);
                CHECK(cs.size() == static_cast<size_t>(d) + 2);
                for (const Vertex& g : cs) {
                    CHECK(g != origin());
                    CHECK(std::find(cs.begin(), cs.end(), inverse(q, g)) != cs.end());
                }
            }
}

TEST_CASE("vertex text encoding", "[group]") {
    Params p = Params::create(3, 1, 3);
    CHECK(encode(Vertex{bits("010"), 1}, 3) == "010@1");
    CHECK(decode("010@1", 3, 3) == Vertex{bits("010"), 1});
    CHECK(decode("111@5", 3, 3).x == 2);  // reduced mod r
    CHECK_THROWS_AS(decode("01@1", 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(decode("0a0@1", 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(decode("010", 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(decode("010@x", 3, 3), std::invalid_argument);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 40; ++t) {
        Vertex v{rng() & word_mask(5), static_cast<int>(rng() % 5)};
        CHECK(decode(encode(v, 5), 5, 5) == v);
    }
}

TEST_CASE("operands from a wider family are rejected", "[group]") {
    Params p = Params::create(3, 1, 3);
    Vertex wide{std::uint64_t{1} << 5, 0};
    CHECK_THROWS_AS(multiply(p, origin(), wide), std::invalid_argument);
    CHECK_THROWS_AS(inverse(p, wide), std::invalid_argument);
}
