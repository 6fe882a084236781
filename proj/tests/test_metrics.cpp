#include <catch2/catch_amalgamated.hpp>

#include "rcr/metrics.hpp"
#include "rcr/report.hpp"

using namespace rcr;

namespace {
Params P(int n, int d, int r) { return Params::create(n, d, r); }
}  // namespace

TEST_CASE("closed-form diameter", "[metrics]") {
    CHECK(diameter_formula(P(3, 1, 3)) == 6);   // CC_3
    CHECK(diameter_formula(P(4, 1, 4)) == 8);   // CC_4
    CHECK(diameter_formula(P(4, 2, 4)) == 6);
    // frozen BFS values across both regimes
    CHECK(diameter_formula(P(3, 2, 3)) == 5);
    CHECK(diameter_formula(P(3, 3, 3)) == 4);
    CHECK(diameter_formula(P(4, 4, 3)) == 5);
    CHECK(diameter_formula(P(5, 5, 3)) == 6);
    CHECK(diameter_formula(P(6, 2, 3)) == 9);
    CHECK(diameter_formula(P(6, 3, 4)) == 8);
    CHECK(diameter_formula(P(6, 2, 6)) == 10);
    CHECK(diameter_formula(P(8, 2, 4)) == 12);
}

TEST_CASE("exact total distance", "[metrics]") {
    TdResult a = exact_total_distance(P(3, 1, 3));
    CHECK(a.sum_weight == 36);
    CHECK(a.sum_l == 38);
    CHECK(a.td == 74);

    CHECK(exact_total_distance(P(3, 2, 3)).td == 60);
    CHECK(exact_total_distance(P(4, 2, 4)).td == 216);
    CHECK(exact_total_distance(P(8, 2, 4)).td == 7328);

    // d = n with cover 1: the ring-cost sum collapses to 2^{n-1} floor(r^2/2)
    TdResult sharp = exact_total_distance(P(3, 3, 3));
    CHECK(sharp.sum_l == 16);

    CHECK_THROWS_AS(exact_total_distance(P(8, 2, 4), 100), BudgetError);
}

TEST_CASE("total-distance bounds", "[metrics]") {
    ValueBounds b = td_bounds(P(3, 1, 3));
    CHECK(ceil_rat(b.lo) == 54);
    CHECK(floor_rat(b.hi) == 94);

    ValueBounds c = td_bounds(P(4, 2, 4));
    CHECK(c.coefficient_name == "alpha");
    CHECK(c.coefficient == Rational(2, 5));  // 32/(32+16+32)
    CHECK(c.hi == Rational(320));

    // envelope brackets the exact value on mixed instances
    for (auto [n, d, r] : std::vector<std::tuple<int, int, int>>{
             {3, 1, 3}, {3, 2, 3}, {3, 3, 3}, {4, 1, 4}, {4, 2, 4}, {4, 4, 3}, {5, 5, 3},
             {6, 2, 3}, {6, 3, 4}, {6, 2, 6}, {8, 2, 4}, {2, 2, 3}, {2, 1, 4}}) {
        Params p = P(n, d, r);
        std::int64_t td = exact_total_distance(p).td;
        ValueBounds e = td_bounds(p);
        INFO(p.name() << " td=" << td);
        CHECK(Rational(td) >= e.lo);
        CHECK(Rational(td) <= e.hi);
    }

    // d = n, odd r: the packaged lower bound is attained exactly
    CHECK(Rational(exact_total_distance(P(3, 3, 3)).td) == td_bounds(P(3, 3, 3)).lo);
    CHECK(Rational(exact_total_distance(P(5, 5, 3)).td) == td_bounds(P(5, 5, 3)).lo);

    // the ring-cost envelope is sharp at d = n as well
    ValueBounds sl = sum_l_bounds(P(3, 3, 3));
    CHECK(Rational(exact_total_distance(P(3, 3, 3)).sum_l) == sl.lo);
    CHECK(sl.coefficient_name == "beta");
    CHECK_THROWS_AS(sum_l_bounds(P(3, 1, 3)), std::logic_error);

    // large-r branch: evaluates to a consistent envelope
    ValueBounds big = td_bounds(P(2, 2, 513));
    CHECK(big.lo <= big.hi);
}

TEST_CASE("wiener index and vertex-forwarding index", "[metrics]") {
    Params p = P(3, 1, 3);
    std::int64_t td = exact_total_distance(p).td;
    CHECK(wiener(p, td) == 888);
    CHECK(wiener(P(4, 2, 4), exact_total_distance(P(4, 2, 4)).td) == 6912);

    CHECK(vertex_forwarding(p, td) == 51);  // td - 23
    ValueBounds xb = xi_bounds(p);
    CHECK(ceil_rat(xb.lo) == 30);   // 2^{n-2}(2nr + r^2 - 4r)
    CHECK(floor_rat(xb.hi) == 70);  // 2^{n-2}(2nr + 5r^2 - 12r + 8)
    CHECK(Rational(51) >= xb.lo);
    CHECK(Rational(51) <= xb.hi);
}

TEST_CASE("edge-forwarding index via orbit loads", "[metrics]") {
    OrbitLoads cc3 = edge_orbit_loads(P(3, 1, 3));
    CHECK(cc3.exact);
    CHECK(cc3.pi == 72);  // 2^n n^2 for CC_3
    CHECK(cc3.ring_load == 38);
    CHECK(cc3.cube_loads == std::vector<std::int64_t>{72});  // 2r * 2^{n-1} r = 2^n r^2

    OrbitLoads cc4 = edge_orbit_loads(P(4, 1, 4));
    CHECK(cc4.pi == 256);  // 2^4 * 4^2

    OrbitLoads q44 = edge_orbit_loads(P(4, 2, 4));
    CHECK(q44.exact);
    for (std::int64_t c : q44.cube_loads) CHECK(c == (1 << 4) * 2 * 4);  // 2^n (n/d) r

    OrbitLoads nd = edge_orbit_loads(P(3, 2, 3));
    CHECK_FALSE(nd.exact);  // n not divisible by d: interval reporting only

    ValueBounds pb = pi_bounds(P(3, 1, 3));
    CHECK(pb.lo == Rational(72));
    CHECK(pb.hi == Rational(72));
}

TEST_CASE("routing load simulation", "[metrics]") {
    Params p = P(3, 1, 3);
    LoadSimulation sim = routing_load_simulation(p);
    CHECK(sim.max_edge_load == 72);
    CHECK(sim.ring_loads_uniform);
    CHECK(sim.cube_class_uniform);
    CHECK(sim.max_vertex_load == 51);  // equals xi

    LoadSimulation q44 = routing_load_simulation(P(4, 2, 4));
    CHECK(q44.max_edge_load == edge_orbit_loads(P(4, 2, 4)).pi);
    CHECK(q44.max_vertex_load == vertex_forwarding(P(4, 2, 4), exact_total_distance(P(4, 2, 4)).td));

    CHECK_THROWS_AS(routing_load_simulation(P(8, 2, 4), 512), BudgetError);
}

TEST_CASE("orbit proportionality", "[metrics]") {
    CHECK(orbit_proportionality_check(P(3, 1, 3)).proportional);
    CHECK(orbit_proportionality_check(P(4, 2, 4)).proportional);

    OrbitPropResult bad = orbit_proportionality_check(P(3, 2, 3));
    CHECK_FALSE(bad.proportional);
    REQUIRE(bad.witness.has_value());
    // the witness pair: a shortest path beaten in some orbit by another path
    OrbitProfile sp = path_orbit_profile(P(3, 2, 3), bad.witness->shortest);
    OrbitProfile op = path_orbit_profile(P(3, 2, 3), bad.witness->other);
    CHECK(op.counts[static_cast<size_t>(bad.witness->orbit)] <
          sp.counts[static_cast<size_t>(bad.witness->orbit)]);

    // the pass/fail outcome does not depend on the sampling seed
    CHECK(orbit_proportionality_check(P(3, 2, 3), 24, 999).proportional ==
          orbit_proportionality_check(P(3, 2, 3), 24, 1).proportional);
}

TEST_CASE("bisection constructions", "[metrics]") {
    auto cc3 = bisection_constructions(P(3, 1, 3));
    REQUIRE(cc3.size() == 2);  // direction cut + odd-ring cut
    CHECK(cc3[0].name == "direction-cut");
    CHECK(cc3[0].cut == 4);
    CHECK(cc3[0].counted == 4);

    auto q44 = bisection_constructions(P(4, 2, 4));
    REQUIRE(q44.size() == 2);
    CHECK(q44[0].cut == 16);        // direction cut 2^{n-1} dr/n
    CHECK(q44[1].name == "ring-half-cut");
    CHECK(q44[1].cut == 32);        // 2^{n+1}
    CHECK(q44[1].counted == 32);

    auto q33 = bisection_constructions(P(3, 3, 3));
    REQUIRE(q33.size() == 2);
    CHECK(q33[1].name == "odd-ring-cut");
    CHECK(q33[1].cut == 20);  // 2^{n+1} + 2^{n-1} when n = d
    CHECK(q33[1].counted == 20);
}

TEST_CASE("bisection-width bounds", "[metrics]") {
    BwBounds cc3 = bw_bounds(P(3, 1, 3));
    CHECK(cc3.lo == 4);
    CHECK(cc3.hi == 4);

    BwBounds q44 = bw_bounds(P(4, 2, 4));
    CHECK(q44.hi == 16);
    CHECK(q44.lo == 11);  // ceil(2^{n+1} r^2 / (r^2 + 8 n^2/d^2)) = ceil(32/3 * ...)

    Graph g = Graph::cayley(P(3, 1, 3));
    CHECK(brute_force_bisection(g).cut == 4);
}

TEST_CASE("bounds-only report far beyond enumeration", "[metrics]") {
    Params big = Params::create(48, 2, 48);  // 2^48 * 48 vertices
    CHECK(diameter_formula(big) == 48 + 46);
    MetricsReport rep = compute_metrics(big, OracleLevel::none);
    CHECK_FALSE(rep.td.has_value());
    CHECK_FALSE(rep.pi_exact.has_value());
    CHECK(rep.td_envelope.lo <= rep.td_envelope.hi);
    CHECK(rep.pi_envelope.lo <= rep.pi_envelope.hi);
    CHECK(rep.bw.lo <= rep.bw.hi);
    CHECK(rep.vertices == pow2(48) * 48);
    Json j = report_to_json(rep);
    CHECK(j["vertices"].is_string());  // beyond the exact-double range
    CHECK(j["td_bounds"].contains("lo"));
}

TEST_CASE("combined report", "[metrics]") {
    MetricsReport rep = compute_metrics(P(3, 1, 3), OracleLevel::full);
    CHECK(rep.diameter == 6);
    CHECK(rep.diameter_oracle == 6);
    CHECK(rep.td == 74);
    CHECK(rep.td_oracle == 74);
    CHECK(rep.wiener_index == 888);
    CHECK(rep.xi == 51);
    REQUIRE(rep.pi_exact.has_value());
    CHECK(*rep.pi_exact == 72);
    CHECK(rep.pi_m_simulated == 72);
    CHECK(rep.bw.lo == 4);
    CHECK(rep.bw.hi == 4);
    CHECK(rep.bw_oracle == 4);

    Json j = report_to_json(rep);
    CHECK(j["n"] == 3);
    CHECK(j["diameter"]["value"] == 6);
    CHECK(j["diameter"]["method"] == "formula");
    CHECK(j["td"]["method"] == "router-exact");
    CHECK(j["pi"]["value"] == 72);
    CHECK(j["bw"]["lo"] == 4);
    CHECK(j["td_bounds"]["lo"] == 54);
    CHECK(j["td_bounds"]["hi"] == 94);

    // a report on a non-divisible instance carries bounds instead of exact pi
    MetricsReport nd = compute_metrics(P(3, 2, 3), OracleLevel::none);
    CHECK_FALSE(nd.pi_exact.has_value());
    CHECK(nd.pi_m_simulated.has_value());
    Json jn = report_to_json(nd);
    CHECK(jn.contains("pi_bounds"));
    CHECK_FALSE(jn.contains("pi"));
}
