#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rcr/combinatorics.hpp"
#include "rcr/metrics.hpp"
#include "rcr/oracle.hpp"
#include "rcr/routing.hpp"
#include "rcr/topology.hpp"

namespace rcr::verify {

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;  ///< counterexample or context; empty on pass
};

inline void record(std::vector<Check>& out, const std::string& name, bool pass,
                   const std::string& detail = "") {
    out.push_back(Check{name, pass, pass ? "" : detail});
}

struct Options {
    std::int64_t graph_budget = kDefaultGraphBudget;
    std::int64_t sim_budget = kDefaultSimulationBudget;     ///< all-pairs load simulation
    std::int64_t orbit_prop_budget = 384;                   ///< path-enumeration probing
    std::int64_t brute_bisection_budget = 28;
    std::uint64_t seed = 1;
};

/// Every valid parameter triple with 2^n r <= max_vertices, ordered by size.
inline std::vector<Params> default_sweep(std::int64_t max_vertices = 4096) {
    std::vector<Params> out;
    for (int n = 2; n <= 40 && (std::int64_t{1} << n) * 3 <= max_vertices; ++n)
        for (int d = 1; d <= n; ++d)
            for (int r = 3; (std::int64_t{1} << n) * r <= max_vertices; ++r)
                if ((static_cast<std::int64_t>(d) * r) % n == 0) out.push_back(Params::create(n, d, r));
    std::sort(out.begin(), out.end(), [](const Params& a, const Params& b) {
        auto ka = std::tuple{a.vertex_count(), a.n, a.d, a.r};
        auto kb = std::tuple{b.vertex_count(), b.n, b.d, b.r};
        return ka < kb;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Group arithmetic
// ---------------------------------------------------------------------------

inline void check_group(const Params& p, std::vector<Check>& out) {
    std::mt19937_64 rng(0x9e3779b9u ^ (static_cast<std::uint64_t>(p.n) << 32) ^
                        (static_cast<std::uint64_t>(p.d) << 16) ^ static_cast<std::uint64_t>(p.r));
    auto rand_vertex = [&]() {
        return Vertex{rng() & word_mask(p.n), static_cast<int>(rng() % static_cast<std::uint64_t>(p.r))};
    };

    bool ok = true;
    std::string detail;
    for (int t = 0; t < 64 && ok; ++t) {
        Vertex u = rand_vertex(), v = rand_vertex(), w = rand_vertex();
        if (multiply(p, multiply(p, u, v), w) != multiply(p, u, multiply(p, v, w))) {
            ok = false;
            detail = "associativity fails at " + encode(u, p.n) + " " + encode(v, p.n) + " " + encode(w, p.n);
        }
        if (multiply(p, u, inverse(p, u)) != origin() || multiply(p, inverse(p, u), u) != origin()) {
            ok = false;
            detail = "inverse fails at " + encode(u, p.n);
        }
        std::uint64_t a = u.a;
        std::int64_t i = static_cast<std::int64_t>(rng() % 257) - 128;
        std::int64_t jj = static_cast<std::int64_t>(rng() % 257) - 128;
        if (shift(shift(a, i, p.n), jj, p.n) != shift(a, i + jj, p.n) || shift(a, p.n, p.n) != a ||
            shift(a, 0, p.n) != a) {
            ok = false;
            detail = "shift composition fails";
        }
    }
    record(out, "group axioms (sampled)", ok, detail);

    bool well_defined = true;
    std::vector<int> occurrences(static_cast<size_t>(p.n) + 1, 0);
    for (int x = 0; x < p.r; ++x) {
        if (direction_set(p, x) != direction_set(p, x + p.r)) well_defined = false;
        for (int j : direction_set(p, x)) ++occurrences[static_cast<size_t>(j)];
    }
    record(out, "direction sets well-defined mod r", well_defined);
    bool cover_ok = true;
    for (int j = 1; j <= p.n; ++j)
        if (occurrences[static_cast<size_t>(j)] != p.multiplicity()) cover_ok = false;
    record(out, "each direction in exactly dr/n sets D(x)", cover_ok);

    auto s = connection_set(p);
    bool conn_ok = s.size() == static_cast<size_t>(p.d) + 2;
    for (const Vertex& g : s) {
        if (g == origin()) conn_ok = false;
        if (std::find(s.begin(), s.end(), inverse(p, g)) == s.end()) conn_ok = false;
    }
    record(out, "connection set: size d+2, inverse-closed, no identity", conn_ok);
}

// ---------------------------------------------------------------------------
// Graph structure
// ---------------------------------------------------------------------------

inline void check_structure(const Params& p, const Graph& g, std::vector<Check>& out) {
    record(out, "connected", g.connected());
    record(out, "|V| = 2^n r", g.vertex_count() == p.vertex_count());

    std::int64_t edges = 0;
    std::vector<std::int64_t> orbit_sizes(static_cast<size_t>(p.d) + 1, 0);
    bool degree_ok = true, symmetric_ok = true;
    for (std::int64_t i = 0; i < g.vertex_count(); ++i) {
        Vertex u = g.vertex_at(i);
        int deg = 0;
        g.for_each_neighbour(u, [&](const Neighbour& nb) {
            ++deg;
            if (!g.adjacent(nb.v, u)) symmetric_ok = false;
            if (g.index(nb.v) > i) {
                ++edges;
                ++orbit_sizes[static_cast<size_t>(edge_orbit(g, u, nb.v))];
            }
        });
        if (deg != p.d + 2) degree_ok = false;
    }
    record(out, "(d+2)-regular", degree_ok);
    record(out, "adjacency symmetric", symmetric_ok);
    record(out, "|E| = 2^{n-1} r (d+2)",
           edges == (std::int64_t{1} << (p.n - 1)) * p.r * (p.d + 2),
           "counted " + std::to_string(edges));
    bool orbits_ok = orbit_sizes[0] == p.vertex_count();
    for (int i = 1; i <= p.d; ++i)
        if (orbit_sizes[static_cast<size_t>(i)] != p.vertex_count() / 2) orbits_ok = false;
    record(out, "orbit sizes |E_0| = 2^n r, |E_i| = 2^{n-1} r", orbits_ok);

    bool rpit_ok = true;
    std::string rpit_detail;
    for (int j = 1; j <= p.n && rpit_ok; ++j) {
        std::vector<int> expect = ring_cube_incidence(p, j);
        std::vector<int> seen;
        for (int x = 0; x < p.r; ++x)
            if (in_direction_set(p, j, x)) seen.push_back(x);
        if (seen != expect) {
            rpit_ok = false;
            rpit_detail = "direction " + std::to_string(j);
        }
    }
    record(out, "ring-cube incidence positions and count dr/n", rpit_ok, rpit_detail);

    std::mt19937_64 rng(17u + static_cast<std::uint64_t>(p.vertex_count()));
    std::vector<Vertex> translations = connection_set(p);
    for (int t = 0; t < 3; ++t)
        translations.push_back(Vertex{rng() & word_mask(p.n),
                                      static_cast<int>(rng() % static_cast<std::uint64_t>(p.r))});
    bool cayley_ok = true;
    for (const Vertex& tr : translations) {
        g.for_each_edge([&](Vertex u, const Neighbour& nb) {
            if (!g.adjacent(multiply(p, tr, u), multiply(p, tr, nb.v))) cayley_ok = false;
        });
        if (!cayley_ok) break;
    }
    record(out, "left translation is an automorphism", cayley_ok);
}

// ---------------------------------------------------------------------------
// Router vs oracle (the master property), paths, routing invariants
// ---------------------------------------------------------------------------

inline void check_router_oracle(const Params& p, const Graph& g, std::vector<Check>& out) {
    DistanceField f = bfs_distances(g, origin());
    bool ok = true;
    std::string detail;
    for (std::int64_t i = 0; i < g.vertex_count() && ok; ++i) {
        Vertex v = g.vertex_at(i);
        int formula = distance_from_origin(p, v);
        if (formula != f.dist[static_cast<size_t>(i)]) {
            ok = false;
            detail = encode(v, p.n) + ": router " + std::to_string(formula) + " vs BFS " +
                     std::to_string(f.dist[static_cast<size_t>(i)]);
        }
    }
    record(out, "router = BFS for every vertex", ok, detail);

    int ecc = *std::max_element(f.dist.begin(), f.dist.end());
    record(out, "diameter formula = BFS eccentricity", diameter_formula(p) == ecc,
           "formula " + std::to_string(diameter_formula(p)) + " vs BFS " + std::to_string(ecc));

    std::mt19937_64 rng(23u * static_cast<std::uint64_t>(p.vertex_count()) + 7u);
    bool sym_ok = true;
    for (int t = 0; t < 32; ++t) {
        Vertex u = g.vertex_at(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(g.vertex_count())));
        Vertex v = g.vertex_at(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(g.vertex_count())));
        if (distance(p, u, v) != distance(p, v, u)) sym_ok = false;
        if (distance(p, u, u) != 0) sym_ok = false;
    }
    record(out, "distance symmetric, zero on the diagonal (sampled)", sym_ok);
}

inline void check_paths(const Params& p, const Graph& g, std::vector<Check>& out) {
    bool ok = true;
    std::string detail;
    for (std::int64_t i = 0; i < g.vertex_count() && ok; ++i) {
        Vertex v = g.vertex_at(i);
        AxSequence seq = optimal_sequence(p, v);
        std::vector<Vertex> path = realize_path(p, seq);
        int dist = distance_from_origin(p, v);
        auto fail = [&](const std::string& why) {
            ok = false;
            detail = encode(v, p.n) + ": " + why;
        };
        if (path.front() != origin() || path.back() != v) fail("wrong endpoints");
        else if (static_cast<int>(path.size()) - 1 != dist) fail("length != distance");
        else if (!valid_path(g, path)) fail("not a valid simple path");
        else {
            std::uint64_t flipped = 0;
            int cubes = 0;
            for (std::size_t k = 1; k < path.size(); ++k) {
                if (path[k - 1].a != path[k].a) {
                    ++cubes;
                    std::uint64_t delta = path[k - 1].a ^ path[k].a;
                    if (flipped & delta) fail("repeated cube direction");
                    flipped |= delta;
                }
            }
            if (cubes != hamming(v.a) || flipped != v.a) fail("cube edges do not match the set bits");
        }
    }
    record(out, "realized optimal path valid for every vertex", ok, detail);
}

inline void check_routing_invariants(const Params& p, std::vector<Check>& out) {
    bool rev_ok = true;
    std::string rev_detail;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << p.n) && rev_ok; ++a)
        for (int x = 0; x < p.r; ++x) {
            int lhs = min_ring_cost(p, a, x);
            int rhs = min_ring_cost(p, ring_mirror(p, a), (p.r - x) % p.r);
            if (lhs != rhs) {
                rev_ok = false;
                rev_detail = encode(Vertex{a, x}, p.n);
                break;
            }
        }
    record(out, "mirror symmetry l(a,x) = l(mirror(a), r-x)", rev_ok, rev_detail);

    if (p.single_incidence()) {
        bool bound_ok = true;
        std::string detail;
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << p.n) && bound_ok; ++a)
            for (int x = 0; x < p.r; ++x) {
                LeapPair lp = leaps_case1(p, a, x);
                auto [first, second] = candidate_sequences_case1(p, a, x);
                if (sequence_cost(first, p.r) > p.r + x - 2 * lp.leap1 ||
                    sequence_cost(second, p.r) > 2 * p.r - x - 2 * lp.leap2) {
                    bound_ok = false;
                    detail = encode(Vertex{a, x}, p.n);
                    break;
                }
                if (x != 0 && lp.leap1 < 1) { bound_ok = false; detail = "leap1 < 1"; break; }
                if (lp.leap2 < 1) { bound_ok = false; detail = "leap2 < 1"; break; }
            }
        record(out, "candidate schedules respect the leap bounds", bound_ok, detail);
    } else {
        bool yz_ok = true;
        std::mt19937_64 rng(41u + static_cast<std::uint64_t>(p.n * 131 + p.d * 17 + p.r));
        for (int t = 0; t < 128 && yz_ok; ++t) {
            std::uint64_t a = rng() & word_mask(p.n);
            if (a == 0) continue;
            YzSchedules yz = yz_schedules(p, a);  // identity is rechecked internally
            if (p.divides_n())
                for (int q : yz.q)
                    if (q != 0) yz_ok = false;
        }
        record(out, "early/late schedule identity (and q=0 when d | n)", yz_ok);
    }
}

// ---------------------------------------------------------------------------
// Distance aggregates and forwarding
// ---------------------------------------------------------------------------

inline void check_total_distance(const Params& p, const Graph& g, std::vector<Check>& out,
                                 const Options& opt) {
    TdResult td = exact_total_distance(p, opt.graph_budget);
    std::int64_t oracle_td = bfs_total_distance(g);
    record(out, "router td = BFS td", td.td == oracle_td,
           std::to_string(td.td) + " vs " + std::to_string(oracle_td));
    record(out, "weight sum = 2^{n-1} n r",
           td.sum_weight == (std::int64_t{1} << (p.n - 1)) * p.n * p.r);

    ValueBounds bounds = td_bounds(p);
    bool in_bounds = Rational(td.td) >= bounds.lo && Rational(td.td) <= bounds.hi;
    std::ostringstream os;
    os << "td " << td.td << " not in [" << ceil_rat(bounds.lo) << ", " << floor_rat(bounds.hi) << "]";
    record(out, "td within closed-form bounds", in_bounds, os.str());

    std::int64_t w = wiener(p, td.td);
    record(out, "wiener = |V| td / 2 (integer)", w * 2 == p.vertex_count() * td.td);
    if (g.vertex_count() <= 256) {
        std::int64_t all_pairs = 0;
        for (std::int64_t i = 0; i < g.vertex_count(); ++i) {
            DistanceField f = bfs_distances(g, g.vertex_at(i));
            for (std::int32_t dv : f.dist) all_pairs += dv;
        }
        record(out, "wiener equals the all-pairs oracle sum", w == all_pairs / 2,
               std::to_string(w) + " vs " + std::to_string(all_pairs / 2));
    }

    std::int64_t xi = vertex_forwarding(p, td.td);
    record(out, "xi = td - (|V|-1)", xi == td.td - (p.vertex_count() - 1));
    ValueBounds xb = xi_bounds(p);
    record(out, "xi within closed-form bounds", Rational(xi) >= xb.lo && Rational(xi) <= xb.hi);

    if (!p.single_incidence()) {
        ValueBounds sl = sum_l_bounds(p);
        record(out, "sum of ring costs within its envelope",
               Rational(td.sum_l) >= sl.lo && Rational(td.sum_l) <= sl.hi,
               "sum_l " + std::to_string(td.sum_l));
    }
}

inline void check_forwarding(const Params& p, std::vector<Check>& out, const Options& opt) {
    OrbitLoads loads = edge_orbit_loads(p, opt.graph_budget);
    ValueBounds pb = pi_bounds(p);
    if (loads.exact) {
        record(out, "exact pi within theorem bounds",
               Rational(loads.pi) >= pb.lo && Rational(loads.pi) <= pb.hi,
               "pi = " + std::to_string(loads.pi));
        if (p.single_incidence()) {
            std::int64_t cube = (std::int64_t{1} << p.n) * p.r * p.r;
            bool cl_ok = true;
            for (std::int64_t c : loads.cube_loads)
                if (c != cube) cl_ok = false;
            record(out, "per-orbit cube load = 2^n r^2 (dr=n)", cl_ok);
            if (p.r <= 6)
                record(out, "pi = 2^n r^2 for 3 <= r <= 6", loads.pi == cube,
                       "pi = " + std::to_string(loads.pi));
        } else {
            std::int64_t cube = (std::int64_t{1} << p.n) * (p.n / p.d) * p.r;
            bool cl_ok = true;
            for (std::int64_t c : loads.cube_loads)
                if (c != cube) cl_ok = false;
            record(out, "per-orbit cube load = 2^n (n/d) r (dr>=2n)", cl_ok);
        }
    }

    if (p.vertex_count() <= opt.sim_budget) {
        LoadSimulation sim = routing_load_simulation(p, opt.sim_budget);
        record(out, "ring-edge loads uniform under the routing", sim.ring_loads_uniform);
        record(out, "cube loads uniform within each (x, slot) class", sim.cube_class_uniform);
        TdResult td = exact_total_distance(p, opt.graph_budget);
        record(out, "max vertex load = xi", sim.max_vertex_load == vertex_forwarding(p, td.td),
               std::to_string(sim.max_vertex_load) + " vs " +
                   std::to_string(vertex_forwarding(p, td.td)));
        if (loads.exact)
            record(out, "max edge load = exact pi", sim.max_edge_load == loads.pi,
                   std::to_string(sim.max_edge_load) + " vs " + std::to_string(loads.pi));
        else
            record(out, "simulated load within the pi_m upper bound",
                   Rational(sim.max_edge_load) <= pb.hi,
                   "sim " + std::to_string(sim.max_edge_load));
    }
}

inline void check_orbit_proportionality(const Params& p, std::vector<Check>& out, const Options& opt) {
    if (p.vertex_count() > opt.orbit_prop_budget) return;
    OrbitPropResult res = orbit_proportionality_check(p, 24, opt.seed, opt.orbit_prop_budget);
    if (p.divides_n())
        record(out, "orbit proportional (n ≡ 0 mod d)", res.proportional && !res.witness);
    else
        record(out, "proportionality violated with witness (n !≡ 0 mod d)",
               !res.proportional && res.witness.has_value());
}

inline void check_bisection(const Params& p, const Graph& g, std::vector<Check>& out,
                            const Options& opt) {
    bool construction_ok = true;
    std::string detail;
    std::vector<BisectionConstruction> cons;
    try {
        cons = bisection_constructions(p, opt.graph_budget);  // recount happens inside
        for (const auto& c : cons)
            if (!c.counted) construction_ok = false;
    } catch (const std::logic_error& e) {
        construction_ok = false;
        detail = e.what();
    }
    record(out, "bisection constructions match their recounts", construction_ok, detail);

    BwBounds bw = bw_bounds(p, opt.graph_budget);
    record(out, "bw lower bound <= constructive upper bound", bw.lo <= bw.hi);
    if (g.vertex_count() <= opt.brute_bisection_budget) {
        BisectionResult exact = brute_force_bisection(g);
        record(out, "brute-force bw within [lo, hi]",
               BigInt(exact.cut) >= bw.lo && BigInt(exact.cut) <= bw.hi,
               "bw = " + std::to_string(exact.cut));
    }
}

inline void check_census_transitive(const Params& p, const Graph& g, std::vector<Check>& out) {
    Census a = t_neighbour_census(g, Vertex{0, (p.r - 1)});
    Census b = t_neighbour_census(g, Vertex{0, (p.r - 1) / 2});
    record(out, "censuses agree at every vertex (vertex-transitive)", a.counts == b.counts);
    std::int64_t total = 0;
    for (std::int64_t c : a.counts) total += c;
    record(out, "census row sum = |V|", total == p.vertex_count());
    record(out, "census degree row = d+2",
           a.counts.size() > 1 && a.counts[1] == p.d + 2 && a.counts[0] == 1);
}

// ---------------------------------------------------------------------------
// Per-instance driver
// ---------------------------------------------------------------------------

struct InstanceReport {
    Params p;
    std::vector<Check> checks;
    bool pass = true;
};

inline InstanceReport check_instance(const Params& p, const Options& opt = {}) {
    InstanceReport rep;
    rep.p = p;
    Graph g = Graph::cayley(p, opt.graph_budget);
    check_group(p, rep.checks);
    check_structure(p, g, rep.checks);
    check_router_oracle(p, g, rep.checks);
    check_paths(p, g, rep.checks);
    check_routing_invariants(p, rep.checks);
    check_total_distance(p, g, rep.checks, opt);
    check_forwarding(p, rep.checks, opt);
    check_orbit_proportionality(p, rep.checks, opt);
    check_bisection(p, g, rep.checks, opt);
    check_census_transitive(p, g, rep.checks);
    for (const Check& c : rep.checks) rep.pass = rep.pass && c.pass;
    return rep;
}

// ---------------------------------------------------------------------------
// General family and enumerators
// ---------------------------------------------------------------------------

inline std::vector<Check> check_general_triple(int n, int d, int r,
                                               std::int64_t budget = kDefaultGraphBudget) {
    std::vector<Check> out;
    GeneralParams gp = GeneralParams::create(n, d, r);
    Graph g = Graph::general(gp, budget);
    record(out, gp.name() + " connectivity matches dr >= n",
           g.connected() == gp.connected_by_theory());
    if (!g.connected()) return out;

    if (gp.cayley_condition()) {
        auto wit = non_transitivity_witness(g);
        record(out, gp.name() + " censuses agree (Cayley case)", !wit.has_value());
        // the relabelling (a,x) -> (a,r-x) carries every edge onto the Cayley graph
        Params p = Params::create(n, d, r);
        Graph cay = Graph::cayley(p, budget);
        bool iso_ok = true;
        g.for_each_edge([&](Vertex u, const Neighbour& nb) {
            if (!cay.adjacent(isom_to_rcr(gp, u), isom_to_rcr(gp, nb.v))) iso_ok = false;
        });
        record(out, gp.name() + " ≅ Cayley form under (a,x) -> (a,r-x)", iso_ok);
    } else if (n >= 2 * d) {
        auto wit = non_transitivity_witness(g);
        record(out, gp.name() + " censuses differ at some t", wit.has_value(),
               "expected non-transitivity witness");
    }
    return out;
}

inline std::vector<Check> check_enumerators() {
    std::vector<Check> out;
    bool comp_ok = true;
    for (int m = 1; m <= 12 && comp_ok; ++m)
        for (int k = 1; k <= m; ++k)
            if (BigInt(count_bounded_compositions(m, k, m)) != binomial(m - 1, k - 1)) comp_ok = false;
    record(out, "k-composition counts equal C(m-1,k-1) for m <= 12", comp_ok);
    record(out, "bounded compositions: frozen spot values",
           count_bounded_compositions(5, 2, 5) == 4 && count_bounded_compositions(5, 2, 2) == 0);

    bool avr_ok = true;
    std::string avr_detail;
    for (int m = 9; m <= 16 && avr_ok; ++m)
        for (std::int64_t z = 2; z <= 4; ++z) {
            AvrCheck c = avr_bound_check(m, z);
            if (!c.pass) {
                avr_ok = false;
                avr_detail = "m=" + std::to_string(m) + " z=" + std::to_string(z);
            }
        }
    record(out, "gap-bounded schedule sums within the (z+1)^m envelope", avr_ok, avr_detail);

    bool vx_ok = true;
    std::string vx_detail;
    for (int d = 1; d <= 2 && vx_ok; ++d)
        for (int z = 2; z <= 8; ++z) {
            VxCheck c = vx_bound_check(d, z);
            if (!c.pass || c.count > (std::int64_t{1} << (d * (z - 1)))) {
                vx_ok = false;
                vx_detail = "d=" + std::to_string(d) + " z=" + std::to_string(z);
            }
        }
    record(out, "V(z) counts meet the lower bound for d in {1,2}, z in 2..8", vx_ok, vx_detail);
    return out;
}

}  // namespace rcr::verify
