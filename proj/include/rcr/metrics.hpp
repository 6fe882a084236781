#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rcr/combinatorics.hpp"
#include "rcr/oracle.hpp"
#include "rcr/routing.hpp"
#include "rcr/topology.hpp"

namespace rcr {

using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(int e) { return BigInt(1) << e; }

inline BigInt floor_rat(const Rational& q) {
    BigInt num = numerator(q), den = denominator(q);
    BigInt quot = num / den;
    if (num % den != 0 && num < 0) --quot;
    return quot;
}

inline BigInt ceil_rat(const Rational& q) {
    BigInt num = numerator(q), den = denominator(q);
    BigInt quot = num / den;
    if (num % den != 0 && num > 0) ++quot;
    return quot;
}

namespace detail {

// Rational enclosure of a long double value for the few bound branches with
// irrational factors (log^2 r terms, the cover >= 100 branch of alpha/beta).
// The slack is one part in 2^30, far below any reportable resolution, and is
// applied toward validity of the bound.
inline Rational rat_below(long double v) {
    Rational q(static_cast<double>(v));
    return q - abs(q) / Rational(std::int64_t{1} << 30);
}
inline Rational rat_above(long double v) {
    Rational q(static_cast<double>(v));
    return q + abs(q) / Rational(std::int64_t{1} << 30);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Closed-form diameter
// ---------------------------------------------------------------------------

inline int diameter_formula(const Params& p) {
    if (p.single_incidence()) return p.r == 3 ? p.n + p.r : p.n + (3 * p.r) / 2 - 2;
    return p.n + std::max(p.r / 2, 2 * p.cover - 2);
}

// ---------------------------------------------------------------------------
// Total distance, Wiener index, vertex-forwarding index
// ---------------------------------------------------------------------------

struct TdResult {
    std::int64_t td = 0;          ///< sum of distances from the origin
    std::int64_t sum_l = 0;       ///< sum of ring costs l(a,x)
    std::int64_t sum_weight = 0;  ///< sum of Hamming weights; always 2^{n-1} n r
};

/// Exact total distance via the router. Verifies the weight-sum identity on
/// the way out.
inline TdResult exact_total_distance(const Params& p, std::int64_t budget = kDefaultGraphBudget) {
    std::int64_t count = (p.n > 40) ? budget + 1 : p.vertex_count();
    if (count > budget)
        throw BudgetError("exact td on 2^" + std::to_string(p.n) + "*" + std::to_string(p.r) +
                          " vertices exceeds the budget of " + std::to_string(budget));
    TdResult out;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << p.n); ++a) {
        int w = hamming(a);
        for (int x = 0; x < p.r; ++x) {
            out.sum_l += min_ring_cost(p, a, x);
            out.sum_weight += w;
        }
    }
    out.td = out.sum_weight + out.sum_l;
    std::int64_t expect_weight = (std::int64_t{1} << (p.n - 1)) * p.n * p.r;
    if (out.sum_weight != expect_weight)
        throw std::logic_error("weight-sum identity 2^{n-1}nr violated");
    return out;
}

/// W = |V| td / 2; the product is always even for a vertex-transitive graph.
inline std::int64_t wiener(const Params& p, std::int64_t td) {
    std::int64_t v = p.vertex_count();
    if ((v * td) % 2 != 0) throw std::logic_error("|V|*td must be even");
    return v * td / 2;
}

/// xi = xi_m = td - (|V| - 1).
inline std::int64_t vertex_forwarding(const Params& p, std::int64_t td) {
    return td - (p.vertex_count() - 1);
}

struct ValueBounds {
    Rational lo, hi;
    std::string branch;            ///< which theorem case produced the bounds
    Rational coefficient;          ///< alpha or beta where applicable
    std::string coefficient_name;  ///< "alpha", "beta" or ""

    BigInt lo_int() const { return ceil_rat(lo); }   // valid for integer quantities
    BigInt hi_int() const { return floor_rat(hi); }
};

/// alpha_{n,d,r}: the relative defect of the dr >= 2n total-distance lower
/// bound. The small-cover branch uses the denominator 2nr + 2*floor(r^2/2)
/// + 8*cover^2; this keeps the packaged bound equal to 2^{n-1}(nr +
/// floor(r^2/2)), which is what the underlying counting argument yields and
/// what the d = n instances attain exactly. (For even r this is the plain
/// 2nr + r^2 + 8*cover^2.) The cover >= 100 branch is conservatively
/// rounded up; it is unreachable for n <= 64.
inline Rational alpha_coefficient(const Params& p) {
    BigInt rr2 = (BigInt(p.r) * p.r) / 2;
    if (p.cover < 100) {
        BigInt den = 2 * BigInt(p.n) * p.r + 2 * rr2 + 8 * BigInt(p.cover) * p.cover;
        return Rational(8 * BigInt(p.cover) * p.cover, den);
    }
    BigInt den = 2 * BigInt(p.n) * p.r + BigInt(p.r) * p.r + 8 * BigInt(p.cover) * p.cover;
    long double c = p.cover;
    long double num = 12.0L * std::pow(c, 1.5L) * std::log2(2.0L * c);
    return detail::rat_above(num) / Rational(den);
}

/// beta_{n,d,r}: same defect with the nr term dropped from the denominator.
/// The packaged ring-load lower bound L(1-beta) then equals
/// 2^{n-1} floor(r^2/2) exactly, sharp at d = n.
inline Rational beta_coefficient(const Params& p) {
    BigInt rr2 = (BigInt(p.r) * p.r) / 2;
    if (p.cover < 100) {
        BigInt den = 2 * rr2 + 8 * BigInt(p.cover) * p.cover;
        return Rational(8 * BigInt(p.cover) * p.cover, den);
    }
    BigInt den = BigInt(p.r) * p.r + 8 * BigInt(p.cover) * p.cover;
    long double c = p.cover;
    long double num = 12.0L * std::pow(c, 1.5L) * std::log2(2.0L * c);
    return detail::rat_above(num) / Rational(den);
}

inline ValueBounds td_bounds(const Params& p) {
    ValueBounds out;
    BigInt n(p.n), r(p.r);
    if (p.single_incidence()) {
        if (p.r < 512) {
            out.branch = "dr=n, 3<=r<2^9";
            out.lo = Rational(pow2(p.n - 2) * (2 * n * r + r * r));
            out.hi = Rational(pow2(p.n - 2) * (2 * n * r + 5 * r * r - 8 * r + 8));
        } else {
            out.branch = "dr=n, r>=2^9";
            Rational base(pow2(p.n - 2) * r * r * (2 * p.d + 5));
            long double lg = std::log2(static_cast<long double>(p.r));
            Rational defect_lo = detail::rat_above(20.0L * lg * lg) / Rational(2 * n + 5 * r);
            out.lo = base * (Rational(1) - defect_lo);
            out.hi = base * (Rational(1) - Rational(8 * (r - 1), 2 * n * r + 5 * r * r));
        }
        return out;
    }
    out.branch = "dr>=2n";
    out.coefficient = alpha_coefficient(p);
    out.coefficient_name = "alpha";
    BigInt core = n * r + (r * r) / 2 + 4 * BigInt(p.cover) * p.cover;
    Rational upper(pow2(p.n - 1) * core);
    out.hi = upper;
    out.lo = upper * (Rational(1) - out.coefficient);
    return out;
}

/// Bounds on sum l(a,x) alone (dr >= 2n), used by the edge-forwarding bounds.
inline ValueBounds sum_l_bounds(const Params& p) {
    if (p.single_incidence()) throw std::logic_error("sum_l_bounds applies to dr >= 2n");
    ValueBounds out;
    out.branch = "dr>=2n ring load";
    out.coefficient = beta_coefficient(p);
    out.coefficient_name = "beta";
    BigInt core = (BigInt(p.r) * p.r) / 2 + 4 * BigInt(p.cover) * p.cover;
    Rational upper(pow2(p.n - 1) * core);
    out.hi = upper;
    out.lo = upper * (Rational(1) - out.coefficient);
    return out;
}

inline ValueBounds xi_bounds(const Params& p) {
    ValueBounds out;
    BigInt n(p.n), r(p.r);
    if (p.single_incidence()) {
        if (p.r < 512) {
            out.branch = "dr=n, 3<=r<2^9";
            out.lo = Rational(pow2(p.n - 2) * (2 * n * r + r * r - 4 * r));
            out.hi = Rational(pow2(p.n - 2) * (2 * n * r + 5 * r * r - 12 * r + 8));
        } else {
            out.branch = "dr=n, r>=2^9";
            Rational base(pow2(p.n - 2) * r * r * (2 * p.d + 5));
            long double lg = std::log2(static_cast<long double>(p.r));
            Rational defect_lo = detail::rat_above(4.0L * lg * lg + 4.0L) / Rational(2 * n + 5 * r);
            out.lo = base * (Rational(1) - defect_lo);
            out.hi = base * (Rational(1) - Rational(12 * r - 8, 2 * n * r + 5 * r * r));
        }
        return out;
    }
    // dr >= 2n: xi = td - (|V|-1), so the td envelope shifts by that amount
    out = td_bounds(p);
    out.branch = "dr>=2n (td bounds shifted by |V|-1)";
    Rational shift(pow2(p.n) * p.r - 1);
    out.lo -= shift;
    out.hi -= shift;
    return out;
}

// ---------------------------------------------------------------------------
// Edge-forwarding index
// ---------------------------------------------------------------------------

/// Per-orbit loads of the origin-path routing. ring_load is the total ring
/// cost sum l(a,x); cube_loads[i-1] is 2r * sum_a |E(P_{(a,0)}) ∩ E_i|. When
/// n ≡ 0 (mod d) the maximum of these numbers is exactly pi = pi_m.
struct OrbitLoads {
    std::int64_t ring_load = 0;
    std::vector<std::int64_t> cube_loads;
    bool exact = false;          ///< pi below is exact (n ≡ 0 mod d)
    std::int64_t pi = 0;         ///< meaningful only when exact
};

inline OrbitLoads edge_orbit_loads(const Params& p, std::int64_t budget = kDefaultGraphBudget) {
    std::int64_t count = (p.n > 40) ? budget + 1 : p.vertex_count();
    if (count > budget)
        throw BudgetError("orbit loads exceed the budget of " + std::to_string(budget));
    OrbitLoads out;
    out.cube_loads.assign(static_cast<size_t>(p.d), 0);
    std::vector<std::int64_t> bit_usage(static_cast<size_t>(p.d), 0);
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << p.n); ++a) {
        for (int x = 0; x < p.r; ++x) out.ring_load += min_ring_cost(p, a, x);
        AxSequence seq = optimal_sequence(p, Vertex{a, 0});
        for (std::size_t t = 0; t < seq.directions.size(); ++t) {
            int orb = coord_index(seq.directions[t] -
                                      static_cast<std::int64_t>(p.d) * seq.positions[t + 1],
                                  p.n);
            if (orb > p.d) throw std::logic_error("cube edge outside the orbit range");
            ++bit_usage[static_cast<size_t>(orb - 1)];
        }
    }
    std::int64_t two_r = 2 * static_cast<std::int64_t>(p.r);
    for (int i = 0; i < p.d; ++i) out.cube_loads[static_cast<size_t>(i)] = two_r * bit_usage[static_cast<size_t>(i)];

    if (p.divides_n()) {
        // proof sub-values: every orbit carries the same closed per-orbit count
        std::int64_t expect = p.single_incidence() ? (std::int64_t{1} << (p.n - 1)) * p.r
                                                   : (std::int64_t{1} << (p.n - 1)) * (p.n / p.d);
        for (std::int64_t u : bit_usage)
            if (u != expect) throw std::logic_error("closed per-orbit cube load violated");
        out.exact = true;
        out.pi = out.ring_load;
        for (std::int64_t c : out.cube_loads) out.pi = std::max(out.pi, c);
    }
    return out;
}

/// Two-sided bounds for pi from the applicable theorem case. When dr = n
/// with 3 <= r <= 6 the bounds coincide.
inline ValueBounds pi_bounds(const Params& p) {
    ValueBounds out;
    BigInt n(p.n), r(p.r);
    if (p.single_incidence()) {
        if (p.r <= 6) {
            out.branch = "dr=n, 3<=r<=6";
            out.lo = out.hi = Rational(pow2(p.n) * r * r);
        } else if (p.r < 512) {
            out.branch = "dr=n, 7<=r<2^9";
            out.lo = Rational(pow2(p.n) * r * r);
            out.hi = Rational(pow2(p.n - 2) * (5 * r * r - 8 * r + 8));
        } else {
            out.branch = "dr=n, r>=2^9";
            long double lg = std::log2(static_cast<long double>(p.r));
            Rational five = Rational(5) * (Rational(1) - detail::rat_above(4.0L * lg * lg) / Rational(r));
            Rational factor = std::max(Rational(4), five);
            out.lo = Rational(pow2(p.n - 2) * r * r) * factor;
            out.hi = Rational(pow2(p.n - 2) * (5 * r * r - 8 * r + 8));
        }
        return out;
    }
    if (p.divides_n()) {
        out.branch = "dr>=2n, n≡0 mod d";
        out.coefficient = beta_coefficient(p);
        out.coefficient_name = "beta";
        BigInt nd(p.n / p.d);
        BigInt core = (r * r) / 2 + 4 * nd * nd;
        Rational ring_lo = Rational(pow2(p.n - 1) * core) * (Rational(1) - out.coefficient);
        Rational cube = Rational(pow2(p.n - 1) * 2 * n * r, p.d);
        out.lo = std::max(cube, ring_lo);
        out.hi = Rational(pow2(p.n - 1) * core);
        return out;
    }
    out.branch = "dr>=2n, n!≡0 mod d";
    out.coefficient = alpha_coefficient(p);
    out.coefficient_name = "alpha";
    BigInt core = n * r + (r * r) / 2 + 4 * BigInt(p.cover) * p.cover;
    out.lo = Rational(pow2(p.n) * core, p.d + 2) * (Rational(1) - out.coefficient);
    Rational cube_hi = Rational(pow2(p.n - 1)) * (Rational(4 * n * r, p.d) + Rational(2 * r));
    Rational ring_hi = Rational(pow2(p.n - 1) * ((r * r) / 2 + 4 * BigInt(p.cover) * p.cover));
    out.hi = std::max(cube_hi, ring_hi);
    return out;
}

// ---------------------------------------------------------------------------
// Full load simulation of the routing {y P_(a,x)}
// ---------------------------------------------------------------------------

struct LoadSimulation {
    std::int64_t max_edge_load = 0;
    std::int64_t max_vertex_load = 0;           ///< internal-vertex load
    std::vector<std::int64_t> per_orbit_max;    ///< index 0 = ring orbit
    bool ring_loads_uniform = false;
    bool cube_class_uniform = false;  ///< within each (x, slot) class across a
};

constexpr std::int64_t kDefaultSimulationBudget = 512;

/// Count the exact per-edge and per-vertex loads of the all-to-all routing
/// obtained by translating the router's origin paths.
inline LoadSimulation routing_load_simulation(const Params& p,
                                              std::int64_t budget = kDefaultSimulationBudget) {
    std::int64_t v = (p.n > 40) ? budget + 1 : p.vertex_count();
    if (v > budget)
        throw BudgetError("load simulation is limited to " + std::to_string(budget) + " vertices");
    Graph g = Graph::cayley(p, v);
    int slots = p.d + 2;

    // canonical edge id: cube edge {(a,x),(a+e_j,x)} keys off min(a, a^e_j)
    // at slot i-1; the ring edge (a,x)->(a,x+1) keys off its tail at slot d.
    auto edge_id = [&](Vertex u, Vertex w) -> std::int64_t {
        if (u.a == w.a) {
            Vertex tail = ((u.x + 1) % p.r == w.x) ? u : w;
            return g.index(tail) * slots + p.d;
        }
        int j = std::countr_zero(u.a ^ w.a) + 1;
        int i = coord_index(j - static_cast<std::int64_t>(p.d) * u.x, p.n);
        Vertex lo{std::min(u.a, w.a), u.x};
        return g.index(lo) * slots + (i - 1);
    };

    std::vector<std::int64_t> eload(static_cast<size_t>(v * slots), 0);
    std::vector<std::int64_t> vload(static_cast<size_t>(v), 0);

    for (std::int64_t wi = 0; wi < v; ++wi) {
        Vertex w = g.vertex_at(wi);
        std::vector<Vertex> path = realize_path(p, optimal_sequence(p, w));
        for (std::int64_t bi = 0; bi < v; ++bi) {
            Vertex b = g.vertex_at(bi);
            Vertex prev = multiply(p, b, path[0]);
            for (std::size_t k = 1; k < path.size(); ++k) {
                Vertex cur = multiply(p, b, path[k]);
                ++eload[static_cast<size_t>(edge_id(prev, cur))];
                if (k + 1 < path.size()) ++vload[static_cast<size_t>(g.index(cur))];
                prev = cur;
            }
        }
    }

    LoadSimulation out;
    out.per_orbit_max.assign(static_cast<size_t>(p.d) + 1, 0);
    out.ring_loads_uniform = true;
    out.cube_class_uniform = true;
    std::int64_t ring_ref = -1;
    // cube classes: slot i-1 at ring position x, compared across a
    std::vector<std::int64_t> class_ref(static_cast<size_t>(p.d) * p.r, -1);
    for (std::int64_t idx = 0; idx < v; ++idx) {
        Vertex u = g.vertex_at(idx);
        std::int64_t ring = eload[static_cast<size_t>(idx * slots + p.d)];
        out.per_orbit_max[0] = std::max(out.per_orbit_max[0], ring);
        out.max_edge_load = std::max(out.max_edge_load, ring);
        if (ring_ref < 0) ring_ref = ring;
        if (ring != ring_ref) out.ring_loads_uniform = false;
        for (int i = 1; i <= p.d; ++i) {
            int j = g.cube_direction(i, u.x);
            if (u.a > (u.a ^ (std::uint64_t{1} << (j - 1)))) continue;  // counted from the lower endpoint
            std::int64_t load = eload[static_cast<size_t>(idx * slots + (i - 1))];
            int orb = coord_index(j - static_cast<std::int64_t>(p.d) * u.x, p.n);
            out.per_orbit_max[static_cast<size_t>(orb)] =
                std::max(out.per_orbit_max[static_cast<size_t>(orb)], load);
            out.max_edge_load = std::max(out.max_edge_load, load);
            std::size_t cls = static_cast<size_t>((i - 1)) * p.r + u.x;
            if (class_ref[cls] < 0) class_ref[cls] = load;
            if (class_ref[cls] != load) out.cube_class_uniform = false;
        }
        out.max_vertex_load = std::max(out.max_vertex_load, vload[static_cast<size_t>(idx)]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Orbit proportionality
// ---------------------------------------------------------------------------

struct OrbitProfile {
    std::vector<std::int64_t> counts;  ///< counts[i] = edges of orbit i, 0..d
    friend bool operator==(const OrbitProfile&, const OrbitProfile&) = default;
};

inline OrbitProfile path_orbit_profile(const Params& p, const Path& path) {
    OrbitProfile prof;
    prof.counts.assign(static_cast<size_t>(p.d) + 1, 0);
    for (std::size_t i = 1; i < path.size(); ++i)
        ++prof.counts[static_cast<size_t>(edge_orbit(p, path[i - 1], path[i]))];
    return prof;
}

struct OrbitPropWitness {
    Vertex u, v;
    Path shortest;   ///< a shortest path whose orbit profile is beaten
    Path other;      ///< a path with strictly fewer edges in `orbit`
    int orbit;
};

struct OrbitPropResult {
    bool proportional = false;
    std::optional<OrbitPropWitness> witness;
    int pairs_sampled = 0;
};

/// Probe the orbit-proportionality criterion: every shortest path must
/// minimise its per-orbit edge counts against every path simultaneously.
/// Sampled pairs have all shortest paths and all near-shortest paths
/// enumerated; when no sampled violation exists and n is not a multiple of
/// d, the witness promised by the theory is constructed directly.
inline OrbitPropResult orbit_proportionality_check(const Params& p, int samples = 24,
                                                   std::uint64_t seed = 1,
                                                   std::int64_t budget = 4096) {
    Graph g = Graph::cayley(p, budget);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> pick(0, g.vertex_count() - 1);
    OrbitPropResult out;

    auto beats = [&](const OrbitProfile& shortest, const OrbitProfile& other) -> int {
        for (std::size_t i = 0; i < shortest.counts.size(); ++i)
            if (other.counts[i] < shortest.counts[i]) return static_cast<int>(i);
        return -1;
    };

    for (int s = 0; s < samples; ++s) {
        Vertex u = g.vertex_at(pick(rng));
        Vertex v = g.vertex_at(pick(rng));
        if (u == v) continue;
        ++out.pairs_sampled;
        PathEnumeration sp = enumerate_shortest_paths(g, u, v, 4000);
        if (sp.paths.empty()) continue;
        OrbitProfile ref = path_orbit_profile(p, sp.paths.front());
        for (const Path& path : sp.paths) {
            OrbitProfile prof = path_orbit_profile(p, path);
            if (!(prof == ref)) {
                int orb = beats(ref, prof);
                if (orb < 0) orb = beats(prof, ref);  // one direction must differ
                out.witness = OrbitPropWitness{u, v, sp.paths.front(), path, orb};
                return out;
            }
        }
        int dist = static_cast<int>(sp.paths.front().size()) - 1;
        PathEnumeration longer = enumerate_paths_up_to(g, u, v, dist + 2, 4000);
        for (const Path& path : longer.paths) {
            int orb = beats(ref, path_orbit_profile(p, path));
            if (orb >= 0) {
                out.witness = OrbitPropWitness{u, v, sp.paths.front(), path, orb};
                return out;
            }
        }
    }

    if (!p.divides_n()) {
        // construct the promised witness: a direction j reachable at two ring
        // positions that land in different orbits
        for (int j = 1; j <= p.n && !out.witness; ++j) {
            std::vector<int> positions = ring_cube_incidence(p, j);
            auto orbit_at = [&](int x) { return coord_index(j - static_cast<std::int64_t>(p.d) * x, p.n); };
            int y = positions[0];
            for (int x : positions)
                if (ring_arc(0, x, p.r) < ring_arc(0, y, p.r)) y = x;
            for (int yp : positions) {
                if (orbit_at(yp) == orbit_at(y)) continue;
                auto build = [&](int stop) {
                    Path path;
                    AxSequence seq;
                    seq.positions = {0, stop, 0};
                    seq.directions = {j};
                    return realize_path(p, seq);
                };
                Path shortest = build(y);
                Path other = build(yp);
                if (static_cast<int>(shortest.size()) - 1 !=
                    distance_from_origin(p, Vertex{unit_vec(j, p.n), 0}))
                    throw std::logic_error("constructed witness path is not shortest");
                out.witness = OrbitPropWitness{origin(), Vertex{unit_vec(j, p.n), 0}, shortest,
                                               other, orbit_at(y)};
            }
        }
        if (!out.witness)
            throw std::logic_error("no proportionality witness found although n !≡ 0 (mod d)");
        return out;
    }

    out.proportional = true;
    return out;
}

// ---------------------------------------------------------------------------
// Bisections
// ---------------------------------------------------------------------------

struct BisectionConstruction {
    std::string name;
    BigInt cut;                            ///< closed-form cut size
    std::optional<std::int64_t> counted;   ///< explicit recount of delta(U, ~U)
    std::function<bool(const Params&, Vertex)> in_half;
};

/// The explicit bisections from the theory: the direction cut on bit n
/// (always), the ring-half cut (r even) and the rotated ring cut with a
/// bit-n split at position 0 (r odd).
inline std::vector<BisectionConstruction> bisection_constructions(
    const Params& p, std::int64_t budget = kDefaultGraphBudget) {
    std::vector<BisectionConstruction> out;

    BisectionConstruction direction;
    direction.name = "direction-cut";
    direction.cut = pow2(p.n - 1) * p.multiplicity();
    direction.in_half = [](const Params& pp, Vertex v) { return get_coord(v.a, pp.n, pp.n); };
    out.push_back(direction);

    if (p.r % 2 == 0) {
        BisectionConstruction half;
        half.name = "ring-half-cut";
        half.cut = pow2(p.n + 1);
        half.in_half = [](const Params& pp, Vertex v) { return v.x < pp.r / 2; };
        out.push_back(half);
    } else {
        BisectionConstruction odd;
        odd.name = "odd-ring-cut";
        odd.cut = (p.n > p.d) ? pow2(p.n + 1) : pow2(p.n + 1) + pow2(p.n - 1);
        odd.in_half = [](const Params& pp, Vertex v) {
            if (v.x == 0) return !get_coord(v.a, pp.n, pp.n);
            return v.x <= (pp.r - 1) / 2;
        };
        out.push_back(odd);
    }

    bool countable = p.n <= 40 && p.vertex_count() <= budget;
    if (countable) {
        Graph g = Graph::cayley(p, budget);
        for (BisectionConstruction& b : out) {
            std::int64_t cut = 0, inside = 0;
            for (std::int64_t i = 0; i < g.vertex_count(); ++i)
                if (b.in_half(p, g.vertex_at(i))) ++inside;
            g.for_each_edge([&](Vertex u, const Neighbour& nb) {
                if (b.in_half(p, u) != b.in_half(p, nb.v)) ++cut;
            });
            std::int64_t other = g.vertex_count() - inside;
            if (inside - other > 1 || other - inside > 1)
                throw std::logic_error(b.name + " is not a bisection");
            if (BigInt(cut) != b.cut)
                throw std::logic_error(b.name + " recount disagrees with the closed form");
            b.counted = cut;
        }
    }
    return out;
}

struct BwBounds {
    BigInt lo, hi;
    Rational lo_exact;
    std::string lo_case;
};

inline BwBounds bw_bounds(const Params& p, std::int64_t budget = kDefaultGraphBudget) {
    BwBounds out;
    BigInt n(p.n), r(p.r);
    if (p.single_incidence()) {
        if (p.r <= 6) {
            out.lo_case = "dr=n, 3<=r<=6";
            out.lo_exact = Rational(pow2(p.n - 1));
        } else {
            out.lo_case = "dr=n, r>=7";
            out.lo_exact = Rational(pow2(p.n + 1) * r * r, 5 * r * r - 8 * r + 8);
        }
    } else if (p.divides_n()) {
        out.lo_case = "dr>=2n, n≡0 mod d";
        BigInt nd(p.n / p.d);
        out.lo_exact = Rational(pow2(p.n + 1) * r * r, r * r + 8 * nd * nd);
    } else {
        out.lo_case = "dr>=2n, n!≡0 mod d";
        Rational a(pow2(p.n) * BigInt(p.d) * r, 4 * n + 2 * BigInt(p.d));
        Rational b(pow2(p.n) * 2 * r * r, r * r + 8 * BigInt(p.cover) * p.cover);
        out.lo_exact = std::min(a, b);
    }
    out.lo = ceil_rat(out.lo_exact);

    bool first = true;
    for (const BisectionConstruction& b : bisection_constructions(p, std::min<std::int64_t>(budget, 1))) {
        // budget 1: formulas only, no reccount
        if (first || b.cut < out.hi) out.hi = b.cut;
        first = false;
    }
    if (out.lo > out.hi) throw std::logic_error("bisection lower bound exceeds the constructive upper bound");
    return out;
}

// ---------------------------------------------------------------------------
// Combined report
// ---------------------------------------------------------------------------

enum class OracleLevel { none, full };

struct MetricsReport {
    Params params;
    std::string regime;
    bool n_mod_d_zero = false;
    BigInt vertices, edges;

    int diameter = 0;
    std::optional<int> diameter_oracle;

    std::optional<std::int64_t> td;  ///< router-exact
    std::optional<std::int64_t> td_oracle;
    std::optional<std::int64_t> sum_l, weight_sum;
    ValueBounds td_envelope;

    std::optional<std::int64_t> wiener_index;
    std::optional<std::int64_t> xi;
    ValueBounds xi_envelope;

    std::optional<BigInt> pi_exact;
    ValueBounds pi_envelope;
    std::optional<std::int64_t> pi_m_simulated;  ///< max edge load of the realised routing

    BwBounds bw;
    std::vector<BisectionConstruction> constructions;
    std::optional<std::int64_t> bw_oracle;
};

inline MetricsReport compute_metrics(const Params& p, OracleLevel oracle = OracleLevel::none,
                                     std::int64_t budget = kDefaultGraphBudget,
                                     std::int64_t sim_budget = kDefaultSimulationBudget) {
    MetricsReport rep;
    rep.params = p;
    rep.regime = p.single_incidence() ? "dr=n" : "dr>=2n";
    rep.n_mod_d_zero = p.divides_n();
    rep.vertices = pow2(p.n) * p.r;
    rep.edges = pow2(p.n - 1) * p.r * (p.d + 2);

    rep.diameter = diameter_formula(p);
    rep.td_envelope = td_bounds(p);
    rep.xi_envelope = xi_bounds(p);
    rep.pi_envelope = pi_bounds(p);
    rep.bw = bw_bounds(p, budget);
    rep.constructions = bisection_constructions(p, budget);

    bool enumerable = p.n <= 40 && p.vertex_count() <= budget;
    if (enumerable) {
        TdResult td = exact_total_distance(p, budget);
        rep.td = td.td;
        rep.sum_l = td.sum_l;
        rep.weight_sum = td.sum_weight;
        rep.wiener_index = wiener(p, td.td);
        rep.xi = vertex_forwarding(p, td.td);
        if (Rational(td.td) < rep.td_envelope.lo || Rational(td.td) > rep.td_envelope.hi)
            throw std::logic_error("exact td escapes its bounds");
        if (Rational(*rep.xi) < rep.xi_envelope.lo || Rational(*rep.xi) > rep.xi_envelope.hi)
            throw std::logic_error("exact xi escapes its bounds");

        OrbitLoads loads = edge_orbit_loads(p, budget);
        if (loads.exact) {
            rep.pi_exact = BigInt(loads.pi);
            if (Rational(loads.pi) < rep.pi_envelope.lo || Rational(loads.pi) > rep.pi_envelope.hi)
                throw std::logic_error("exact pi escapes its bounds");
        }

        if (p.vertex_count() <= sim_budget) {
            LoadSimulation sim = routing_load_simulation(p, sim_budget);
            rep.pi_m_simulated = sim.max_edge_load;
            if (!sim.ring_loads_uniform) throw std::logic_error("ring loads must be uniform");
            if (sim.max_vertex_load != *rep.xi)
                throw std::logic_error("simulated vertex load disagrees with xi");
            if (loads.exact && sim.max_edge_load != loads.pi)
                throw std::logic_error("simulated edge load disagrees with exact pi");
        }
    }

    if (oracle == OracleLevel::full && enumerable) {
        Graph g = Graph::cayley(p, budget);
        rep.diameter_oracle = bfs_diameter(g);
        rep.td_oracle = bfs_total_distance(g);
        if (*rep.diameter_oracle != rep.diameter)
            throw std::logic_error("diameter formula disagrees with BFS");
        if (rep.td && *rep.td_oracle != *rep.td)
            throw std::logic_error("router td disagrees with BFS td");
        if (g.vertex_count() <= 28) {
            rep.bw_oracle = brute_force_bisection(g).cut;
            if (BigInt(*rep.bw_oracle) < rep.bw.lo || BigInt(*rep.bw_oracle) > rep.bw.hi)
                throw std::logic_error("brute-force bisection escapes its bounds");
        }
    }
    return rep;
}

}  // namespace rcr
