#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rcr/group.hpp"
#include "rcr/params.hpp"

namespace rcr {

/// Ring-position schedule realising a route from the origin to (a, x):
/// positions = (x_0 = 0, x_1, ..., x_s, x_{s+1} = x) and directions =
/// (i_1, ..., i_s), where bit i_t of a is flipped while standing at ring
/// position x_t. Validity requires i_t ∈ D(x_t), the i_t to be exactly the
/// set bits of a, and s = hamming(a).
struct AxSequence {
    std::vector<int> positions;
    std::vector<int> directions;

    int weight() const { return static_cast<int>(directions.size()); }
};

/// Shorter-arc distance between two ring positions.
inline int ring_arc(int from, int to, int r) {
    int fwd = ((to - from) % r + r) % r;
    return std::min(fwd, r - fwd);
}

/// l(x̂): total ring cost of a schedule under shorter-arc traversal.
inline int sequence_cost(const AxSequence& seq, int r) {
    int c = 0;
    for (std::size_t t = 1; t < seq.positions.size(); ++t)
        c += ring_arc(seq.positions[t - 1], seq.positions[t], r);
    return c;
}

namespace detail {

/// Set bits of a as 1-indexed coordinates, ascending.
inline std::vector<int> set_bits(std::uint64_t a, int n) {
    std::vector<int> bits;
    for (int i = 1; i <= n; ++i)
        if ((a >> (i - 1)) & 1) bits.push_back(i);
    return bits;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Regime dr = n: every cube direction meets a ring at exactly one position,
// so a schedule is determined by the order in which the bit positions are
// visited. The sorted schedule plus its two largest avoidable gaps decide
// the optimum.
// ---------------------------------------------------------------------------

/// The unique ring position whose direction set contains j (dr = n only).
inline int unique_position(const Params& p, int j) {
    if (!p.single_incidence())
        throw std::logic_error("unique_position requires dr = n");
    return (j - 1) / p.d;
}

struct SortedSchedule {
    /// y_0 <= ... <= y_{s+1}: the multiset {0} ∪ {bit positions} ∪ {x} in
    /// ascending order, followed by the sentinel y_{s+2} = r.
    std::vector<int> y;
    /// Largest index t with y_t = x (ties broken upward so that the leap_2
    /// suffix never straddles a copy of x).
    int tstar = 0;
    int s = 0;  ///< Hamming weight of a
};

inline SortedSchedule sorted_schedule(const Params& p, std::uint64_t a, int x) {
    if (!p.single_incidence())
        throw std::logic_error("sorted_schedule requires dr = n");
    SortedSchedule out;
    out.s = hamming(a);
    out.y.reserve(static_cast<size_t>(out.s) + 3);
    out.y.push_back(0);
    for (int j : detail::set_bits(a, p.n)) out.y.push_back(unique_position(p, j));
    out.y.push_back(x);
    std::sort(out.y.begin(), out.y.end());
    for (int t = 0; t <= out.s + 1; ++t)
        if (out.y[static_cast<size_t>(t)] == x) out.tstar = t;
    out.y.push_back(p.r);
    return out;
}

struct LeapPair {
    int leap1 = 0;  ///< largest gap in y_1..y_{t*} (0 when x = 0)
    int leap2 = 0;  ///< largest gap in y_{t*+1}..y_{s+2}
    int t1 = 0;     ///< smallest argmax index for leap1 (0 when x = 0)
    int t2 = 0;     ///< smallest argmax index for leap2
};

inline LeapPair leaps_case1(const Params& p, std::uint64_t a, int x) {
    SortedSchedule sch = sorted_schedule(p, a, x);
    LeapPair lp;
    if (x != 0) {
        for (int t = 1; t <= sch.tstar; ++t) {
            int gap = sch.y[static_cast<size_t>(t)] - sch.y[static_cast<size_t>(t - 1)];
            if (gap > lp.leap1) {
                lp.leap1 = gap;
                lp.t1 = t;
            }
        }
    }
    for (int t = sch.tstar + 1; t <= sch.s + 2; ++t) {
        int gap = sch.y[static_cast<size_t>(t)] - sch.y[static_cast<size_t>(t - 1)];
        if (gap > lp.leap2) {
            lp.leap2 = gap;
            lp.t2 = t;
        }
    }
    return lp;
}

namespace detail {

/// Bit positions paired with their directions, ascending by (position, bit).
inline std::vector<std::pair<int, int>> positioned_bits_case1(const Params& p, std::uint64_t a) {
    std::vector<std::pair<int, int>> pb;
    for (int j : set_bits(a, p.n)) pb.emplace_back(unique_position(p, j), j);
    std::sort(pb.begin(), pb.end());
    return pb;
}

/// Assemble a schedule that visits `low` (positions <= cut_lo) ascending and
/// `high` (positions >= cut_hi) descending, in the given order.
inline AxSequence assemble(const std::vector<std::pair<int, int>>& first,
                           const std::vector<std::pair<int, int>>& second, int x) {
    AxSequence seq;
    seq.positions.reserve(first.size() + second.size() + 2);
    seq.positions.push_back(0);
    for (const auto& [pos, bit] : first) {
        seq.positions.push_back(pos);
        seq.directions.push_back(bit);
    }
    for (const auto& [pos, bit] : second) {
        seq.positions.push_back(pos);
        seq.directions.push_back(bit);
    }
    seq.positions.push_back(x);
    return seq;
}

}  // namespace detail

/// The two candidate schedules of the dr = n regime. x̂¹ climbs through the
/// positions below the chosen prefix gap and then sweeps the rest downward;
/// x̂² sweeps downward first. One of them is always optimal.
inline std::pair<AxSequence, AxSequence> candidate_sequences_case1(const Params& p,
                                                                   std::uint64_t a, int x) {
    SortedSchedule sch = sorted_schedule(p, a, x);
    LeapPair lp = leaps_case1(p, a, x);
    auto pb = detail::positioned_bits_case1(p, a);

    auto split = [&](int cut_lo, int cut_hi) {
        std::vector<std::pair<int, int>> low, high;
        for (const auto& e : pb)
            (e.first <= cut_lo ? low : high).push_back(e);
        std::reverse(high.begin(), high.end());
        // entries strictly between two consecutive sorted values cannot exist
        for (const auto& e : high)
            if (e.first < cut_hi) throw std::logic_error("schedule split straddles the gap");
        return std::make_pair(low, high);
    };

    AxSequence first;
    if (x == 0) {
        // t = 0 convention: sweep everything downward and return to 0
        std::vector<std::pair<int, int>> all(pb.rbegin(), pb.rend());
        first = detail::assemble(all, {}, x);
    } else {
        auto [low, high] = split(sch.y[static_cast<size_t>(lp.t1 - 1)], sch.y[static_cast<size_t>(lp.t1)]);
        first = detail::assemble(low, high, x);
    }

    auto [low2, high2] = split(sch.y[static_cast<size_t>(lp.t2 - 1)], sch.y[static_cast<size_t>(lp.t2)]);
    AxSequence second = detail::assemble(high2, low2, x);
    return {first, second};
}

// ---------------------------------------------------------------------------
// Regime dr >= 2n: every direction meets a ring at least twice; each set bit
// i_t can be flipped early (position y_t near 0) or late (position z_t near
// r-1), and the optimum splits the bits into an ascending prefix and a
// descending suffix.
// ---------------------------------------------------------------------------

struct YzSchedules {
    std::vector<int> bits;  ///< set bits i_1 < ... < i_s
    std::vector<int> y;     ///< y_t = floor((i_t - 1)/d), in [0, cover-1]
    std::vector<int> z;     ///< z_t = floor((i_t + dr - n - 1)/d), in [r-cover, r-1]
    std::vector<int> q;     ///< q_t = z_t - y_t - r + cover, each 0 or 1
};

inline YzSchedules yz_schedules(const Params& p, std::uint64_t a) {
    if (p.multiplicity() < 2)
        throw std::logic_error("yz_schedules requires dr >= 2n");
    YzSchedules out;
    out.bits = detail::set_bits(a, p.n);
    std::int64_t dr = static_cast<std::int64_t>(p.d) * p.r;
    for (int i : out.bits) {
        int y = (i - 1) / p.d;
        int z = static_cast<int>((i + dr - p.n - 1) / p.d);
        int kt = i - p.d * y;  // 1 <= kt <= d
        int q = (kt + p.slack - 1) / p.d;
        if (z != y + p.r - p.cover + q)
            throw std::logic_error("yz schedule identity violated");
        out.y.push_back(y);
        out.z.push_back(z);
        out.q.push_back(q);
    }
    return out;
}

/// leap_1 for x <= floor(r/2) (requires s >= 1). When x is above every y_t
/// the ascending schedule is already geodesic and leap_1 = cover - x.
inline int leap1_case2(const Params& p, const YzSchedules& yz, int x) {
    int s = static_cast<int>(yz.bits.size());
    if (s == 0) throw std::logic_error("leap1_case2 requires a nonzero bit vector");
    if (x > p.r / 2) throw std::invalid_argument("leap1 applies to the lower half x <= floor(r/2)");
    if (x >= yz.y[static_cast<size_t>(s - 1)]) return p.cover - x;
    // h: smallest index with x < y_h (1-based; y_{h-1} <= x is then automatic)
    int h = 1;
    while (yz.y[static_cast<size_t>(h - 1)] <= x) ++h;
    int best = yz.y[static_cast<size_t>(h - 1)] - x + yz.q[static_cast<size_t>(h - 1)];
    for (int j = h + 1; j <= s; ++j) {
        int gap = yz.y[static_cast<size_t>(j - 1)] - yz.y[static_cast<size_t>(j - 2)] +
                  yz.q[static_cast<size_t>(j - 1)];
        best = std::max(best, gap);
    }
    best = std::max(best, p.cover - yz.y[static_cast<size_t>(s - 1)]);
    return best;
}

/// leap_2 for x > floor(r/2) (requires s >= 1), mirrored. The middle terms
/// use z_{j+1} - z_j + q_j, which equals y_{j+1} - y_j + q_{j+1}.
inline int leap2_case2(const Params& p, const YzSchedules& yz, int x) {
    int s = static_cast<int>(yz.bits.size());
    if (s == 0) throw std::logic_error("leap2_case2 requires a nonzero bit vector");
    if (x <= p.r / 2) throw std::invalid_argument("leap2 applies to the upper half x > floor(r/2)");
    if (x <= yz.z[0]) return p.cover - (p.r - x);
    // l: largest index with z_l < x (1-based)
    int l = s;
    while (yz.z[static_cast<size_t>(l - 1)] >= x) --l;
    int best = x - yz.z[static_cast<size_t>(l - 1)] + yz.q[static_cast<size_t>(l - 1)];
    for (int j = 1; j < l; ++j) {
        int gap = yz.z[static_cast<size_t>(j)] - yz.z[static_cast<size_t>(j - 1)] +
                  yz.q[static_cast<size_t>(j - 1)];
        best = std::max(best, gap);
    }
    best = std::max(best, yz.z[0] - p.r + p.cover);
    return best;
}

namespace detail {

/// Candidate schedule of the dr >= 2n regime for x <= floor(r/2):
/// (0, z_s, ..., z_t, y_1, ..., y_{t-1}, x) for t in [1, s+1].
inline AxSequence case2_low_candidate(const YzSchedules& yz, int x, int t) {
    int s = static_cast<int>(yz.bits.size());
    AxSequence seq;
    seq.positions.push_back(0);
    for (int j = s; j >= t; --j) {
        seq.positions.push_back(yz.z[static_cast<size_t>(j - 1)]);
        seq.directions.push_back(yz.bits[static_cast<size_t>(j - 1)]);
    }
    for (int j = 1; j <= t - 1; ++j) {
        seq.positions.push_back(yz.y[static_cast<size_t>(j - 1)]);
        seq.directions.push_back(yz.bits[static_cast<size_t>(j - 1)]);
    }
    seq.positions.push_back(x);
    return seq;
}

/// Candidate for x > floor(r/2): (0, y_1, ..., y_t, z_s, ..., z_{t+1}, x)
/// for t in [0, s].
inline AxSequence case2_high_candidate(const YzSchedules& yz, int x, int t) {
    int s = static_cast<int>(yz.bits.size());
    AxSequence seq;
    seq.positions.push_back(0);
    for (int j = 1; j <= t; ++j) {
        seq.positions.push_back(yz.y[static_cast<size_t>(j - 1)]);
        seq.directions.push_back(yz.bits[static_cast<size_t>(j - 1)]);
    }
    for (int j = s; j >= t + 1; --j) {
        seq.positions.push_back(yz.z[static_cast<size_t>(j - 1)]);
        seq.directions.push_back(yz.bits[static_cast<size_t>(j - 1)]);
    }
    seq.positions.push_back(x);
    return seq;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Distance and optimal schedules
// ---------------------------------------------------------------------------

/// l(a,x): minimum ring cost over all (a,x)-sequences, by the closed formula
/// of the applicable regime.
inline int min_ring_cost(const Params& p, std::uint64_t a, int x) {
    check_fits(p, Vertex{a, 0});
    if (a == 0) return std::min(x, p.r - x);
    if (p.single_incidence()) {
        LeapPair lp = leaps_case1(p, a, x);
        return std::min(p.r + x - 2 * lp.leap1, 2 * p.r - x - 2 * lp.leap2);
    }
    YzSchedules yz = yz_schedules(p, a);
    if (x <= p.r / 2) return 2 * p.cover - x - 2 * leap1_case2(p, yz, x);
    return 2 * p.cover - (p.r - x) - 2 * leap2_case2(p, yz, x);
}

/// dist((0_n,0), (a,x)) = hamming(a) + l(a,x).
inline int distance_from_origin(const Params& p, Vertex v) {
    return hamming(v.a) + min_ring_cost(p, v.a, v.x);
}

/// An optimal (a,x)-sequence together with its direction tuple. The returned
/// schedule always satisfies sequence_cost == min_ring_cost; a mismatch would
/// mean the closed formulas and the constructions disagree, which is treated
/// as an internal error rather than silently patched.
inline AxSequence optimal_sequence(const Params& p, Vertex v) {
    check_fits(p, v);
    std::uint64_t a = v.a;
    int x = v.x;
    int target = min_ring_cost(p, a, x);

    AxSequence best;
    if (a == 0) {
        best.positions = {0, x};
    } else if (p.single_incidence()) {
        auto [first, second] = candidate_sequences_case1(p, a, x);
        best = (sequence_cost(first, p.r) <= sequence_cost(second, p.r)) ? first : second;
    } else {
        YzSchedules yz = yz_schedules(p, a);
        int s = static_cast<int>(yz.bits.size());
        bool found = false;
        if (x <= p.r / 2) {
            if (x >= yz.y[static_cast<size_t>(s - 1)]) {
                best = detail::case2_low_candidate(yz, x, s + 1);  // the ascending schedule
                found = true;
            } else {
                int h = 1;
                while (yz.y[static_cast<size_t>(h - 1)] <= x) ++h;
                for (int t = h; t <= s + 1 && !found; ++t) {
                    AxSequence cand = detail::case2_low_candidate(yz, x, t);
                    if (sequence_cost(cand, p.r) == target) {
                        best = cand;
                        found = true;
                    }
                }
            }
        } else {
            if (x <= yz.z[0]) {
                best = detail::case2_high_candidate(yz, x, 0);  // the descending schedule
                found = true;
            } else {
                for (int t = 0; t <= s && !found; ++t) {
                    AxSequence cand = detail::case2_high_candidate(yz, x, t);
                    if (sequence_cost(cand, p.r) == target) {
                        best = cand;
                        found = true;
                    }
                }
            }
        }
        if (!found)
            throw std::logic_error("no candidate schedule achieves the closed-form optimum for " +
                                   encode(v, p.n));
    }

    if (sequence_cost(best, p.r) != target)
        throw std::logic_error("constructed schedule misses the closed-form optimum for " +
                               encode(v, p.n));
    return best;
}

/// Expand a schedule into the explicit path it encodes: each consecutive
/// position pair is joined by its shorter ring arc (ties take the
/// increasing-x arc), and the cube edge for direction i_t is inserted at
/// position x_t. The result starts at the origin and ends at (a, x).
inline std::vector<Vertex> realize_path(const Params& p, const AxSequence& seq) {
    if (seq.positions.size() != seq.directions.size() + 2)
        throw std::invalid_argument("schedule must have s+2 positions for s directions");
    std::vector<Vertex> path;
    Vertex cur = origin();
    path.push_back(cur);
    for (std::size_t t = 1; t < seq.positions.size(); ++t) {
        int to = seq.positions[t];
        int fwd = ((to - cur.x) % p.r + p.r) % p.r;
        int step = (fwd <= p.r - fwd) ? +1 : -1;
        while (cur.x != to) {
            cur.x = (cur.x + step + p.r) % p.r;
            path.push_back(cur);
        }
        if (t + 1 < seq.positions.size()) {
            int dir = seq.directions[t - 1];
            if (!in_direction_set(p, dir, to))
                throw std::invalid_argument("direction " + std::to_string(dir) +
                                            " is not flippable at ring position " + std::to_string(to));
            cur.a ^= unit_vec(dir, p.n);
            path.push_back(cur);
        }
    }
    return path;
}

/// The ring-mirror involution on bit vectors: coordinate j maps to
/// (d+1-j) mod n, i.e. coordinate reversal followed by a shift through d.
/// It swaps early and late flip opportunities, so
/// min_ring_cost(a, x) = min_ring_cost(mirror(a), r-x); the plain coordinate
/// reversal has this property only when d = n.
inline std::uint64_t ring_mirror(const Params& p, std::uint64_t a) {
    return shift(reverse_coords(a, p.n), p.d, p.n);
}

inline int distance(const Params& p, Vertex u, Vertex v) {
    return distance_from_origin(p, multiply(p, inverse(p, u), v));
}

/// A shortest u-v path: the origin path for u^{-1}v translated by u.
inline std::vector<Vertex> shortest_path(const Params& p, Vertex u, Vertex v) {
    Vertex w = multiply(p, inverse(p, u), v);
    std::vector<Vertex> path = realize_path(p, optimal_sequence(p, w));
    for (Vertex& vert : path) vert = multiply(p, u, vert);
    return path;
}

}  // namespace rcr
