#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rcr/topology.hpp"

namespace rcr {

struct DistanceField {
    Vertex source;
    std::vector<std::int32_t> dist;  ///< indexed by Graph::index; -1 = unreachable

    std::int32_t at(const Graph& g, Vertex v) const { return dist[static_cast<size_t>(g.index(v))]; }
};

inline DistanceField bfs_distances(const Graph& g, Vertex src) {
    DistanceField f;
    f.source = src;
    f.dist.assign(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<std::int64_t> queue;
    queue.reserve(static_cast<size_t>(g.vertex_count()));
    queue.push_back(g.index(src));
    f.dist[static_cast<size_t>(queue[0])] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::int64_t cur = queue[head];
        std::int32_t dcur = f.dist[static_cast<size_t>(cur)];
        g.for_each_neighbour(g.vertex_at(cur), [&](const Neighbour& nb) {
            std::int64_t j = g.index(nb.v);
            if (f.dist[static_cast<size_t>(j)] < 0) {
                f.dist[static_cast<size_t>(j)] = dcur + 1;
                queue.push_back(j);
            }
        });
    }
    return f;
}

enum class SourcePolicy {
    automatic,          ///< single-source on the Cayley family, all sources on Q^-
    transitive_single,  ///< eccentricity/row sum of the origin (Cayley only)
    all_sources
};

namespace detail {

inline bool use_single_source(const Graph& g, SourcePolicy policy) {
    switch (policy) {
        case SourcePolicy::transitive_single:
            if (g.is_general())
                throw std::invalid_argument(
                    "single-source shortcuts assume vertex-transitivity; Q_n^-(d,r) needs all_sources");
            return true;
        case SourcePolicy::all_sources:
            return false;
        case SourcePolicy::automatic:
            return !g.is_general();
    }
    return false;
}

inline void require_connected(const Graph& g) {
    if (!g.connected()) throw std::invalid_argument("graph is disconnected");
}

}  // namespace detail

inline int bfs_diameter(const Graph& g, SourcePolicy policy = SourcePolicy::automatic) {
    detail::require_connected(g);
    if (detail::use_single_source(g, policy)) {
        DistanceField f = bfs_distances(g, origin());
        return *std::max_element(f.dist.begin(), f.dist.end());
    }
    int best = 0;
    for (std::int64_t i = 0; i < g.vertex_count(); ++i) {
        DistanceField f = bfs_distances(g, g.vertex_at(i));
        best = std::max<int>(best, *std::max_element(f.dist.begin(), f.dist.end()));
    }
    return best;
}

/// Sum of distances from one vertex (Cayley) or the maximum row sum (Q^-).
inline std::int64_t bfs_total_distance(const Graph& g, SourcePolicy policy = SourcePolicy::automatic) {
    detail::require_connected(g);
    auto row_sum = [&](Vertex src) {
        DistanceField f = bfs_distances(g, src);
        std::int64_t s = 0;
        for (std::int32_t v : f.dist) s += v;
        return s;
    };
    if (detail::use_single_source(g, policy)) return row_sum(origin());
    std::int64_t best = 0;
    for (std::int64_t i = 0; i < g.vertex_count(); ++i)
        best = std::max(best, row_sum(g.vertex_at(i)));
    return best;
}

using Path = std::vector<Vertex>;

struct PathEnumeration {
    std::vector<Path> paths;
    bool complete = true;  ///< false when the cap stopped the enumeration
};

/// All shortest u-v paths, up to `cap` of them.
inline PathEnumeration enumerate_shortest_paths(const Graph& g, Vertex u, Vertex v,
                                                std::size_t cap = 10000) {
    DistanceField from_u = bfs_distances(g, u);
    PathEnumeration out;
    if (from_u.at(g, v) < 0) return out;
    Path stack{v};
    std::function<void(Vertex)> walk = [&](Vertex cur) {
        if (!out.complete) return;
        if (cur == u) {
            out.paths.emplace_back(stack.rbegin(), stack.rend());
            if (out.paths.size() >= cap) out.complete = false;
            return;
        }
        std::int32_t dcur = from_u.at(g, cur);
        g.for_each_neighbour(cur, [&](const Neighbour& nb) {
            if (from_u.at(g, nb.v) == dcur - 1) {
                stack.push_back(nb.v);
                walk(nb.v);
                stack.pop_back();
            }
        });
    };
    walk(v);
    return out;
}

/// All simple u-v paths of length at most max_len, up to `cap` of them.
/// Used for orbit-proportionality probing on small instances.
inline PathEnumeration enumerate_paths_up_to(const Graph& g, Vertex u, Vertex v, int max_len,
                                             std::size_t cap = 20000) {
    DistanceField to_v = bfs_distances(g, v);
    PathEnumeration out;
    if (to_v.at(g, u) < 0 || to_v.at(g, u) > max_len) return out;
    std::vector<char> on_path(static_cast<size_t>(g.vertex_count()), 0);
    Path stack{u};
    on_path[static_cast<size_t>(g.index(u))] = 1;
    std::function<void(Vertex, int)> walk = [&](Vertex cur, int len) {
        if (!out.complete) return;
        if (cur == v) {
            out.paths.push_back(stack);
            if (out.paths.size() >= cap) out.complete = false;
            return;
        }
        g.for_each_neighbour(cur, [&](const Neighbour& nb) {
            if (!out.complete) return;
            std::int64_t j = g.index(nb.v);
            if (on_path[static_cast<size_t>(j)]) return;
            if (len + 1 + to_v.at(g, nb.v) > max_len) return;
            on_path[static_cast<size_t>(j)] = 1;
            stack.push_back(nb.v);
            walk(nb.v, len + 1);
            stack.pop_back();
            on_path[static_cast<size_t>(j)] = 0;
        });
    };
    walk(u, 0);
    return out;
}

/// Validate that `path` is a simple path of the graph from front() to back().
inline bool valid_path(const Graph& g, const Path& path) {
    if (path.empty()) return false;
    std::vector<std::int64_t> seen;
    seen.reserve(path.size());
    for (const Vertex& v : path) seen.push_back(g.index(v));
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    for (std::size_t i = 1; i < path.size(); ++i)
        if (!g.adjacent(path[i - 1], path[i])) return false;
    return true;
}

struct Census {
    Vertex base;
    std::vector<std::int64_t> counts;  ///< counts[t] = number of t-neighbours
};

inline Census t_neighbour_census(const Graph& g, Vertex base) {
    DistanceField f = bfs_distances(g, base);
    Census c;
    c.base = base;
    for (std::int32_t dv : f.dist) {
        if (dv < 0) continue;
        if (static_cast<size_t>(dv) >= c.counts.size()) c.counts.resize(static_cast<size_t>(dv) + 1, 0);
        ++c.counts[static_cast<size_t>(dv)];
    }
    return c;
}

struct CensusWitness {
    int t;
    std::int64_t count_at_far_base;   ///< t-neighbours of (0_n, r-1)
    std::int64_t count_at_near_base;  ///< t-neighbours of (0_n, floor((r-1)/2))
};

/// Compare the t-neighbour censuses of (0_n, r-1) and (0_n, floor((r-1)/2))
/// in Q_n^-(d,r). A differing t certifies that the graph is not
/// vertex-transitive (hence not a Cayley graph); agreement for all t returns
/// nullopt. The graph must be connected.
inline std::optional<CensusWitness> non_transitivity_witness(const Graph& g) {
    if (!g.is_general()) throw std::invalid_argument("census witnesses apply to Q_n^-(d,r)");
    detail::require_connected(g);
    int rp = (g.r() - 1) / 2;
    Census far = t_neighbour_census(g, Vertex{0, g.r() - 1});
    Census near = t_neighbour_census(g, Vertex{0, rp});
    std::size_t tmax = std::max(far.counts.size(), near.counts.size());
    for (std::size_t t = 0; t < tmax; ++t) {
        std::int64_t cf = t < far.counts.size() ? far.counts[t] : 0;
        std::int64_t cn = t < near.counts.size() ? near.counts[t] : 0;
        if (cf != cn) return CensusWitness{static_cast<int>(t), cf, cn};
    }
    return std::nullopt;
}

struct BisectionResult {
    std::int64_t cut;
    std::vector<Vertex> half;  ///< a witness U with |U| = floor(|V|/2)
};

/// Exact minimum bisection by exhaustive enumeration. The search fixes
/// vertex 0 inside U (complement symmetry) and walks all
/// C(|V|-1, |V|/2 - 1) subsets; refused above 28 vertices.
inline BisectionResult brute_force_bisection(const Graph& g) {
    std::int64_t v = g.vertex_count();
    if (v > 28)
        throw BudgetError("exhaustive bisection is limited to 28 vertices (got " + std::to_string(v) +
                          "); use the bound pipeline instead");
    detail::require_connected(g);
    int nv = static_cast<int>(v);
    std::vector<std::uint32_t> adj(static_cast<size_t>(nv), 0);
    for (int i = 0; i < nv; ++i)
        g.for_each_neighbour(g.vertex_at(i), [&](const Neighbour& nb) {
            adj[static_cast<size_t>(i)] |= std::uint32_t{1} << g.index(nb.v);
        });

    int half = nv / 2;
    std::uint32_t all = (nv == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << nv) - 1);
    std::int64_t best = -1;
    std::uint32_t best_mask = 0;
    // Gosper's hack over subsets of {1..nv-1} with half-1 elements
    std::uint32_t rest = (std::uint32_t{1} << (half - 1)) - 1;
    std::uint32_t limit = std::uint32_t{1} << (nv - 1);
    while (rest < limit) {
        std::uint32_t mask = (rest << 1) | 1u;
        std::int64_t cut = 0;
        std::uint32_t outside = all & ~mask;
        for (std::uint32_t m = mask; m;) {
            int i = std::countr_zero(m);
            m &= m - 1;
            cut += std::popcount(adj[static_cast<size_t>(i)] & outside);
        }
        if (best < 0 || cut < best) {
            best = cut;
            best_mask = mask;
        }
        std::uint32_t c = rest & -rest;  // rest >= 1 since half-1 >= 1 on every valid graph
        std::uint32_t rr = rest + c;
        rest = (((rr ^ rest) >> 2) / c) | rr;
    }

    BisectionResult out;
    out.cut = best;
    for (int i = 0; i < nv; ++i)
        if ((best_mask >> i) & 1) out.half.push_back(g.vertex_at(i));
    return out;
}

}  // namespace rcr
