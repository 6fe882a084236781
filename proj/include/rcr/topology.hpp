#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rcr/group.hpp"
#include "rcr/params.hpp"

namespace rcr {

enum class EdgeKind { ring, cube };

struct Neighbour {
    Vertex v;
    EdgeKind kind;
    /// cube edges: the direction j in {1..n} whose bit differs;
    /// ring edges: +1 or -1.
    int direction;
};

constexpr std::int64_t kDefaultGraphBudget = std::int64_t{1} << 20;

/// Q_n(d,r) or Q_n^-(d,r) as an implicit graph: adjacency is computed from
/// the group arithmetic, vertices are addressed by the index a*r + x.
/// Construction walks the whole graph once to verify the degree/count
/// invariants and record connectivity.
class Graph {
public:
    static Graph cayley(const Params& p, std::int64_t budget = kDefaultGraphBudget) {
        Graph g;
        g.n_ = p.n;
        g.d_ = p.d;
        g.r_ = p.r;
        g.general_ = false;
        g.init(budget);
        return g;
    }

    /// Q_n^-(d,r); may be disconnected (flagged, never an error).
    static Graph general(const GeneralParams& gp, std::int64_t budget = kDefaultGraphBudget) {
        Graph g;
        g.n_ = gp.n;
        g.d_ = gp.d;
        g.r_ = gp.r;
        g.general_ = true;
        g.init(budget);
        return g;
    }

    int n() const { return n_; }
    int d() const { return d_; }
    int r() const { return r_; }
    bool is_general() const { return general_; }
    bool connected() const { return connected_; }
    int degree() const { return d_ + 2; }

    std::int64_t vertex_count() const { return vcount_; }
    std::int64_t edge_count() const { return vcount_ * (d_ + 2) / 2; }

    std::int64_t index(Vertex v) const { return static_cast<std::int64_t>(v.a) * r_ + v.x; }
    Vertex vertex_at(std::int64_t idx) const {
        return Vertex{static_cast<std::uint64_t>(idx / r_), static_cast<int>(idx % r_)};
    }

    /// Direction of the i-th cube neighbour (1 <= i <= d) at ring position x.
    int cube_direction(int i, int x) const {
        std::int64_t off = static_cast<std::int64_t>(d_) * x;
        return coord_index(general_ ? i - off : i + off, n_);
    }

    template <typename F>
    void for_each_neighbour(Vertex v, F&& f) const {
        for (int i = 1; i <= d_; ++i) {
            int j = cube_direction(i, v.x);
            f(Neighbour{Vertex{v.a ^ (std::uint64_t{1} << (j - 1)), v.x}, EdgeKind::cube, j});
        }
        f(Neighbour{Vertex{v.a, (v.x + 1) % r_}, EdgeKind::ring, +1});
        f(Neighbour{Vertex{v.a, (v.x + r_ - 1) % r_}, EdgeKind::ring, -1});
    }

    std::vector<Neighbour> neighbours(Vertex v) const {
        std::vector<Neighbour> out;
        out.reserve(static_cast<size_t>(d_) + 2);
        for_each_neighbour(v, [&](const Neighbour& nb) { out.push_back(nb); });
        return out;
    }

    bool adjacent(Vertex u, Vertex v) const {
        bool found = false;
        for_each_neighbour(u, [&](const Neighbour& nb) { found |= (nb.v == v); });
        return found;
    }

    /// Visit every undirected edge exactly once (from the endpoint with the
    /// smaller index).
    template <typename F>
    void for_each_edge(F&& f) const {
        for (std::int64_t idx = 0; idx < vcount_; ++idx) {
            Vertex u = vertex_at(idx);
            for_each_neighbour(u, [&](const Neighbour& nb) {
                if (index(nb.v) > idx) f(u, nb);
            });
        }
    }

private:
    void init(std::int64_t budget) {
        std::int64_t count = (n_ > 40) ? budget + 1 : (std::int64_t{1} << n_) * r_;
        if (count > budget)
            throw BudgetError("graph on 2^" + std::to_string(n_) + "*" + std::to_string(r_) +
                              " vertices exceeds the budget of " + std::to_string(budget));
        vcount_ = count;
        // connectivity by traversal from (0_n, 0)
        std::vector<char> seen(static_cast<size_t>(vcount_), 0);
        std::vector<std::int64_t> queue{0};
        seen[0] = 1;
        std::int64_t reached = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = vertex_at(queue[head]);
            for_each_neighbour(u, [&](const Neighbour& nb) {
                std::int64_t j = index(nb.v);
                if (!seen[static_cast<size_t>(j)]) {
                    seen[static_cast<size_t>(j)] = 1;
                    ++reached;
                    queue.push_back(j);
                }
            });
        }
        connected_ = (reached == vcount_);
    }

    int n_ = 0, d_ = 0, r_ = 0;
    bool general_ = false;
    bool connected_ = false;
    std::int64_t vcount_ = 0;
};

inline Graph build_graph(const Params& p, std::int64_t budget = kDefaultGraphBudget) {
    return Graph::cayley(p, budget);
}

inline Graph build_general(int n, int d, int r, std::int64_t budget = kDefaultGraphBudget) {
    return Graph::general(GeneralParams::create(n, d, r), budget);
}

/// Ring positions at which a cube edge in direction e_j meets any fixed
/// a-ring: x_l = floor((j + l*n - 1)/d) for 0 <= l < dr/n.
inline std::vector<int> ring_cube_incidence(const Params& p, int j) {
    if (j < 1 || j > p.n) throw std::invalid_argument("direction j must be in 1..n");
    std::vector<int> out;
    out.reserve(static_cast<size_t>(p.multiplicity()));
    for (std::int64_t l = 0; l < p.multiplicity(); ++l)
        out.push_back(static_cast<int>((j + l * p.n - 1) / p.d));
    return out;
}

/// Orbit of an edge under left translation: 0 for ring edges, the unique
/// i in {1..d} with j ≡ i + dx (mod n) for the cube edge {(a,x),(a+e_j,x)}.
/// For general graphs the label solves j ≡ i - dx instead (a direction-class
/// label rather than a group orbit when the Cayley condition fails).
inline int edge_orbit(const Graph& g, Vertex u, Vertex v) {
    if (u.a == v.a && u.x != v.x) {
        int diff = (v.x - u.x + g.r()) % g.r();
        if (diff == 1 || diff == g.r() - 1) return 0;
        throw std::invalid_argument("not an edge: ring positions are not adjacent");
    }
    if (u.x == v.x && u.a != v.a) {
        std::uint64_t delta = u.a ^ v.a;
        if ((delta & (delta - 1)) == 0) {
            int j = std::countr_zero(delta) + 1;
            std::int64_t off = static_cast<std::int64_t>(g.d()) * u.x;
            int i = coord_index(g.is_general() ? j + off : j - off, g.n());
            if (i <= g.d()) return i;
        }
        throw std::invalid_argument("not an edge: endpoints differ in a non-flippable direction");
    }
    throw std::invalid_argument("not an edge");
}

inline int edge_orbit(const Params& p, Vertex u, Vertex v) {
    if (u.a == v.a && u.x != v.x) {
        int diff = (v.x - u.x + p.r) % p.r;
        if (diff == 1 || diff == p.r - 1) return 0;
        throw std::invalid_argument("not an edge: ring positions are not adjacent");
    }
    if (u.x == v.x && u.a != v.a) {
        std::uint64_t delta = u.a ^ v.a;
        if ((delta & (delta - 1)) == 0) {
            int j = std::countr_zero(delta) + 1;
            int i = coord_index(j - static_cast<std::int64_t>(p.d) * u.x, p.n);
            if (i <= p.d) return i;
        }
        throw std::invalid_argument("not an edge: endpoints differ in a non-flippable direction");
    }
    throw std::invalid_argument("not an edge");
}

/// The isomorphism Q_n^-(d,r) -> Q_n(d,r), (a,x) |-> (a, r-x).
/// Only valid when dr ≡ 0 (mod n).
inline Vertex isom_to_rcr(const GeneralParams& gp, Vertex v) {
    if (!gp.cayley_condition())
        throw std::invalid_argument("(a,x) -> (a,r-x) is an isomorphism only when dr ≡ 0 (mod n)");
    return Vertex{v.a, (gp.r - v.x) % gp.r};
}

enum class SpecialFamily { hypercube, cube_connected_cycles, cube_of_rings };

/// CC_n = Q_n(1,n) and COR(d,r) = Q_{dr}(d,r). Hypercubes would need r = 1
/// and are rejected.
inline Params special(SpecialFamily family, int arg1, int arg2 = 0) {
    switch (family) {
        case SpecialFamily::hypercube:
            throw std::invalid_argument("hypercube Q_n = Q_n(n,1) needs r=1, which this library rejects");
        case SpecialFamily::cube_connected_cycles:
            return Params::create(arg1, 1, arg1);
        case SpecialFamily::cube_of_rings:
            if (arg2 < 3) throw std::invalid_argument("COR(d,r) needs r >= 3");
            if (arg1 < 1 || static_cast<std::int64_t>(arg1) * arg2 > 64)
                throw std::invalid_argument("COR(d,r) needs 1 <= d and dr <= 64");
            return Params::create(arg1 * arg2, arg1, arg2);
    }
    throw std::invalid_argument("unknown special family");
}

// Deterministic serialisation. Edgelist: a header line, then one line
// "<u> <v> <orbit>" per edge with u < v and lines in lexicographic order.

inline std::string export_edgelist(const Graph& g) {
    std::vector<std::string> lines;
    lines.reserve(static_cast<size_t>(g.edge_count()));
    g.for_each_edge([&](Vertex u, const Neighbour& nb) {
        std::string a = encode(u, g.n());
        std::string b = encode(nb.v, g.n());
        if (b < a) std::swap(a, b);
        lines.push_back(a + " " + b + " " + std::to_string(edge_orbit(g, u, nb.v)));
    });
    std::sort(lines.begin(), lines.end());
    std::string out = std::string(g.is_general() ? "rcr-general" : "rcr") + " n=" + std::to_string(g.n()) +
                      " d=" + std::to_string(g.d()) + " r=" + std::to_string(g.r()) + "\n";
    for (const auto& l : lines) out += l + "\n";
    return out;
}

inline std::string export_dot(const Graph& g) {
    std::vector<std::string> lines;
    lines.reserve(static_cast<size_t>(g.edge_count()));
    g.for_each_edge([&](Vertex u, const Neighbour& nb) {
        std::string a = encode(u, g.n());
        std::string b = encode(nb.v, g.n());
        if (b < a) std::swap(a, b);
        lines.push_back("  \"" + a + "\" -- \"" + b + "\" [orbit=" +
                        std::to_string(edge_orbit(g, u, nb.v)) + "];");
    });
    std::sort(lines.begin(), lines.end());
    std::string out = "graph " + std::string(g.is_general() ? "rcr_general" : "rcr") + " {\n";
    out += "  // n=" + std::to_string(g.n()) + " d=" + std::to_string(g.d()) +
           " r=" + std::to_string(g.r()) + "\n";
    for (const auto& l : lines) out += l + "\n";
    out += "}\n";
    return out;
}

}  // namespace rcr
