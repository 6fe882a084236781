#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rcr {

/// Thrown when an operation would exceed its configured enumeration budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parameters of the family Q_n(d,r): the n-cube with every vertex replaced
/// by an r-ring and d cube edges attached per ring position. Construction
/// enforces the Cayley condition dr ≡ 0 (mod n) together with
/// 2 <= n <= 64, 1 <= d <= n and r >= 3 (r = 1 is the plain hypercube and
/// r = 2 has parallel ring edges; both are rejected).
struct Params {
    int n = 0;  ///< cube dimension (bit-vector length)
    int d = 0;  ///< cube degree (bits flippable per ring position)
    int r = 0;  ///< ring length

    /// ceil(n/d): number of consecutive ring positions whose direction sets
    /// cover every cube direction.
    int cover = 0;
    /// cover*d - n, in [0, d-1]; nonzero exactly when d does not divide n.
    int slack = 0;

    static Params create(int n, int d, int r) {
        if (n < 2)
            throw std::invalid_argument("Q_n(d,r): n must be >= 2");
        if (n > 64)
            throw std::invalid_argument("Q_n(d,r): n > 64 is unsupported (bit vectors are one machine word)");
        if (d < 1 || d > n)
            throw std::invalid_argument("Q_n(d,r): d must satisfy 1 <= d <= n");
        if (r < 3)
            throw std::invalid_argument("Q_n(d,r): r must be >= 3");
        if ((static_cast<std::int64_t>(d) * r) % n != 0)
            throw std::invalid_argument("Q_n(d,r): dr must be divisible by n (got d*r=" +
                                        std::to_string(static_cast<std::int64_t>(d) * r) +
                                        ", n=" + std::to_string(n) + ")");
        Params p;
        p.n = n;
        p.d = d;
        p.r = r;
        p.cover = (n + d - 1) / d;
        p.slack = p.cover * d - n;
        return p;
    }

    /// dr/n: how many times each cube direction meets any single ring.
    std::int64_t multiplicity() const { return static_cast<std::int64_t>(d) * r / n; }

    /// True in the dr = n regime (each direction meets a ring exactly once).
    bool single_incidence() const { return multiplicity() == 1; }

    bool divides_n() const { return n % d == 0; }

    /// 2^n * r. Only callable when the count fits an int64.
    std::int64_t vertex_count() const {
        if (n > 40)
            throw std::overflow_error("vertex count 2^n*r does not fit an enumerable range for n > 40");
        return (std::int64_t{1} << n) * r;
    }

    std::string name() const {
        return "Q_" + std::to_string(n) + "(" + std::to_string(d) + "," + std::to_string(r) + ")";
    }

    friend bool operator==(const Params&, const Params&) = default;
};

/// Parameters of the general family Q_n^-(d,r); the divisibility condition is
/// not required, so the graph need not be vertex-transitive (or connected).
struct GeneralParams {
    int n = 0;
    int d = 0;
    int r = 0;

    static GeneralParams create(int n, int d, int r) {
        if (n < 2 || n > 64)
            throw std::invalid_argument("Q_n^-(d,r): n must satisfy 2 <= n <= 64");
        if (d < 1 || d > n)
            throw std::invalid_argument("Q_n^-(d,r): d must satisfy 1 <= d <= n");
        if (r < 3)
            throw std::invalid_argument("Q_n^-(d,r): r must be >= 3");
        return GeneralParams{n, d, r};
    }

    bool cayley_condition() const { return (static_cast<std::int64_t>(d) * r) % n == 0; }
    /// Q_n^-(d,r) is connected iff dr >= n.
    bool connected_by_theory() const { return static_cast<std::int64_t>(d) * r >= n; }

    std::int64_t vertex_count() const {
        if (n > 40)
            throw std::overflow_error("vertex count 2^n*r does not fit an enumerable range for n > 40");
        return (std::int64_t{1} << n) * r;
    }

    std::string name() const {
        return "Q^-_" + std::to_string(n) + "(" + std::to_string(d) + "," + std::to_string(r) + ")";
    }
};

}  // namespace rcr
