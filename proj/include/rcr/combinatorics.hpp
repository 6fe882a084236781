#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace rcr {

using BigInt = boost::multiprecision::cpp_int;

/// ceil(log2 m) computed in integer arithmetic (m >= 1).
inline int ceil_log2(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("ceil_log2 needs m >= 1");
    return m == 1 ? 0 : std::bit_width(static_cast<std::uint64_t>(m - 1));
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt out = 1;
    for (int i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

namespace detail {

constexpr int kCompositionBudget = 24;

inline void check_composition_budget(int m) {
    if (m > kCompositionBudget)
        throw std::invalid_argument("composition enumeration is limited to m <= 24");
    if (m < 0) throw std::invalid_argument("composition enumeration needs m >= 0");
}

/// Counts k-compositions of m with every part in [1,g], by direct recursion
/// over the first part. Deliberately an enumerator, not a closed form.
inline std::int64_t count_compositions_rec(int m, int k, int g) {
    if (k == 0) return m == 0 ? 1 : 0;
    std::int64_t total = 0;
    int hi = std::min(g, m - (k - 1));  // leave room for k-1 further parts
    for (int part = 1; part <= hi; ++part) total += count_compositions_rec(m - part, k - 1, g);
    return total;
}

}  // namespace detail

/// Number of k-compositions of m (ordered positive parts summing to m) with
/// all parts at most g. With g >= m this equals C(m-1, k-1).
inline std::int64_t count_bounded_compositions(int m, int k, int g) {
    detail::check_composition_budget(m);
    if (k < 0 || g < 1) return 0;
    return detail::count_compositions_rec(m, k, g);
}

/// b_k: the number of [0,m]_k-sequences, i.e. gap-bounded increasing
/// schedules 0 = x_0 < x_1 < ... < x_k <= x_{k+1} = m with every gap at most
/// g = ceil(log2 m). Counted as k-compositions (x_k = m) plus
/// (k+1)-compositions (x_k < m), all parts <= g.
inline std::int64_t bk_count(int m, int k) {
    detail::check_composition_budget(m);
    int g = ceil_log2(m);
    return count_bounded_compositions(m, k, g) + count_bounded_compositions(m, k + 1, g);
}

struct AvrCheck {
    bool pass = false;
    BigInt lower;  ///< (1 - (2/(z+1))^g)(z+1)^m, exact: (z+1)^m - 2^g (z+1)^{m-g}
    BigInt sum;    ///< sum_{k=ceil(m/g)}^{m} b_k z^k
    BigInt upper;  ///< (z+1)^m
};

/// Check the two-sided bound on sum b_k z^k for integer z >= 2 and m >= 9,
/// by exact enumeration of all gap-bounded schedules.
inline AvrCheck avr_bound_check(int m, std::int64_t z) {
    if (m < 9) throw std::invalid_argument("avr_bound_check needs m >= 9");
    if (z < 2) throw std::invalid_argument("avr_bound_check needs z >= 2");
    detail::check_composition_budget(m);
    int g = ceil_log2(m);
    AvrCheck out;
    BigInt zp1 = z + 1;
    out.upper = pow(zp1, static_cast<unsigned>(m));
    out.lower = out.upper - pow(BigInt(2), static_cast<unsigned>(g)) * pow(zp1, static_cast<unsigned>(m - g));
    out.sum = 0;
    int kmin = (m + g - 1) / g;
    for (int k = kmin; k <= m; ++k) out.sum += BigInt(bk_count(m, k)) * pow(BigInt(z), static_cast<unsigned>(k));
    out.pass = (out.lower <= out.sum) && (out.sum <= out.upper);
    return out;
}

/// |V(z)|: over all c in Z_2^{d(z-1)} (coordinates c_{d+1}..c_{dz}, each
/// coordinate j sitting at ring position floor((j-1)/d)), count the vectors
/// whose schedule (0, sorted positions of set coordinates, z) has every gap
/// at most ceil(log2(z)^2).
inline std::int64_t vz_count(int d, int z) {
    if (z < 2) throw std::invalid_argument("vz_count needs z >= 2");
    int width = d * (z - 1);
    if (width > 24) throw std::invalid_argument("vz_count enumeration is limited to d(z-1) <= 24");
    double lg = std::log2(static_cast<double>(z));
    int g = static_cast<int>(std::ceil(lg * lg));
    std::int64_t total = 0;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << width); ++c) {
        int prev = 0;
        int max_gap = 0;
        for (std::uint64_t m = c; m;) {
            int b = std::countr_zero(m);  // coordinate j = b + d + 1; bits scan in position order
            m &= m - 1;
            int pos = (b + d) / d;  // floor((j-1)/d)
            max_gap = std::max(max_gap, pos - prev);
            prev = pos;
        }
        max_gap = std::max(max_gap, z - prev);
        if (max_gap <= g) ++total;
    }
    return total;
}

struct VxCheck {
    bool pass = false;
    std::int64_t count = 0;
    long double lower = 0;  ///< 2^{d(z-1)} (1 - 2 z^{1 - d log2 z})
};

inline VxCheck vx_bound_check(int d, int z) {
    VxCheck out;
    out.count = vz_count(d, z);
    long double lg = std::log2(static_cast<long double>(z));
    out.lower = std::pow(2.0L, static_cast<long double>(d) * (z - 1)) *
                (1.0L - 2.0L * std::pow(static_cast<long double>(z), 1.0L - d * lg));
    out.pass = static_cast<long double>(out.count) >= out.lower;
    return out;
}

}  // namespace rcr
