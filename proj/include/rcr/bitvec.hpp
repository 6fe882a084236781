#pragma once

#include <bit>
#include <cstdint>

namespace rcr {

// Bit vectors over F_2^n packed into a single word. Coordinate i is
// 1-indexed with subscripts reduced modulo n into {1..n}, matching the
// convention e_0 = e_n, e_{n+1} = e_1; coordinate i lives at word bit i-1.

inline std::uint64_t word_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Reduce a 1-indexed coordinate subscript into {1..n}.
inline int coord_index(std::int64_t i, int n) {
    int m = static_cast<int>(i % n);
    return m <= 0 ? m + n : m;
}

/// e_i (subscript taken modulo n).
inline std::uint64_t unit_vec(std::int64_t i, int n) {
    return std::uint64_t{1} << (coord_index(i, n) - 1);
}

inline bool get_coord(std::uint64_t a, std::int64_t i, int n) {
    return (a >> (coord_index(i, n) - 1)) & 1;
}

inline int hamming(std::uint64_t a) { return std::popcount(a); }

/// a * M^j where M is the coordinate cycle e_i -> e_{i+1}. The result has
/// coordinate i+j equal to coordinate i of a; shift(a,0) = a and
/// shift(shift(a,i),j) = shift(a,i+j).
inline std::uint64_t shift(std::uint64_t a, std::int64_t j, int n) {
    int s = static_cast<int>(((j % n) + n) % n);
    if (s == 0) return a;
    return ((a << s) | (a >> (n - s))) & word_mask(n);
}

/// Coordinate reversal (a_1,...,a_n) -> (a_n,...,a_1).
inline std::uint64_t reverse_coords(std::uint64_t a, int n) {
    std::uint64_t b = 0;
    for (int i = 0; i < n; ++i)
        if ((a >> i) & 1) b |= std::uint64_t{1} << (n - 1 - i);
    return b;
}

}  // namespace rcr
