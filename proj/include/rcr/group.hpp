#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcr/bitvec.hpp"
#include "rcr/params.hpp"

namespace rcr {

/// Element (a, x) of G = Z_2^n ⋊ Z_r: an n-bit vector plus a ring position.
/// The group operation is (a,x)(b,y) = (a + b*M^{dx}, x+y).
struct Vertex {
    std::uint64_t a = 0;
    int x = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline Vertex origin() { return Vertex{0, 0}; }

/// Build a vertex, reducing x modulo r and checking that a fits n bits.
inline Vertex make_vertex(std::uint64_t a, std::int64_t x, const Params& p) {
    if (a & ~word_mask(p.n))
        throw std::invalid_argument("bit vector does not fit n=" + std::to_string(p.n));
    return Vertex{a, static_cast<int>(((x % p.r) + p.r) % p.r)};
}

inline void check_fits(const Params& p, Vertex v) {
    if (v.a & ~word_mask(p.n))
        throw std::invalid_argument("vertex bit vector does not fit n=" + std::to_string(p.n));
}

inline Vertex multiply(const Params& p, Vertex u, Vertex v) {
    check_fits(p, u);
    check_fits(p, v);
    return Vertex{u.a ^ shift(v.a, static_cast<std::int64_t>(p.d) * u.x, p.n),
                  (u.x + v.x) % p.r};
}

/// (a,x)^{-1} = (a*M^{-dx}, r-x); over F_2 negation is the identity.
inline Vertex inverse(const Params& p, Vertex u) {
    check_fits(p, u);
    return Vertex{shift(u.a, -static_cast<std::int64_t>(p.d) * u.x, p.n), (p.r - u.x) % p.r};
}

/// D(x) = {i + dx mod n : 1 <= i <= d}, ascending, representatives in {1..n}.
inline std::vector<int> direction_set(const Params& p, int x) {
    std::vector<int> out;
    out.reserve(p.d);
    for (int i = 1; i <= p.d; ++i)
        out.push_back(coord_index(i + static_cast<std::int64_t>(p.d) * x, p.n));
    std::sort(out.begin(), out.end());
    return out;
}

/// Membership test j ∈ D(x) without materialising the set.
inline bool in_direction_set(const Params& p, int j, int x) {
    int i = coord_index(j - static_cast<std::int64_t>(p.d) * x, p.n);
    return i <= p.d;
}

/// D^-_x = D(-x) = {i - dx mod n : 1 <= i <= d}, used by Q_n^-(d,r).
/// No divisibility is required here.
inline std::vector<int> direction_set_minus(int n, int d, int x) {
    std::vector<int> out;
    out.reserve(d);
    for (int i = 1; i <= d; ++i)
        out.push_back(coord_index(i - static_cast<std::int64_t>(d) * x, n));
    std::sort(out.begin(), out.end());
    return out;
}

inline bool in_direction_set_minus(int n, int d, int j, int x) {
    int i = coord_index(j + static_cast<std::int64_t>(d) * x, n);
    return i <= d;
}

/// Connection set S = {(0,1), (0,r-1), (e_1,0), ..., (e_d,0)}; |S| = d+2,
/// closed under inverses, identity excluded.
inline std::vector<Vertex> connection_set(const Params& p) {
    std::vector<Vertex> s;
    s.reserve(p.d + 2);
    s.push_back(Vertex{0, 1});
    s.push_back(Vertex{0, p.r - 1});
    for (int i = 1; i <= p.d; ++i) s.push_back(Vertex{unit_vec(i, p.n), 0});
    return s;
}

// Textual encoding "a1a2...an@x": bits left to right are coordinates 1..n,
// x in decimal. Used by all CLI input and output.

inline std::string encode(Vertex v, int n) {
    std::string s(static_cast<size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((v.a >> i) & 1) s[static_cast<size_t>(i)] = '1';
    return s + "@" + std::to_string(v.x);
}

inline Vertex decode(const std::string& text, int n, int r) {
    auto at = text.find('@');
    if (at == std::string::npos)
        throw std::invalid_argument("vertex encoding must look like \"bits@x\": " + text);
    if (at != static_cast<size_t>(n))
        throw std::invalid_argument("vertex encoding needs exactly " + std::to_string(n) +
                                    " bits before '@': " + text);
    std::uint64_t a = 0;
    for (int i = 0; i < n; ++i) {
        char c = text[static_cast<size_t>(i)];
        if (c == '1')
            a |= std::uint64_t{1} << i;
        else if (c != '0')
            throw std::invalid_argument("vertex bits must be 0/1: " + text);
    }
    std::size_t used = 0;
    long x = 0;
    try {
        x = std::stol(text.substr(at + 1), &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad ring position in vertex encoding: " + text);
    }
    if (used != text.size() - at - 1 || x < 0)
        throw std::invalid_argument("bad ring position in vertex encoding: " + text);
    return Vertex{a, static_cast<int>(x % r)};
}

}  // namespace rcr
