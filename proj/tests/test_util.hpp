#pragma once

#include "ec/powser.hpp"
#include "ec/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace ec::testing {

inline std::vector<Rational> Q(std::initializer_list<long> values) {
    std::vector<Rational> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

inline std::vector<Integer> Z(std::initializer_list<long> values) {
    std::vector<Integer> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

inline Series S(std::initializer_list<long> values, int order) { return Series(Q(values), order); }

inline std::vector<Rational> head(const Series& s, int count) {
    return std::vector<Rational>(s.coeffs().begin(), s.coeffs().begin() + count);
}

// Iterates all permutations of 0..n-1 and calls f on each.
template <typename F>
void for_each_permutation(int n, F&& f) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        f(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

// Brute-force tiler of a cell set (row-major bitmap) by dominoes and, optionally, monomers.
// Always fills the first empty cell in row-major order.
inline long count_tilings(const std::vector<std::vector<bool>>& cells, bool monomers) {
    int rows = static_cast<int>(cells.size());
    int cols = rows ? static_cast<int>(cells[0].size()) : 0;
    std::vector<std::vector<bool>> filled(rows, std::vector<bool>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) filled[r][c] = !cells[r][c];
    auto rec = [&](auto&& self) -> long {
        int r0 = -1, c0 = -1;
        for (int r = 0; r < rows && r0 < 0; ++r)
            for (int c = 0; c < cols; ++c)
                if (!filled[r][c]) {
                    r0 = r;
                    c0 = c;
                    break;
                }
        if (r0 < 0) return 1;
        long total = 0;
        filled[r0][c0] = true;
        if (monomers) total += self(self);
        if (c0 + 1 < cols && !filled[r0][c0 + 1]) {
            filled[r0][c0 + 1] = true;
            total += self(self);
            filled[r0][c0 + 1] = false;
        }
        if (r0 + 1 < rows && !filled[r0 + 1][c0]) {
            filled[r0 + 1][c0] = true;
            total += self(self);
            filled[r0 + 1][c0] = false;
        }
        filled[r0][c0] = false;
        return total;
    };
    return rec(rec);
}

inline long count_rectangle_tilings(int rows, int cols, bool monomers) {
    return count_tilings(std::vector<std::vector<bool>>(rows, std::vector<bool>(cols, true)), monomers);
}

constexpr std::uint64_t kDefaultSeed = 20240601;

}  // namespace ec::testing

namespace ec {
inline void PrintTo(const Series& s, std::ostream* os) { *os << s.to_string(); }
inline void PrintTo(const Poly& p, std::ostream* os) { *os << p.to_string(); }
}  // namespace ec
