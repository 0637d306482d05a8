#pragma once

// Test-only reference implementations. Deliberately naive: dense mpq_class
// Gaussian elimination, brute-force rotations, explicit path enumeration.

#include <gmpxx.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<mpq_class>>;

inline int dense_rank(Dense m) {
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[rank][c];
            for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline Dense random_dense(std::mt19937& rng, int rows, int cols, int density_pct, int spread) {
    std::uniform_int_distribution<int> coin(0, 99), val(-spread, spread);
    Dense m(rows, std::vector<mpq_class>(cols, 0));
    for (auto& row : m)
        for (auto& x : row)
            if (coin(rng) < density_pct) x = val(rng);
    return m;
}

// all rotations of a name sequence; the least one
inline std::vector<std::string> least_rotation(const std::vector<std::string>& w) {
    std::vector<std::string> best = w;
    for (std::size_t k = 0; k < w.size(); ++k) {
        std::vector<std::string> r(w.begin() + k, w.end());
        r.insert(r.end(), w.begin(), w.begin() + k);
        best = std::min(best, r);
    }
    return best;
}

}  // namespace oracle
