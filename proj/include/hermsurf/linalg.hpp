#pragma once

#include <vector>

#include "hermsurf/gf.hpp"

namespace hermsurf {

/// Row-reduces m in place and returns its rank.
inline int gf_rank(const Field& f, std::vector<std::vector<Elt>>& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const Elt s = f.inv(m[rank][c]);
        for (int j = c; j < cols; ++j) m[rank][j] = f.mul(m[rank][j], s);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const Elt factor = m[r][c];
            for (int j = c; j < cols; ++j)
                m[r][j] = f.sub(m[r][j], f.mul(factor, m[rank][j]));
        }
        ++rank;
    }
    return rank;
}

/// Basis of the right nullspace of m (vectors v with m v = 0).
inline std::vector<std::vector<Elt>> gf_nullspace(const Field& f, std::vector<std::vector<Elt>> m) {
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    const int rank = gf_rank(f, m);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    for (int r = 0; r < rank; ++r) {
        for (int c = 0; c < cols; ++c)
            if (m[r][c] != 0) {
                pivot_col.push_back(c);
                is_pivot[c] = true;
                break;
            }
    }
    std::vector<std::vector<Elt>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elt> v(cols, 0);
        v[free] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = f.neg(m[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hermsurf
