#pragma once

// Test-only oracles, independent of the library's table construction path.

#include <set>
#include <vector>

#include "hermsurf/gf.hpp"
#include "hermsurf/pg3.hpp"

namespace oracle {

// Polynomial arithmetic over GF(p)[x]/(modulus), written against int vectors
// with explicit long division so it shares no code with the table builder.
struct PolyField {
    int p;
    std::vector<int> mod;  // lowest degree first, monic

    int deg() const { return static_cast<int>(mod.size()) - 1; }

    std::vector<int> from_index(int idx) const {
        std::vector<int> c(deg(), 0);
        for (int i = 0; i < deg(); ++i) {
            c[i] = idx % p;
            idx /= p;
        }
        return c;
    }

    int to_index(const std::vector<int>& c) const {
        int idx = 0;
        for (int i = deg() - 1; i >= 0; --i) idx = idx * p + c[i];
        return idx;
    }

    int add(int a, int b) const {
        auto ca = from_index(a), cb = from_index(b);
        for (int i = 0; i < deg(); ++i) ca[i] = (ca[i] + cb[i]) % p;
        return to_index(ca);
    }

    int mul(int a, int b) const {
        auto ca = from_index(a), cb = from_index(b);
        std::vector<int> prod(2 * deg() - 1, 0);
        for (int i = 0; i < deg(); ++i)
            for (int j = 0; j < deg(); ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
        // long division by the monic modulus
        for (int k = static_cast<int>(prod.size()) - 1; k >= deg(); --k) {
            int c = prod[k];
            if (!c) continue;
            for (int i = 0; i <= deg(); ++i) {
                int& slot = prod[k - deg() + i];
                slot = ((slot - c * mod[i]) % p + p * p) % p;
            }
        }
        prod.resize(deg());
        return to_index(prod);
    }
};

// Distinct lines of PG(3,q) as sorted point-id vectors, deduplicated through
// a set rather than the library's smallest-pair rule.
inline std::set<std::vector<int>> all_line_keys(const hermsurf::Pg3& g) {
    std::set<std::vector<int>> keys;
    for (int a = 0; a < g.n_points; ++a)
        for (int b = a + 1; b < g.n_points; ++b) keys.insert(g.line_through(a, b).pts);
    return keys;
}

}  // namespace oracle
