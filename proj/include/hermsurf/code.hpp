#pragma once

#include <cstdint>
#include <map>
#include <thread>
#include <vector>

#include "hermsurf/linalg.hpp"
#include "hermsurf/quadric.hpp"

namespace hermsurf {

/// Evaluation codeword: one symbol per point of X, taken on the canonical
/// W_i representative, in the surface's enumeration order.
struct Codeword {
    std::vector<Elt> sym;

    int weight() const {
        int w = 0;
        for (Elt s : sym)
            if (s != 0) ++w;
        return w;
    }
};

inline Codeword encode(const HermitianSurface& s, const QuadraticForm& form) {
    Codeword c;
    c.sym.reserve(s.x_ids.size());
    for (int id : s.x_ids) c.sym.push_back(evaluate(*s.g, form, id));
    return c;
}

/// 10 x |X| matrix whose rows are the encodings of the monomial basis.
inline std::vector<std::vector<Elt>> generator_matrix(const HermitianSurface& s) {
    std::vector<std::vector<Elt>> m;
    for (int k = 0; k < 10; ++k) {
        QuadraticForm f;
        f.c[k] = 1;
        m.push_back(encode(s, f).sym);
    }
    return m;
}

/// Total number of projective forms (first nonzero coefficient = 1):
/// (q^10 - 1)/(q - 1).
inline std::uint64_t projective_form_count(int q) {
    std::uint64_t n = 0, block = 1;
    for (int k = 0; k < 10; ++k) {
        n += block;
        block *= q;
    }
    return n;
}

/// The idx-th projective form in the fixed enumeration order: lead position
/// 0..9 with unit coefficient, trailing coefficients as base-q digits.
inline QuadraticForm projective_form_at(int q, std::uint64_t idx) {
    std::uint64_t block = 1;
    for (int k = 0; k < 9; ++k) block *= q;  // q^9 forms with lead 0
    int lead = 0;
    while (idx >= block) {
        idx -= block;
        block /= q;
        ++lead;
    }
    QuadraticForm f;
    f.c[lead] = 1;
    for (int k = 9; k > lead; --k) {
        f.c[k] = static_cast<Elt>(idx % q);
        idx /= q;
    }
    return f;
}

/// Runs fn(form, index) over a contiguous shard of the projective forms.
template <class Fn>
void for_each_projective_form(int q, int shard, int nshards, Fn&& fn) {
    const std::uint64_t n = projective_form_count(q);
    const std::uint64_t lo = n * shard / nshards;
    const std::uint64_t hi = n * (shard + 1) / nshards;
    for (std::uint64_t i = lo; i < hi; ++i) fn(projective_form_at(q, i), i);
}

struct WeightDistribution {
    int t = 0, q = 0;
    std::map<int, long long> counts;  // weight -> number of nonzero codewords

    long long total() const {
        long long s = 0;
        for (auto& [w, c] : counts) s += c;
        return s;
    }
    /// k-th smallest nonzero weight, 1-based.
    int kth_weight(int k) const {
        for (auto& [w, c] : counts) {
            if (w == 0 || c == 0) continue;
            if (--k == 0) return w;
        }
        throw std::out_of_range("kth_weight");
    }
};

/// Exhaustive weight distribution of C_2(X) at t=2: one scan over the
/// 349525 projective forms, each count multiplied by q-1.
inline WeightDistribution full_weight_distribution(const HermitianSurface& s, int shards = 1) {
    const Field& f = s.g->f;
    if (f.t != 2)
        throw std::invalid_argument(
            "full_weight_distribution: exhaustive mode requires t=2; use the stratified census");
    const int q = f.q;
    const int nx = s.size();

    // monomial rows restricted to X
    std::vector<std::array<Elt, 10>> xmono(nx);
    for (int i = 0; i < nx; ++i) {
        const Coords& p = s.g->pts[s.x_ids[i]];
        for (int k = 0; k < 10; ++k)
            xmono[i][k] = f.mul(p[kMonomials[k].first], p[kMonomials[k].second]);
    }

    std::vector<std::vector<long long>> partial(shards, std::vector<long long>(nx + 1, 0));
    auto work = [&](int shard) {
        auto& hist = partial[shard];
        for_each_projective_form(q, shard, shards, [&](const QuadraticForm& form, std::uint64_t) {
            int w = 0;
            for (int i = 0; i < nx; ++i)
                if (evaluate(f, form, xmono[i]) != 0) ++w;
            ++hist[w];
        });
    };
    if (shards == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int sh = 0; sh < shards; ++sh) pool.emplace_back(work, sh);
        for (auto& th : pool) th.join();
    }

    WeightDistribution wd;
    wd.t = f.t;
    wd.q = q;
    for (int sh = 0; sh < shards; ++sh)
        for (int w = 0; w <= nx; ++w)
            if (partial[sh][w]) wd.counts[w] += partial[sh][w] * (q - 1);
    return wd;
}

}  // namespace hermsurf
