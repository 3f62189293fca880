#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hermsurf {

/// Dense index of a field element, 0 = additive identity, 1 = multiplicative identity.
using Elt = std::uint8_t;

/// GF(q) with q = t^2 for t in {2,3,4,5}, built as GF(p)[x]/(f) with a fixed
/// defining polynomial per q.  All arithmetic is table lookups; the tables are
/// immutable after construction and safe to share across threads.
struct Field {
    int t = 0;  // subfield order
    int q = 0;  // field order, t^2
    int p = 0;  // characteristic
    int ext_degree = 0;  // degree of GF(q) over GF(p)
    std::string poly;    // defining polynomial, recorded in report headers

    std::vector<Elt> add_tab;   // q*q
    std::vector<Elt> mul_tab;   // q*q
    std::vector<Elt> neg_tab;   // q
    std::vector<Elt> inv_tab;   // q, inv_tab[0] unused
    std::vector<Elt> conj_tab;  // a -> a^t
    std::vector<Elt> norm_tab;  // a -> a^(t+1), lands in GF(t)

    Elt add(Elt a, Elt b) const { return add_tab[a * q + b]; }
    Elt sub(Elt a, Elt b) const { return add_tab[a * q + neg_tab[b]]; }
    Elt mul(Elt a, Elt b) const { return mul_tab[a * q + b]; }
    Elt neg(Elt a) const { return neg_tab[a]; }
    Elt conj(Elt a) const { return conj_tab[a]; }
    Elt norm(Elt a) const { return norm_tab[a]; }
    bool in_subfield(Elt a) const { return conj_tab[a] == a; }

    Elt inv(Elt a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return inv_tab[a];
    }

    Elt pow(Elt a, int e) const {
        Elt r = 1;
        for (int i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }
};

namespace detail {

// Coefficient vectors over GF(p), lowest degree first.
inline std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                                     const std::vector<int>& modulus, int p) {
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    const int d = static_cast<int>(modulus.size()) - 1;  // modulus is monic
    for (int k = static_cast<int>(prod.size()) - 1; k >= d; --k) {
        const int c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (int i = 0; i < d; ++i)
            prod[k - d + i] = ((prod[k - d + i] - c * modulus[i]) % p + p * p) % p;
    }
    prod.resize(d);
    return prod;
}

inline int poly_to_index(const std::vector<int>& c, int p) {
    int idx = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) idx = idx * p + c[i];
    return idx;
}

inline std::vector<int> index_to_poly(int idx, int p, int d) {
    std::vector<int> c(d, 0);
    for (int i = 0; i < d; ++i) {
        c[i] = idx % p;
        idx /= p;
    }
    return c;
}

}  // namespace detail

/// Builds GF(t^2).  Defining polynomials:
///   t=2: x^2+x+1 over GF(2);  t=3: x^2+1 over GF(3);
///   t=4: x^4+x+1 over GF(2);  t=5: x^2+2 over GF(5).
inline Field build_field(int t) {
    Field f;
    std::vector<int> mod;
    switch (t) {
        case 2: f.p = 2; mod = {1, 1, 1};       f.poly = "x^2+x+1"; break;
        case 3: f.p = 3; mod = {1, 0, 1};       f.poly = "x^2+1";   break;
        case 4: f.p = 2; mod = {1, 1, 0, 0, 1}; f.poly = "x^4+x+1"; break;
        case 5: f.p = 5; mod = {2, 0, 1};       f.poly = "x^2+2";   break;
        default:
            throw std::invalid_argument("unsupported subfield order t=" + std::to_string(t) +
                                        " (supported: 2, 3, 4, 5)");
    }
    f.t = t;
    f.q = t * t;
    f.ext_degree = static_cast<int>(mod.size()) - 1;

    const int q = f.q, p = f.p, d = f.ext_degree;
    f.add_tab.assign(q * q, 0);
    f.mul_tab.assign(q * q, 0);
    f.neg_tab.assign(q, 0);
    f.inv_tab.assign(q, 0);
    f.conj_tab.assign(q, 0);
    f.norm_tab.assign(q, 0);

    for (int a = 0; a < q; ++a) {
        const auto pa = detail::index_to_poly(a, p, d);
        std::vector<int> na(d);
        for (int i = 0; i < d; ++i) na[i] = (p - pa[i]) % p;
        f.neg_tab[a] = static_cast<Elt>(detail::poly_to_index(na, p));
        for (int b = 0; b < q; ++b) {
            const auto pb = detail::index_to_poly(b, p, d);
            std::vector<int> s(d);
            for (int i = 0; i < d; ++i) s[i] = (pa[i] + pb[i]) % p;
            f.add_tab[a * q + b] = static_cast<Elt>(detail::poly_to_index(s, p));
            f.mul_tab[a * q + b] =
                static_cast<Elt>(detail::poly_to_index(detail::poly_mul_mod(pa, pb, mod, p), p));
        }
    }
    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b) {
            if (f.mul_tab[a * q + b] == 1) {
                f.inv_tab[a] = static_cast<Elt>(b);
                break;
            }
        }
        if (f.inv_tab[a] == 0) throw std::runtime_error("field construction: non-invertible element");
    }
    for (int a = 0; a < q; ++a) {
        f.conj_tab[a] = f.pow(static_cast<Elt>(a), t);
        f.norm_tab[a] = f.mul(static_cast<Elt>(a), f.conj_tab[a]);
    }

    // Sanity: conjugation is an involution fixing exactly GF(t), norms land in GF(t).
    int fixed = 0;
    for (int a = 0; a < q; ++a) {
        if (f.conj(f.conj(static_cast<Elt>(a))) != a)
            throw std::runtime_error("field construction: conjugation is not involutive");
        if (f.in_subfield(static_cast<Elt>(a))) ++fixed;
        if (f.conj(f.norm_tab[a]) != f.norm_tab[a])
            throw std::runtime_error("field construction: norm outside the subfield");
    }
    if (fixed != t) throw std::runtime_error("field construction: wrong subfield size");
    return f;
}

}  // namespace hermsurf
