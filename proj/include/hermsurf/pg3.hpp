#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hermsurf/gf.hpp"

namespace hermsurf {

/// Fixed-universe bitset over point (or plane) ids.  Sized at runtime because
/// the universe depends on q; the census lives on these.
struct PointSet {
    std::vector<std::uint64_t> w;
    int n = 0;

    PointSet() = default;
    explicit PointSet(int nbits) : w((nbits + 63) / 64, 0), n(nbits) {}

    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void clear() { for (auto& x : w) x = 0; }

    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    int count_and(const PointSet& o) const {
        int c = 0;
        for (size_t k = 0; k < w.size(); ++k) c += std::popcount(w[k] & o.w[k]);
        return c;
    }
    /// True iff o is a subset of *this.
    bool contains_all(const PointSet& o) const {
        for (size_t k = 0; k < w.size(); ++k)
            if (o.w[k] & ~w[k]) return false;
        return true;
    }
    PointSet& operator&=(const PointSet& o) {
        for (size_t k = 0; k < w.size(); ++k) w[k] &= o.w[k];
        return *this;
    }
    PointSet& operator|=(const PointSet& o) {
        for (size_t k = 0; k < w.size(); ++k) w[k] |= o.w[k];
        return *this;
    }
    friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
    friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
    bool operator==(const PointSet&) const = default;

    std::vector<int> ids() const {
        std::vector<int> out;
        out.reserve(count());
        for (int i = 0; i < n; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }
};

using Coords = std::array<Elt, 4>;

/// A line of PG(3,q) as its sorted list of q+1 point ids.
struct Line {
    std::vector<int> pts;
    bool operator==(const Line&) const = default;
};

/// PG(3,q): canonical points (first nonzero coordinate 1), dense ids in
/// W0,W1,W2,W3 order, planes enumerated by the same canonical form of their
/// dual coordinates, and a precomputed plane -> point-set table.
struct Pg3 {
    Field f;
    int n_points = 0;  // q^3+q^2+q+1; also the number of planes
    std::vector<Coords> pts;        // id -> canonical coordinates
    std::vector<int> id_by_code;    // canonical base-q code -> id (others -1)
    std::vector<PointSet> plane_pts;  // plane id -> incident point set

    int q() const { return f.q; }

    static int code_of(const Coords& c, int q) {
        return ((c[0] * q + c[1]) * q + c[2]) * q + c[3];
    }

    Coords normalize(Coords c) const {
        int lead = -1;
        for (int i = 0; i < 4; ++i)
            if (c[i] != 0) { lead = i; break; }
        if (lead < 0) throw std::invalid_argument("normalize: all-zero coordinate vector");
        const Elt s = f.inv(c[lead]);
        for (int i = 0; i < 4; ++i) c[i] = f.mul(c[i], s);
        return c;
    }

    int point_id(const Coords& raw) const { return id_by_code[code_of(normalize(raw), f.q)]; }
    /// Same canonicalization for dual coordinates.
    int plane_id(const Coords& raw) const { return point_id(raw); }

    /// Bilinear pairing sum(d_i * x_i) used for point-plane incidence.
    Elt pairing(const Coords& d, const Coords& x) const {
        Elt s = 0;
        for (int i = 0; i < 4; ++i) s = f.add(s, f.mul(d[i], x[i]));
        return s;
    }

    Line line_through(int a, int b) const {
        if (a == b) throw std::invalid_argument("line_through: equal points");
        const Coords& pa = pts[a];
        const Coords& pb = pts[b];
        Line l;
        l.pts.reserve(f.q + 1);
        l.pts.push_back(a);
        for (int s = 0; s < f.q; ++s) {
            Coords c;
            for (int i = 0; i < 4; ++i) c[i] = f.add(f.mul(static_cast<Elt>(s), pa[i]), pb[i]);
            l.pts.push_back(id_by_code[code_of(normalize(c), f.q)]);
        }
        std::sort(l.pts.begin(), l.pts.end());
        l.pts.erase(std::unique(l.pts.begin(), l.pts.end()), l.pts.end());
        if (static_cast<int>(l.pts.size()) != f.q + 1)
            throw std::logic_error("line_through: wrong point count");
        return l;
    }

    /// The q+1 planes through a line; their union is the whole space.
    std::vector<int> planes_through_line(const Line& l) const {
        std::vector<int> out;
        const int a = l.pts[0], b = l.pts[1];
        for (int h = 0; h < n_points; ++h)
            if (plane_pts[h].test(a) && plane_pts[h].test(b)) out.push_back(h);
        if (static_cast<int>(out.size()) != f.q + 1)
            throw std::logic_error("planes_through_line: wrong plane count");
        return out;
    }

    /// All (q^2+1)(q^2+q+1) lines, deduplicated: a line is emitted from the
    /// pair of its two smallest point ids.
    std::vector<Line> all_lines() const {
        std::vector<Line> out;
        for (int a = 0; a < n_points; ++a)
            for (int b = a + 1; b < n_points; ++b) {
                Line l = line_through(a, b);
                if (l.pts[0] == a && l.pts[1] == b) out.push_back(std::move(l));
            }
        return out;
    }

    PointSet line_mask(const Line& l) const {
        PointSet m(n_points);
        for (int id : l.pts) m.set(id);
        return m;
    }
};

inline Pg3 build_geometry(Field field) {
    Pg3 g;
    g.f = std::move(field);
    const int q = g.f.q;
    g.n_points = q * q * q + q * q + q + 1;
    g.pts.reserve(g.n_points);
    g.id_by_code.assign(q * q * q * q, -1);

    // W0 first (x0=1, rest free), then W1, W2, W3.
    for (int lead = 0; lead < 4; ++lead) {
        const int nfree = 3 - lead;
        int total = 1;
        for (int i = 0; i < nfree; ++i) total *= q;
        for (int v = 0; v < total; ++v) {
            Coords c{0, 0, 0, 0};
            c[lead] = 1;
            int rest = v;
            for (int i = 3; i > lead; --i) {
                c[i] = static_cast<Elt>(rest % q);
                rest /= q;
            }
            const int id = static_cast<int>(g.pts.size());
            g.pts.push_back(c);
            g.id_by_code[Pg3::code_of(c, q)] = id;
        }
    }

    g.plane_pts.assign(g.n_points, PointSet(g.n_points));
    for (int h = 0; h < g.n_points; ++h) {
        const Coords& d = g.pts[h];
        for (int id = 0; id < g.n_points; ++id)
            if (g.pairing(d, g.pts[id]) == 0) g.plane_pts[h].set(id);
    }
    return g;
}

}  // namespace hermsurf
