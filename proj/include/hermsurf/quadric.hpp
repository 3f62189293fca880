#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hermsurf/surface.hpp"

namespace hermsurf {

/// Monomial basis x_i x_j, 0 <= i <= j <= 3, in this fixed order.
inline constexpr std::array<std::pair<int, int>, 10> kMonomials = {{
    {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3},
}};

struct QuadraticForm {
    std::array<Elt, 10> c{};

    bool is_zero() const {
        for (Elt x : c)
            if (x != 0) return false;
        return true;
    }
    bool operator==(const QuadraticForm&) const = default;

    /// Base-q integer key, used for deduplication.
    std::uint64_t key(int q) const {
        std::uint64_t k = 0;
        for (Elt x : c) k = k * q + x;
        return k;
    }

    std::string to_string() const {
        static const char* names[10] = {"x0^2", "x0x1", "x0x2", "x0x3", "x1^2",
                                        "x1x2", "x1x3", "x2^2", "x2x3", "x3^2"};
        std::string s;
        for (int k = 0; k < 10; ++k) {
            if (c[k] == 0) continue;
            if (!s.empty()) s += " + ";
            if (c[k] != 1) s += std::to_string(int(c[k])) + "*";
            s += names[k];
        }
        return s.empty() ? "0" : s;
    }
};

/// Product of two linear forms a, b as a quadratic form.
inline QuadraticForm plane_product(const Field& f, const Coords& a, const Coords& b) {
    QuadraticForm out;
    for (int k = 0; k < 10; ++k) {
        const auto [i, j] = kMonomials[k];
        if (i == j)
            out.c[k] = f.mul(a[i], b[i]);
        else
            out.c[k] = f.add(f.mul(a[i], b[j]), f.mul(a[j], b[i]));
    }
    return out;
}

/// Per-point values of the 10 monomials on canonical representatives.
struct MonomialTable {
    std::vector<std::array<Elt, 10>> at;  // indexed by point id
};

inline MonomialTable build_monomial_table(const Pg3& g) {
    MonomialTable m;
    m.at.resize(g.n_points);
    for (int id = 0; id < g.n_points; ++id) {
        const Coords& p = g.pts[id];
        for (int k = 0; k < 10; ++k)
            m.at[id][k] = g.f.mul(p[kMonomials[k].first], p[kMonomials[k].second]);
    }
    return m;
}

inline Elt evaluate(const Field& f, const QuadraticForm& form, const std::array<Elt, 10>& mono) {
    Elt acc = 0;
    for (int k = 0; k < 10; ++k) acc = f.add(acc, f.mul(form.c[k], mono[k]));
    return acc;
}

inline Elt evaluate(const Pg3& g, const QuadraticForm& form, int point_id) {
    const Coords& p = g.pts[point_id];
    Elt acc = 0;
    for (int k = 0; k < 10; ++k) {
        const auto [i, j] = kMonomials[k];
        acc = g.f.add(acc, g.f.mul(form.c[k], g.f.mul(p[i], p[j])));
    }
    return acc;
}

inline PointSet zero_set(const Pg3& g, const MonomialTable& mt, const QuadraticForm& form) {
    PointSet z(g.n_points);
    for (int id = 0; id < g.n_points; ++id)
        if (evaluate(g.f, form, mt.at[id]) == 0) z.set(id);
    return z;
}

/// Classification of a nonzero quadratic form into the 15 geometric types:
///   rank 1: 1 tangent repeated plane, 2 non-tangent repeated plane
///   rank 2: 3/4/5 "line" (conjugate plane pair) by line class,
///           6/7/8 plane pair by (tangent,tangent)/(mixed)/(non,non)
///   rank 3: 9 cone without generator of X, 10 cone with 1 or 2
///   rank 4: 11..14 hyperbolic by max skew generators of X in one regulus, 15 elliptic
struct QuadricClass {
    int rank = 0;
    int type = 0;
    PointSet zeros;
    int n_zeros = 0;
    int section = 0;  // |Z ∩ X|

    // plane-pair / repeated-plane detail
    int plane1 = -1, plane2 = -1;
    bool plane1_tangent = false, plane2_tangent = false;
    LineClass pair_line_class = LineClass::Tangent;  // types 6-8 only

    int cone_generators = 0;              // types 9-10
    std::array<int, 2> regulus_gens{0, 0};  // types 11-14, descending
};

namespace detail {

/// Splits the generators of X contained in Z into the two reguli of a
/// hyperbolic quadric: same-regulus lines are skew, cross-regulus lines meet.
inline std::array<int, 2> split_generators_by_regulus(const HermitianSurface& s,
                                                      const std::vector<int>& gens_in_z) {
    if (gens_in_z.empty()) return {0, 0};
    int a = 0, b = 0;
    const int g0 = gens_in_z[0];
    for (int g : gens_in_z) {
        if (g == g0 || !s.gen_meets[g0][g])
            ++a;
        else
            ++b;
    }
    if (a < b) std::swap(a, b);
    return {a, b};
}

}  // namespace detail

inline QuadricClass classify(const HermitianSurface& s, const MonomialTable& mt,
                             const QuadraticForm& form) {
    if (form.is_zero()) throw std::invalid_argument("classify: zero form");
    const Pg3& g = *s.g;
    const int q = g.f.q;
    QuadricClass out;
    out.zeros = zero_set(g, mt, form);
    out.n_zeros = out.zeros.count();
    out.section = out.zeros.count_and(s.mask);

    const auto fail = [&](const char* what) {
        throw std::logic_error(std::string("classify: ") + what + " for form " + form.to_string() +
                               " with |Z| = " + std::to_string(out.n_zeros));
    };

    if (out.n_zeros == q + 1) {
        // rank-2 "line": pair of conjugate planes meeting in a rational line
        const auto ids = out.zeros.ids();
        const Line l = g.line_through(ids[0], ids[1]);
        if (g.line_mask(l) != out.zeros) fail("q+1 zeros not collinear");
        out.rank = 2;
        switch (s.classify_line(l)) {
            case LineClass::Tangent: out.type = 3; break;
            case LineClass::Secant: out.type = 4; break;
            case LineClass::Generator: out.type = 5; break;
        }
        return out;
    }

    if (out.n_zeros == q * q + q + 1) {
        for (int h = 0; h < g.n_points; ++h) {
            if (g.plane_pts[h] == out.zeros) {
                out.rank = 1;
                out.plane1 = out.plane2 = h;
                out.plane1_tangent = out.plane2_tangent = s.is_tangent_plane(h);
                out.type = out.plane1_tangent ? 1 : 2;
                return out;
            }
        }
        // quadric cone; the ruling lines in X are exactly the generators inside Z
        out.rank = 3;
        for (size_t i = 0; i < s.gen_masks.size(); ++i)
            if (out.zeros.contains_all(s.gen_masks[i])) ++out.cone_generators;
        if (out.cone_generators > 2) fail("cone with more than two generators of X");
        out.type = out.cone_generators == 0 ? 9 : 10;
        return out;
    }

    if (out.n_zeros == 2 * q * q + q + 1) {
        out.rank = 2;
        for (int h = 0; h < g.n_points && out.plane2 < 0; ++h) {
            if (!out.zeros.contains_all(g.plane_pts[h])) continue;
            (out.plane1 < 0 ? out.plane1 : out.plane2) = h;
        }
        if (out.plane1 < 0 || out.plane2 < 0) fail("plane pair without two component planes");
        out.plane1_tangent = s.is_tangent_plane(out.plane1);
        out.plane2_tangent = s.is_tangent_plane(out.plane2);
        const auto lids = (g.plane_pts[out.plane1] & g.plane_pts[out.plane2]).ids();
        out.pair_line_class = s.classify_line(g.line_through(lids[0], lids[1]));
        const int nt = int(out.plane1_tangent) + int(out.plane2_tangent);
        out.type = nt == 2 ? 6 : nt == 1 ? 7 : 8;
        return out;
    }

    if (out.n_zeros == (q + 1) * (q + 1)) {
        out.rank = 4;
        std::vector<int> gens_in_z;
        for (size_t i = 0; i < s.gen_masks.size(); ++i)
            if (out.zeros.contains_all(s.gen_masks[i])) gens_in_z.push_back(static_cast<int>(i));
        out.regulus_gens = detail::split_generators_by_regulus(s, gens_in_z);
        const int m = out.regulus_gens[0];
        out.type = m >= 3 ? 11 : m == 2 ? 12 : m == 1 ? 13 : 14;
        return out;
    }

    if (out.n_zeros == q * q + 1) {
        out.rank = 4;
        out.type = 15;
        return out;
    }

    fail("zero-set size outside the six signatures");
    return out;  // unreachable
}

struct Regulus {
    std::vector<Line> lines;
};

namespace detail {

/// All lines through z0 that lie entirely inside z.
inline std::vector<Line> lines_in_set_through(const Pg3& g, const PointSet& z, int z0) {
    std::vector<Line> out;
    for (int u : z.ids()) {
        if (u == z0) continue;
        Line l = g.line_through(z0, u);
        bool inside = true;
        for (int id : l.pts)
            if (!z.test(id)) { inside = false; break; }
        if (!inside) continue;
        bool seen = false;
        for (const Line& prev : out)
            if (prev.pts == l.pts) { seen = true; break; }
        if (!seen) out.push_back(std::move(l));
    }
    return out;
}

}  // namespace detail

/// The two complementary reguli of a hyperbolic quadric.  Every point of the
/// quadric lies on exactly one line of each regulus.
inline std::pair<Regulus, Regulus> reguli(const Pg3& g, const QuadricClass& qc) {
    if (qc.type < 11 || qc.type > 14)
        throw std::invalid_argument("reguli: not a hyperbolic quadric");
    const int z0 = qc.zeros.ids().front();
    auto through_z0 = detail::lines_in_set_through(g, qc.zeros, z0);
    if (through_z0.size() != 2) throw std::logic_error("reguli: point not on exactly two rulings");
    const Line& la = through_z0[0];
    const Line& lb = through_z0[1];

    auto other_ruling = [&](int p, const Line& avoid) -> Line {
        for (Line& l : detail::lines_in_set_through(g, qc.zeros, p))
            if (!(l == avoid)) return std::move(l);
        throw std::logic_error("reguli: missing second ruling line");
    };
    Regulus r1, r2;
    for (int p : lb.pts) r1.lines.push_back(p == z0 ? la : other_ruling(p, lb));
    for (int p : la.pts) r2.lines.push_back(p == z0 ? lb : other_ruling(p, la));
    return {std::move(r1), std::move(r2)};
}

/// Component planes and intersection line of a pair-of-distinct-planes quadric.
inline std::tuple<int, int, Line> decompose_plane_pair(const Pg3& g, const QuadricClass& qc) {
    if (qc.type < 6 || qc.type > 8)
        throw std::invalid_argument("decompose_plane_pair: not a pair of distinct planes");
    const auto lids = (g.plane_pts[qc.plane1] & g.plane_pts[qc.plane2]).ids();
    return {qc.plane1, qc.plane2, g.line_through(lids[0], lids[1])};
}

}  // namespace hermsurf
