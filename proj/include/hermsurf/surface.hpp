#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hermsurf/pg3.hpp"

namespace hermsurf {

enum class LineClass { Tangent, Secant, Generator };

inline const char* to_string(LineClass c) {
    switch (c) {
        case LineClass::Tangent: return "tangent";
        case LineClass::Secant: return "secant";
        case LineClass::Generator: return "generator";
    }
    return "?";
}

/// The non-degenerate Hermitian surface X: sum of x_i^(t+1) = 0 in PG(3,q),
/// with |X| = t^5+t^3+t^2+1 points.  Holds the tangent-plane polarity and the
/// full generator list (lines contained in X), both precomputed.
struct HermitianSurface {
    const Pg3* g = nullptr;
    PointSet mask;              // over point ids
    std::vector<int> x_ids;     // points of X in enumeration order
    std::vector<int> x_pos;     // point id -> position in x_ids, or -1
    std::vector<int> tangent_plane_id;  // point id -> plane id (-1 off X)
    PointSet tangent_planes;    // over plane ids
    std::vector<Line> gens;
    std::vector<PointSet> gen_masks;
    std::vector<std::vector<bool>> gen_meets;  // pairwise intersection (not skew)

    int size() const { return static_cast<int>(x_ids.size()); }
    int t() const { return g->f.t; }

    bool contains(int point_id) const { return mask.test(point_id); }

    bool contains(const Coords& c) const {
        const Field& f = g->f;
        Elt s = 0;
        for (int i = 0; i < 4; ++i) s = f.add(s, f.norm(c[i]));
        return s == 0;
    }

    /// Plane with dual coordinates (p0^t, ..., p3^t); defined only on X.
    int tangent_plane_at(int point_id) const {
        if (!contains(point_id)) throw std::invalid_argument("tangent_plane_at: point not on X");
        return tangent_plane_id[point_id];
    }

    /// Decided by section size, cross-checked against the polarity image.
    bool is_tangent_plane(int plane_id) const {
        const int tt = g->f.t;
        const int sec = g->plane_pts[plane_id].count_and(mask);
        const bool by_size = sec == tt * tt * tt + tt * tt + 1;
        if (!by_size && sec != tt * tt * tt + 1)
            throw std::logic_error("is_tangent_plane: section size " + std::to_string(sec) +
                                   " is neither t^3+1 nor t^3+t^2+1");
        if (by_size != tangent_planes.test(plane_id))
            throw std::logic_error("is_tangent_plane: section size disagrees with polarity");
        return by_size;
    }

    LineClass classify_line(const Line& l) const {
        int c = 0;
        for (int id : l.pts)
            if (mask.test(id)) ++c;
        const int tt = g->f.t;
        if (c == 1) return LineClass::Tangent;
        if (c == tt + 1) return LineClass::Secant;
        if (c == g->f.q + 1) return LineClass::Generator;
        throw std::logic_error("classify_line: |l ∩ X| = " + std::to_string(c));
    }
};

inline HermitianSurface build_surface(const Pg3& g) {
    HermitianSurface s;
    s.g = &g;
    const Field& f = g.f;
    const int tt = f.t;
    s.mask = PointSet(g.n_points);
    s.x_pos.assign(g.n_points, -1);
    s.tangent_plane_id.assign(g.n_points, -1);
    s.tangent_planes = PointSet(g.n_points);

    for (int id = 0; id < g.n_points; ++id) {
        if (!s.contains(g.pts[id])) continue;
        s.x_pos[id] = static_cast<int>(s.x_ids.size());
        s.x_ids.push_back(id);
        s.mask.set(id);
        Coords d;
        for (int i = 0; i < 4; ++i) d[i] = f.conj(g.pts[id][i]);
        const int h = g.plane_id(d);
        s.tangent_plane_id[id] = h;
        s.tangent_planes.set(h);
    }
    const int expected = tt * tt * tt * tt * tt + tt * tt * tt + tt * tt + 1;
    if (s.size() != expected) throw std::logic_error("surface: wrong point count");
    if (s.tangent_planes.count() != expected)
        throw std::logic_error("surface: polarity is not injective");

    // Generators: lines through pairs of surface points lying entirely in X,
    // deduplicated by their two smallest ids.
    for (size_t i = 0; i < s.x_ids.size(); ++i) {
        for (size_t j = i + 1; j < s.x_ids.size(); ++j) {
            Line l = g.line_through(s.x_ids[i], s.x_ids[j]);
            if (l.pts[0] != s.x_ids[i] || l.pts[1] != s.x_ids[j]) continue;
            bool inside = true;
            for (int id : l.pts)
                if (!s.mask.test(id)) { inside = false; break; }
            if (inside) s.gens.push_back(std::move(l));
        }
    }
    s.gen_masks.reserve(s.gens.size());
    for (const Line& l : s.gens) s.gen_masks.push_back(g.line_mask(l));
    const size_t ng = s.gens.size();
    s.gen_meets.assign(ng, std::vector<bool>(ng, false));
    for (size_t i = 0; i < ng; ++i)
        for (size_t j = i + 1; j < ng; ++j) {
            const bool meet = s.gen_masks[i].count_and(s.gen_masks[j]) > 0;
            s.gen_meets[i][j] = meet;
            s.gen_meets[j][i] = meet;
        }
    return s;
}

}  // namespace hermsurf
