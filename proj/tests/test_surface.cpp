#include <catch_amalgamated.hpp>

#include "hermsurf/surface.hpp"
#include "oracles.hpp"

using namespace hermsurf;

namespace {
struct Space {
    Pg3 g;
    HermitianSurface s;
    explicit Space(int t) : g(build_geometry(build_field(t))), s(build_surface(g)) {}
};
const Space& sp4() {
    static const Space sp(2);
    return sp;
}
const Space& sp9() {
    static const Space sp(3);
    return sp;
}
}  // namespace

TEST_CASE("surface cardinality t^5+t^3+t^2+1") {
    CHECK(sp4().s.size() == 45);
    CHECK(sp9().s.size() == 280);
}

TEST_CASE("membership") {
    const auto& [g, s] = sp4();
    CHECK(s.contains(g.point_id({0, 1, 1, 0})));
    CHECK_FALSE(s.contains(g.point_id({1, 0, 0, 0})));
    int n = 0;
    for (int id = 0; id < g.n_points; ++id)
        if (s.contains(id)) ++n;
    CHECK(n == 45);
}

TEST_CASE("tangent planes") {
    const auto& [g, s] = sp4();
    // plane x0+x1=0 is tangent at (1:1:0:0), section t^3+t^2+1 = 13
    const int p = g.point_id({1, 1, 0, 0});
    const int h = s.tangent_plane_at(p);
    CHECK(h == g.plane_id({1, 1, 0, 0}));
    CHECK(g.plane_pts[h].count_and(s.mask) == 13);
    CHECK(s.is_tangent_plane(h));
    // plane x0=0 is non-tangent: 9 points
    const int h2 = g.plane_id({1, 0, 0, 0});
    CHECK(g.plane_pts[h2].count_and(s.mask) == 9);
    CHECK_FALSE(s.is_tangent_plane(h2));
    CHECK_THROWS_AS(s.tangent_plane_at(g.point_id({1, 0, 0, 0})), std::invalid_argument);
}

TEST_CASE("polarity is injective and incident; exactly |X| tangent planes") {
    for (const Space* sp : {&sp4(), &sp9()}) {
        const auto& [g, s] = *sp;
        CHECK(s.tangent_planes.count() == s.size());
        int tangent = 0;
        for (int h = 0; h < g.n_points; ++h)
            if (s.is_tangent_plane(h)) ++tangent;
        CHECK(tangent == s.size());
        for (int id : s.x_ids) CHECK(g.plane_pts[s.tangent_plane_at(id)].test(id));
    }
}

TEST_CASE("line trichotomy at t=2") {
    const auto& [g, s] = sp4();
    // generator: points (b:a:a:b) satisfy the surface equation in char 2
    const Line gen = g.line_through(g.point_id({0, 1, 1, 0}), g.point_id({1, 0, 0, 1}));
    CHECK(s.classify_line(gen) == LineClass::Generator);
    // secant x0=x1=0 meets X at (0:0:1:b) with b^3 = 1
    const Line sec = g.line_through(g.point_id({0, 0, 1, 0}), g.point_id({0, 0, 0, 1}));
    CHECK(s.classify_line(sec) == LineClass::Secant);
    int n_in = 0;
    for (int id : sec.pts)
        if (s.mask.test(id)) {
            const Coords& c = g.pts[id];
            CHECK(c[0] == 0);
            CHECK(c[1] == 0);
            CHECK(c[2] == 1);
            CHECK(g.f.norm(c[3]) == 1);  // b^3 = 1, the cube roots of unity
            ++n_in;
        }
    CHECK(n_in == 3);

    int tangents = 0, secants = 0, generators = 0;
    for (const Line& l : g.all_lines()) {
        switch (s.classify_line(l)) {
            case LineClass::Tangent: ++tangents; break;
            case LineClass::Secant: ++secants; break;
            case LineClass::Generator: ++generators; break;
        }
    }
    CHECK(tangents + secants + generators == 357);
    CHECK(generators == 27);
}

TEST_CASE("generator list t=2") {
    const auto& [g, s] = sp4();
    CHECK(s.gens.size() == 27);
    for (const Line& l : s.gens)
        for (int id : l.pts) CHECK(s.mask.test(id));
    // every point of X lies on exactly t+1 generators
    for (int id : s.x_ids) {
        int through = 0;
        for (const auto& m : s.gen_masks)
            if (m.test(id)) ++through;
        CHECK(through == 3);
    }
}

TEST_CASE("generator list t=3 agrees with the exhaustive line scan") {
    const auto& [g, s] = sp9();
    long long scan = 0;
    for (const Line& l : g.all_lines())
        if (s.classify_line(l) == LineClass::Generator) ++scan;
    CHECK(scan == (long long)s.gens.size());
    CHECK(s.gens.size() == 112);  // (t^3+1)(t+1)
    for (int id : s.x_ids) {
        int through = 0;
        for (const auto& m : s.gen_masks)
            if (m.test(id)) ++through;
        CHECK(through == 4);
    }
}

TEST_CASE("tangent sections carry t+1 concurrent generators, non-tangent none") {
    const auto& [g, s] = sp4();
    for (int h = 0; h < g.n_points; ++h) {
        int gens_inside = 0;
        for (const auto& m : s.gen_masks)
            if (g.plane_pts[h].contains_all(m)) ++gens_inside;
        CHECK(gens_inside == (s.is_tangent_plane(h) ? 3 : 0));
    }
}
