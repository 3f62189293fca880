#include <catch_amalgamated.hpp>
#include <random>

#include "hermsurf/pg3.hpp"
#include "oracles.hpp"

using namespace hermsurf;

namespace {
const Pg3& geo4() {
    static const Pg3 g = build_geometry(build_field(2));
    return g;
}
const Pg3& geo9() {
    static const Pg3 g = build_geometry(build_field(3));
    return g;
}
}  // namespace

TEST_CASE("point counts") {
    CHECK(geo4().n_points == 85);
    CHECK(geo9().n_points == 820);
}

TEST_CASE("normalization") {
    const Pg3& g = geo4();
    // (0, w, 1, 0) -> (0, 1, w^2, 0): indices w=2, w^2=w+1=3
    CHECK(g.normalize({0, 2, 1, 0}) == Coords{0, 1, 3, 0});
    CHECK(g.normalize({1, 0, 0, 0}) == Coords{1, 0, 0, 0});
    CHECK(geo9().normalize({0, 0, 0, 2}) == Coords{0, 0, 0, 1});
    CHECK_THROWS_AS(g.normalize({0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("normalize is idempotent and scalar-invariant on every point") {
    const Pg3& g = geo4();
    for (int id = 0; id < g.n_points; ++id) {
        const Coords c = g.pts[id];
        CHECK(g.normalize(c) == c);
        for (int s = 1; s < g.q(); ++s) {
            Coords scaled;
            for (int i = 0; i < 4; ++i) scaled[i] = g.f.mul(Elt(s), c[i]);
            CHECK(g.point_id(scaled) == id);
        }
    }
}

TEST_CASE("lines") {
    const Pg3& g = geo4();
    const Line l = g.line_through(0, 84);
    CHECK(l.pts.size() == 5);
    CHECK(g.line_through(84, 0) == l);
    CHECK_THROWS_AS(g.line_through(3, 3), std::invalid_argument);
    // regeneration from any pair of its points
    for (size_t i = 0; i < l.pts.size(); ++i)
        for (size_t j = i + 1; j < l.pts.size(); ++j)
            CHECK(g.line_through(l.pts[i], l.pts[j]).pts == l.pts);
}

TEST_CASE("PG(3,4) has 357 lines, agreeing with the set-dedup oracle") {
    const Pg3& g = geo4();
    const auto lines = g.all_lines();
    CHECK(lines.size() == 357);
    CHECK(oracle::all_line_keys(g).size() == 357);
}

TEST_CASE("planes through a line") {
    const Pg3& g = geo4();
    const Line l = g.line_through(0, 84);
    const auto hs = g.planes_through_line(l);
    CHECK(hs.size() == 5);
    PointSet covered(g.n_points);
    for (int h : hs) {
        for (int id : l.pts) CHECK(g.plane_pts[h].test(id));
        covered |= g.plane_pts[h];
    }
    CHECK(covered.count() == 85);
}

TEST_CASE("each plane has q^2+q+1 points") {
    for (const Pg3* g : {&geo4(), &geo9()}) {
        const int expect = g->q() * g->q() + g->q() + 1;
        for (int h = 0; h < g->n_points; ++h) CHECK(g->plane_pts[h].count() == expect);
    }
}

TEST_CASE("two distinct planes meet in exactly one line") {
    const Pg3& g = geo4();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int h1 = rng() % g.n_points, h2 = rng() % g.n_points;
        if (h1 == h2) continue;
        const PointSet common = g.plane_pts[h1] & g.plane_pts[h2];
        REQUIRE(common.count() == g.q() + 1);
        const auto ids = common.ids();
        CHECK(g.line_mask(g.line_through(ids[0], ids[1])) == common);
    }
}
