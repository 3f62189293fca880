#include <catch_amalgamated.hpp>
#include <set>

#include "hermsurf/census.hpp"
#include "hermsurf/report.hpp"

using namespace hermsurf;

namespace {
struct Space {
    Pg3 g;
    HermitianSurface s;
    MonomialTable mt;
    explicit Space(int t)
        : g(build_geometry(build_field(t))), s(build_surface(g)), mt(build_monomial_table(g)) {}
};
const Space& sp4() {
    static const Space sp(2);
    return sp;
}
const CensusReport& census4() {
    static const CensusReport rep = run_exhaustive_census(sp4().s, sp4().mt, 4);
    return rep;
}
}  // namespace

TEST_CASE("section-size bounds") {
    const BoundSet b2 = bounds(2);
    CHECK(b2.s == 23);
    CHECK(b2.s2 == 21);
    CHECK(b2.s3 == 19);
    CHECK(b2.s4 == 17);
    CHECK(b2.s5 == 15);
    CHECK(b2.w1 == 22);
    CHECK(b2.w2 == 24);
    CHECK(b2.w3 == 26);
    CHECK(b2.w4 == 28);
    CHECK(b2.w5 == 30);

    const BoundSet b3 = bounds(3);
    CHECK(b3.s == 70);
    CHECK(b3.s2 == 64);
    CHECK(b3.s3 == 61);
    CHECK(b3.s4 == 55);
    CHECK(b3.s5 == 52);

    for (int t = 2; t <= 5; ++t) {
        const BoundSet b = bounds(t);
        CHECK(b.s > b.s2);
        CHECK(b.s2 > b.s3);
        CHECK(b.s3 > b.s4);
        CHECK(b.s4 > b.s5);
        // |X| - s2(t) = t^5 - t^3
        CHECK(b.w2 == ipow(t, 5) - ipow(t, 3));
    }
}

TEST_CASE("closed-form counts") {
    const CountFormulas c2 = count_formulas(2);
    CHECK(c2.surface_points == 45);
    CHECK(c2.n_q == 360);
    CHECK(c2.family_ii == 270);
    CHECK(c2.family_iii == 360);
    CHECK(c2.second_count == 2970);
    CHECK(c2.third_family == 1440);
    CHECK(c2.third_count == 4320);

    const CountFormulas c3 = count_formulas(3);
    CHECK(c3.surface_points == 280);
    CHECK(c3.n_q == 11340);
    CHECK(c3.family_ii == 5040);
    CHECK(c3.family_iii == 15120);
    CHECK(c3.second_count == 252000);
    CHECK(c3.second_count == (9 - 1) * (c3.n_q + c3.family_ii + c3.family_iii));
    CHECK(c3.third_count == 1088640);
}

TEST_CASE("second-weight families at t=2") {
    const auto& sp = sp4();
    const auto fams = enumerate_second_weight_families(sp.s, sp.mt);
    REQUIRE(fams.size() == 3);
    CHECK(fams[0].constructed == 360);
    CHECK(fams[1].constructed == 270);
    CHECK(fams[2].constructed == 360);
    for (const auto& f : fams) CHECK(f.ok);
    CHECK(3 * (fams[0].constructed + fams[1].constructed + fams[2].constructed) == 2970);

    // family (i): hyperbolic with >=3 skew generators, section s2
    for (const auto& f : fams[0].forms) {
        const QuadricClass qc = classify(sp.s, sp.mt, f);
        CHECK(qc.type == 11);
        CHECK(qc.section == 21);
    }
    // family (ii): two tangent planes meeting in a generator, section s2
    for (const auto& f : fams[1].forms) {
        const QuadricClass qc = classify(sp.s, sp.mt, f);
        CHECK(qc.type == 6);
        CHECK(qc.pair_line_class == LineClass::Generator);
        CHECK(qc.section == 21);
    }
    // family (iii): tangent + non-tangent on a tangent line, section s2
    for (const auto& f : fams[2].forms) {
        const QuadricClass qc = classify(sp.s, sp.mt, f);
        CHECK(qc.type == 7);
        CHECK(qc.pair_line_class == LineClass::Tangent);
        CHECK(qc.section == 21);
    }
}

TEST_CASE("third-weight family at t=2") {
    const auto& sp = sp4();
    const FamilyResult fam = enumerate_third_weight_family(sp.s, sp.mt);
    CHECK(fam.constructed == 1440);
    CHECK(fam.ok);
    for (const auto& f : fam.forms) {
        const QuadricClass qc = classify(sp.s, sp.mt, f);
        CHECK(qc.type == 7);
        CHECK(qc.pair_line_class == LineClass::Secant);
        CHECK(qc.section == 19);  // s3(2), weight 26
        CHECK(sp.s.size() - qc.section == 26);
    }
}

TEST_CASE("exhaustive census at q=4") {
    const CensusReport& rep = census4();
    CHECK(rep.all_ok);
    CHECK(rep.violations.empty());

    long long total = 0;
    for (int ty = 1; ty <= 15; ++ty) total += rep.rows[ty].count;
    CHECK(total == 349525);

    // exact-value rows
    CHECK(rep.rows[1].hist == std::map<int, long long>{{13, rep.rows[1].count}});
    CHECK(rep.rows[2].hist == std::map<int, long long>{{9, rep.rows[2].count}});
    CHECK(rep.rows[3].hist == std::map<int, long long>{{1, rep.rows[3].count}});
    CHECK(rep.rows[4].hist == std::map<int, long long>{{3, rep.rows[4].count}});
    CHECK(rep.rows[5].hist == std::map<int, long long>{{5, rep.rows[5].count}});
    CHECK(rep.rows[11].hist == std::map<int, long long>{{21, rep.rows[11].count}});
    CHECK(rep.rows[1].count + rep.rows[2].count == 85);
    CHECK(rep.rows[1].count == 45);

    // bound rows
    CHECK(rep.rows[9].max_sec <= 15);
    // 1-generator cones: 13, or 11 when one ruling line is a tangent lying in
    // the tangent plane at the vertex; 2-generator cones: always 15
    for (auto& [sec, n] : rep.rows[10].hist) CHECK((sec == 11 || sec == 13 || sec == 15));
    REQUIRE(rep.cone_hist.count(1) == 1);
    REQUIRE(rep.cone_hist.count(2) == 1);
    CHECK(rep.cone_hist.at(1) == std::map<int, long long>{{11, 12960}, {13, 6480}});
    CHECK(rep.cone_hist.at(2) == std::map<int, long long>{{15, 6480}});
    for (auto& [sec, n] : rep.cone_hist.at(0)) CHECK(sec <= 15);
    for (auto& [sec, n] : rep.rows[12].hist) CHECK((sec == 13 || sec == 15 || sec == 17));
    CHECK(rep.rows[13].max_sec <= 17);
    CHECK(rep.rows[14].max_sec <= 15);
    CHECK(rep.rows[15].max_sec <= 17);

    // global section extremes: s(2)=23 attained, second largest 21, third 19
    std::set<int> sections;
    for (int ty = 1; ty <= 15; ++ty)
        for (auto& [sec, n] : rep.rows[ty].hist) sections.insert(sec);
    auto it = sections.rbegin();
    CHECK(*it == 23);
    CHECK(*std::next(it) == 21);
    CHECK(*std::next(it, 2) == 19);

    // weight distribution consistency with the family reconciliation
    CHECK(rep.weights.counts.at(24) == 2970);
    CHECK(rep.weights.counts.at(26) == 4320);
    long long sec21 = rep.rows[11].hist.at(21);
    sec21 += rep.pair_hist.at(pair_key(6, LineClass::Generator)).at(21);
    sec21 += rep.pair_hist.at(pair_key(7, LineClass::Tangent)).at(21);
    CHECK(3 * sec21 == 2970);

    // no tangent-tangent pair meets in a tangent line
    CHECK(rep.pair_hist.count(pair_key(6, LineClass::Tangent)) == 0);
}

TEST_CASE("two-generator hyperbolic sections at t=2") {
    const TwoGenHyperbolicReport r = verify_two_generator_hyperbolics(census4());
    CHECK(r.ok);
    CHECK(r.max_section == 17);
    CHECK(r.hist.count(19) == 0);
}

TEST_CASE("fourth/fifth weight report at t=2") {
    const ConjectureReport c = check_conjecture(sp4().s, census4());
    CHECK(c.fourth_weight == 28);
    CHECK(c.fifth_weight == 30);
    CHECK(c.fourth_ok);
    CHECK(c.fifth_ok);
    CHECK(c.fourth_types.count("type8/tangent") == 1);
    CHECK(c.fifth_types.count("type8/secant") == 1);
    // no elliptic quadric attains section 15 at t=2 (their maximum is 13), so
    // the fifth-weight decomposition carries no type-15 entry here
    CHECK(c.fifth_types.count("type15") == 0);
    CHECK(census4().rows[15].max_sec == 13);
}

TEST_CASE("census JSON serialization") {
    const ordered_json j = census_json(census4());
    CHECK(j["field"]["t"] == 2);
    CHECK(j["field"]["q"] == 4);
    CHECK(j["mode"] == "exhaustive");
    CHECK(j["rows"].size() == 15);
    CHECK(j["all_ok"] == true);
    CHECK(j["provenance"]["poly"] == "x^2+x+1");
    // byte-identical on re-serialization
    CHECK(j.dump(2) == census_json(census4()).dump(2));
}

TEST_CASE("exhaustive census rejects t=3") {
    Pg3 g = build_geometry(build_field(3));
    HermitianSurface s = build_surface(g);
    MonomialTable mt = build_monomial_table(g);
    CHECK_THROWS_AS(run_exhaustive_census(s, mt), std::invalid_argument);
    StratifiedConfig cfg;
    cfg.samples = 0;
    CHECK_THROWS_AS(run_stratified_census(s, mt, cfg), std::invalid_argument);
}
