#include <catch_amalgamated.hpp>

#include "hermsurf/gf.hpp"
#include "oracles.hpp"

using namespace hermsurf;

TEST_CASE("supported field sizes") {
    CHECK(build_field(2).q == 4);
    CHECK(build_field(2).p == 2);
    CHECK(build_field(3).q == 9);
    CHECK(build_field(3).p == 3);
    CHECK(build_field(4).q == 16);
    CHECK(build_field(4).p == 2);
    CHECK(build_field(5).q == 25);
    CHECK(build_field(5).p == 5);
    CHECK_THROWS_AS(build_field(6), std::invalid_argument);
    CHECK_THROWS_AS(build_field(7), std::invalid_argument);
    CHECK_THROWS_AS(build_field(1), std::invalid_argument);
}

TEST_CASE("GF(4) matches the polynomial oracle") {
    const Field f = build_field(2);
    const oracle::PolyField pf{2, {1, 1, 1}};  // GF(2)[x]/(x^2+x+1)
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            CHECK(int(f.add(Elt(a), Elt(b))) == pf.add(a, b));
            CHECK(int(f.mul(Elt(a), Elt(b))) == pf.mul(a, b));
        }
    // omega has index 2; omega * omega = omega + 1 (index 3)
    CHECK(f.mul(2, 2) == 3);
    // conjugation in GF(4) is squaring
    CHECK(f.conj(2) == 3);
    CHECK(f.conj(1) == 1);
}

TEST_CASE("field axioms by exhaustion") {
    for (int t : {2, 3, 4, 5}) {
        const Field f = build_field(t);
        const int q = f.q;
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(Elt(a), 0) == a);
            CHECK(f.mul(Elt(a), 1) == a);
            CHECK(f.add(Elt(a), f.neg(Elt(a))) == 0);
            if (a != 0) CHECK(f.mul(Elt(a), f.inv(Elt(a))) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(Elt(a), Elt(b)) == f.add(Elt(b), Elt(a)));
                CHECK(f.mul(Elt(a), Elt(b)) == f.mul(Elt(b), Elt(a)));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(Elt(a), Elt(b)), Elt(c)) ==
                          f.add(Elt(a), f.add(Elt(b), Elt(c))));
                    CHECK(f.mul(f.mul(Elt(a), Elt(b)), Elt(c)) ==
                          f.mul(Elt(a), f.mul(Elt(b), Elt(c))));
                    CHECK(f.mul(Elt(a), f.add(Elt(b), Elt(c))) ==
                          f.add(f.mul(Elt(a), Elt(b)), f.mul(Elt(a), Elt(c))));
                }
            }
        }
    }
}

TEST_CASE("conjugation is an involutive automorphism fixing GF(t)") {
    for (int t : {2, 3, 4, 5}) {
        const Field f = build_field(t);
        int fixed = 0;
        for (int a = 0; a < f.q; ++a) {
            CHECK(f.conj(f.conj(Elt(a))) == a);
            CHECK(f.conj(Elt(a)) == f.pow(Elt(a), t));
            if (f.conj(Elt(a)) == a) ++fixed;
            for (int b = 0; b < f.q; ++b) {
                CHECK(f.conj(f.mul(Elt(a), Elt(b))) == f.mul(f.conj(Elt(a)), f.conj(Elt(b))));
                CHECK(f.conj(f.add(Elt(a), Elt(b))) == f.add(f.conj(Elt(a)), f.conj(Elt(b))));
            }
        }
        CHECK(fixed == t);
    }
}

TEST_CASE("norms land in the subfield") {
    for (int t : {2, 3, 4, 5}) {
        const Field f = build_field(t);
        for (int a = 0; a < f.q; ++a) {
            CHECK(f.norm(Elt(a)) == f.pow(Elt(a), t + 1));
            CHECK(f.in_subfield(f.norm(Elt(a))));
        }
    }
}

TEST_CASE("GF(9) conjugation is the cube map") {
    const Field f = build_field(3);
    for (int a = 0; a < 9; ++a) CHECK(f.conj(Elt(a)) == f.pow(Elt(a), 3));
}
