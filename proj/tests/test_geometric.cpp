#include "doctest.h"
#include "helpers.hpp"

#include "lcsa/algebras.hpp"
#include "lcsa/geometric.hpp"

using namespace lcsa;

namespace {

GeoElement field(int key, const Poly& p) {
    GeoElement u;
    vec_add(u, key, p);
    return u;
}

}  // namespace

TEST_CASE("vector field brackets") {
    VarSpec sp{1, 1};
    GeoSpace G = geo_space(GeoTag::W, sp, 6);
    Poly x1 = Poly::var(0), x2 = Poly::var(1);
    // [x1 D1, D1] = -D1
    CHECK(geo_bracket(G, field(0, x1), field(0, Poly(Rational(1)))) == field(0, Poly(Rational(-1))));
    // odd: [D2, D2] = 0, [x2 D2, D2] = -D2 ... sign from the odd x2
    CHECK(vec_is_zero(geo_bracket(G, field(1, Poly(Rational(1))), field(1, Poly(Rational(1))))));
    CHECK(geo_bracket(G, field(1, Poly(Rational(1))), field(1, x2)) == field(1, Poly(Rational(1))));
}

TEST_CASE("contact bracket") {
    VarSpec sp{0, 2};
    GeoSpace G = geo_space(GeoTag::K1n, sp, 6);
    Poly one(Rational(1)), t = Poly::var(0), xi1 = Poly::var(1);
    CHECK(geo_bracket(G, field(0, one), field(0, t)) == field(0, Poly(Rational(2))));
    CHECK(geo_bracket(G, field(0, xi1), field(0, xi1)) == field(0, Poly(Rational(-1))));
    CHECK(geo_bracket(G, field(0, t), field(0, xi1)) == field(0, xi1 * Rational(-1)));
}

TEST_CASE("truncation is reported") {
    VarSpec sp{1, 0};
    GeoSpace G = geo_space(GeoTag::W, sp, 2);
    Monomial m2, m3;
    m2.e[0] = 2;
    m3.e[0] = 3;
    Poly x2(m2, 1), x3(m3, 1);
    CHECK_THROWS_AS(geo_bracket(G, field(0, x2), field(0, x3)), TruncationError);
}

TEST_CASE("E(5,10) closed forms bracket into divergence-free fields") {
    GeoSpace G = geo_space(GeoTag::E510, VarSpec{5, 0}, 6);
    GeoElement w1 = field(5, Poly(Rational(1)));   // dx1^dx2
    GeoElement w2 = field(12, Poly(Rational(1)));  // dx3^dx4
    auto r = geo_bracket(G, w1, w2);
    CHECK(r == field(4, Poly(Rational(1))));
    CHECK(geo_invariants(G, r).empty());
    CHECK(!geo_invariants(G, field(0, Poly::var(0))).empty());
}

TEST_CASE("realizations agree with the annihilation brackets") {
    for (std::string nm : {"RW(2,1)", "K(1,3)", "RE36", "RE38", "RE510"}) {
        CAPTURE(nm);
        AnnAlgebra g(build_by_name(nm));
        auto rep = check_realization(g, 4, nullptr, 2);
        for (auto& w : rep.witnesses) MESSAGE(w);
        CHECK(rep.pass);
    }
}

TEST_CASE("a sign-flipped realization is rejected") {
    for (std::string nm : {"RW(1,1)", "RE36"}) {
        CAPTURE(nm);
        AnnAlgebra g(build_by_name(nm));
        GeoSpace G = realization_space(g, 12);
        SymMap flipped = [&](const AnnSym& s) {
            GeoElement u = realize(g, G, {{s, 1}});
            if (g.sym_degree(s) == 0 && s.gen == 0) {
                GeoElement v;
                vec_add(v, u, -1);
                return v;
            }
            return u;
        };
        CHECK(!check_realization(g, 2, flipped).pass);
    }
}

TEST_CASE("no realization for families without one") {
    AnnAlgebra g(build_rw(1, 0));
    Algebra A = g.conf();
    A.family = "custom";
    AnnAlgebra h(A);
    CHECK(!check_realization(h, 2).pass);
}
