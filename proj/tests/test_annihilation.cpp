#include "doctest.h"
#include "helpers.hpp"

#include "lcsa/algebras.hpp"
#include "lcsa/annihilation.hpp"

using namespace lcsa;
using testutil::kSeed;

namespace {

std::vector<AnnSym> basis_upto(const AnnAlgebra& g, int hi) {
    std::vector<AnnSym> out;
    for (int d = g.min_gen_degree(); d <= hi; ++d)
        for (auto& s : g.graded_basis(d)->basis) out.push_back(s);
    return out;
}

AnnElement one(const AnnSym& s) { return {{s, 1}}; }

int sgn(int p) { return p ? -1 : 1; }

}  // namespace

TEST_CASE("E(5,10) component dimensions") {
    AnnAlgebra g(build_re510());
    for (int k = 0; k <= 5; ++k) {
        CHECK(g.graded_basis(2 * k - 4)->dim() == k * (k + 1) * (k + 2) * (k + 4) / 6);
        CHECK(g.graded_basis(2 * k - 3)->dim() == k * (k + 2) * (k + 3) * (k + 4) / 6);
    }
}

TEST_CASE("small component dimensions") {
    AnnAlgebra w(build_rw(2, 1));
    CHECK(w.graded_basis(-2)->dim() == 3);
    CHECK(w.graded_basis(0)->dim() == 9);
    AnnAlgebra k(build_kn(3));
    CHECK(k.graded_basis(-2)->dim() == 1);
    CHECK(k.graded_basis(-1)->dim() == 3);
    CHECK(k.graded_basis(0)->dim() == 4);
    AnnAlgebra e(build_re36(true));
    CHECK(e.graded_basis(-1)->dim() == 6);
    CHECK(e.graded_basis(0)->dim() == 12);
    AnnAlgebra f(build_re38());
    CHECK(f.graded_basis(-3)->dim() == 2);
    CHECK(f.graded_basis(-1)->dim() == 6);
    CHECK(f.graded_basis(0)->dim() == 12);
}

TEST_CASE("RW(1,0): y^m a brackets like x^m d/dx up to sign") {
    AnnAlgebra g(build_rw(1, 0));
    // [x^2 d, x d] = -x^2 d, realized with a minus sign
    auto u = g.elem({1, 1}, 0), v = g.elem({1}, 0);
    CHECK(g.bracket(u, v) == g.elem({1, 1}, 0));
    CHECK(g.bracket(g.elem({}, 0), u) == g.elem({1}, 0, -2));
}

TEST_CASE("RE36 odd generators at degree -1 bracket into d/dx") {
    AnnAlgebra g(build_re36(true));
    auto r = g.bracket(g.elem({}, "b11"), g.elem({}, "b22"));
    CHECK(r == g.elem({}, "a3", -1));
}

TEST_CASE("reduction trades partials for y-derivatives") {
    AnnAlgebra g(build_rw(1, 1));
    const ConfSpace& cs = g.cs();
    // y1 d1 a ~ -a; y2 is odd, so y2 d2 a ~ a and y1 y2 d2 a ~ y1 a
    Poly y1 = Poly::var(cs.var(YV, 1)), y2 = Poly::var(cs.var(YV, 2));
    Poly d1 = Poly::var(cs.var(DEL, 1)), d2 = Poly::var(cs.var(DEL, 2));
    CHECK(g.reduce(mul(cs.vs, y1, d1), 0) == g.elem({}, 0, -1));
    CHECK(g.reduce(mul(cs.vs, y2, d2), 0) == g.elem({}, 0, 1));
    CHECK(g.reduce(mul(cs.vs, mul(cs.vs, y1, y2), d2), 0) == g.elem({1}, 0, 1));
    CHECK(g.reduce(d1, 0).empty());
}

TEST_CASE("right y-derivatives supercommute") {
    AnnAlgebra g(build_rw(1, 2));
    const ConfSpace& cs = g.cs();
    std::mt19937_64 rng(kSeed);
    for (int t = 0; t < 1000; ++t) {
        Poly y(testutil::random_mono(rng, cs, {YV}, 5), testutil::small_rational(rng));
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                int s = sgn(cs.spec.parity(i) & cs.spec.parity(j));
                CHECK(right_dy(cs, y, {i, j}) == right_dy(cs, y, {j, i}) * Rational(s));
            }
    }
}

TEST_CASE("super skew-symmetry and Jacobi on basis elements") {
    for (std::string nm : {"RW(1,1)", "RW(2,1)", "K(1,3)", "RE36", "RE38", "RE510"}) {
        CAPTURE(nm);
        AnnAlgebra g(build_by_name(nm));
        int hi = nm == "RE510" ? 0 : 2;
        auto B = basis_upto(g, hi);
        std::size_t bad = 0;
        for (auto& u : B)
            for (auto& v : B) {
                int s = sgn(g.sym_parity(u) & g.sym_parity(v));
                AnnElement sum = g.bracket(one(u), one(v));
                ann_add(sum, g.bracket(one(v), one(u)), s);
                if (!g.is_zero(sum)) ++bad;
                auto d = g.degree(g.bracket(one(u), one(v)));
                if (d && *d != g.sym_degree(u) + g.sym_degree(v)) ++bad;
            }
        CHECK(bad == 0);
        std::mt19937_64 rng(kSeed);
        std::uniform_int_distribution<std::size_t> pick(0, B.size() - 1);
        for (int t = 0; t < 1000; ++t) {
            AnnElement a = one(B[pick(rng)]), b = one(B[pick(rng)]), c = one(B[pick(rng)]);
            int pa = g.parity(a), pb = g.parity(b);
            AnnElement j = g.bracket(a, g.bracket(b, c));
            ann_add(j, g.bracket(g.bracket(a, b), c), -1);
            ann_add(j, g.bracket(b, g.bracket(a, c)), -sgn(pa & pb));
            if (!g.is_zero(j)) ++bad;
        }
        CHECK(bad == 0);
    }
}

TEST_CASE("assumptions hold for the built-ins") {
    for (std::string nm : {"RW(1,0)", "RW(2,1)", "K(1,2)", "K(1,3)", "RE36", "RE38", "RE510"}) {
        CAPTURE(nm);
        AnnAlgebra g(build_by_name(nm));
        auto rep = check_assumptions(g, 2);
        CHECK(rep.pass);
    }
}

TEST_CASE("lambda embedding of RW(1,0) to order 2") {
    AnnAlgebra g(build_rw(1, 0));
    const ConfSpace& cs = g.cs();
    auto s = lambda_embed(g, gen_elem(g.conf(), 0), 2);
    Monomial l0, l1, l2;
    l1.e[cs.var(LAM, 1)] = 1;
    l2.e[cs.var(LAM, 1)] = 2;
    LambdaSeries want{{l0, g.elem({}, 0)}, {l1, g.elem({1}, 0)}, {l2, g.elem({1, 1}, 0, Rational(1, 2))}};
    CHECK(s == want);
}

TEST_CASE("lambda-embedding bracket identity on random elements") {
    std::mt19937_64 rng(kSeed);
    std::vector<Algebra> algs{build_rw(1, 0), build_rw(1, 1), build_kn(2), build_rw(2, 0)};
    std::vector<std::unique_ptr<AnnAlgebra>> gs;
    for (auto& A : algs) gs.push_back(std::make_unique<AnnAlgebra>(A));
    std::uniform_int_distribution<int> which(0, int(gs.size()) - 1), par(0, 1), cut(1, 3);
    int bad = 0;
    for (int t = 0; t < 1000; ++t) {
        auto& g = *gs[which(rng)];
        int cutoff = g.cs().spec.n() > 1 ? 2 : cut(rng);
        Vec a = testutil::random_elem(rng, g.conf(), par(rng), {DEL}, 1, 2);
        Vec b = testutil::random_elem(rng, g.conf(), par(rng), {DEL}, 1, 2);
        auto r = embedding_bracket_residual(g, a, b, cutoff);
        if (!r.empty()) {
            ++bad;
            MESSAGE(g.name() << ": " << series_str(g, r));
        }
        if (bad > 3) break;
    }
    CHECK(bad == 0);
}

TEST_CASE("degree -2 acts as the y-derivatives") {
    AnnAlgebra g(build_rw(1, 1));
    auto u = identify_minus_two(g, -2, 3);
    REQUIRE(u);
    CHECK((*u)[0] == g.elem({}, 0, -1));
    std::mt19937_64 rng(kSeed);
    auto B = basis_upto(g, 4);
    for (auto& s : B)
        for (int i = 1; i <= 2; ++i) CHECK(g.bracket((*u)[i - 1], one(s)) == g.dy(i, one(s)));
}
