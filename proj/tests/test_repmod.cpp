#include "doctest.h"
#include "helpers.hpp"

#include "lcsa/algebras.hpp"
#include "lcsa/repmod.hpp"

#include <bit>
#include <functional>

using namespace lcsa;
using testutil::kSeed;

namespace {

int sgn(int p) { return p ? -1 : 1; }

void show(const Report& r) {
    for (auto& w : r.witnesses) MESSAGE(w);
}

// rank-1 module over the Witt algebra with a_lambda v = (d + c lambda) v
ConformalModule witt_module(const std::shared_ptr<const Algebra>& A, const Rational& c, int parity = 0) {
    ConformalModule M = zero_module(A, {"v"}, {parity});
    const ConfSpace& cs = A->cs;
    vec_add(M.action[0][0], 0, Poly::var(cs.var(DEL, 1)) + Poly::var(cs.var(LAM, 1), c));
    return M;
}

// free module with zero action
ConformalModule inert(const std::shared_ptr<const Algebra>& A, std::vector<int> parity) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < parity.size(); ++i) names.push_back("e" + std::to_string(i));
    return zero_module(A, names, parity);
}

Rational chi_on(const AnnAlgebra& g, const AnnElement& x) { return shift_character(g).value(g, x); }

}  // namespace

TEST_CASE("dual of a rank-one Witt module") {
    auto A = std::make_shared<const Algebra>(build_rw(1, 0));
    ConformalModule M = witt_module(A, 1);
    CHECK(residual_module_axioms(M).pass);
    ConformalModule D = dual_module(M);
    const ConfSpace& cs = A->cs;
    Vec want;
    vec_add(want, 0, Poly::var(cs.var(DEL, 1)));
    CHECK(D.action[0][0] == want);
    CHECK(residual_module_axioms(D).pass);
    CHECK(double_dual_check(M).pass);
    // (d + 2 lambda) v is a module too; its dual is (d - lambda)
    ConformalModule M2 = witt_module(A, 2);
    CHECK(residual_module_axioms(M2).pass);
    CHECK(dual_module(M2).action[0][0] == witt_module(A, -1).action[0][0]);
}

TEST_CASE("module axioms detect a wrong sign") {
    AnnAlgebra g(build_kn(3));
    VermaModule V = build_verma(g, trivial_g0(g));
    REQUIRE(residual_module_axioms(V.module).pass);
    ConformalModule bad = V.module;
    bool flipped = false;
    for (auto& col : bad.action)
        for (auto& v : col)
            for (auto& [j, P] : v)
                if (!flipped && P.size() > 1) {
                    auto [m, c] = *P.begin();
                    P.add(m, c * Rational(-2));
                    flipped = true;
                }
    REQUIRE(flipped);
    auto rep = residual_module_axioms(bad);
    CHECK_FALSE(rep.pass);
    REQUIRE_FALSE(rep.witnesses.empty());
    CHECK(rep.witnesses[0].find("M2") != std::string::npos);
}

TEST_CASE("Verma modules satisfy the axioms, coherence and M1") {
    for (std::string nm : {"RW(1,1)", "RW(2,1)", "K(1,2)", "K(1,3)", "RE36"}) {
        CAPTURE(nm);
        AnnAlgebra g(build_by_name(nm));
        VermaModule V = build_verma(g, trivial_g0(g));
        CHECK(V.module.rank() == (1 << V.negs.size()));
        auto a = residual_module_axioms(V.module);
        show(a);
        CHECK(a.pass);
        CHECK(check_coherent(V.module, g).pass);
        CHECK(verma_m1_check(V).pass);
        CHECK(double_dual_check(V.module).pass);
        CHECK(residual_module_axioms(dual_module(V.module)).pass);
    }
}

TEST_CASE("Verma module over a nontrivial g0-module") {
    AnnAlgebra g(build_re36(true));
    G0Module F = adjoint_g0(g, -2);
    VermaModule V = build_verma(g, F);
    CHECK(V.module.rank() == 64 * 3);
    CHECK(residual_module_axioms(V.module).pass);
    CHECK(verma_m1_check(V).pass);
}

TEST_CASE("non-negative elements do not lengthen d_I") {
    AnnAlgebra g(build_re36(true));
    VermaModule V = build_verma(g, trivial_g0(g));
    std::size_t checked = 0;
    for (int d = 0; d <= 2; ++d)
        for (auto& s : g.graded_basis(d)->basis)
            for (int k = 0; k < V.module.rank(); ++k) {
                Vec r = module_act_ann(V.module, g, {{s, 1}}, basis_vec(k));
                for (auto& [j, P] : r) CHECK(std::popcount(unsigned(j)) <= std::popcount(unsigned(k)));
                ++checked;
            }
    CHECK(checked > 1000);
}

TEST_CASE("build_verma refuses algebras outside the assumptions") {
    Algebra A;
    A.name = "flat";
    A.cs = ConfSpace({1, 0});
    A.gens.push_back({"b", 0, -1});
    A.table[{0, 0}] = Vec{};
    A.finalize();
    AnnAlgebra g(A);
    try {
        build_verma(g, trivial_g0(g));
        FAIL("expected an InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("assumptions") != std::string::npos);
    }
}

TEST_CASE("g0-module validation") {
    AnnAlgebra g(build_rw(1, 1));
    auto B = g.graded_basis(0)->basis;
    std::vector<AnnElement> span;
    for (auto& s : B) span.push_back({{s, 1}});
    // identity matrices everywhere: commutators are not represented
    std::vector<Matrix> ones(B.size(), Matrix{{1, 0}, {0, 1}});
    CHECK_THROWS_AS(make_g0_module(g, {"u", "w"}, {0, 0}, span, ones), InputError);
    // the odd elements must be off-diagonal
    CHECK_THROWS_AS(make_g0_module(g, {"u", "w"}, {0, 1}, span, ones), InputError);
    // missing spanning elements
    std::vector<AnnElement> few(span.begin(), span.begin() + 1);
    CHECK_THROWS_AS(make_g0_module(g, {"v"}, {0}, few, {Matrix{{0}}}), InputError);
    // the adjoint action on g_-2 is a module, and so is every twist by a character
    G0Module ad = adjoint_g0(g, -2);
    CHECK(ad.dim() == 2);
    for (auto& w : g0_characters(g)) CHECK_NOTHROW(twist_g0(g, ad, w));
}

TEST_CASE("dual morphisms") {
    auto A = std::make_shared<const Algebra>(build_rw(1, 0));
    const ConfSpace& cs = A->cs;
    Poly d = Poly::var(cs.var(DEL, 1));
    ConformalModule M = witt_module(A, 1);
    ConformalModule MM = zero_module(A, {"v1", "v2"}, {0, 0});
    MM.action[0][0] = witt_module(A, 1).action[0][0];
    vec_add(MM.action[0][1], 1, d + Poly::var(cs.var(LAM, 1)));
    // sum map M + M -> M, surjective
    ModuleMap T{&MM, &M, 0, {basis_vec(0), basis_vec(0)}};
    CHECK(check_morphism(T).pass);
    CHECK(is_surjective(T, 2));
    CHECK_FALSE(is_injective(T, 2));
    ConformalModule Md = dual_module(M), MMd = dual_module(MM);
    ModuleMap Ts = dual_morphism(T, MMd, Md);
    CHECK(check_morphism(Ts).pass);
    CHECK(is_injective(Ts, 3));
    CHECK_FALSE(is_surjective(Ts, 3));

    // maps between inert modules with mixed parity; any polynomial in d is a morphism
    ConformalModule P = inert(A, {0, 1}), Q = inert(A, {0, 1}), R = inert(A, {1, 0});
    ConformalModule Pd = dual_module(P), Qd = dual_module(Q), Rd = dual_module(R);
    std::mt19937_64 rng(kSeed);
    auto poly = [&] { return testutil::random_poly(rng, cs, {DEL}, 2, 2); };
    for (int pS = 0; pS <= 1; ++pS)
        for (int pT = 0; pT <= 1; ++pT) {
            CAPTURE(pS);
            CAPTURE(pT);
            const ConformalModule& mid = pT ? R : Q;
            const ConformalModule& midd = pT ? Rd : Qd;
            const ConformalModule& tgt = (pS ^ pT) ? R : Q;
            const ConformalModule& tgtd = (pS ^ pT) ? Rd : Qd;
            ModuleMap Tm{&P, &mid, pT, {}}, Sm{&mid, &tgt, pS, {}};
            for (int k = 0; k < 2; ++k) {
                Vec a, b;
                vec_add(a, k, poly());
                vec_add(b, k, poly());
                Tm.images.push_back(a);
                Sm.images.push_back(b);
            }
            CHECK(check_morphism(Tm).pass);
            ModuleMap ST = compose(Sm, Tm);
            ModuleMap lhs = compose(dual_morphism(Tm, Pd, midd), dual_morphism(Sm, midd, tgtd));
            ModuleMap rhs = dual_morphism(ST, Pd, tgtd);
            CHECK(maps_equal(lhs, rhs, -sgn(pS & pT)));
        }
}

TEST_CASE("shift characters of the built-ins") {
    // RW: on the Euler fields sum x_i d_i over even and odd i, realized as -y_i a_i
    for (auto [r, s] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
        AnnAlgebra g(build_rw(r, s));
        AnnElement ev, od;
        for (int i = 1; i <= r + s; ++i) ann_add(i <= r ? ev : od, g.elem({i}, i - 1, -1));
        CHECK(chi_on(g, ev) == Rational(-r));
        CHECK(chi_on(g, od) == Rational(s));
        CHECK(check_shift_character(g, shift_character(g)).pass);
    }
    for (int n = 2; n <= 4; ++n) {
        AnnAlgebra g(build_kn(n));
        auto e = grading_element(g);
        REQUIRE(e);
        CHECK(*e == g.elem({1}, "one"));
        CHECK(chi_on(g, *e) == Rational(n - 2));
        // so_n: the degree-0 xi_i xi_j
        for (auto& x : g.graded_basis(0)->basis)
            if (x.y == Monomial{}) CHECK(chi_on(g, {{x, 1}}).is_zero());
        CHECK(check_shift_character(g, shift_character(g)).pass);
    }
    {
        AnnAlgebra g(build_re36(true));
        auto z = g0_center(g);
        REQUIRE(z.size() == 1);
        CHECK(chi_on(g, z[0]).is_zero());
    }
    {
        AnnAlgebra g(build_re38());
        auto e = grading_element(g);
        REQUIRE(e);
        CHECK(chi_on(g, ann_scale(*e, Rational(1, 3))) == 2);
    }
    {
        AnnAlgebra g(build_re510());
        auto X = shift_character(g);
        for (auto& x : g.graded_basis(0)->basis) CHECK(X.chi.at(x).is_zero());
        CHECK(check_shift_character(g, X).pass);
    }
}

TEST_CASE("chi_shift") {
    AnnAlgebra g(build_kn(3));
    AnnElement y = g.elem({1}, "one");
    auto X = shift_character(g);
    G0Module T = chi_shift(g, trivial_g0(g), X);
    CHECK(g0_matrix(g, T, y) == Matrix{{1}});
    for (Rational w : {Rational(0), Rational(2), Rational(-3, 2)}) {
        G0Module F = character_g0(g, {{y.begin()->first, w}});
        CHECK(g0_matrix(g, chi_shift(g, F, X), y) == Matrix{{-w + 1}});
    }
    // the shift of the adjoint module on g_-2 of RE36 is its contragredient plus chi
    AnnAlgebra e(build_re36(true));
    G0Module ad = adjoint_g0(e, -2);
    auto Xe = shift_character(e);
    G0Module S = chi_shift(e, ad, Xe);
    for (auto& [s, M] : ad.basis_mats)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(S.basis_mats.at(s)[i][j] == -M[j][i] + (i == j ? Xe.chi.at(s) : Rational(0)));
}

TEST_CASE("duality of Verma modules") {
    struct Case {
        std::string alg;
        std::function<G0Module(const AnnAlgebra&)> F;
    };
    auto weight = [](int w) {
        return [w](const AnnAlgebra& g) {
            auto ch = g0_characters(g);
            std::map<AnnSym, Rational> m;
            for (auto& [s, c] : ch.at(0)) m[s] = c * Rational(w);
            return character_g0(g, m);
        };
    };
    auto triv = [](const AnnAlgebra& g) { return trivial_g0(g); };
    auto ky = [](const AnnAlgebra& g) { return character_g0(g, {{g.elem({1}, "one").begin()->first, Rational(5, 2)}}); };
    auto std3 = [](const AnnAlgebra& g) {
        auto z = g0_center(g).at(0);
        std::map<AnnSym, Rational> w;
        // fixed weight 2 on the center, spread over its support
        for (auto& [s, c] : z) w[s] = Rational(2) / (c * Rational(int(z.size())));
        return twist_g0(g, adjoint_g0(g, -2), w);
    };
    std::vector<Case> cases{{"RW(1,1)", weight(0)}, {"RW(1,1)", weight(1)}, {"RW(1,1)", weight(-3)},
                            {"RW(1,1)", weight(7)}, {"K(1,3)", triv},      {"K(1,3)", ky},
                            {"RE36", triv},         {"RE36", std3}};
    for (auto& c : cases) {
        AnnAlgebra g(build_by_name(c.alg));
        G0Module F = c.F(g);
        CAPTURE(c.alg);
        CAPTURE(F.dim());
        auto rep = verify_duality(g, F);
        show(rep);
        CHECK(rep.pass);
        VermaOptions opt;
        opt.permute_seed = kSeed;
        CHECK(verify_duality(g, F, opt).pass);
    }
}

TEST_CASE("RE36 adjoint module on g_-2 is standard sl3 and trivial sl2") {
    AnnAlgebra g(build_re36(true));
    G0Module ad = adjoint_g0(g, -2);
    for (const char* nm : {"E", "F", "H"}) CHECK(g0_matrix(g, ad, g.elem({}, nm)) == Matrix(3, std::vector<Rational>(3)));
}

TEST_CASE("dual Verma restriction rejects a wrong character") {
    for (std::string nm : {"RW(1,1)", "K(1,3)"}) {
        AnnAlgebra g(build_by_name(nm));
        VermaModule V = build_verma(g, trivial_g0(g));
        auto X = shift_character(g);
        CHECK(dual_verma_restriction(V, X).pass);
        auto chars = g0_characters(g);
        for (auto& [s, c] : chars.at(0)) X.chi[s] += c;
        auto rep = dual_verma_restriction(V, X);
        CHECK_FALSE(rep.pass);
        REQUIRE_FALSE(rep.witnesses.empty());
        CHECK(rep.witnesses[0].rfind("(ii)", 0) == 0);
    }
}

TEST_CASE("zero-dimensional F passes vacuously") {
    AnnAlgebra g(build_kn(2));
    G0Module F;
    CHECK(verify_duality(g, F).pass);
}

TEST_CASE("property: PBW normalization is confluent") {
    std::mt19937_64 rng(kSeed);
    std::vector<std::unique_ptr<AnnAlgebra>> gs;
    for (std::string nm : {"RW(1,2)", "K(1,3)", "RE36"}) gs.push_back(std::make_unique<AnnAlgebra>(build_by_name(nm)));
    std::vector<VermaModule> Vs;
    for (auto& g : gs) Vs.push_back(build_verma(*g, trivial_g0(*g)));
    std::uniform_int_distribution<int> which(0, int(gs.size()) - 1), len(2, 5);
    int bad = 0;
    for (int t = 0; t < 1000; ++t) {
        int w = which(rng);
        auto& g = *gs[w];
        auto& V = Vs[w];
        std::vector<AnnSym> letters;
        for (int d : {-1, -2, -3})
            for (auto& s : g.graded_basis(d)->basis) letters.push_back(s);
        std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
        std::vector<AnnElement> word;
        int L = len(rng);
        for (int k = 0; k < L; ++k) word.push_back({{letters[pick(rng)], 1}});
        std::uniform_int_distribution<int> at(0, L - 2);
        int p = at(rng);
        // x y - (-1)^{p(x)p(y)} y x = [x, y] inside any word
        auto swapped = word;
        std::swap(swapped[p], swapped[p + 1]);
        auto merged = word;
        merged[p] = g.bracket(word[p], word[p + 1]);
        merged.erase(merged.begin() + p + 1);
        Vec lhs = pbw_normalize(V, word);
        vec_add(lhs, pbw_normalize(V, swapped), -sgn(g.parity(word[p]) & g.parity(word[p + 1])));
        if (!merged[p].empty()) vec_add(lhs, pbw_normalize(V, merged), -1);
        if (!vec_is_zero(lhs)) ++bad;
        // terminates in the basis d_I v with partials on the left
        for (auto& [k, P] : pbw_normalize(V, word))
            if (k >= V.module.rank()) ++bad;
    }
    CHECK(bad == 0);
}
