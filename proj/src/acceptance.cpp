#include "lcsa/acceptance.hpp"

#include "lcsa/algebras.hpp"
#include "lcsa/dsl.hpp"
#include "lcsa/geometric.hpp"
#include "lcsa/repmod.hpp"
#include "lcsa/sampling.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

namespace lcsa {

namespace {

using namespace sampling;

int sgn(int p) { return p ? -1 : 1; }

Report start(int n, const std::string& title) {
    Report r;
    r.check = "criterion " + std::to_string(n) + ": " + title;
    return r;
}

void absorb(Report& into, const std::string& label, const Report& r) {
    if (!r.pass) into.pass = false;
    for (auto& w : r.witnesses) into.fail(label + ": " + w);
}

// ---- 1..4 ----

Report axioms() {
    Report R = start(1, "axiom suite");
    std::vector<std::string> names;
    for (int r = 0; r <= 3; ++r)
        for (int s = 0; r + s <= 3; ++s)
            if (r + s >= 1) names.push_back("RW(" + std::to_string(r) + "," + std::to_string(s) + ")");
    for (int n = 0; n <= 4; ++n) names.push_back("K(" + std::to_string(n) + ")");
    for (const char* e : {"RE36", "RE38", "RE510"}) names.push_back(e);
    for (auto& nm : names) absorb(R, nm, check_algebra(build_by_name(nm)));
    R.dims["algebras"] = std::to_string(names.size());
    return R;
}

Report e510_dims() {
    Report R = start(2, "E(5,10) graded dimensions");
    AnnAlgebra g(build_re510());
    for (int k = 0; k <= 5; ++k) {
        int even = k * (k + 1) * (k + 2) * (k + 4) / 6, odd = k * (k + 2) * (k + 3) * (k + 4) / 6;
        for (auto [d, want] : {std::pair{2 * k - 4, even}, std::pair{2 * k - 3, odd}}) {
            int got = g.graded_basis(d)->dim();
            R.dims[std::to_string(d)] = std::to_string(got);
            if (got != want) R.fail("degree " + std::to_string(d) + ": " + std::to_string(got) + " != " + std::to_string(want));
        }
    }
    return R;
}

Report realizations(int threads) {
    Report R = start(3, "realization homomorphisms up to degree 4");
    for (const char* nm : {"RW(2,1)", "K(1,3)", "RE36", "RE38", "RE510"}) {
        AnnAlgebra g(build_by_name(nm));
        Report r = check_realization(g, 4, nullptr, threads);
        absorb(R, nm, r);
        for (auto& n : r.notes) R.notes.push_back(std::string(nm) + ": " + n);
    }
    return R;
}

Report shift_chars() {
    Report R = start(4, "shift characters");
    auto expect = [&](const std::string& label, const Rational& got, const Rational& want) {
        R.characters[label] = got.str();
        if (got != want) R.fail(label + " = " + got.str() + ", expected " + want.str());
    };
    for (auto [r, s] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
        AnnAlgebra g(build_rw(r, s));
        auto X = shift_character(g);
        AnnElement ev, od;  // sum x_i d_i over even / odd i, realized as -y_i a_i
        for (int i = 1; i <= r + s; ++i) ann_add(i <= r ? ev : od, g.elem({i}, i - 1, -1));
        std::string nm = g.name();
        expect(nm + " even Euler field", X.value(g, ev), Rational(-r));
        expect(nm + " odd Euler field", X.value(g, od), Rational(s));
        absorb(R, nm, check_shift_character(g, X));
    }
    for (int n = 2; n <= 4; ++n) {
        AnnAlgebra g(build_kn(n));
        auto X = shift_character(g);
        std::string nm = "K(1," + std::to_string(n) + ")";
        expect(nm + " y", X.value(g, g.elem({1}, "one")), Rational(n - 2));
        Rational so;
        for (auto& x : g.graded_basis(0)->basis)
            if (x.y == Monomial{} && !X.value(g, {{x, 1}}).is_zero()) so = X.value(g, {{x, 1}});
        expect(nm + " on so_n", so, 0);
        absorb(R, nm, check_shift_character(g, X));
    }
    {
        AnnAlgebra g(build_re36(true));
        auto z = g0_center(g);
        if (z.size() != 1) R.fail("RE36: center of g_0 is not one-dimensional");
        else expect("RE36 z", shift_character(g).value(g, z[0]), 0);
    }
    {
        AnnAlgebra g(build_re38());
        auto e = grading_element(g);
        if (!e) R.fail("RE38: no grading element");
        else expect("RE38 Y", shift_character(g).value(g, ann_scale(*e, Rational(1, 3))), 2);
    }
    {
        AnnAlgebra g(build_re510());
        auto X = shift_character(g);
        Rational worst;
        for (auto& x : g.graded_basis(0)->basis)
            if (!X.chi.at(x).is_zero()) worst = X.chi.at(x);
        expect("RE510 on sl5 (any nonzero value)", worst, 0);
    }
    return R;
}

// ---- 5..7: Verma modules ----

struct Case {
    std::string label;
    std::unique_ptr<AnnAlgebra> g;
    G0Module F;
    bool slow = false;
};

std::vector<Case> duality_cases(bool slow) {
    std::vector<Case> out;
    auto add = [&](const std::string& alg, const std::string& what, auto make, bool is_slow = false) {
        Case c;
        c.label = alg + " " + what;
        c.g = std::make_unique<AnnAlgebra>(build_by_name(alg));
        c.F = make(*c.g);
        c.slow = is_slow;
        out.push_back(std::move(c));
    };
    for (int w : {0, 1, -3, 7})
        add("RW(1,1)", "1-dim F, weight " + std::to_string(w), [w](const AnnAlgebra& g) {
            auto ch = g0_characters(g);
            std::map<AnnSym, Rational> m;
            for (auto& [s, c] : ch.at(0)) m[s] = c * Rational(w);
            return character_g0(g, m);
        });
    add("K(1,3)", "trivial F", [](const AnnAlgebra& g) { return trivial_g0(g); });
    add("K(1,3)", "F with y acting by 5/2",
        [](const AnnAlgebra& g) { return character_g0(g, {{g.elem({1}, "one").begin()->first, Rational(5, 2)}}); });
    add("RE36", "trivial F", [](const AnnAlgebra& g) { return trivial_g0(g); });
    add("RE36", "standard sl3 x trivial sl2, z-weight 2", [](const AnnAlgebra& g) {
        auto z = g0_center(g).at(0);
        std::map<AnnSym, Rational> w;
        for (auto& [s, c] : z) w[s] = Rational(2) / (c * Rational(int(z.size())));
        return twist_g0(g, adjoint_g0(g, -2), w);
    });
    if (slow) add("RE510", "trivial F", [](const AnnAlgebra& g) { return trivial_g0(g); }, true);
    return out;
}

Report duality(const std::vector<Case>& cases, const AcceptanceOptions& opt) {
    Report R = start(5, "duality of Verma modules");
    for (auto& c : cases) {
        VermaOptions vo;
        vo.threads = opt.threads;
        Report r = verify_duality(*c.g, c.F, vo);
        absorb(R, c.label, r);
        R.dims[c.label] = r.dims.count("rank") ? r.dims.at("rank") : "0";
        if (!c.slow) {
            vo.permute_seed = opt.seed;
            absorb(R, c.label + " (permuted d order)", verify_duality(*c.g, c.F, vo));
        }
    }
    if (!opt.slow) R.fail("RE510 with trivial F skipped (quick run)");
    return R;
}

Report restriction(const std::vector<Case>& cases, std::vector<VermaModule>& built, const AcceptanceOptions& opt) {
    Report R = start(6, "dual Verma restriction");
    for (auto& c : cases) {
        VermaOptions vo;
        vo.threads = opt.threads;
        built.push_back(build_verma(*c.g, c.F, vo));
        auto X = shift_character(*c.g);
        Report r = dual_verma_restriction(built.back(), X);
        absorb(R, c.label, r);
        for (auto& [k, v] : r.characters) R.characters[c.label + " " + k] = v;
    }
    // the check must reject a wrong character
    {
        const Case& c = cases.front();
        auto X = shift_character(*c.g);
        auto ch = g0_characters(*c.g);
        for (auto& [s, v] : ch.at(0)) X.chi[s] += v;
        if (dual_verma_restriction(built.front(), X).pass) R.fail(c.label + ": a shifted character was not rejected");
    }
    if (!opt.slow) R.fail("RE510 with trivial F skipped (quick run)");
    return R;
}

Report morphisms(const std::vector<VermaModule>& built, const AcceptanceOptions& opt) {
    Report R = start(7, "double dual and dual morphisms");
    for (auto& V : built) absorb(R, V.g->name() + " Verma", double_dual_check(V.module));
    R.dims["Verma modules"] = std::to_string(built.size());

    auto A = std::make_shared<const Algebra>(build_rw(1, 0));
    const ConfSpace& cs = A->cs;
    Poly d = Poly::var(cs.var(DEL, 1)), l = Poly::var(cs.var(LAM, 1));
    ConformalModule M = zero_module(A, {"v"}, {0});
    vec_add(M.action[0][0], 0, d + l);
    ConformalModule MM = zero_module(A, {"v1", "v2"}, {0, 0});
    vec_add(MM.action[0][0], 0, d + l);
    vec_add(MM.action[0][1], 1, d + l);
    ModuleMap T{&MM, &M, 0, {basis_vec(0), basis_vec(0)}};
    ConformalModule Md = dual_module(M), MMd = dual_module(MM);
    ModuleMap Ts = dual_morphism(T, MMd, Md);
    if (!check_morphism(T).pass || !is_surjective(T, 3)) R.fail("toy map is not a surjective morphism");
    if (!check_morphism(Ts).pass) R.fail("dual of the toy map is not a morphism");
    if (!is_injective(Ts, 3)) R.fail("dual of a surjective map is not injective");

    // composition on maps between modules with zero action, all parities
    std::mt19937_64 rng(opt.seed);
    ConformalModule P = zero_module(A, {"e0", "e1"}, {0, 1}), Q = P, Rm = zero_module(A, {"e0", "e1"}, {1, 0});
    ConformalModule Pd = dual_module(P), Qd = dual_module(Q), Rd = dual_module(Rm);
    int comps = 0;
    for (int t = 0; t < 25; ++t)
        for (int pS = 0; pS <= 1; ++pS)
            for (int pT = 0; pT <= 1; ++pT) {
                const ConformalModule& mid = pT ? Rm : Q;
                const ConformalModule& midd = pT ? Rd : Qd;
                const ConformalModule& tgt = (pS ^ pT) ? Rm : Q;
                const ConformalModule& tgtd = (pS ^ pT) ? Rd : Qd;
                ModuleMap Tm{&P, &mid, pT, {}}, Sm{&mid, &tgt, pS, {}};
                for (int k = 0; k < 2; ++k) {
                    Vec a, b;
                    vec_add(a, k, random_poly(rng, cs, {DEL}, 2, 2));
                    vec_add(b, k, random_poly(rng, cs, {DEL}, 2, 2));
                    Tm.images.push_back(a);
                    Sm.images.push_back(b);
                }
                ModuleMap lhs = compose(dual_morphism(Tm, Pd, midd), dual_morphism(Sm, midd, tgtd));
                ModuleMap rhs = dual_morphism(compose(Sm, Tm), Pd, tgtd);
                if (!maps_equal(lhs, rhs, -sgn(pS & pT)))
                    R.fail("T* S* != -(-1)^{p(S)p(T)} (S T)* for parities " + std::to_string(pS) + std::to_string(pT));
                ++comps;
            }
    R.notes.push_back(std::to_string(comps) +
                      " compositions: T* S* = -(-1)^{p(S)p(T)} (S T)*, the sign forced by (T* f)_l m = -(-1)^{p(T)p(f)} f_l T(m)");
    return R;
}

// ---- 8: property suites ----

int bubble_sign(const VarSpace& vs, std::vector<int> f) {
    int s = 1;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j + 1 < f.size() - i; ++j)
            if (f[j] > f[j + 1]) {
                if (vs.odd[f[j]] && vs.odd[f[j + 1]]) s = -s;
                std::swap(f[j], f[j + 1]);
            }
    for (std::size_t i = 1; i < f.size(); ++i)
        if (f[i] == f[i - 1] && vs.odd[f[i]]) return 0;
    return s;
}

Report properties(const AcceptanceOptions& opt) {
    Report R = start(8, "property suites");
    constexpr int N = 1000;
    std::mt19937_64 rng(opt.seed);
    ConfSpace cs({2, 2});
    int bad = 0;
    for (int t = 0; t < N; ++t) {
        Monomial a = random_mono(rng, cs, {LAM, MU, YV, DEL}, 4), b = random_mono(rng, cs, {LAM, MU, YV, DEL}, 4);
        auto f = cs.vs.factors(a), fb = cs.vs.factors(b);
        f.insert(f.end(), fb.begin(), fb.end());
        Poly ab = mul(cs.vs, Poly(a, 1), Poly(b, 1)), ba = mul(cs.vs, Poly(b, 1), Poly(a, 1));
        int want = bubble_sign(cs.vs, f);
        bool ok = want == 0 ? ab.is_zero() : (ab.size() == 1 && ab.begin()->second == Rational(want));
        ok = ok && ab == ba * Rational(sgn(cs.vs.parity(a) & cs.vs.parity(b)));
        if (!ok) ++bad;
    }
    if (bad) R.fail("supercommutativity: " + std::to_string(bad) + " failures");
    R.dims["supercommutativity"] = std::to_string(N);

    bad = 0;
    std::uniform_int_distribution<int> vpick(0, cs.vs.n - 1);
    for (int t = 0; t < N;) {
        Poly x = random_poly(rng, cs, {LAM, DEL}, 3, 1), y = random_poly(rng, cs, {LAM, DEL}, 3, 3);
        int px = parity_of(cs.vs, x);
        if (px < 0) continue;
        ++t;
        int v = vpick(rng);
        Poly rhs = mul(cs.vs, derive(cs.vs, v, x), y), t2 = mul(cs.vs, x, derive(cs.vs, v, y));
        rhs += (cs.vs.odd[v] && px) ? -t2 : t2;
        if (derive(cs.vs, v, mul(cs.vs, x, y)) != rhs) ++bad;
    }
    if (bad) R.fail("Leibniz: " + std::to_string(bad) + " failures");
    R.dims["Leibniz"] = std::to_string(N);

    bad = 0;
    std::vector<VarSpec> specs{{1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}, {2, 2}};
    for (int t = 0; t < N; ++t) {
        VarSpec sp = specs[rng() % specs.size()];
        ConfSpace c2(sp);
        IndexSeq raw;
        int len = int(rng() % 5);
        for (int k = 0; k < len; ++k) raw.push_back(1 + int(rng() % sp.n()));
        auto can = canonical_index(sp, raw);
        if (can.sign == 0) {
            --t;
            continue;
        }
        const IndexSeq& k = can.sorted;
        std::vector<Poly> sum;
        for (int i = 1; i <= sp.n(); ++i) sum.push_back(Poly::var(c2.var(LAM, i)) + Poly::var(c2.var(MU, i)));
        Poly want = c2.seq_product(sum, k), got;
        Rational fk(seq_stats(sp, k).f);
        for (auto& s : shift_split(sp, k)) {
            Rational c = fk / Rational(seq_stats(sp, s.I).f * seq_stats(sp, s.R).f);
            got += mul(c2.vs, c2.seq_poly(LAM, s.I), c2.seq_poly(MU, s.R)) * (c * Rational(s.sign));
        }
        if (got != want) ++bad;
    }
    if (bad) R.fail("shift_split: " + std::to_string(bad) + " failures");
    R.dims["shift_split"] = std::to_string(N);

    // PBW: x y - (-1)^{p(x)p(y)} y x = [x, y] inside random words, normal forms in the basis
    bad = 0;
    {
        std::vector<std::unique_ptr<AnnAlgebra>> gs;
        for (const char* nm : {"RW(1,2)", "K(1,3)", "RE36"}) gs.push_back(std::make_unique<AnnAlgebra>(build_by_name(nm)));
        std::vector<VermaModule> Vs;
        for (auto& g : gs) Vs.push_back(build_verma(*g, trivial_g0(*g)));
        for (int t = 0; t < N; ++t) {
            std::size_t w = rng() % gs.size();
            auto& g = *gs[w];
            std::vector<AnnSym> letters;
            for (int d : {-1, -2, -3})
                for (auto& s : g.graded_basis(d)->basis) letters.push_back(s);
            int L = 2 + int(rng() % 4);
            std::vector<AnnElement> word;
            for (int k = 0; k < L; ++k) word.push_back({{letters[rng() % letters.size()], 1}});
            int p = int(rng() % (L - 1));
            auto swapped = word, merged = word;
            std::swap(swapped[p], swapped[p + 1]);
            merged[p] = g.bracket(word[p], word[p + 1]);
            merged.erase(merged.begin() + p + 1);
            Vec lhs = pbw_normalize(Vs[w], word);
            for (auto& [k, P] : lhs)
                if (k >= Vs[w].module.rank()) ++bad;
            vec_add(lhs, pbw_normalize(Vs[w], swapped), -sgn(g.parity(word[p]) & g.parity(word[p + 1])));
            if (!merged[p].empty()) vec_add(lhs, pbw_normalize(Vs[w], merged), -1);
            if (!vec_is_zero(lhs)) ++bad;
        }
    }
    if (bad) R.fail("PBW confluence: " + std::to_string(bad) + " failures");
    R.dims["PBW"] = std::to_string(N);

    bad = 0;
    {
        std::vector<std::unique_ptr<AnnAlgebra>> gs;
        for (auto A : {build_rw(1, 0), build_rw(1, 1), build_kn(2), build_rw(2, 0)}) gs.push_back(std::make_unique<AnnAlgebra>(A));
        for (int t = 0; t < N; ++t) {
            auto& g = *gs[rng() % gs.size()];
            int cutoff = 1 + int(rng() % 3);
            Vec a = random_elem(rng, g.conf(), int(rng() % 2), {DEL}, 1, 2);
            Vec b = random_elem(rng, g.conf(), int(rng() % 2), {DEL}, 1, 2);
            auto r = embedding_bracket_residual(g, a, b, cutoff);
            if (!r.empty()) {
                ++bad;
                R.fail("lambda-bracket identity on " + g.name() + ": " + series_str(g, r));
            }
        }
    }
    if (bad) R.fail("lambda-bracket identity: " + std::to_string(bad) + " failures");
    R.dims["lambda-bracket identity"] = std::to_string(N);
    return R;
}

// ---- 9 ----

Report dsl(const AcceptanceOptions& opt) {
    Report R = start(9, "DSL round trip and fuzzing");
    std::vector<std::string> names{"RW(1,0)", "RW(0,1)", "RW(1,1)", "RW(2,1)", "RW(1,2)", "RW(3,0)", "K(1,2)", "K(1,3)",
                                   "K(1,4)",  "RE36",    "RE36-printed", "RE38", "RE510", "RE510-ambient"};
    for (auto& nm : names) {
        Algebra A = build_by_name(nm);
        try {
            std::string why;
            if (!same_presentation(A, parse_algebra(print_algebra(A)), &why)) R.fail(nm + ": round trip differs at " + why);
        } catch (const std::exception& e) {
            R.fail(nm + ": " + e.what());
        }
    }
    std::mt19937_64 rng(opt.seed);
    std::vector<std::string> seeds;
    for (const char* nm : {"RW(1,0)", "RW(1,1)", "K(1,2)", "RW(2,1)"}) seeds.push_back(print_algebra(build_by_name(nm)));
    AnnAlgebra w(build_rw(1, 1));
    std::string mod = print_g0_module(w, adjoint_g0(w, -2));
    int parsed = 0, diagnosed = 0;
    constexpr int N = 10000;
    for (int t = 0; t < N; ++t) {
        bool module = t % 5 == 4;
        std::string text;
        if (t % 10 == 9) {
            int L = int(rng() % 80);
            for (int k = 0; k < L; ++k) text += char(rng() % 256);
        } else {
            text = mutate_text(rng, module ? mod : seeds[rng() % seeds.size()]);
        }
        try {
            if (module) parse_g0_module(text, w);
            else parse_algebra(text);
            ++parsed;
        } catch (const ParseError& e) {
            ++diagnosed;
        } catch (const std::exception& e) {
            R.fail(std::string("undiagnosed failure: ") + e.what());
        }
    }
    R.dims["round trips"] = std::to_string(names.size());
    R.dims["fuzz cases"] = std::to_string(N);
    R.dims["fuzz diagnosed"] = std::to_string(diagnosed);
    R.dims["fuzz parsed"] = std::to_string(parsed);
    return R;
}

}  // namespace

std::vector<Report> run_acceptance(const AcceptanceOptions& opt) {
    std::vector<Report> out;
    auto want = [&](int n) { return opt.only.empty() || std::find(opt.only.begin(), opt.only.end(), n) != opt.only.end(); };
    auto run = [&](int n, auto fn) {
        if (!want(n)) return;
        auto t0 = std::chrono::steady_clock::now();
        Report r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r.check = "criterion " + std::to_string(n);
            r.fail(std::string("exception: ") + e.what());
        }
        std::ostringstream s;
        s.precision(3);
        s << std::fixed << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s";
        r.notes.push_back(s.str());
        if (opt.on_result) opt.on_result(r);
        out.push_back(std::move(r));
    };
    run(1, [] { return axioms(); });
    run(2, [] { return e510_dims(); });
    run(3, [&] { return realizations(opt.threads); });
    run(4, [] { return shift_chars(); });
    std::vector<Case> cases;
    std::vector<VermaModule> built;
    if (want(5) || want(6) || want(7)) cases = duality_cases(opt.slow);
    run(5, [&] { return duality(cases, opt); });
    if (want(7) && !want(6)) {
        for (auto& c : cases) built.push_back(build_verma(*c.g, c.F));
    }
    run(6, [&] { return restriction(cases, built, opt); });
    run(7, [&] { return morphisms(built, opt); });
    run(8, [&] { return properties(opt); });
    run(9, [&] { return dsl(opt); });
    return out;
}

}  // namespace lcsa
