#include "doctest.h"
#include "helpers.hpp"

#include "lcsa/superpoly.hpp"

using namespace lcsa;
using testutil::kSeed;

namespace {

// reference sign: bubble-sort the factor list, counting odd-odd swaps
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

Poly lam(const ConfSpace& cs, int i) { return Poly::var(cs.var(LAM, i)); }
Poly del(const ConfSpace& cs, int i) { return Poly::var(cs.var(DEL, i)); }

}  // namespace

TEST_CASE("canonical index examples") {
    VarSpec sp{2, 3};
    auto c = canonical_index(sp, {2, 3, 2, 1, 5, 4});
    CHECK(c.sign == -1);
    CHECK(c.sorted == IndexSeq{1, 2, 2, 3, 4, 5});
    auto st = seq_stats(sp, {2, 3, 2, 1, 5, 4});
    CHECK(st.f == 2);
    CHECK(st.p == 1);

    auto e = canonical_index(sp, {});
    CHECK(e.sign == 1);
    CHECK(e.sorted.empty());

    CHECK(canonical_index({1, 2}, {2, 2}).sign == 0);
    CHECK_THROWS_AS(canonical_index({1, 2}, {4}), InputError);
}

TEST_CASE("lambda_K for the worked sequence is -l1 l2^2 l3 l4 l5") {
    ConfSpace cs({2, 3});
    Poly got = cs.seq_product(cs.family_vars(LAM), {2, 3, 2, 1, 5, 4});
    Poly want = mul(cs.vs, mul(cs.vs, mul(cs.vs, mul(cs.vs, lam(cs, 1), mul(cs.vs, lam(cs, 2), lam(cs, 2))), lam(cs, 3)),
                               lam(cs, 4)),
                    lam(cs, 5));
    CHECK(got == -want);
}

TEST_CASE("seq_stats") {
    CHECK(seq_stats({1, 0}, {1, 1, 1}).f == 6);
    CHECK(seq_stats({1, 0}, {1, 1, 1}).p == 0);
    CHECK(seq_stats({1, 0}, {1, 1, 1}).eta == 1);
    auto s = seq_stats({2, 2}, {3, 4});
    CHECK(s.f == 1);
    CHECK(s.p == 0);
    CHECK(s.eta == -1);
    // q = 3: 1+2+3 = 6, even
    CHECK(seq_stats({0, 3}, {1, 2, 3}).eta == 1);
    CHECK(seq_stats({0, 3}, {1}).eta == -1);
}

TEST_CASE("poly_mul examples") {
    ConfSpace cs({2, 2});  // indices 3, 4 odd
    CHECK(mul(cs.vs, lam(cs, 4), lam(cs, 4)).is_zero());
    CHECK(mul(cs.vs, lam(cs, 4), lam(cs, 3)) == -mul(cs.vs, lam(cs, 3), lam(cs, 4)));
    Poly a = lam(cs, 1) + del(cs, 1), b = lam(cs, 1) - del(cs, 1);
    Poly want = mul(cs.vs, lam(cs, 1), lam(cs, 1)) - mul(cs.vs, del(cs, 1), del(cs, 1));
    CHECK(mul(cs.vs, a, b) == want);
}

TEST_CASE("poly_derive examples") {
    ConfSpace cs({2, 2});
    Poly l1 = lam(cs, 1);
    CHECK(derive(cs.vs, cs.var(LAM, 1), mul(cs.vs, l1, mul(cs.vs, l1, l1))) == mul(cs.vs, l1, l1) * Rational(3));
    CHECK(derive(cs.vs, cs.var(LAM, 4), mul(cs.vs, lam(cs, 3), lam(cs, 4))) == -lam(cs, 3));
    CHECK(derive(cs.vs, cs.var(LAM, 2), l1).is_zero());
}

TEST_CASE("shift_split examples") {
    VarSpec sp{1, 1};
    auto s = shift_split(sp, {1, 1});
    REQUIRE(s.size() == 3);
    for (auto& x : s) CHECK(x.sign == 1);
    auto e = shift_split(sp, {});
    REQUIRE(e.size() == 1);
    CHECK(e[0].I.empty());
    CHECK(e[0].R.empty());
    auto o = shift_split(sp, {2});
    CHECK(o.size() == 2);
    for (auto& x : o) CHECK(x.sign == 1);
}

TEST_CASE("coeff_extract examples") {
    ConfSpace cs({2, 2});
    Vec v;
    vec_add(v, 0, lam(cs, 1) + Poly(Rational(2)));
    auto r = coeff_extract(cs, v, {1});
    CHECK(r.size() == 1);
    CHECK(r[0] == Poly(Rational(1)));
    Vec w;
    vec_add(w, 0, mul(cs.vs, lam(cs, 1), lam(cs, 1)));
    CHECK(coeff_extract(cs, w, {1, 1})[0] == Poly(Rational(2)));
    Vec u;
    vec_add(u, 0, -mul(cs.vs, lam(cs, 3), lam(cs, 4)));
    CHECK_THROWS_AS(coeff_extract(cs, u, {4, 3}), InputError);
    CHECK(coeff_extract(cs, u, {3, 4})[0] == Poly(Rational(-1)));
}

TEST_CASE("subst_skew examples") {
    ConfSpace cs({1, 0});
    Vec v;
    vec_add(v, 0, lam(cs, 1));
    Vec w = subst_skew(cs, v);
    CHECK(w[0] == -(lam(cs, 1) + del(cs, 1)));
    Vec c;
    vec_add(c, 0, Poly(Rational(3)));
    CHECK(subst_skew(cs, c) == c);
    Vec sq;
    vec_add(sq, 0, mul(cs.vs, lam(cs, 1), lam(cs, 1)));
    Poly s = lam(cs, 1) + del(cs, 1);
    CHECK(subst_skew(cs, sq)[0] == mul(cs.vs, s, s));
}

TEST_CASE("property: monomial products match a bubble-sort oracle and supercommute") {
    std::mt19937_64 rng(kSeed);
    ConfSpace cs({2, 2});
    for (int t = 0; t < 2000; ++t) {
        Monomial a = testutil::random_mono(rng, cs, {LAM, MU, YV, DEL}, 4);
        Monomial b = testutil::random_mono(rng, cs, {LAM, MU, YV, DEL}, 4);
        auto fa = cs.vs.factors(a), fb = cs.vs.factors(b);
        std::vector<int> f = fa;
        f.insert(f.end(), fb.begin(), fb.end());
        Poly ab = mul(cs.vs, Poly(a, 1), Poly(b, 1));
        int want = bubble_sign(cs.vs, f);
        if (want == 0) {
            CHECK(ab.is_zero());
            continue;
        }
        REQUIRE(ab.size() == 1);
        CHECK(ab.begin()->second == Rational(want));
        Poly ba = mul(cs.vs, Poly(b, 1), Poly(a, 1));
        int k = (cs.vs.parity(a) && cs.vs.parity(b)) ? -1 : 1;
        CHECK(ab == ba * Rational(k));
        // degree additivity
        CHECK(cs.vs.degree(ab.begin()->first) == cs.vs.degree(a) + cs.vs.degree(b));
    }
}

TEST_CASE("property: super-Leibniz for derivations") {
    std::mt19937_64 rng(kSeed + 1);
    ConfSpace cs({2, 2});
    std::uniform_int_distribution<int> vpick(0, cs.vs.n - 1);
    for (int t = 0; t < 1500; ++t) {
        Poly x = testutil::random_poly(rng, cs, {LAM, DEL}, 3, 1);
        Poly y = testutil::random_poly(rng, cs, {LAM, DEL}, 3, 3);
        int v = vpick(rng);
        int px = parity_of(cs.vs, x);
        if (px < 0) continue;
        Poly lhs = derive(cs.vs, v, mul(cs.vs, x, y));
        Poly rhs = mul(cs.vs, derive(cs.vs, v, x), y);
        Poly t2 = mul(cs.vs, x, derive(cs.vs, v, y));
        rhs += (cs.vs.odd[v] && px) ? -t2 : t2;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("property: canonical_index is idempotent and permutation invariant") {
    std::mt19937_64 rng(kSeed + 2);
    VarSpec sp{2, 3};
    std::uniform_int_distribution<int> len(0, 6), ent(1, 5);
    for (int t = 0; t < 2000; ++t) {
        IndexSeq k;
        int l = len(rng);
        for (int i = 0; i < l; ++i) k.push_back(ent(rng));
        auto c = canonical_index(sp, k);
        if (c.sign == 0) continue;
        auto c2 = canonical_index(sp, c.sorted);
        CHECK(c2.sign == 1);
        CHECK(c2.sorted == c.sorted);
        IndexSeq p = k;
        std::shuffle(p.begin(), p.end(), rng);
        auto s1 = seq_stats(sp, k), s2 = seq_stats(sp, p);
        CHECK(s1.f == s2.f);
        CHECK(s1.p == s2.p);
        CHECK(s1.eta == s2.eta);
        // sign of the permutation agrees with reordering lambda_K
        ConfSpace cs(sp);
        CHECK(cs.seq_product(cs.family_vars(LAM), k) == cs.seq_poly(LAM, c.sorted, c.sign));
    }
}

TEST_CASE("exhaustive: shift_split reassembles (lambda+mu)_K") {
    for (VarSpec sp : {VarSpec{1, 0}, VarSpec{0, 1}, VarSpec{1, 1}, VarSpec{2, 0}, VarSpec{0, 2}, VarSpec{2, 1},
                       VarSpec{1, 2}, VarSpec{2, 2}}) {
        ConfSpace cs(sp);
        std::vector<Poly> sum;
        for (int i = 1; i <= sp.n(); ++i) sum.push_back(lam(cs, i) + Poly::var(cs.var(MU, i)));
        for (int len = 0; len <= 4; ++len)
            for (auto& k : canonical_seqs(sp, len)) {
                Poly want = cs.seq_product(sum, k);
                Poly got;
                Rational fk(seq_stats(sp, k).f);
                for (auto& s : shift_split(sp, k)) {
                    Rational c = fk / Rational(seq_stats(sp, s.I).f * seq_stats(sp, s.R).f);
                    got += mul(cs.vs, cs.seq_poly(LAM, s.I), cs.seq_poly(MU, s.R)) * (c * Rational(s.sign));
                }
                CHECK(got == want);
            }
    }
}

TEST_CASE("subst with odd variables is a homomorphism") {
    std::mt19937_64 rng(kSeed + 3);
    ConfSpace cs({1, 2});
    std::vector<Poly> img;
    for (int i = 1; i <= 3; ++i) img.push_back(-(lam(cs, i) + del(cs, i)));
    auto images = cs.family_images(LAM, img);
    for (int t = 0; t < 1000; ++t) {
        Poly x = testutil::random_poly(rng, cs, {LAM, DEL}, 3, 2);
        Poly y = testutil::random_poly(rng, cs, {LAM, DEL}, 3, 2);
        CHECK(subst(cs.vs, mul(cs.vs, x, y), images) == mul(cs.vs, subst(cs.vs, x, images), subst(cs.vs, y, images)));
    }
}
