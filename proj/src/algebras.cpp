#include "lcsa/algebras.hpp"

#include <algorithm>
#include <bit>
#include <regex>

namespace lcsa {

int perm_sign(const std::vector<int>& p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (p[i] == p[j]) return 0;
            if (p[i] > p[j]) s = -s;
        }
    return s;
}

int third3(int i, int j) { return 6 - i - j; }

int eps3(int i, int j) {
    if (i == j) return 0;
    return perm_sign({i, j, third3(i, j)});
}

namespace sl2 {

// E=0, F=1, H=2
std::array<Rational, 3> bracket(int x, int y) {
    std::array<Rational, 3> r{};
    if (x == 0 && y == 1) r[2] = 1;
    if (x == 1 && y == 0) r[2] = -1;
    if (x == 2 && y == 0) r[0] = 2;
    if (x == 0 && y == 2) r[0] = -2;
    if (x == 2 && y == 1) r[1] = -2;
    if (x == 1 && y == 2) r[1] = 2;
    return r;
}

std::array<Rational, 2> act(int x, int v) {
    std::array<Rational, 2> r{};
    if (x == 0 && v == 1) r[0] = 1;
    if (x == 1 && v == 0) r[1] = 1;
    if (x == 2) r[v] = v == 0 ? 1 : -1;
    return r;
}

std::array<Rational, 3> sym(int j, int k) {
    std::array<Rational, 3> r{};
    if (j == 0 && k == 0) r[0] = 2;
    if (j == 1 && k == 1) r[1] = -2;
    if (j != k) r[2] = -1;
    return r;
}

Rational wedge(int j, int k) { return Rational(k - j); }

Rational trace(int x, int y) {
    if ((x == 0 && y == 1) || (x == 1 && y == 0)) return 1;
    if (x == 2 && y == 2) return 2;
    return 0;
}

}  // namespace sl2

namespace {

struct Ctx {
    const ConfSpace& cs;
    Poly l(int i) const { return Poly::var(cs.var(LAM, i)); }
    Poly d(int i) const { return Poly::var(cs.var(DEL, i)); }
    Poly k(const Rational& c) const { return Poly(c); }
    Poly m(const Poly& a, const Poly& b) const { return mul(cs.vs, a, b); }
    Poly m(const Poly& a, const Poly& b, const Poly& c) const { return m(m(a, b), c); }
};

void put(Vec& v, int g, const Poly& p, int sign = 1) {
    if (sign == 0) return;
    vec_add(v, g, sign > 0 ? p : -p);
}

Algebra make(const std::string& name, const std::string& fam, VarSpec spec) {
    Algebra A;
    A.name = name;
    A.family = fam;
    A.cs = ConfSpace(spec);
    return A;
}

}  // namespace

Algebra build_rw(int r, int s) {
    if (r < 0 || s < 0 || r + s < 1) throw InputError("RW(r,s) needs r+s >= 1");
    if (r + s > 8) throw InputError("RW(r,s) supports r+s <= 8");
    Algebra A = make("RW(" + std::to_string(r) + "," + std::to_string(s) + ")", "RW", {r, s});
    const int n = r + s;
    for (int i = 1; i <= n; ++i) A.gens.push_back({"a" + std::to_string(i), A.cs.spec.parity(i), -2});
    std::vector<int> par;
    for (auto& g : A.gens) par.push_back(g.parity);
    Ctx c{A.cs};
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Vec v;
            put(v, j - 1, c.d(i) + c.l(i));
            Vec ai;
            put(ai, i - 1, c.k(1));
            vec_add(v, vec_right(A.vs(), ai, c.l(j), par));
            A.table[{i - 1, j - 1}] = v;
        }
    A.finalize();
    return A;
}

namespace {

std::string xi_name(unsigned mask) {
    if (!mask) return "one";
    std::string s = "xi";
    for (int i = 0; i < 32; ++i)
        if (mask >> i & 1u) s += std::to_string(i + 1);
    return s;
}

// sign of xi_A xi_B brought to ascending order, 0 if they overlap
int grass_sign(unsigned a, unsigned b) {
    if (a & b) return 0;
    int flips = 0;
    for (int i = 0; i < 32; ++i)
        if (b >> i & 1u) flips += std::popcount(a >> (i + 1));
    return (flips & 1) ? -1 : 1;
}

}  // namespace

Algebra build_kn(int n) {
    if (n < 0 || n > 8) throw InputError("K(n) supports 0 <= n <= 8");
    Algebra A = make("K(" + std::to_string(n) + ")", "K", {1, 0});
    std::vector<unsigned> masks;
    for (unsigned m = 0; m < (1u << n); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        for (int i = 0; i < 32; ++i) {
            bool x = a >> i & 1u, y = b >> i & 1u;
            if (x != y) return x;
        }
        return false;
    });
    std::map<unsigned, int> idx;
    for (unsigned m : masks) {
        idx[m] = A.gen_count();
        int k = std::popcount(m);
        A.gens.push_back({xi_name(m), k & 1, k - 2});
    }
    Ctx c{A.cs};
    for (unsigned f : masks)
        for (unsigned g : masks) {
            int k = std::popcount(f), h = std::popcount(g);
            Vec v;
            int s = grass_sign(f, g);
            if (s) {
                put(v, idx[f | g], c.d(1) * Rational(k - 2), s);
                put(v, idx[f | g], c.l(1) * Rational(k + h - 4), s);
            }
            for (int i = 0; i < n; ++i) {
                unsigned bit = 1u << i;
                if (!(f & bit) || !(g & bit)) continue;
                // left derivatives
                int sf = (std::popcount(f & (bit - 1)) & 1) ? -1 : 1;
                int sg = (std::popcount(g & (bit - 1)) & 1) ? -1 : 1;
                unsigned fr = f & ~bit, gr = g & ~bit;
                int sp = grass_sign(fr, gr);
                if (!sp) continue;
                int sign = sf * sg * sp * ((k & 1) ? -1 : 1);
                put(v, idx[fr | gr], c.k(1), sign);
            }
            A.table[{idx[f], idx[g]}] = v;
        }
    A.finalize();
    return A;
}

Algebra build_re36(bool with_sl2_term) {
    Algebra A = make(with_sl2_term ? "RE36" : "RE36-printed", "RE36", {3, 0});
    for (int i = 1; i <= 3; ++i) A.gens.push_back({"a" + std::to_string(i), 0, -2});
    for (int h = 1; h <= 3; ++h)
        for (int k = 1; k <= 2; ++k) A.gens.push_back({"b" + std::to_string(h) + std::to_string(k), 1, -1});
    for (const char* nm : {"E", "F", "H"}) A.gens.push_back({nm, 0, 0});
    auto a = [](int i) { return i - 1; };
    auto b = [](int h, int k) { return 3 + 2 * (h - 1) + (k - 1); };
    auto cg = [](int x) { return 9 + x; };
    Ctx c{A.cs};
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            Vec v;
            put(v, a(j), c.d(i) + c.l(i));
            put(v, a(i), c.l(j));
            A.table[{a(i), a(j)}] = v;
        }
        for (int h = 1; h <= 3; ++h)
            for (int k = 1; k <= 2; ++k) {
                Vec v;
                put(v, b(h, k), c.d(i) + c.l(i) * Rational(3, 2));
                if (i == h)
                    for (int j = 1; j <= 3; ++j) put(v, b(j, k), -c.l(j));
                A.table[{a(i), b(h, k)}] = v;
            }
        for (int x = 0; x < 3; ++x) {
            Vec v;
            put(v, cg(x), c.d(i) + c.l(i));
            A.table[{a(i), cg(x)}] = v;
        }
    }
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int h = 1; h <= 3; ++h)
                for (int k = 1; k <= 2; ++k) {
                    Vec v;
                    int e = eps3(i, h);
                    if (e) {
                        int t = third3(i, h);
                        put(v, a(t), c.k(Rational(j - k) * e));
                        if (with_sl2_term) {
                            auto s = sl2::sym(j - 1, k - 1);
                            Poly coef = (c.l(t) * Rational(2) + c.d(t)) * Rational(e, 2);
                            for (int x = 0; x < 3; ++x)
                                if (!s[x].is_zero()) put(v, cg(x), coef * s[x]);
                        }
                    }
                    A.table[{b(i, j), b(h, k)}] = v;
                }
    for (int x = 0; x < 3; ++x) {
        for (int h = 1; h <= 3; ++h)
            for (int k = 1; k <= 2; ++k) {
                Vec v;
                auto w = sl2::act(x, k - 1);
                for (int q = 0; q < 2; ++q)
                    if (!w[q].is_zero()) put(v, b(h, q + 1), c.k(w[q]));
                A.table[{cg(x), b(h, k)}] = v;
            }
        for (int y = 0; y < 3; ++y) {
            Vec v;
            auto br = sl2::bracket(x, y);
            for (int z = 0; z < 3; ++z)
                if (!br[z].is_zero()) put(v, cg(z), c.k(br[z]));
            A.table[{cg(x), cg(y)}] = v;
        }
    }
    A.finalize();
    return A;
}

Algebra build_re38() {
    Algebra A = make("RE38", "RE38", {3, 0});
    for (int i = 1; i <= 3; ++i) A.gens.push_back({"a" + std::to_string(i), 0, -2});
    for (int i = 1; i <= 3; ++i) A.gens.push_back({"b" + std::to_string(i), 0, 2});
    for (const char* nm : {"E", "F", "H"}) A.gens.push_back({nm, 0, 0});
    for (int l = 1; l <= 2; ++l) A.gens.push_back({"e" + std::to_string(l), 1, -3});
    const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
    for (auto& pr : pairs)
        for (int l = 1; l <= 2; ++l)
            A.gens.push_back({"d" + std::to_string(pr[0]) + std::to_string(pr[1]) + "_" + std::to_string(l), 1, 1});
    auto a = [](int i) { return i - 1; };
    auto b = [](int i) { return 2 + i; };
    auto cg = [](int x) { return 6 + x; };
    auto e = [](int l) { return 8 + l; };
    auto pair_index = [](int j, int k) { return j == 1 ? k - 2 : 2; };  // j<k
    // d_{jkl} as (sign, generator)
    auto d = [&](int j, int k, int l) -> std::pair<int, int> {
        if (j == k) return {0, 0};
        int s = 1;
        if (j > k) {
            std::swap(j, k);
            s = -1;
        }
        return {s, 11 + 2 * pair_index(j, k) + (l - 1)};
    };
    auto putd = [&](Vec& v, int j, int k, int l, const Poly& p) {
        auto [s, g] = d(j, k, l);
        put(v, g, p, s);
    };
    Ctx c{A.cs};
    // adds coef * sum_r lambda_r b_r
    auto lam_b = [&](Vec& v, const Poly& coef) {
        for (int r = 1; r <= 3; ++r) put(v, b(r), c.m(coef, c.l(r)));
    };
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            Vec v;
            put(v, a(j), -(c.l(i) + c.d(i)));
            put(v, a(i), -c.l(j));
            lam_b(v, c.m(c.l(i), c.l(j) + c.d(j)) * Rational(1, 2));
            A.table[{a(i), a(j)}] = v;
        }
        for (int x = 0; x < 3; ++x) {
            Vec v;
            put(v, cg(x), -(c.d(i) + c.l(i)));
            A.table[{a(i), cg(x)}] = v;
        }
        for (int k = 1; k <= 3; ++k) {
            Vec v;
            put(v, b(k), -(c.d(i) + c.l(i)));
            if (k == i) lam_b(v, c.k(1));
            A.table[{a(i), b(k)}] = v;
        }
        for (int j = 1; j <= 2; ++j) {
            Vec v;
            put(v, e(j), -(c.l(i) * Rational(3, 2) + c.d(i)));
            for (int k = 1; k <= 3; ++k)
                for (int r = 1; r <= 3; ++r) putd(v, k, r, j, c.m(c.l(k), c.l(i), c.d(r)) * Rational(-1, 2));
            A.table[{a(i), e(j)}] = v;
        }
        for (auto& pr : pairs)
            for (int l = 1; l <= 2; ++l) {
                int h = pr[0], k = pr[1];
                Vec v;
                putd(v, h, k, l, -(c.l(i) * Rational(3, 2) + c.d(i)));
                if (i == h)
                    for (int j = 1; j <= 3; ++j) putd(v, j, k, l, c.l(j));
                if (i == k)
                    for (int r = 1; r <= 3; ++r) putd(v, r, h, l, -c.l(r));
                A.table[{a(i), d(h, k, l).second}] = v;
            }
    }
    for (int x = 0; x < 3; ++x) {
        for (int j = 1; j <= 3; ++j) A.table[{cg(x), b(j)}] = {};
        for (int y = 0; y < 3; ++y) {
            Vec v;
            auto br = sl2::bracket(x, y);
            for (int z = 0; z < 3; ++z)
                if (!br[z].is_zero()) put(v, cg(z), c.k(br[z]));
            Rational tr = sl2::trace(x, y);
            if (!tr.is_zero()) lam_b(v, c.k(tr));
            A.table[{cg(x), cg(y)}] = v;
        }
        for (int j = 1; j <= 2; ++j) {
            Vec v;
            auto w = sl2::act(x, j - 1);
            for (int q = 0; q < 2; ++q) {
                if (w[q].is_zero()) continue;
                put(v, e(q + 1), c.k(w[q]));
                for (int i = 1; i <= 3; ++i)
                    for (int h = 1; h <= 3; ++h) putd(v, i, h, q + 1, -c.m(c.l(i), c.d(h)) * w[q]);
            }
            A.table[{cg(x), e(j)}] = v;
        }
        for (auto& pr : pairs)
            for (int h = 1; h <= 2; ++h) {
                Vec v;
                auto w = sl2::act(x, h - 1);
                for (int q = 0; q < 2; ++q)
                    if (!w[q].is_zero()) putd(v, pr[0], pr[1], q + 1, c.k(w[q]));
                A.table[{cg(x), d(pr[0], pr[1], h).second}] = v;
            }
    }
    for (int i = 1; i <= 3; ++i) {
        for (int k = 1; k <= 3; ++k) A.table[{b(i), b(k)}] = {};
        for (int k = 1; k <= 2; ++k) {
            Vec v;
            for (int r = 1; r <= 3; ++r) putd(v, r, i, k, -c.l(r));
            A.table[{b(i), e(k)}] = v;
        }
        for (auto& pr : pairs)
            for (int l = 1; l <= 2; ++l) A.table[{b(i), d(pr[0], pr[1], l).second}] = {};
    }
    for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 2; ++j) {
            Vec v;
            for (int h = 1; h <= 3; ++h)
                for (int k = 1; k <= 3; ++k) {
                    int s = eps3(h, k);
                    if (s) put(v, a(third3(h, k)), c.m(c.l(k), c.d(h)) * Rational((j - i) * s));
                }
            A.table[{e(i), e(j)}] = v;
        }
        for (auto& pr : pairs)
            for (int h = 1; h <= 2; ++h) {
                int j = pr[0], k = pr[1], t = third3(j, k);
                Rational s = eps3(j, k);
                Vec v;
                put(v, a(t), c.k(s * Rational(h - i)));
                lam_b(v, (c.l(t) + c.d(t)) * (s * Rational(i - h)));
                auto q = sl2::sym(i - 1, h - 1);
                for (int x = 0; x < 3; ++x)
                    if (!q[x].is_zero()) put(v, cg(x), (c.l(t) * Rational(2) + c.d(t)) * (s * q[x] / Rational(2)));
                A.table[{e(i), d(j, k, h).second}] = v;
            }
    }
    // d-d: move the shared index to the front of both pairs; equal pairs give 0
    for (auto& p1 : pairs)
        for (int h = 1; h <= 2; ++h)
            for (auto& p2 : pairs)
                for (int l = 1; l <= 2; ++l) {
                    Vec v;
                    int j = 0;
                    for (int x : p1)
                        if (x == p2[0] || x == p2[1]) j = j ? -1 : x;
                    if (j > 0) {
                        int k = p1[0] == j ? p1[1] : p1[0];
                        int sign = (p1[0] == j ? 1 : -1) * (p2[0] == j ? 1 : -1);
                        put(v, b(j), c.k(Rational(sign * eps3(j, k) * (l - h))));
                    }
                    A.table[{d(p1[0], p1[1], h).second, d(p2[0], p2[1], l).second}] = v;
                }
    Vec rel;
    for (int k = 1; k <= 3; ++k) put(rel, b(k), c.d(k));
    A.relations.push_back(rel);
    A.mode = Mode::Rewrite;
    A.finalize();
    return A;
}

namespace {

int d5_index(int j, int k) {  // j<k in 1..5
    int idx = 0;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) {
            if (a == j && b == k) return idx;
            ++idx;
        }
    return -1;
}

}  // namespace

Algebra build_re510_ambient() {
    Algebra A = make("RE510-ambient", "RE510-ambient", {5, 0});
    for (int i = 1; i <= 5; ++i) A.gens.push_back({"X" + std::to_string(i), 0, -2});
    for (int j = 1; j <= 5; ++j)
        for (int k = j + 1; k <= 5; ++k) A.gens.push_back({"D" + std::to_string(j) + std::to_string(k), 1, -1});
    auto X = [](int i) { return i - 1; };
    auto D = [](int j, int k) -> std::pair<int, int> {
        if (j == k) return {0, 0};
        if (j < k) return {1, 5 + d5_index(j, k)};
        return {-1, 5 + d5_index(k, j)};
    };
    Ctx c{A.cs};
    auto putD = [&](Vec& v, int j, int k, const Poly& p) {
        auto [s, g] = D(j, k);
        put(v, g, p, s);
    };
    for (int i = 1; i <= 5; ++i) {
        for (int j = 1; j <= 5; ++j) {
            Vec v;
            put(v, X(j), -(c.d(i) + c.l(i)));
            put(v, X(i), -c.l(j));
            A.table[{X(i), X(j)}] = v;
        }
        for (int j = 1; j <= 5; ++j)
            for (int k = j + 1; k <= 5; ++k) {
                Vec v, w;
                putD(v, j, k, -(c.d(i) + c.l(i)));
                putD(w, j, k, -c.l(i));
                if (i == j)
                    for (int h = 1; h <= 5; ++h) {
                        putD(v, h, k, c.l(h));
                        putD(w, h, k, c.l(h) + c.d(h));
                    }
                if (i == k)
                    for (int r = 1; r <= 5; ++r) {
                        putD(v, r, j, -c.l(r));
                        putD(w, r, j, -(c.l(r) + c.d(r)));
                    }
                A.table[{X(i), D(j, k).second}] = v;
                A.table[{D(j, k).second, X(i)}] = w;
            }
    }
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            for (int h = 1; h <= 5; ++h)
                for (int k = h + 1; k <= 5; ++k) {
                    Vec v;
                    std::vector<int> p{i, j, h, k};
                    if (perm_sign(p) != 0) {
                        int t = 15 - i - j - h - k;
                        p.push_back(t);
                        put(v, X(t), c.k(perm_sign(p)));
                    }
                    A.table[{D(i, j).second, D(h, k).second}] = v;
                }
    A.finalize();
    return A;
}

Algebra build_re510() {
    auto amb = std::make_shared<Algebra>(build_re510_ambient());
    Algebra A = make("RE510", "RE510", {5, 0});
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) A.gens.push_back({"a" + std::to_string(i) + std::to_string(j), 0, -4});
    for (int k = 1; k <= 5; ++k) A.gens.push_back({"b" + std::to_string(k), 1, -3});
    auto aa = [](int i, int j) -> std::pair<int, int> {
        if (i == j) return {0, 0};
        if (i < j) return {1, d5_index(i, j)};
        return {-1, d5_index(j, i)};
    };
    auto b = [](int k) { return 9 + k; };
    Ctx c{A.cs};
    auto puta = [&](Vec& v, int i, int j, const Poly& p) {
        auto [s, g] = aa(i, j);
        put(v, g, p, s);
    };
    // embedding into the ambient module
    A.embedding.resize(15);
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            Vec v;
            put(v, j - 1, c.d(i));
            put(v, i - 1, -c.d(j));
            A.embedding[aa(i, j).second] = v;
        }
    for (int k = 1; k <= 5; ++k) {
        Vec v;
        for (int h = 1; h <= 5; ++h) {
            if (h == k) continue;
            int s = h < k ? 1 : -1;
            int g = 5 + (h < k ? d5_index(h, k) : d5_index(k, h));
            put(v, g, c.d(h), s);
        }
        A.embedding[b(k)] = v;
    }
    std::vector<std::pair<int, int>> apairs;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) apairs.push_back({i, j});
    for (auto [i, j] : apairs) {
        for (auto [r, s] : apairs) {
            Vec v;
            puta(v, s, i, c.m(c.l(j), c.l(r)));
            puta(v, j, s, c.m(c.l(i), c.l(r)));
            puta(v, r, j, c.m(c.l(i), c.l(s)));
            puta(v, i, r, c.m(c.l(j), c.l(s)));
            puta(v, r, s, c.m(c.l(i), c.d(j)));
            puta(v, s, r, c.m(c.l(j), c.d(i)));
            A.table[{aa(i, j).second, aa(r, s).second}] = v;
        }
        for (int k = 1; k <= 5; ++k) {
            Vec v;
            put(v, b(k), c.m(c.l(i), c.d(j)) - c.m(c.l(j), c.d(i)));
            Poly coef;
            if (i == k) coef += c.l(j);
            if (j == k) coef -= c.l(i);
            if (!coef.is_zero())
                for (int r = 1; r <= 5; ++r) put(v, b(r), c.m(coef, c.l(r)));
            A.table[{aa(i, j).second, b(k)}] = v;
        }
    }
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            Vec v;
            if (i != j) {
                std::vector<int> rest;
                for (int x = 1; x <= 5; ++x)
                    if (x != i && x != j) rest.push_back(x);
                int h = rest[0], k = rest[1], l = rest[2];
                int e = perm_sign({i, j, h, k, l});
                puta(v, k, l, c.l(h) * Rational(e));
                puta(v, l, h, c.l(k) * Rational(e));
                puta(v, h, k, c.l(l) * Rational(e));
            }
            A.table[{b(i), b(j)}] = v;
        }
    for (int h = 1; h <= 5; ++h)
        for (int i = h + 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j) {
                Vec rel;
                puta(rel, i, j, c.d(h));
                puta(rel, j, h, c.d(i));
                puta(rel, h, i, c.d(j));
                A.relations.push_back(rel);
            }
    Vec rel;
    for (int k = 1; k <= 5; ++k) put(rel, b(k), c.d(k));
    A.relations.push_back(rel);
    A.ambient = amb;
    A.mode = Mode::Ambient;
    A.finalize();
    return A;
}

Algebra build_by_name(const std::string& name) {
    std::smatch m;
    static const std::regex rw(R"(\s*RW\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
    static const std::regex k1(R"(\s*K\(\s*(\d+)\s*\)\s*)");
    static const std::regex k2(R"(\s*K\(\s*1\s*,\s*(\d+)\s*\)\s*)");
    if (std::regex_match(name, m, rw)) return build_rw(std::stoi(m[1]), std::stoi(m[2]));
    if (std::regex_match(name, m, k2)) return build_kn(std::stoi(m[1]));
    if (std::regex_match(name, m, k1)) return build_kn(std::stoi(m[1]));
    if (name == "RE36") return build_re36(true);
    if (name == "RE36-printed") return build_re36(false);
    if (name == "RE38") return build_re38();
    if (name == "RE510") return build_re510();
    if (name == "RE510-ambient") return build_re510_ambient();
    throw InputError("unknown algebra '" + name + "'");
}

std::vector<std::string> builtin_names() {
    return {"RW(r,s)", "K(n)", "RE36", "RE36-printed", "RE38", "RE510", "RE510-ambient"};
}

}  // namespace lcsa
