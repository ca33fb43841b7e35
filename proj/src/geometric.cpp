#include "lcsa/geometric.hpp"

#include "lcsa/algebras.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace lcsa {

namespace {

using Field = std::vector<Poly>;
using Form2 = std::vector<std::vector<Poly>>;  // antisymmetric, full matrix
using SL = std::array<Poly, 3>;                // coefficients of E, F, H

const int kPairs3[3][2] = {{0, 1}, {0, 2}, {1, 2}};

int pair5(int j, int k) {  // 0-based j < k
    int idx = 0;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b, ++idx)
            if (a == j && b == k) return idx;
    return -1;
}

int pair3(int j, int k) {  // 0-based j < k
    for (int p = 0; p < 3; ++p)
        if (kPairs3[p][0] == j && kPairs3[p][1] == k) return p;
    return -1;
}

struct Calc {
    const VarSpace& xs;
    int n;

    Poly pd(int i, const Poly& f) const { return derive(xs, i, f); }
    Poly mul(const Poly& a, const Poly& b) const { return lcsa::mul(xs, a, b); }

    Poly apply(const Field& X, const Poly& f) const {
        Poly r;
        for (int i = 0; i < n; ++i)
            if (!X[i].is_zero()) r += mul(X[i], pd(i, f));
        return r;
    }
    Poly div(const Field& X) const {
        Poly r;
        for (int i = 0; i < n; ++i) r += pd(i, X[i]);
        return r;
    }
    Field grad(const Poly& f) const {
        Field g(n);
        for (int i = 0; i < n; ++i) g[i] = pd(i, f);
        return g;
    }
    Field zero_field() const { return Field(n); }
    Form2 zero_form() const { return Form2(n, std::vector<Poly>(n)); }

    // even variables only below this line
    Field wbr(const Field& X, const Field& Y) const {
        Field r(n);
        for (int j = 0; j < n; ++j) r[j] = apply(X, Y[j]) - apply(Y, X[j]);
        return r;
    }
    Form2 wedge11(const Field& a, const Field& b) const {
        Form2 w = zero_form();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) w[i][j] = mul(a[i], b[j]) - mul(a[j], b[i]);
        return w;
    }
    Form2 scale(const Poly& f, const Form2& w) const {
        Form2 r = zero_form();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!w[i][j].is_zero()) r[i][j] = mul(f, w[i][j]);
        return r;
    }
    Field scale(const Poly& f, const Field& X) const {
        Field r(n);
        for (int i = 0; i < n; ++i) r[i] = mul(f, X[i]);
        return r;
    }
    Field lie1(const Field& X, const Field& a) const {
        Field r(n);
        for (int j = 0; j < n; ++j) {
            r[j] = apply(X, a[j]);
            for (int i = 0; i < n; ++i) r[j] += mul(a[i], pd(j, X[i]));
        }
        return r;
    }
    Form2 lie2(const Field& X, const Form2& w) const {
        Form2 r = zero_form();
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (j == k) continue;
                Poly v = apply(X, w[j][k]);
                for (int i = 0; i < n; ++i) v += mul(w[i][k], pd(j, X[i])) + mul(w[j][i], pd(k, X[i]));
                r[j][k] = v;
            }
        return r;
    }
    Form2 d1(const Field& a) const {
        Form2 w = zero_form();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) w[i][j] = pd(i, a[j]) - pd(j, a[i]);
        return w;
    }
    // three variables: coefficient of dx1 dx2 dx3
    Poly top(const Field& a, const Form2& w) const {
        return mul(a[0], w[1][2]) - mul(a[1], w[0][2]) + mul(a[2], w[0][1]);
    }
    Poly d2(const Form2& w) const { return pd(0, w[1][2]) - pd(1, w[0][2]) + pd(2, w[0][1]); }
    // dx_j ^ dx_k = eps_jk d/dx_t (contraction with the volume form)
    Field to_field(const Form2& w) const { return Field{w[1][2], w[2][0], w[0][1]}; }
    Form2 to_form(const Field& X) const {
        Form2 w = zero_form();
        w[1][2] = X[0];
        w[2][1] = -X[0];
        w[2][0] = X[1];
        w[0][2] = -X[1];
        w[0][1] = X[2];
        w[1][0] = -X[2];
        return w;
    }
    // five variables: the 4-form w1 ^ w2 as a vector field
    Field wedge22(const Form2& a, const Form2& b) const {
        Field r(n);
        std::vector<int> p(5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                for (int k = 0; k < 5; ++k)
                    for (int l = 0; l < 5; ++l) {
                        if (a[i][j].is_zero() || b[k][l].is_zero()) continue;
                        int t = 10 - i - j - k - l;
                        if (t < 0 || t > 4) continue;
                        int s = perm_sign({i, j, k, l, t});
                        if (!s) continue;
                        r[t] += mul(a[i][j], b[k][l]) * Rational(s, 4);
                    }
        return r;
    }
};

void add_form(Form2& acc, const Form2& w, const Rational& c = 1) {
    for (std::size_t i = 0; i < acc.size(); ++i)
        for (std::size_t j = 0; j < acc.size(); ++j)
            if (!w[i][j].is_zero()) acc[i][j] += w[i][j] * c;
}
void add_field(Field& acc, const Field& X, const Rational& c = 1) {
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (!X[i].is_zero()) acc[i] += X[i] * c;
}

// ---- decomposed elements of the E-type algebras ----

struct Parts {
    Field X;
    SL sl;
    Form2 W;                   // E510 odd 2-forms, E38 closed 2-forms
    std::vector<Field> alpha;  // E36: 1-form per e_l
    std::array<Poly, 2> f;     // E38: functions per e_l
    std::vector<Form2> sigma;  // E38: 2-forms per e_l
};

Parts parts_zero(const Calc& C) {
    Parts p;
    p.X = C.zero_field();
    p.W = C.zero_form();
    p.alpha = {C.zero_field(), C.zero_field()};
    p.sigma = {C.zero_form(), C.zero_form()};
    return p;
}

Parts split(const GeoSpace& G, const Calc& C, const GeoElement& u) {
    Parts p = parts_zero(C);
    auto put2 = [](Form2& w, int j, int k, const Poly& c) {
        w[j][k] += c;
        w[k][j] -= c;
    };
    for (auto& [key, c] : u) {
        switch (G.tag) {
            case GeoTag::E510:
                if (key < 5) {
                    p.X[key] += c;
                } else {
                    int idx = key - 5, j = 0, k = 0;
                    for (int a = 0, q = 0; a < 5; ++a)
                        for (int b = a + 1; b < 5; ++b, ++q)
                            if (q == idx) j = a, k = b;
                    put2(p.W, j, k, c);
                }
                break;
            case GeoTag::E36:
                if (key < 3)
                    p.X[key] += c;
                else if (key < 6)
                    p.sl[key - 3] += c;
                else
                    p.alpha[(key - 6) % 2][(key - 6) / 2] += c;
                break;
            case GeoTag::E38:
                if (key < 3)
                    p.X[key] += c;
                else if (key < 6)
                    p.sl[key - 3] += c;
                else if (key < 9)
                    put2(p.W, kPairs3[key - 6][0], kPairs3[key - 6][1], c);
                else if (key < 11)
                    p.f[key - 9] += c;
                else
                    put2(p.sigma[(key - 11) % 2], kPairs3[(key - 11) / 2][0], kPairs3[(key - 11) / 2][1], c);
                break;
            default:
                break;
        }
    }
    return p;
}

GeoElement join(const GeoSpace& G, const Parts& p) {
    GeoElement u;
    int n = G.nx;
    for (int i = 0; i < n; ++i) vec_add(u, i, p.X[i]);
    switch (G.tag) {
        case GeoTag::E510:
            for (int j = 0; j < 5; ++j)
                for (int k = j + 1; k < 5; ++k) vec_add(u, 5 + pair5(j, k), p.W[j][k]);
            break;
        case GeoTag::E36:
            for (int c = 0; c < 3; ++c) vec_add(u, 3 + c, p.sl[c]);
            for (int h = 0; h < 3; ++h)
                for (int l = 0; l < 2; ++l) vec_add(u, 6 + 2 * h + l, p.alpha[l][h]);
            break;
        case GeoTag::E38:
            for (int c = 0; c < 3; ++c) vec_add(u, 3 + c, p.sl[c]);
            for (int q = 0; q < 3; ++q) vec_add(u, 6 + q, p.W[kPairs3[q][0]][kPairs3[q][1]]);
            for (int l = 0; l < 2; ++l) vec_add(u, 9 + l, p.f[l]);
            for (int q = 0; q < 3; ++q)
                for (int l = 0; l < 2; ++l) vec_add(u, 11 + 2 * q + l, p.sigma[l][kPairs3[q][0]][kPairs3[q][1]]);
            break;
        default:
            break;
    }
    return u;
}

Parts even_part(const Calc& C, const Parts& p) {
    Parts e = parts_zero(C);
    e.X = p.X;
    e.sl = p.sl;
    return e;
}

// sl2 helpers on coefficient arrays
SL sl_bracket(const Calc& C, const SL& a, const SL& b) {
    SL r;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            if (a[x].is_zero() || b[y].is_zero()) continue;
            auto c = sl2::bracket(x, y);
            Poly ab = C.mul(a[x], b[y]);
            for (int z = 0; z < 3; ++z)
                if (!c[z].is_zero()) r[z] += ab * c[z];
        }
    return r;
}

// ---- E(5,10): divergence-free fields, closed 2-forms ----

Parts e510_bracket(const Calc& C, const Parts& a, const Parts& b) {
    Parts r = parts_zero(C);
    r.X = C.wbr(a.X, b.X);
    add_form(r.W, C.lie2(a.X, b.W));
    add_form(r.W, C.lie2(b.X, a.W), -1);
    r.X = [&] {
        Field x = r.X;
        add_field(x, C.wedge22(a.W, b.W));
        return x;
    }();
    return r;
}

// ---- E(3,6) ----

std::vector<Field> e36_act(const Calc& C, const Parts& e, const std::vector<Field>& al) {
    std::vector<Field> r{C.zero_field(), C.zero_field()};
    Poly dv = C.div(e.X);
    for (int l = 0; l < 2; ++l) {
        add_field(r[l], C.lie1(e.X, al[l]));
        add_field(r[l], C.scale(dv, al[l]), Rational(-1, 2));
    }
    for (int c = 0; c < 3; ++c) {
        if (e.sl[c].is_zero()) continue;
        for (int v = 0; v < 2; ++v) {
            auto img = sl2::act(c, v);
            for (int w = 0; w < 2; ++w)
                if (!img[w].is_zero()) add_field(r[w], C.scale(e.sl[c], al[v]), img[w]);
        }
    }
    return r;
}

Parts e36_bracket(const Calc& C, const Parts& a, const Parts& b) {
    Parts r = parts_zero(C);
    r.X = C.wbr(a.X, b.X);
    for (int c = 0; c < 3; ++c) r.sl[c] = C.apply(a.X, b.sl[c]) - C.apply(b.X, a.sl[c]);
    SL s = sl_bracket(C, a.sl, b.sl);
    for (int c = 0; c < 3; ++c) r.sl[c] += s[c];
    auto ab = e36_act(C, even_part(C, a), b.alpha);
    auto ba = e36_act(C, even_part(C, b), a.alpha);
    for (int l = 0; l < 2; ++l) {
        add_field(r.alpha[l], ab[l]);
        add_field(r.alpha[l], ba[l], -1);
    }
    for (int l = 0; l < 2; ++l)
        for (int m = 0; m < 2; ++m) {
            Rational w = sl2::wedge(l, m);
            if (!w.is_zero()) add_field(r.X, C.to_field(C.wedge11(a.alpha[l], b.alpha[m])), w);
            Poly t = C.top(b.alpha[m], C.d1(a.alpha[l])) + C.top(a.alpha[l], C.d1(b.alpha[m]));
            if (t.is_zero()) continue;
            auto sym = sl2::sym(l, m);
            for (int c = 0; c < 3; ++c)
                if (!sym[c].is_zero()) r.sl[c] += t * (sym[c] * Rational(1, 2));
        }
    return r;
}

// ---- E(3,8) ----

// even (X, sl, W) acting on odd (f, sigma)
void e38_act(const Calc& C, const Parts& e, const Parts& o, Parts& r, const Rational& sign) {
    Poly dv = C.div(e.X);
    Field ddv = C.grad(dv);
    for (int l = 0; l < 2; ++l) {
        // vector fields
        r.f[l] += (C.apply(e.X, o.f[l]) - C.mul(dv, o.f[l]) * Rational(1, 2)) * sign;
        add_form(r.sigma[l], C.wedge11(ddv, C.grad(o.f[l])), sign * Rational(1, 2));
        add_form(r.sigma[l], C.lie2(e.X, o.sigma[l]), sign);
        add_form(r.sigma[l], C.scale(dv, o.sigma[l]), -sign * Rational(1, 2));
        // closed 2-forms
        add_form(r.sigma[l], C.scale(o.f[l], e.W), sign);
    }
    // sl2 x functions
    for (int c = 0; c < 3; ++c) {
        if (e.sl[c].is_zero()) continue;
        for (int v = 0; v < 2; ++v) {
            auto img = sl2::act(c, v);
            for (int w = 0; w < 2; ++w) {
                if (img[w].is_zero()) continue;
                Rational k = img[w] * sign;
                r.f[w] += C.mul(e.sl[c], o.f[v]) * k;
                add_form(r.sigma[w], C.wedge11(C.grad(e.sl[c]), C.grad(o.f[v])), k);
                add_form(r.sigma[w], C.scale(e.sl[c], o.sigma[v]), k);
            }
        }
    }
}

Parts e38_bracket(const Calc& C, const Parts& a, const Parts& b) {
    Parts r = parts_zero(C);
    // even-even
    r.X = C.wbr(a.X, b.X);
    add_form(r.W, C.wedge11(C.grad(C.div(a.X)), C.grad(C.div(b.X))), Rational(-1, 2));
    for (int c = 0; c < 3; ++c) r.sl[c] = C.apply(a.X, b.sl[c]) - C.apply(b.X, a.sl[c]);
    add_form(r.W, C.lie2(a.X, b.W));
    add_form(r.W, C.lie2(b.X, a.W), -1);
    SL s = sl_bracket(C, a.sl, b.sl);
    for (int c = 0; c < 3; ++c) r.sl[c] += s[c];
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            Rational t = sl2::trace(x, y);
            if (t.is_zero() || a.sl[x].is_zero() || b.sl[y].is_zero()) continue;
            add_form(r.W, C.wedge11(C.grad(a.sl[x]), C.grad(b.sl[y])), t);
        }
    // even-odd and odd-even
    Parts ae = a, be = b;
    e38_act(C, ae, b, r, 1);
    e38_act(C, be, a, r, -1);
    // odd-odd
    for (int l = 0; l < 2; ++l)
        for (int m = 0; m < 2; ++m) {
            Rational w = sl2::wedge(l, m);
            auto sym = sl2::sym(l, m);
            auto fs = [&](const Poly& f, const Form2& sg, const Rational& ww) {
                if (f.is_zero()) return;
                bool zero = true;
                for (auto& row : sg)
                    for (auto& x : row) zero = zero && x.is_zero();
                if (zero) return;
                Field Xs = C.to_field(sg);
                if (!ww.is_zero()) {
                    add_field(r.X, C.scale(f, Xs), ww);
                    add_form(r.W, C.wedge11(C.grad(f), C.grad(C.div(Xs))), ww);
                }
                Poly t = C.mul(f, C.d2(sg)) - C.top(C.grad(f), sg);
                for (int c = 0; c < 3; ++c)
                    if (!sym[c].is_zero()) r.sl[c] += t * (sym[c] * Rational(-1, 2));
            };
            fs(a.f[l], b.sigma[m], w);
            fs(b.f[m], a.sigma[l], -w);
            if (w.is_zero()) continue;
            add_field(r.X, C.to_field(C.wedge11(C.grad(a.f[l]), C.grad(b.f[m]))), w);
            Field X1 = C.to_field(a.sigma[l]), X2 = C.to_field(b.sigma[m]);
            Form2 t = C.lie2(X1, b.sigma[m]);
            add_form(t, C.scale(C.div(X2), a.sigma[l]), -1);
            add_form(r.W, t, w);
        }
    return r;
}

// ---- W(r,s) and K(1,n): super variables, term by term ----

int term_parity(const GeoSpace& G, int key, const Monomial& m) { return G.key_parity[key] ^ G.xs.parity(m); }

GeoElement w_bracket(const GeoSpace& G, const GeoElement& u, const GeoElement& v) {
    GeoElement out;
    const VarSpace& xs = G.xs;
    for (auto& [i, f] : u)
        for (auto& [fm, fc] : f)
            for (auto& [j, g] : v)
                for (auto& [gm, gc] : g) {
                    Poly F(fm, fc), H(gm, gc);
                    int pu = term_parity(G, i, fm), pv = term_parity(G, j, gm);
                    vec_add(out, j, mul(xs, F, derive(xs, i, H)));
                    Poly back = mul(xs, H, derive(xs, j, F));
                    vec_add(out, i, (pu && pv) ? back : -back);
                }
    return out;
}

GeoElement k_bracket(const GeoSpace& G, const GeoElement& u, const GeoElement& v) {
    GeoElement out;
    const VarSpace& xs = G.xs;
    int n = G.nx - 1;
    auto euler2 = [&](const Poly& p) {
        Poly r = p * Rational(2);
        for (int i = 1; i <= n; ++i) r -= mul(xs, Poly::var(i), derive(xs, i, p));
        return r;
    };
    auto tu = u.find(0), tv = v.find(0);
    if (tu == u.end() || tv == v.end()) return out;
    for (auto& [pm, pc] : tu->second)
        for (auto& [qm, qc] : tv->second) {
            Poly phi(pm, pc), psi(qm, qc);
            Poly r = mul(xs, euler2(phi), derive(xs, 0, psi)) - mul(xs, derive(xs, 0, phi), euler2(psi));
            Poly s;
            for (int i = 1; i <= n; ++i) s += mul(xs, derive(xs, i, phi), derive(xs, i, psi));
            r += xs.parity(pm) ? -s : s;
            vec_add(out, 0, r);
        }
    return out;
}

}  // namespace

GeoSpace geo_space(GeoTag tag, const VarSpec& spec, int max_degree) {
    GeoSpace G;
    G.tag = tag;
    G.max_degree = max_degree;
    auto key = [&](std::string name, int parity) {
        G.keys.push_back(std::move(name));
        G.key_parity.push_back(parity);
    };
    auto xvars = [&](int n) {
        for (int i = 1; i <= n; ++i) G.xs.add("x" + std::to_string(i), 0, 2);
        G.nx = n;
    };
    const char* sl[3] = {"E", "F", "H"};
    switch (tag) {
        case GeoTag::W:
            for (int i = 1; i <= spec.n(); ++i) G.xs.add("x" + std::to_string(i), spec.parity(i), 2);
            G.nx = spec.n();
            for (int i = 1; i <= spec.n(); ++i) key("D" + std::to_string(i), spec.parity(i));
            break;
        case GeoTag::K1n:
            G.xs.add("t", 0, 2);
            for (int i = 1; i <= spec.n(); ++i) G.xs.add("xi" + std::to_string(i), 1, 1);
            G.nx = spec.n() + 1;
            key("", 0);
            break;
        case GeoTag::E510:
            xvars(5);
            for (int i = 1; i <= 5; ++i) key("D" + std::to_string(i), 0);
            for (int j = 1; j <= 5; ++j)
                for (int k = j + 1; k <= 5; ++k) key("dx" + std::to_string(j) + "^dx" + std::to_string(k), 1);
            break;
        case GeoTag::E36:
            xvars(3);
            for (int i = 1; i <= 3; ++i) key("D" + std::to_string(i), 0);
            for (auto s : sl) key(s, 0);
            for (int h = 1; h <= 3; ++h)
                for (int l = 1; l <= 2; ++l) key("dx" + std::to_string(h) + "(x)e" + std::to_string(l), 1);
            break;
        case GeoTag::E38:
            xvars(3);
            for (int i = 1; i <= 3; ++i) key("D" + std::to_string(i), 0);
            for (auto s : sl) key(s, 0);
            for (auto& p : kPairs3) key("dx" + std::to_string(p[0] + 1) + "^dx" + std::to_string(p[1] + 1), 0);
            for (int l = 1; l <= 2; ++l) key("e" + std::to_string(l), 1);
            for (auto& p : kPairs3)
                for (int l = 1; l <= 2; ++l)
                    key("dx" + std::to_string(p[0] + 1) + "^dx" + std::to_string(p[1] + 1) + "(x)e" + std::to_string(l), 1);
            break;
    }
    return G;
}

GeoElement geo_bracket(const GeoSpace& G, const GeoElement& u, const GeoElement& v) {
    GeoElement out;
    Calc C{G.xs, G.nx};
    switch (G.tag) {
        case GeoTag::W:
            out = w_bracket(G, u, v);
            break;
        case GeoTag::K1n:
            out = k_bracket(G, u, v);
            break;
        case GeoTag::E510:
            out = join(G, e510_bracket(C, split(G, C, u), split(G, C, v)));
            break;
        case GeoTag::E36:
            out = join(G, e36_bracket(C, split(G, C, u), split(G, C, v)));
            break;
        case GeoTag::E38:
            out = join(G, e38_bracket(C, split(G, C, u), split(G, C, v)));
            break;
    }
    for (auto& [k, p] : out)
        for (auto& [m, c] : p)
            if (G.xs.length(m) > G.max_degree)
                throw TruncationError("bracket exceeds x-degree " + std::to_string(G.max_degree));
    return out;
}

std::string geo_str(const GeoSpace& G, const GeoElement& u) {
    if (vec_is_zero(u)) return "0";
    std::vector<std::string> names = G.keys;
    if (G.tag == GeoTag::K1n) names[0] = "1";
    return vec_str(G.xs, u, names);
}

std::vector<std::string> geo_invariants(const GeoSpace& G, const GeoElement& u) {
    std::vector<std::string> bad;
    Calc C{G.xs, G.nx};
    if (G.tag == GeoTag::E510) {
        Parts p = split(G, C, u);
        if (!C.div(p.X).is_zero()) bad.push_back("nonzero divergence: " + geo_str(G, u));
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                for (int k = j + 1; k < 5; ++k)
                    if (!(C.pd(i, p.W[j][k]) - C.pd(j, p.W[i][k]) + C.pd(k, p.W[i][j])).is_zero())
                        bad.push_back("2-form not closed: " + geo_str(G, u));
    }
    if (G.tag == GeoTag::E38) {
        Parts p = split(G, C, u);
        if (!C.d2(p.W).is_zero()) bad.push_back("2-form not closed: " + geo_str(G, u));
    }
    return bad;
}

// ---- the realization maps ----

std::optional<GeoTag> realization_tag(const Algebra& A) {
    if (A.family == "RW") return GeoTag::W;
    if (A.family == "K") return GeoTag::K1n;
    if (A.family == "RE510") return GeoTag::E510;
    if (A.family == "RE36") return GeoTag::E36;
    if (A.family == "RE38") return GeoTag::E38;
    return std::nullopt;
}

namespace {

// K(1,n) has a single y variable; its odd variables are counted from the generators
VarSpec geo_spec(const AnnAlgebra& g, GeoTag tag) {
    if (tag != GeoTag::K1n) return g.cs().spec;
    VarSpec v;
    v.r = 0;
    v.s = 0;
    while ((std::size_t(1) << v.s) < g.conf().gens.size()) ++v.s;
    return v;
}

}  // namespace

GeoSpace realization_space(const AnnAlgebra& g, int max_degree) {
    auto tag = realization_tag(g.conf());
    if (!tag) throw InputError("no realization declared for " + g.name());
    return geo_space(*tag, geo_spec(g, *tag), max_degree);
}

namespace {

// x^M with M read off the y-part; coefficient c * prod m_i over `lower`, with x^{M - sum lower}
void put_x(GeoElement& out, const AnnAlgebra& g, const AnnSym& s, int key, std::vector<int> lower, const Rational& c,
           int offset = 0) {
    const ConfSpace& cs = g.cs();
    Monomial x;
    Rational k = c;
    std::vector<int> e(cs.spec.n() + 1);
    for (int i = 1; i <= cs.spec.n(); ++i) e[i] = s.y.e[cs.var(YV, i)];
    for (int i : lower) {
        if (e[i] == 0) return;
        k *= e[i];
        --e[i];
    }
    for (int i = 1; i <= cs.spec.n(); ++i) x.e[offset + i - 1] = std::uint8_t(e[i]);
    vec_add(out, key, Poly(x, k));
}

GeoElement realize_sym(const AnnAlgebra& g, const GeoSpace& G, const AnnSym& s) {
    GeoElement out;
    const std::string& nm = g.conf().gens[s.gen].name;
    switch (G.tag) {
        case GeoTag::W:
            put_x(out, g, s, s.gen, {}, -1);
            break;
        case GeoTag::K1n: {
            Monomial x;
            x.e[0] = s.y.e[g.cs().var(YV, 1)];
            if (nm != "one")
                for (std::size_t i = 2; i < nm.size(); ++i) x.e[nm[i] - '0'] = 1;
            vec_add(out, 0, Poly(x, 1));
            break;
        }
        case GeoTag::E510: {
            if (nm[0] == 'a') {
                int i = nm[1] - '0', j = nm[2] - '0';
                put_x(out, g, s, j - 1, {i}, -1);
                put_x(out, g, s, i - 1, {j}, 1);
            } else {
                int k = nm[1] - '0';
                for (int r = 1; r <= 5; ++r) {
                    if (r == k) continue;
                    int a = std::min(k, r), b = std::max(k, r);
                    put_x(out, g, s, 5 + pair5(a - 1, b - 1), {r}, k < r ? 1 : -1);
                }
            }
            break;
        }
        case GeoTag::E36: {
            if (nm[0] == 'a') {
                put_x(out, g, s, nm[1] - '1', {}, -1);
            } else if (nm[0] == 'b') {
                int h = nm[1] - '0', k = nm[2] - '0';
                put_x(out, g, s, 6 + 2 * (h - 1) + (k - 1), {}, 1);
            } else {
                put_x(out, g, s, 3 + (nm == "E" ? 0 : nm == "F" ? 1 : 2), {}, 1);
            }
            break;
        }
        case GeoTag::E38: {
            if (nm[0] == 'a') {
                put_x(out, g, s, nm[1] - '1', {}, 1);
            } else if (nm[0] == 'b') {
                int k = nm[1] - '0';
                // -sum_{r != k} (d_r x^M) dx_r ^ dx_k
                for (int r = 1; r <= 3; ++r) {
                    if (r == k) continue;
                    int a = std::min(k, r), b = std::max(k, r);
                    put_x(out, g, s, 6 + pair3(a - 1, b - 1), {r}, r < k ? -1 : 1);
                }
            } else if (nm[0] == 'e') {
                put_x(out, g, s, 9 + (nm[1] - '1'), {}, 1);
            } else if (nm[0] == 'd') {
                int j = nm[1] - '0', k = nm[2] - '0', l = nm[4] - '0';
                put_x(out, g, s, 11 + 2 * pair3(j - 1, k - 1) + (l - 1), {}, 1);
            } else {
                put_x(out, g, s, 3 + (nm == "E" ? 0 : nm == "F" ? 1 : 2), {}, 1);
            }
            break;
        }
    }
    return out;
}

}  // namespace

GeoElement realize(const AnnAlgebra& g, const GeoSpace& G, const AnnElement& u) {
    GeoElement out;
    for (auto& [s, c] : u) vec_add(out, realize_sym(g, G, s), c);
    return out;
}

Report check_realization(const AnnAlgebra& g, int dmax, const SymMap& map, int threads) {
    Report rep;
    rep.algebra = g.name();
    rep.check = "realization";
    auto tag = realization_tag(g.conf());
    if (!tag) {
        rep.fail("no realization declared for " + g.name());
        return rep;
    }
    int lo = g.min_gen_degree(), hi = dmax - lo;
    GeoSpace G = geo_space(*tag, geo_spec(g, *tag), hi - lo + 6);
    SymMap phi = map ? map : [&](const AnnSym& s) { return realize_sym(g, G, s); };
    auto img = [&](const AnnElement& u) {
        GeoElement out;
        for (auto& [s, c] : u) vec_add(out, phi(s), c);
        return out;
    };
    std::map<int, std::vector<AnnSym>> B;
    for (int d = lo; d <= hi; ++d) {
        auto gb = g.graded_basis(d);
        B[d] = gb->basis;
        // rank of the image equals the dimension
        using Key = std::pair<int, Monomial>;
        SparseEchelon<Key> ech;
        for (auto& s : gb->basis) {
            SparseRow<Key> row;
            for (auto& [k, p] : phi(s))
                for (auto& [m, c] : p) row[{k, m}] = c;
            ech.insert(row);
            for (auto& w : geo_invariants(G, phi(s))) rep.fail("invariant at " + g.str(s) + ": " + w);
        }
        rep.dims[std::to_string(d)] = std::to_string(gb->dim());
        if (int(ech.rank()) != gb->dim())
            rep.fail("degree " + std::to_string(d) + ": image rank " + std::to_string(ech.rank()) + " != dim " +
                     std::to_string(gb->dim()));
        // relations map to zero: every symbol and its normal form agree
        for (auto& s : gb->span) {
            AnnElement one{{s, 1}};
            GeoElement diff = img(one);
            vec_add(diff, img(g.normal_form(one)), -1);
            if (!vec_is_zero(diff)) rep.fail("relation not preserved at " + g.str(s));
        }
    }
    std::vector<std::pair<AnnSym, AnnSym>> pairs;
    for (auto& [d1, b1] : B)
        for (auto& [d2, b2] : B) {
            if (d1 > d2 || d1 + d2 > dmax) continue;
            for (std::size_t i = 0; i < b1.size(); ++i)
                for (std::size_t j = (d1 == d2 ? i : 0); j < b2.size(); ++j) pairs.push_back({b1[i], b2[j]});
        }
    std::mutex mu;
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t k = next++;
            if (k >= pairs.size()) return;
            auto& [u, v] = pairs[k];
            AnnElement uu{{u, 1}}, vv{{v, 1}};
            GeoElement lhs = img(g.bracket(uu, vv));
            GeoElement rhs;
            std::string err;
            try {
                rhs = geo_bracket(G, phi(u), phi(v));
            } catch (const TruncationError& e) {
                err = e.what();
            }
            auto inv = geo_invariants(G, rhs);
            vec_add(lhs, rhs, -1);
            if (!err.empty() || !vec_is_zero(lhs) || !inv.empty()) {
                std::lock_guard<std::mutex> lk(mu);
                if (!err.empty())
                    rep.fail("[" + g.str(u) + ", " + g.str(v) + "]: " + err);
                else if (!vec_is_zero(lhs))
                    rep.fail("[" + g.str(u) + ", " + g.str(v) + "]: difference " + geo_str(G, lhs));
                for (auto& w : inv) rep.fail("[" + g.str(u) + ", " + g.str(v) + "]: " + w);
            }
        }
    };
    int nt = std::max(1, threads);
    std::vector<std::thread> pool;
    for (int t = 1; t < nt; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    rep.notes.push_back(std::to_string(pairs.size()) + " pairs up to total degree " + std::to_string(dmax));
    return rep;
}

}  // namespace lcsa
