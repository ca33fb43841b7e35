#include "lcsa/repmod.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <random>
#include <thread>

namespace lcsa {

namespace {

int sgn(int p) { return p ? -1 : 1; }

int mono_parity(const VarSpace& vs, const Monomial& m) { return vs.parity(m); }

std::vector<Poly> lam(const ConfSpace& cs) { return cs.family_vars(LAM); }
std::vector<Poly> muv(const ConfSpace& cs) { return cs.family_vars(MU); }

std::vector<Poly> sum_vars(const ConfSpace& cs) {
    auto l = cs.family_vars(LAM), m = cs.family_vars(MU);
    for (std::size_t i = 0; i < l.size(); ++i) l[i] += m[i];
    return l;
}

Poly del_shift(const ConfSpace& cs, const Poly& p, const std::vector<Poly>& X, const Rational& ds) {
    std::vector<Poly> img;
    auto d = cs.family_vars(DEL);
    for (std::size_t i = 0; i < d.size(); ++i) img.push_back(d[i] * ds + X[i]);
    return subst(cs.vs, p, cs.family_images(DEL, img));
}

Matrix zeros(int r, int c) { return Matrix(r, std::vector<Rational>(c)); }

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    int n = int(a.size());
    Matrix r = zeros(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < n; ++j)
                if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

void mat_axpy(Matrix& acc, const Matrix& m, const Rational& c) {
    for (std::size_t i = 0; i < acc.size(); ++i)
        for (std::size_t j = 0; j < acc.size(); ++j)
            if (!m[i][j].is_zero()) acc[i][j] += m[i][j] * c;
}

std::string mono_str(const VarSpace& vs, const Monomial& m) {
    std::string s = vs.str(m);
    return s.empty() ? "1" : s;
}

}  // namespace

// ---- conformal modules ----

ConformalModule zero_module(std::shared_ptr<const Algebra> A, std::vector<std::string> basis, std::vector<int> parity) {
    ConformalModule M;
    M.alg = std::move(A);
    M.basis = std::move(basis);
    M.parity = std::move(parity);
    M.action.assign(M.alg->gen_count(), std::vector<Vec>(M.basis.size()));
    return M;
}

Vec basis_vec(int k) {
    Vec v;
    vec_add(v, k, Poly(Rational(1)));
    return v;
}

Vec module_act(const ConformalModule& M, int gen, const std::vector<Poly>& X, const Vec& m) {
    const ConfSpace& cs = M.cs();
    const VarSpace& vs = cs.vs;
    int pa = M.alg->parity[gen];
    auto images = cs.family_images(LAM, X);
    Vec out;
    for (auto& [k, R] : m) {
        if (R.is_zero()) continue;
        Vec P = vec_subst(vs, M.action[gen][k], images);
        if (vec_is_zero(P)) continue;
        for (auto& [mono, c] : R) {
            Poly q = del_shift(cs, Poly(mono, c), X, 1);
            if (pa && mono_parity(vs, mono)) q = -q;
            vec_add(out, vec_left(vs, q, P));
        }
    }
    return out;
}

Vec module_act(const ConformalModule& M, const Vec& a, const std::vector<Poly>& X, const Vec& m) {
    const ConfSpace& cs = M.cs();
    std::vector<Poly> negX;
    for (auto& x : X) negX.push_back(-x);
    Vec out;
    for (auto& [g, Q] : a) {
        Vec r = module_act(M, g, X, m);
        if (vec_is_zero(r)) continue;
        // (s d^b g)_X = s (-X)^b g_X
        std::vector<Poly> img;
        for (auto& x : negX) img.push_back(x);
        Poly q = subst(cs.vs, Q, cs.family_images(DEL, img));
        vec_add(out, vec_left(cs.vs, q, r));
    }
    return out;
}

Vec module_act_ann(const ConformalModule& M, const AnnAlgebra& g, const AnnElement& x, const Vec& m) {
    const ConfSpace& cs = M.cs();
    Vec out;
    std::map<int, Vec> cache;
    for (auto& [s, c] : x) {
        IndexSeq K = cs.seq_of(s.y, YV);
        auto st = seq_stats(cs.spec, K);
        int sK = cs.seq_monomial(LAM, reversed(K)).first;
        auto it = cache.find(s.gen);
        if (it == cache.end()) it = cache.emplace(s.gen, module_act(M, s.gen, lam(cs), m)).first;
        Rational k = c * Rational(sgn(st.p) * sK);
        vec_add(out, coeff_extract(cs, it->second, K), k);
    }
    (void)g;
    return out;
}

std::string module_elem_str(const ConformalModule& M, const Vec& m) {
    if (vec_is_zero(m)) return "0";
    return vec_str(M.cs().vs, m, M.basis);
}

Report residual_module_axioms(const ConformalModule& M) {
    Report rep;
    rep.algebra = M.alg->name;
    rep.check = "module axioms";
    const Algebra& A = *M.alg;
    const ConfSpace& cs = M.cs();
    const VarSpace& vs = cs.vs;
    int n = A.gen_count(), r = M.rank();
    for (int g = 0; g < n; ++g)
        for (int k = 0; k < r; ++k)
            for (auto& [j, P] : M.action[g][k])
                for (auto& [m, c] : P)
                    if ((vs.parity(m) ^ A.parity[g] ^ M.parity[k] ^ M.parity[j]) != 0)
                        rep.fail("M1: parity of " + A.names[g] + " on " + M.basis[k] + " -> " + M.basis[j]);
    for (std::size_t q = 0; q < A.relations.size(); ++q)
        for (int k = 0; k < r; ++k)
            if (!vec_is_zero(module_act(M, A.relations[q], lam(cs), basis_vec(k))))
                rep.fail("relation " + std::to_string(q) + " acts nontrivially on " + M.basis[k]);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Vec ab = bracket(A, gen_elem(A, a), gen_elem(A, b));
            int s = sgn(A.parity[a] & A.parity[b]);
            for (int k = 0; k < r; ++k) {
                Vec ek = basis_vec(k);
                Vec lhs = module_act(M, a, lam(cs), module_act(M, b, muv(cs), ek));
                vec_add(lhs, module_act(M, b, muv(cs), module_act(M, a, lam(cs), ek)), -s);
                vec_add(lhs, module_act(M, ab, sum_vars(cs), ek), -1);
                if (!vec_is_zero(lhs))
                    rep.fail("M2: [" + A.names[a] + ", " + A.names[b] + "] on " + M.basis[k] + ": " +
                             module_elem_str(M, lhs));
            }
        }
    return rep;
}

namespace {

struct MinusTwo {
    std::vector<AnnElement> us;
    Matrix inv;  // coordinates in the degree -2 basis -> u-coefficients
};

MinusTwo minus_two(const AnnAlgebra& g, int hi) {
    auto u = identify_minus_two(g, -3, hi);
    if (!u) throw InputError("degree -2 does not act as the y-derivations");
    MinusTwo r;
    r.us = *u;
    int N = int(u->size());
    Matrix U = zeros(N, N);  // column i: coordinates of u_i
    for (int i = 0; i < N; ++i) {
        auto c = coords(g, -2, (*u)[i]);
        for (int t = 0; t < N; ++t) U[t][i] = c[t];
    }
    r.inv = zeros(N, N);
    for (int t = 0; t < N; ++t) {
        std::vector<Rational> e(N);
        e[t] = 1;
        auto x = solve(U, e);
        if (!x) throw InputError("degree -2 elements u_i are dependent");
        for (int i = 0; i < N; ++i) r.inv[i][t] = (*x)[i];
    }
    return r;
}

std::vector<Rational> u_coeffs(const AnnAlgebra& g, const MinusTwo& m2, const AnnElement& x) {
    auto c = coords(g, -2, x);
    int N = int(c.size());
    std::vector<Rational> out(N);
    for (int i = 0; i < N; ++i)
        for (int t = 0; t < N; ++t) out[i] += m2.inv[i][t] * c[t];
    return out;
}

}  // namespace

Report check_coherent(const ConformalModule& M, const AnnAlgebra& g) {
    Report rep;
    rep.algebra = M.alg->name;
    rep.check = "coherence";
    const ConfSpace& cs = M.cs();
    MinusTwo m2 = minus_two(g, 2);
    const Algebra& A = *M.alg;
    for (int a = 0; a < A.gen_count(); ++a) {
        int L2 = -2 - A.gens[a].degree;
        if (L2 < 0 || L2 % 2) continue;
        for (auto& K : canonical_seqs(cs.spec, L2 / 2)) {
            AnnElement raw = g.elem(K, a);
            AnnElement x = g.normal_form(raw);
            if (raw.empty()) continue;
            auto alpha = u_coeffs(g, m2, x);
            for (int k = 0; k < M.rank(); ++k) {
                Vec lhs = module_act_ann(M, g, raw, basis_vec(k));
                for (int i = 1; i <= cs.spec.n(); ++i)
                    if (!alpha[i - 1].is_zero()) vec_add(lhs, k, Poly::var(cs.var(DEL, i), alpha[i - 1]));
                if (!vec_is_zero(lhs)) rep.fail("y_K " + A.names[a] + " on " + M.basis[k] + ": " + module_elem_str(M, lhs));
            }
        }
    }
    return rep;
}

ConformalModule dual_module(const ConformalModule& M) {
    std::vector<std::string> names;
    for (auto& b : M.basis) names.push_back(b + "*");
    ConformalModule D = zero_module(M.alg, names, M.parity);
    D.name = M.name.empty() ? "" : M.name + "*";
    const ConfSpace& cs = M.cs();
    auto negl = lam(cs);
    for (auto& x : negl) x = -x;
    for (int g = 0; g < M.alg->gen_count(); ++g)
        for (int j = 0; j < M.rank(); ++j)
            for (auto& [i, P] : M.action[g][j]) {
                // coefficient of m_i in a m_j feeds a m_i* on m_j*
                int pi = M.parity[i], pj = M.parity[j];
                Poly q = -del_shift(cs, P, negl, -1);
                if (pi & (pj ^ pi)) q = -q;
                vec_add(D.action[g][i], j, q);
            }
    return D;
}

Report double_dual_check(const ConformalModule& M) {
    Report rep;
    rep.algebra = M.alg->name;
    rep.check = "double dual";
    ConformalModule DD = dual_module(dual_module(M));
    for (int g = 0; g < M.alg->gen_count(); ++g)
        for (int k = 0; k < M.rank(); ++k) {
            Vec want;
            for (auto& [j, P] : M.action[g][k]) vec_add(want, j, P * Rational(sgn(M.parity[j] ^ M.parity[k])));
            Vec diff = DD.action[g][k];
            vec_add(diff, want, -1);
            if (!vec_is_zero(diff)) rep.fail(M.alg->names[g] + " on " + M.basis[k] + "**: " + module_elem_str(M, diff));
        }
    return rep;
}

// ---- module maps ----

Vec map_apply(const ModuleMap& T, const Vec& m) {
    const VarSpace& vs = T.src->cs().vs;
    Vec out;
    for (auto& [k, Q] : m)
        for (auto& [mono, c] : Q) {
            Poly q(mono, c);
            if (T.parity && vs.parity(mono)) q = -q;
            vec_add(out, vec_left(vs, q, T.images[k]));
        }
    return out;
}

ModuleMap compose(const ModuleMap& S, const ModuleMap& T) {
    ModuleMap R;
    R.src = T.src;
    R.dst = S.dst;
    R.parity = S.parity ^ T.parity;
    for (auto& im : T.images) R.images.push_back(map_apply(S, im));
    return R;
}

Report check_morphism(const ModuleMap& T) {
    Report rep;
    rep.check = "morphism";
    rep.algebra = T.src->alg->name;
    const ConfSpace& cs = T.src->cs();
    for (int k = 0; k < T.src->rank(); ++k)
        for (auto& [j, P] : T.images[k])
            for (auto& [m, c] : P)
                if ((cs.vs.parity(m) ^ T.parity ^ T.src->parity[k] ^ T.dst->parity[j]) != 0)
                    rep.fail("parity of the image of " + T.src->basis[k]);
    for (int g = 0; g < T.src->alg->gen_count(); ++g) {
        int s = sgn(T.src->alg->parity[g] & T.parity);
        for (int k = 0; k < T.src->rank(); ++k) {
            Vec lhs = module_act(*T.dst, g, lam(cs), T.images[k]);
            vec_add(lhs, map_apply(T, module_act(*T.src, g, lam(cs), basis_vec(k))), -s);
            if (!vec_is_zero(lhs))
                rep.fail("does not commute with " + T.src->alg->names[g] + " on " + T.src->basis[k]);
        }
    }
    return rep;
}

ModuleMap dual_morphism(const ModuleMap& T, const ConformalModule& src_dual, const ConformalModule& dst_dual) {
    const ConfSpace& cs = T.src->cs();
    auto d = cs.family_vars(DEL);
    std::vector<Poly> neg;
    for (auto& x : d) neg.push_back(-x);
    ModuleMap R;
    R.src = &dst_dual;
    R.dst = &src_dual;
    R.parity = T.parity;
    R.images.assign(T.dst->rank(), Vec{});
    for (int k = 0; k < T.src->rank(); ++k)
        for (auto& [j, P] : T.images[k]) {
            Poly q = -subst(cs.vs, P, cs.family_images(DEL, neg));
            if (T.parity && T.dst->parity[j]) q = -q;
            vec_add(R.images[j], k, q);
        }
    return R;
}

namespace {

std::vector<Monomial> del_monomials(const ConfSpace& cs, int window) {
    std::vector<Monomial> out;
    for (int L = 0; L <= window; ++L)
        for (auto& K : canonical_seqs(cs.spec, L)) {
            auto [s, m] = cs.seq_monomial(DEL, K);
            if (s) out.push_back(m);
        }
    return out;
}

using RowKey = std::pair<int, Monomial>;

SparseRow<RowKey> to_row(const Vec& v) {
    SparseRow<RowKey> r;
    for (auto& [j, P] : v)
        for (auto& [m, c] : P) r[{j, m}] = c;
    return r;
}

}  // namespace

bool is_injective(const ModuleMap& T, int window) {
    const ConfSpace& cs = T.src->cs();
    SparseEchelon<RowKey> ech;
    std::size_t count = 0;
    for (auto& m : del_monomials(cs, window))
        for (int k = 0; k < T.src->rank(); ++k) {
            Vec v;
            vec_add(v, k, Poly(m, 1));
            ech.insert(to_row(map_apply(T, v)));
            ++count;
        }
    return ech.rank() == count;
}

bool is_surjective(const ModuleMap& T, int window) {
    const ConfSpace& cs = T.src->cs();
    SparseEchelon<RowKey> ech;
    for (auto& m : del_monomials(cs, window))
        for (int k = 0; k < T.src->rank(); ++k) {
            Vec v;
            vec_add(v, k, Poly(m, 1));
            ech.insert(to_row(map_apply(T, v)));
        }
    for (int j = 0; j < T.dst->rank(); ++j) {
        auto row = to_row(basis_vec(j));
        ech.reduce(row);
        if (!row.empty()) return false;
    }
    return true;
}

bool maps_equal(const ModuleMap& S, const ModuleMap& T, const Rational& c) {
    if (S.images.size() != T.images.size()) return false;
    for (std::size_t k = 0; k < S.images.size(); ++k) {
        Vec d = S.images[k];
        vec_add(d, T.images[k], -c);
        if (!vec_is_zero(d)) return false;
    }
    return true;
}

// ---- g_0-modules ----

std::vector<Rational> coords(const AnnAlgebra& g, int degree, const AnnElement& x) {
    auto gb = g.graded_basis(degree);
    std::map<AnnSym, int> pos;
    for (int i = 0; i < gb->dim(); ++i) pos[gb->basis[i]] = i;
    std::vector<Rational> c(gb->dim());
    for (auto& [s, v] : g.normal_form(x)) {
        auto it = pos.find(s);
        if (it == pos.end()) throw InputError("element " + g.str(x) + " is not of degree " + std::to_string(degree));
        c[it->second] = v;
    }
    return c;
}

Matrix g0_matrix(const AnnAlgebra& g, const G0Module& F, const AnnElement& x) {
    Matrix r = zeros(F.dim(), F.dim());
    for (auto& [s, c] : g.normal_form(x)) {
        auto it = F.basis_mats.find(s);
        if (it == F.basis_mats.end()) throw InputError("element " + g.str(x) + " is not of degree 0");
        mat_axpy(r, it->second, c);
    }
    return r;
}

G0Module make_g0_module(const AnnAlgebra& g, std::vector<std::string> names, std::vector<int> parity,
                        std::vector<AnnElement> span, std::vector<Matrix> mats) {
    G0Module F;
    F.names = std::move(names);
    F.parity = std::move(parity);
    F.span = std::move(span);
    F.mats = std::move(mats);
    int d = F.dim();
    if (int(F.parity.size()) != d) throw InputError("g0-module: parity list does not match the basis");
    if (F.span.size() != F.mats.size()) throw InputError("g0-module: one matrix per spanning element is required");
    for (std::size_t s = 0; s < F.span.size(); ++s) {
        auto& M = F.mats[s];
        if (int(M.size()) != d) throw InputError("g0-module: matrix " + std::to_string(s) + " has wrong size");
        for (auto& row : M)
            if (int(row.size()) != d) throw InputError("g0-module: matrix " + std::to_string(s) + " has wrong size");
        if (g.degree(F.span[s]).value_or(0) != 0)
            throw InputError("g0-module: spanning element " + g.str(F.span[s]) + " is not of degree 0");
        int px = g.parity(F.span[s]);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (!M[i][j].is_zero() && (px < 0 || (F.parity[i] ^ F.parity[j]) != px))
                    throw InputError("g0-module: matrix of " + g.str(F.span[s]) + " does not respect parity");
    }
    auto gb = g.graded_basis(0);
    int D = gb->dim();
    std::vector<std::vector<Rational>> S;
    for (auto& x : F.span) S.push_back(coords(g, 0, x));
    Matrix St = zeros(D, int(S.size()));
    for (std::size_t s = 0; s < S.size(); ++s)
        for (int t = 0; t < D; ++t) St[t][s] = S[s][t];
    for (int t = 0; t < D; ++t) {
        std::vector<Rational> e(D);
        e[t] = 1;
        auto c = S.empty() ? std::nullopt : solve(St, e);
        if (!c) throw InputError("g0-module: spanning set does not span degree 0 (missing " + g.str(gb->basis[t]) + ")");
        Matrix M = zeros(d, d);
        for (std::size_t s = 0; s < S.size(); ++s)
            if (!(*c)[s].is_zero()) mat_axpy(M, F.mats[s], (*c)[s]);
        F.basis_mats[gb->basis[t]] = M;
    }
    for (std::size_t s = 0; s < S.size(); ++s) {
        Matrix M = zeros(d, d);
        for (int t = 0; t < D; ++t) mat_axpy(M, F.basis_mats[gb->basis[t]], S[s][t]);
        mat_axpy(M, F.mats[s], -1);
        for (auto& row : M)
            for (auto& x : row)
                if (!x.is_zero()) throw InputError("g0-module: matrices are not linear in " + g.str(F.span[s]));
    }
    for (int a = 0; a < D; ++a)
        for (int b = a; b < D; ++b) {
            const AnnSym &x = gb->basis[a], &y = gb->basis[b];
            AnnElement xy = g.bracket({{x, 1}}, {{y, 1}});
            Matrix want = g0_matrix(g, F, xy);
            Matrix got = mat_mul(F.basis_mats[x], F.basis_mats[y]);
            mat_axpy(got, mat_mul(F.basis_mats[y], F.basis_mats[x]), -sgn(g.sym_parity(x) & g.sym_parity(y)));
            if (got != want)
                throw InputError("g0-module: commutator of " + g.str(x) + " and " + g.str(y) + " is not represented");
        }
    return F;
}

G0Module trivial_g0(const AnnAlgebra& g, int dim) {
    std::vector<std::string> names;
    for (int i = 0; i < dim; ++i) names.push_back("v" + std::to_string(i));
    std::vector<AnnElement> span;
    std::vector<Matrix> mats;
    for (auto& s : g.graded_basis(0)->basis) {
        span.push_back({{s, 1}});
        mats.push_back(zeros(dim, dim));
    }
    return make_g0_module(g, names, std::vector<int>(dim, 0), span, mats);
}

G0Module character_g0(const AnnAlgebra& g, const std::map<AnnSym, Rational>& weights, int parity) {
    std::vector<AnnElement> span;
    std::vector<Matrix> mats;
    for (auto& s : g.graded_basis(0)->basis) {
        span.push_back({{s, 1}});
        auto it = weights.find(s);
        mats.push_back(Matrix{{it == weights.end() ? Rational(0) : it->second}});
    }
    return make_g0_module(g, {"v"}, {parity}, span, mats);
}

G0Module adjoint_g0(const AnnAlgebra& g, int degree) {
    auto gd = g.graded_basis(degree);
    int d = gd->dim();
    std::vector<std::string> names;
    std::vector<int> parity;
    for (auto& s : gd->basis) {
        names.push_back(g.str(s));
        parity.push_back(g.sym_parity(s));
    }
    std::vector<AnnElement> span;
    std::vector<Matrix> mats;
    for (auto& x : g.graded_basis(0)->basis) {
        Matrix M = zeros(d, d);
        for (int j = 0; j < d; ++j) {
            auto c = coords(g, degree, g.bracket({{x, 1}}, {{gd->basis[j], 1}}));
            for (int i = 0; i < d; ++i) M[i][j] = c[i];
        }
        span.push_back({{x, 1}});
        mats.push_back(M);
    }
    return make_g0_module(g, names, parity, span, mats);
}

G0Module twist_g0(const AnnAlgebra& g, const G0Module& F, const std::map<AnnSym, Rational>& w) {
    std::vector<AnnElement> span;
    std::vector<Matrix> mats;
    for (auto& [s, M] : F.basis_mats) {
        Matrix T = M;
        auto it = w.find(s);
        if (it != w.end())
            for (int i = 0; i < F.dim(); ++i) T[i][i] += it->second;
        span.push_back({{s, 1}});
        mats.push_back(T);
    }
    return make_g0_module(g, F.names, F.parity, span, mats);
}

std::vector<std::map<AnnSym, Rational>> g0_characters(const AnnAlgebra& g) {
    auto gb = g.graded_basis(0);
    int D = gb->dim();
    Matrix rows;
    for (int a = 0; a < D; ++a)
        for (int b = a; b < D; ++b) rows.push_back(coords(g, 0, g.bracket({{gb->basis[a], 1}}, {{gb->basis[b], 1}})));
    std::vector<std::map<AnnSym, Rational>> out;
    for (auto& v : nullspace(rows, D)) {
        std::map<AnnSym, Rational> w;
        for (int t = 0; t < D; ++t)
            if (!v[t].is_zero()) w[gb->basis[t]] = v[t];
        out.push_back(w);
    }
    return out;
}

// ---- shift character ----

Rational ShiftCharacter::value(const AnnAlgebra& g, const AnnElement& x) const {
    Rational r;
    for (auto& [s, c] : g.normal_form(x)) {
        auto it = chi.find(s);
        if (it != chi.end()) r += c * it->second;
    }
    return r;
}

namespace {

Rational supertrace(const AnnAlgebra& g, const AnnSym& x, int degree) {
    auto gb = g.graded_basis(degree);
    Rational r;
    for (int t = 0; t < gb->dim(); ++t) {
        auto c = coords(g, degree, g.bracket({{x, 1}}, {{gb->basis[t], 1}}));
        r += c[t] * Rational(sgn(g.sym_parity(gb->basis[t])));
    }
    return r;
}

}  // namespace

ShiftCharacter shift_character(const AnnAlgebra& g) {
    ShiftCharacter X;
    for (auto& s : g.graded_basis(0)->basis) {
        Rational t1 = supertrace(g, s, -1), t2 = supertrace(g, s, -2), t3 = supertrace(g, s, -3);
        X.chi[s] = t1 + t2 + t3;
        X.rho[s] = -(t1 + t3);
        X.str2[s] = t2;
    }
    return X;
}

Report check_shift_character(const AnnAlgebra& g, const ShiftCharacter& X) {
    Report rep;
    rep.algebra = g.name();
    rep.check = "shift character";
    auto B = g.graded_basis(0)->basis;
    for (auto& s : B) {
        if (X.chi.at(s) != -X.rho.at(s) + X.str2.at(s)) rep.fail("chi != -rho + str_-2 at " + g.str(s));
        if (!X.chi.at(s).is_zero()) rep.characters[g.str(s)] = X.chi.at(s).str();
    }
    for (std::size_t a = 0; a < B.size(); ++a)
        for (std::size_t b = a; b < B.size(); ++b) {
            Rational v = X.value(g, g.bracket({{B[a], 1}}, {{B[b], 1}}));
            if (!v.is_zero()) rep.fail("chi([" + g.str(B[a]) + ", " + g.str(B[b]) + "]) = " + v.str());
        }
    return rep;
}

G0Module chi_shift(const AnnAlgebra& g, const G0Module& F, const ShiftCharacter& X) {
    std::vector<std::string> names;
    for (auto& n : F.names) names.push_back(n + "*");
    std::vector<AnnElement> span;
    std::vector<Matrix> mats;
    int d = F.dim();
    for (auto& [s, M] : F.basis_mats) {
        span.push_back({{s, 1}});
        Matrix V = zeros(d, d);
        int px = g.sym_parity(s);
        Rational c = X.chi.count(s) ? X.chi.at(s) : Rational(0);
        for (int h = 0; h < d; ++h) {
            V[h][h] += c;
            // x.v_h* = chi v_h* - (-1)^{p(x)p(v_h)} sum_k M[h][k] v_k*
            for (int k = 0; k < d; ++k)
                if (!M[h][k].is_zero()) V[k][h] -= M[h][k] * Rational(sgn(px & F.parity[h]));
        }
        mats.push_back(V);
    }
    return make_g0_module(g, names, F.parity, span, mats);
}

std::vector<AnnElement> g0_center(const AnnAlgebra& g) {
    auto gb = g.graded_basis(0);
    int D = gb->dim();
    Matrix rows;
    for (int b = 0; b < D; ++b) {
        std::vector<std::vector<Rational>> cols;
        for (int c = 0; c < D; ++c) cols.push_back(coords(g, 0, g.bracket({{gb->basis[c], 1}}, {{gb->basis[b], 1}})));
        for (int t = 0; t < D; ++t) {
            std::vector<Rational> row(D);
            for (int c = 0; c < D; ++c) row[c] = cols[c][t];
            rows.push_back(row);
        }
    }
    std::vector<AnnElement> out;
    for (auto& v : nullspace(rows, D)) {
        AnnElement x;
        for (int t = 0; t < D; ++t) ann_add(x, gb->basis[t], v[t]);
        out.push_back(x);
    }
    return out;
}

std::optional<AnnElement> grading_element(const AnnAlgebra& g) {
    auto gb = g.graded_basis(0);
    int D = gb->dim();
    Matrix A;
    std::vector<Rational> b;
    for (int d = std::min(g.min_gen_degree(), -1); d <= -1; ++d) {
        auto gd = g.graded_basis(d);
        for (int s = 0; s < gd->dim(); ++s) {
            std::vector<std::vector<Rational>> cols;
            for (int c = 0; c < D; ++c) cols.push_back(coords(g, d, g.bracket({{gb->basis[c], 1}}, {{gd->basis[s], 1}})));
            for (int t = 0; t < gd->dim(); ++t) {
                std::vector<Rational> row(D);
                for (int c = 0; c < D; ++c) row[c] = cols[c][t];
                A.push_back(row);
                b.push_back(t == s ? Rational(d) : Rational(0));
            }
        }
    }
    auto x = solve(A, b);
    if (!x) return std::nullopt;
    AnnElement e;
    for (int t = 0; t < D; ++t) ann_add(e, gb->basis[t], (*x)[t]);
    return e;
}

// ---- Verma modules ----

int VermaModule::neg_parity(unsigned mask) const { return std::popcount(mask) % 2; }

namespace {

class Engine {
public:
    Engine(const AnnAlgebra& g, const G0Module& F, const std::vector<AnnSym>& negs, const MinusTwo& m2)
        : g_(g), F_(F), negs_(negs), m2_(m2), cs_(g.cs()), dimF_(F.dim()) {
        for (std::size_t t = 0; t < negs.size(); ++t) neg_index_[negs[t]] = int(t);
    }

    Vec e(unsigned mask, int h) const { return basis_vec(int(mask) * dimF_ + h); }

    Vec act(const AnnElement& x, const Vec& m) {
        Vec out;
        if (x.empty()) return out;
        for (auto& [idx, P] : m) {
            unsigned mask = unsigned(idx / dimF_);
            int h = idx % dimF_;
            for (auto& [mono, c] : P)
                for (auto& [s, xc] : x) vec_add(out, act_term(s, mono, mask, h), c * xc);
        }
        return out;
    }

    Vec act_term(const AnnSym& s, const Monomial& N, unsigned mask, int h) {
        int n = cs_.spec.n(), i = 0;
        for (int k = 1; k <= n; ++k)
            if (N.e[cs_.var(DEL, k)]) {
                i = k;
                break;
            }
        if (i == 0) return act_basis(s, mask, h);
        Monomial rest = N;
        --rest.e[cs_.var(DEL, i)];
        Vec r = left_del(i, act_term(s, rest, mask, h));
        Vec tail;
        vec_add(tail, int(mask) * dimF_ + h, Poly(rest, 1));
        vec_add(r, act(g_.dy(i, {{s, 1}}), tail));
        if (g_.sym_parity(s) && cs_.spec.parity(i)) r = vec_scale(r, -1);
        return r;
    }

    Vec act_basis(const AnnSym& s, unsigned mask, int h) {
        auto key = std::make_tuple(s, mask, h);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Vec r = compute_basis(s, mask, h);
        memo_.emplace(key, r);
        return r;
    }

    Vec insert(int j, unsigned mask, int h) {
        auto key = std::make_tuple(j, mask, h);
        auto it = ins_memo_.find(key);
        if (it != ins_memo_.end()) return it->second;
        Vec r;
        if (mask == 0 || j < std::countr_zero(mask)) {
            r = e(mask | (1u << j), h);
        } else {
            int i1 = std::countr_zero(mask);
            unsigned rest = mask & ~(1u << i1);
            AnnElement dj{{negs_[j], 1}}, di{{negs_[i1], 1}};
            if (j == i1) {
                r = vec_scale(act(g_.bracket(dj, dj), e(rest, h)), Rational(1, 2));
            } else {
                r = vec_scale(act(di, insert(j, rest, h)), -1);
                vec_add(r, act(g_.bracket(dj, di), e(rest, h)));
            }
        }
        ins_memo_.emplace(key, r);
        return r;
    }

private:
    Vec left_del(int i, const Vec& v) const {
        Monomial m;
        m.e[cs_.var(DEL, i)] = 1;
        Vec out;
        for (auto& [k, P] : v) vec_add(out, k, mono_mul(cs_.vs, m, P));
        return out;
    }

    Vec compute_basis(const AnnSym& s, unsigned mask, int h) {
        int deg = g_.sym_degree(s);
        if (deg <= -4) return {};
        if (deg == -2) {
            auto c = u_coeffs(g_, m2_, {{s, 1}});
            Vec r;
            for (int i = 1; i <= cs_.spec.n(); ++i)
                if (!c[i - 1].is_zero()) vec_add(r, left_del(i, e(mask, h)), -c[i - 1]);
            return r;
        }
        if (deg == -1 || deg == -3) {
            auto it = neg_index_.find(s);
            if (it == neg_index_.end()) throw std::logic_error("negative symbol outside the basis: " + g_.str(s));
            return insert(it->second, mask, h);
        }
        if (mask == 0) {
            if (deg > 0) return {};
            const Matrix& M = F_.basis_mats.at(s);
            Vec r;
            for (int k = 0; k < dimF_; ++k)
                if (!M[k][h].is_zero()) vec_add(r, e(0, k), M[k][h]);
            return r;
        }
        int i1 = std::countr_zero(mask);
        unsigned rest = mask & ~(1u << i1);
        AnnElement di{{negs_[i1], 1}};
        Vec r = act(di, act_basis(s, rest, h));
        if (g_.sym_parity(s)) r = vec_scale(r, -1);
        vec_add(r, act(g_.bracket({{s, 1}}, di), e(rest, h)));
        // non-negative elements do not lengthen d_I
        for (auto& [idx, P] : r)
            if (std::popcount(unsigned(idx / dimF_)) > std::popcount(mask))
                throw std::logic_error("non-negative element lengthened d_I");
        return r;
    }

    const AnnAlgebra& g_;
    const G0Module& F_;
    const std::vector<AnnSym>& negs_;
    const MinusTwo& m2_;
    const ConfSpace& cs_;
    int dimF_;
    std::map<AnnSym, int> neg_index_;
    std::map<std::tuple<AnnSym, unsigned, int>, Vec> memo_;
    std::map<std::tuple<int, unsigned, int>, Vec> ins_memo_;
};

std::vector<AnnSym> negative_basis(const AnnAlgebra& g, unsigned seed) {
    std::vector<AnnSym> out;
    std::mt19937_64 rng(seed);
    for (int d : {-1, -3}) {
        auto b = g.graded_basis(d)->basis;
        if (seed) std::shuffle(b.begin(), b.end(), rng);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

int neg_degree(const AnnAlgebra& g, const std::vector<AnnSym>& negs, unsigned mask) {
    int d = 0;
    for (std::size_t t = 0; t < negs.size(); ++t)
        if (mask >> t & 1) d += g.sym_degree(negs[t]);
    return d;
}

// a_lambda (d_I v_h) for one generator, all basis vectors
void fill_generator(const AnnAlgebra& g, Engine& E, const VermaModule& V, int gen, std::vector<Vec>& col) {
    const ConfSpace& cs = g.cs();
    auto l = lam(cs);
    int dF = V.F.dim(), dg = g.conf().gens[gen].degree;
    for (unsigned mask = 0; mask <= V.full_mask(); ++mask) {
        int top = -neg_degree(g, V.negs, mask);
        for (int h = 0; h < dF; ++h) {
            Vec out;
            Vec ek = E.e(mask, h);
            for (int L = 0; dg + 2 * L <= top; ++L)
                for (auto& K : canonical_seqs(cs.spec, L)) {
                    AnnElement x = g.normal_form(g.elem(K, gen));
                    if (x.empty()) continue;
                    Vec r = E.act(x, ek);
                    if (vec_is_zero(r)) continue;
                    auto st = seq_stats(cs.spec, K);
                    Poly lk = cs.seq_product(l, reversed(K)) * Rational(sgn(st.p), st.f);
                    vec_add(out, vec_left(cs.vs, lk, r));
                }
            col[V.index(mask, h)] = out;
        }
    }
}

}  // namespace

VermaModule build_verma(const AnnAlgebra& g, const G0Module& F, const VermaOptions& opt) {
    Report as = check_assumptions(g, 2);
    if (!as.pass) throw InputError("assumptions fail for " + g.name() + ": " + as.witnesses.front());
    VermaModule V;
    V.g = &g;
    V.F = F;
    V.negs = negative_basis(g, opt.permute_seed);
    if (V.negs.size() > 20) throw InputError("too many odd negative elements");
    MinusTwo m2 = minus_two(g, 2);
    V.us = m2.us;
    for (int d = -1; d >= -3; --d)
        if (g.graded_basis(d)->dim() > 0) V.depth = -d;
    int n = int(V.negs.size());
    V.window = opt.window >= 0 ? opt.window : 2 * V.depth * n;
    std::vector<std::string> names;
    std::vector<int> parity;
    for (unsigned mask = 0; mask <= V.full_mask(); ++mask)
        for (int h = 0; h < F.dim(); ++h) {
            std::string nm;
            for (int t = 0; t < n; ++t)
                if (mask >> t & 1) nm += "d" + std::to_string(t + 1);
            names.push_back(nm + (nm.empty() ? "" : ".") + F.names[h]);
            parity.push_back(V.neg_parity(mask) ^ F.parity[h]);
        }
    V.module = zero_module(std::make_shared<const Algebra>(g.conf()), names, parity);
    V.module.name = "M(F)";
    int ng = g.conf().gen_count();
    int nt = std::max(1, std::min(opt.threads, ng));
    // warm the shared caches before splitting work
    g.graded_basis(0);
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    auto work = [&] {
        Engine E(g, V.F, V.negs, m2);
        for (;;) {
            int gen = next++;
            if (gen >= ng) return;
            fill_generator(g, E, V, gen, V.module.action[gen]);
        }
    };
    for (int t = 1; t < nt; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return V;
}

Vec pbw_normalize(const VermaModule& V, const std::vector<AnnElement>& word, int h) {
    MinusTwo m2 = minus_two(*V.g, 2);
    Engine E(*V.g, V.F, V.negs, m2);
    Vec m = E.e(0, h);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        auto d = V.g->degree(*it);
        if (!d || *d >= 0) throw InputError("pbw_normalize: letter " + V.g->str(*it) + " is not in the negative part");
        m = E.act(V.g->normal_form(*it), m);
    }
    return m;
}

Report verma_m1_check(const VermaModule& V) {
    Report rep;
    const AnnAlgebra& g = *V.g;
    rep.algebra = g.name();
    rep.check = "Verma M1";
    const ConfSpace& cs = g.cs();
    MinusTwo m2 = minus_two(g, 2);
    Engine E(g, V.F, V.negs, m2);
    auto l = lam(cs);
    int n = cs.spec.n();
    for (int gen = 0; gen < g.conf().gen_count(); ++gen) {
        int pa = g.conf().parity[gen], dg = g.conf().gens[gen].degree;
        for (int k = 0; k < V.module.rank(); ++k)
            for (int i = 1; i <= n; ++i) {
                Vec dm;
                vec_add(dm, k, Poly::var(cs.var(DEL, i)));
                Vec direct;
                unsigned mask = unsigned(k / V.F.dim());
                int top = -neg_degree(g, V.negs, mask) + 2;
                for (int L = 0; dg + 2 * L <= top; ++L)
                    for (auto& K : canonical_seqs(cs.spec, L)) {
                        AnnElement x = g.normal_form(g.elem(K, gen));
                        Vec r = E.act(x, dm);
                        if (vec_is_zero(r)) continue;
                        auto st = seq_stats(cs.spec, K);
                        vec_add(direct, vec_left(cs.vs, cs.seq_product(l, reversed(K)) * Rational(sgn(st.p), st.f), r));
                    }
                Vec rule = module_act(V.module, gen, l, dm);
                vec_add(direct, rule, -1);
                (void)pa;
                if (!vec_is_zero(direct))
                    rep.fail(g.conf().names[gen] + " on d" + std::to_string(i) + " " + V.module.basis[k] + ": " +
                             module_elem_str(V.module, direct));
            }
    }
    return rep;
}

Report dual_verma_restriction(const VermaModule& V, const ShiftCharacter& X) {
    const AnnAlgebra& g = *V.g;
    Report rep;
    rep.algebra = g.name();
    rep.check = "dual Verma restriction";
    ConformalModule D = dual_module(V.module);
    G0Module Fv = chi_shift(g, V.F, X);
    unsigned Om = V.full_mask();
    int pOm = V.neg_parity(Om), dF = V.F.dim();
    std::map<int, int> top;  // module index -> h
    for (int h = 0; h < dF; ++h) top[V.index(Om, h)] = h;
    for (auto& s : g.graded_basis(0)->basis) {
        const Matrix& want = Fv.basis_mats.at(s);
        int sg = sgn(g.sym_parity(s) & pOm);
        for (int h = 0; h < dF; ++h) {
            Vec r = module_act_ann(D, g, {{s, 1}}, basis_vec(V.index(Om, h)));
            Vec expect;
            for (int k = 0; k < dF; ++k)
                if (!want[k][h].is_zero()) vec_add(expect, V.index(Om, k), Poly(want[k][h] * Rational(sg)));
            bool stable = true;
            for (auto& [idx, P] : r)
                if (!top.count(idx) || P.size() != 1 || P.begin()->first != Monomial{})
                    stable = false;
            if (!stable) rep.fail("(i) " + g.str(s) + " moves (d_Omega " + V.F.names[h] + ")* out of F_Omega");
            vec_add(r, expect, -1);
            if (stable && !vec_is_zero(r))
                rep.fail("(ii) " + g.str(s) + " on (d_Omega " + V.F.names[h] + ")*: differs from the shifted dual by " +
                         module_elem_str(D, r));
        }
    }
    // beyond the top lambda-degree of the dual action everything acts by zero
    int lmax = 0, gmax = 0;
    const ConfSpace& cs = g.cs();
    for (int a = 0; a < g.conf().gen_count(); ++a) {
        gmax = std::max(gmax, g.conf().gens[a].degree);
        for (auto& row : D.action[a])
            for (auto& [j, P] : row)
                for (auto& [m, c] : P) lmax = std::max(lmax, cs.vs.length(cs.restrict(m, {LAM})));
    }
    int reach = std::min(V.window, gmax + 2 * lmax);
    for (int d = 1; d <= reach; ++d)
        for (auto& s : g.graded_basis(d)->basis)
            for (int h = 0; h < dF; ++h) {
                Vec r = module_act_ann(D, g, {{s, 1}}, basis_vec(V.index(Om, h)));
                if (!vec_is_zero(r)) rep.fail("(iii) " + g.str(s) + " does not annihilate (d_Omega " + V.F.names[h] + ")*");
            }
    for (auto& [s, c] : X.chi)
        if (!c.is_zero()) rep.characters[g.str(s)] = c.str();
    rep.notes.push_back("window " + std::to_string(V.window) + ", nonzero action possible up to degree " +
                        std::to_string(reach));
    return rep;
}

Report verify_duality(const AnnAlgebra& g, const G0Module& F, const VermaOptions& opt) {
    Report rep;
    rep.algebra = g.name();
    rep.check = "duality";
    if (F.dim() == 0) {
        rep.notes.push_back("zero-dimensional F: nothing to check");
        return rep;
    }
    ShiftCharacter X = shift_character(g);
    VermaModule V = build_verma(g, F, opt);
    G0Module Fv = chi_shift(g, F, X);
    VermaModule W = build_verma(g, Fv, opt);
    ConformalModule D = dual_module(V.module);
    const ConfSpace& cs = g.cs();
    unsigned Om = V.full_mask();
    int pphi = V.neg_parity(Om), dF = F.dim(), n = int(V.negs.size());
    rep.dims["rank"] = std::to_string(V.module.rank());
    // phi(d_I v_k*) = (-1)^{p(d_I)p(d_Omega)} d_I . (d_Omega v_k)*
    ModuleMap phi;
    phi.src = &W.module;
    phi.dst = &D;
    phi.parity = pphi;
    phi.images.resize(W.module.rank());
    for (unsigned mask = 0; mask <= Om; ++mask)
        for (int k = 0; k < dF; ++k) {
            Vec f = basis_vec(V.index(Om, k));
            for (int t = n - 1; t >= 0; --t)
                if (mask >> t & 1) f = module_act_ann(D, g, {{V.negs[t], 1}}, f);
            if (V.neg_parity(mask) & pphi) f = vec_scale(f, -1);
            phi.images[W.index(mask, k)] = f;
        }
    std::mutex mu;
    std::atomic<int> next{0};
    int total = g.conf().gen_count() * W.module.rank();
    auto l = lam(cs);
    auto work = [&] {
        for (;;) {
            int job = next++;
            if (job >= total) return;
            int gen = job / W.module.rank(), j = job % W.module.rank();
            Vec lhs = map_apply(phi, module_act(W.module, gen, l, basis_vec(j)));
            Vec rhs = module_act(D, gen, l, phi.images[j]);
            vec_add(lhs, rhs, -sgn(g.conf().parity[gen] & pphi));
            if (!vec_is_zero(lhs)) {
                std::lock_guard<std::mutex> lk(mu);
                rep.fail("phi does not intertwine " + g.conf().names[gen] + " on " + W.module.basis[j]);
            }
        }
    };
    int nt = std::max(1, opt.threads);
    std::vector<std::thread> pool;
    for (int t = 1; t < nt; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    bool onto = false;
    for (int w = 0; w <= std::min(V.window, 2) && !onto; ++w) {
        onto = is_surjective(phi, w);
        if (onto) rep.notes.push_back("phi surjective at partial-degree window " + std::to_string(w));
    }
    if (!onto) rep.fail("phi is not surjective within the window");
    for (auto& [s, c] : X.chi)
        if (!c.is_zero()) rep.characters[g.str(s)] = c.str();
    Report dr = dual_verma_restriction(V, X);
    rep.merge(dr);
    return rep;
}

}  // namespace lcsa
