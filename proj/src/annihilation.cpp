#include "lcsa/annihilation.hpp"

#include <sstream>

namespace lcsa {

void ann_add(AnnElement& acc, const AnnSym& s, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = acc.try_emplace(s, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

void ann_add(AnnElement& acc, const AnnElement& v, const Rational& c) {
    for (auto& [s, x] : v) ann_add(acc, s, x * c);
}

AnnElement ann_scale(const AnnElement& v, const Rational& c) {
    AnnElement r;
    ann_add(r, v, c);
    return r;
}

AnnAlgebra::AnnAlgebra(Algebra A) : A_(std::move(A)) {
    if (A_.parity.size() != A_.gens.size()) A_.finalize();
}

int AnnAlgebra::sym_degree(const AnnSym& s) const { return A_.gens[s.gen].degree + 2 * A_.vs().length(s.y); }

int AnnAlgebra::sym_parity(const AnnSym& s) const { return A_.parity[s.gen] ^ A_.vs().parity(s.y); }

std::optional<int> AnnAlgebra::degree(const AnnElement& v) const {
    std::optional<int> d;
    for (auto& [s, c] : v) {
        int k = sym_degree(s);
        if (d && *d != k) return std::nullopt;
        d = k;
    }
    return d;
}

int AnnAlgebra::parity(const AnnElement& v) const {
    int p = -1;
    for (auto& [s, c] : v) {
        int q = sym_parity(s);
        if (p >= 0 && p != q) return -1;
        p = q;
    }
    return p;
}

AnnElement AnnAlgebra::elem(const IndexSeq& M, int gen, const Rational& c) const {
    AnnElement r;
    auto [sign, m] = A_.cs.seq_monomial(YV, M);
    if (sign != 0) ann_add(r, AnnSym{m, gen}, sign > 0 ? c : -c);
    return r;
}

AnnElement AnnAlgebra::elem(const IndexSeq& M, const std::string& gen, const Rational& c) const {
    int g = A_.index(gen);
    if (g < 0) throw InputError("unknown generator '" + gen + "' in " + A_.name);
    return elem(M, g, c);
}

AnnElement AnnAlgebra::reduce(const Poly& yd, int gen) const {
    const ConfSpace& cs = A_.cs;
    const VarSpace& vs = cs.vs;
    int n = cs.spec.n();
    AnnElement out;
    Poly work = yd;
    while (!work.is_zero()) {
        Poly next;
        for (auto& [m, c] : work) {
            int i = 0;
            for (int k = 1; k <= n; ++k)
                if (m.e[cs.var(DEL, k)]) {
                    i = k;
                    break;
                }
            Monomial yq = cs.restrict(m, {YV});
            if (i == 0) {
                ann_add(out, AnnSym{yq, gen}, c);
                continue;
            }
            // y_Q d_i X = -(-1)^{p_i p(Q)} (d/dy_i y_Q) X
            Monomial rest = cs.restrict(m, {DEL});
            --rest.e[cs.var(DEL, i)];
            bool flip = cs.spec.parity(i) && vs.parity(yq);
            Poly dq = derive(vs, cs.var(YV, i), Poly(yq, 1));
            next += mul_mono(vs, dq, rest, flip ? c : -c);
        }
        work = std::move(next);
    }
    return out;
}

Poly right_dy(const ConfSpace& cs, const Poly& y, const IndexSeq& J) {
    Poly r = y;
    for (int j : J) {
        if (r.is_zero()) break;
        bool flip = cs.spec.parity(j) && parity_of(cs.vs, r) == 1;
        r = derive(cs.vs, cs.var(YV, j), r);
        if (flip) r = -r;
    }
    return r;
}

AnnElement AnnAlgebra::bracket_sym(const AnnSym& u, const AnnSym& v) const {
    const ConfSpace& cs = A_.cs;
    const VarSpace& vs = cs.vs;
    AnnElement out;
    auto it = A_.table.find({u.gen, v.gen});
    if (it == A_.table.end()) return out;
    int pN = vs.parity(v.y), pb = A_.parity[v.gen];
    Poly yN(v.y, 1), yM(u.y, 1);
    for (auto& [c, P] : it->second) {
        int pc = A_.parity[c];
        for (auto& [m, coef] : P) {
            Monomial lam = cs.restrict(m, {LAM}), del = cs.restrict(m, {DEL});
            Poly Y = right_dy(cs, yM, cs.seq_of(lam, LAM));
            if (Y.is_zero()) continue;
            // y_N b = (-1)^{p(b)p_N} b y_N, then y_N moves left past (P c)
            int flips = (pb & pN) + (pN & (vs.parity(del) ^ pc));
            Poly full = mul_mono(vs, mul(vs, Y, yN), del, (flips & 1) ? -coef : coef);
            ann_add(out, reduce(full, c));
        }
    }
    return out;
}

AnnElement AnnAlgebra::bracket(const AnnElement& u, const AnnElement& v) const {
    AnnElement out;
    for (auto& [a, x] : u)
        for (auto& [b, y] : v) ann_add(out, bracket_sym(a, b), x * y);
    return normal_form(out);
}

AnnElement AnnAlgebra::normal_form(const AnnElement& v) const {
    if (A_.mode == Mode::Free || v.empty()) return v;
    std::map<int, SparseRow<AnnSym>> parts;
    for (auto& [s, c] : v) parts[sym_degree(s)].emplace(s, c);
    AnnElement out;
    for (auto& [d, row] : parts) {
        graded_basis(d)->relations.reduce(row);
        for (auto& [s, c] : row) out.emplace(s, c);
    }
    return out;
}

AnnElement AnnAlgebra::dy(int i, const AnnElement& v) const {
    AnnElement out;
    for (auto& [s, c] : v) {
        Poly d = derive(A_.vs(), A_.cs.var(YV, i), Poly(s.y, 1));
        for (auto& [m, x] : d) ann_add(out, AnnSym{m, s.gen}, c * x);
    }
    return normal_form(out);
}

int AnnAlgebra::min_gen_degree() const {
    int m = 0;
    for (auto& g : A_.gens) m = std::min(m, g.degree);
    return m;
}

std::shared_ptr<GradedBasis> AnnAlgebra::build_component(int d) const {
    auto gb = std::make_shared<GradedBasis>();
    gb->degree = d;
    const ConfSpace& cs = A_.cs;
    for (int g = 0; g < A_.gen_count(); ++g) {
        int diff = d - A_.gens[g].degree;
        if (diff < 0 || diff % 2) continue;
        for (auto& M : canonical_seqs(cs.spec, diff / 2)) gb->span.push_back(AnnSym{cs.seq_monomial(YV, M).second, g});
    }
    std::sort(gb->span.begin(), gb->span.end());
    if (A_.mode != Mode::Free) {
        for (const Vec& rel : A_.relations) {
            if (vec_is_zero(rel)) continue;
            const auto& [g0, p0] = *rel.begin();
            int rd = A_.gens[g0].degree + cs.vs.degree(p0.begin()->first);
            int diff = d - rd;
            if (diff < 0 || diff % 2) continue;
            for (auto& N : canonical_seqs(cs.spec, diff / 2)) {
                Monomial yN = cs.seq_monomial(YV, N).second;
                AnnElement row;
                for (auto& [c, P] : rel) ann_add(row, reduce(mono_mul(cs.vs, yN, P), c));
                gb->relations.insert(SparseRow<AnnSym>(row.begin(), row.end()));
            }
        }
    }
    for (auto& s : gb->span)
        if (!gb->relations.is_pivot(s)) gb->basis.push_back(s);
    return gb;
}

std::shared_ptr<const GradedBasis> AnnAlgebra::graded_basis(int d) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(d);
        if (it != cache_.end()) return it->second;
    }
    std::shared_ptr<const GradedBasis> gb = build_component(d);
    std::lock_guard<std::mutex> lk(mu_);
    return cache_.emplace(d, gb).first->second;
}

std::string AnnAlgebra::str(const AnnSym& s) const {
    std::string y = A_.vs().str(s.y);
    return y.empty() ? A_.gens[s.gen].name : y + "*" + A_.gens[s.gen].name;
}

std::string AnnAlgebra::str(const AnnElement& v) const {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [s, c] : v) {
        Rational a = c;
        if (!first) {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (a == Rational(-1))
            os << "-";
        else if (!a.is_one())
            os << a << "*";
        os << str(s);
    }
    return os.str();
}

// ---- the degree -2 component ----

std::optional<std::vector<AnnElement>> identify_minus_two(const AnnAlgebra& g, int lo, int hi) {
    int n = g.cs().spec.n();
    auto B = g.graded_basis(-2)->basis;
    if (int(B.size()) != n) return std::nullopt;
    std::vector<AnnSym> probes;
    for (int d = lo; d <= hi; ++d)
        for (auto& s : g.graded_basis(d)->basis) probes.push_back(s);
    // columns: ad(b) on every probe, keyed by (probe, output symbol)
    using Key = std::pair<int, AnnSym>;
    std::vector<std::map<Key, Rational>> cols(B.size());
    for (std::size_t b = 0; b < B.size(); ++b)
        for (std::size_t p = 0; p < probes.size(); ++p)
            for (auto& [s, c] : g.bracket({{B[b], 1}}, {{probes[p], 1}})) cols[b][{int(p), s}] = c;
    std::vector<AnnElement> out;
    for (int i = 1; i <= n; ++i) {
        std::map<Key, Rational> target;
        for (std::size_t p = 0; p < probes.size(); ++p)
            for (auto& [s, c] : g.dy(i, {{probes[p], 1}})) target[{int(p), s}] = c;
        std::map<Key, int> rows;
        for (auto& col : cols)
            for (auto& [k, c] : col) rows.emplace(k, 0);
        for (auto& [k, c] : target) rows.emplace(k, 0);
        int r = 0;
        for (auto& [k, idx] : rows) idx = r++;
        Matrix M(r, std::vector<Rational>(B.size()));
        std::vector<Rational> rhs(r);
        for (std::size_t b = 0; b < B.size(); ++b)
            for (auto& [k, c] : cols[b]) M[rows[k]][b] = c;
        for (auto& [k, c] : target) rhs[rows[k]] = c;
        auto x = solve(M, rhs);
        if (!x) return std::nullopt;
        AnnElement u;
        for (std::size_t b = 0; b < B.size(); ++b) ann_add(u, B[b], (*x)[b]);
        if (u.empty()) return std::nullopt;
        out.push_back(u);
    }
    return out;
}

Report check_assumptions(const AnnAlgebra& g, int window) {
    Report rep;
    rep.algebra = g.name();
    rep.check = "assumptions";
    int lo = std::min(g.min_gen_degree(), -3);
    int depth = 0;
    for (int d = lo; d <= -1; ++d) {
        auto gb = g.graded_basis(d);
        rep.dims[std::to_string(d)] = std::to_string(gb->dim());
        if (gb->dim() > 0) depth = std::max(depth, -d);
        if (d < -3 && gb->dim() > 0) rep.fail("depth: component of degree " + std::to_string(d) + " is nonzero");
        if (d == -1 || d == -3)
            for (auto& s : gb->basis)
                if (g.sym_parity(s) == 0) rep.fail("degree " + std::to_string(d) + " has even element " + g.str(s));
    }
    rep.notes.push_back("depth " + std::to_string(depth));
    int n = g.cs().spec.n();
    if (g.graded_basis(-2)->dim() != n) {
        rep.fail("dim of degree -2 is " + std::to_string(g.graded_basis(-2)->dim()) + ", expected " + std::to_string(n));
        return rep;
    }
    auto u = identify_minus_two(g, -3, window);
    if (!u) {
        rep.fail("degree -2 does not act as the y-derivations on degrees -3.." + std::to_string(window));
        return rep;
    }
    for (int i = 0; i < n; ++i) rep.notes.push_back("d/dy" + std::to_string(i + 1) + " = ad(" + g.str((*u)[i]) + ")");
    return rep;
}

// ---- lambda series ----

namespace {

void series_add(LambdaSeries& acc, const Monomial& m, const AnnElement& v, const Rational& c) {
    if (v.empty() || c.is_zero()) return;
    AnnElement& slot = acc[m];
    ann_add(slot, v, c);
    if (slot.empty()) acc.erase(m);
}

void series_add(LambdaSeries& acc, const Poly& scal, const AnnElement& v) {
    for (auto& [m, c] : scal) series_add(acc, m, v, c);
}

// y_K times an element of R
AnnElement y_times(const AnnAlgebra& g, const Monomial& yK, const Vec& a) {
    AnnElement out;
    for (auto& [c, P] : a) ann_add(out, g.reduce(mono_mul(g.cs().vs, yK, P), c));
    return out;
}

// sum_S (-1)^{p_S} nu_{rev S}/f(S) y_S x, |S| <= cutoff
LambdaSeries embed_with(const AnnAlgebra& g, const Vec& a, int cutoff, const std::vector<Poly>& nu) {
    const ConfSpace& cs = g.cs();
    LambdaSeries out;
    for (int len = 0; len <= cutoff; ++len)
        for (auto& K : canonical_seqs(cs.spec, len)) {
            auto st = seq_stats(cs.spec, K);
            Poly scal = cs.seq_product(nu, reversed(K)) * Rational(st.p ? -1 : 1, st.f);
            AnnElement x = y_times(g, cs.seq_monomial(YV, K).second, a);
            series_add(out, scal, x);
        }
    return out;
}

}  // namespace

LambdaSeries lambda_embed(const AnnAlgebra& g, const Vec& a, int cutoff, Family f) {
    LambdaSeries s = embed_with(g, a, cutoff, g.cs().family_vars(f));
    LambdaSeries out;
    for (auto& [m, v] : s) series_add(out, m, g.normal_form(v), 1);
    return out;
}

LambdaSeries embedding_bracket_residual(const AnnAlgebra& g, const Vec& a, const Vec& b, int cutoff) {
    const ConfSpace& cs = g.cs();
    const VarSpace& vs = cs.vs;
    int n = cs.spec.n();
    LambdaSeries L = embed_with(g, a, cutoff, cs.family_vars(LAM));
    LambdaSeries M = embed_with(g, b, cutoff, cs.family_vars(MU));
    auto in_box = [&](const Monomial& m) {
        int dl = 0, dm = 0;
        for (int i = 1; i <= n; ++i) {
            dl += m.e[cs.var(LAM, i)];
            dm += m.e[cs.var(MU, i)];
        }
        return dl <= cutoff && dm <= cutoff;
    };
    LambdaSeries res;
    for (auto& [lm, X] : L)
        for (auto& [mm, Y] : M) {
            Poly s = mul(vs, Poly(lm, 1), Poly(mm, 1));
            if (s.is_zero() || !in_box(s.begin()->first)) continue;
            int px = g.parity(X);
            Rational sign = (px == 1 && vs.parity(mm)) ? -1 : 1;
            AnnElement br;
            for (auto& [x, cx] : X)
                for (auto& [y, cy] : Y) ann_add(br, g.bracket_sym(x, y), cx * cy);
            series_add(res, s.begin()->first, br, s.begin()->second * sign);
        }
    // [a_lambda b] = sum P(lambda, d) c; (lambda^al d_L c)_nu = lambda^al (-1)^{|L|} nu_L c_nu
    std::vector<Poly> nu;
    for (int i = 1; i <= n; ++i) nu.push_back(Poly::var(cs.var(LAM, i)) + Poly::var(cs.var(MU, i)));
    Vec ab = bracket(g.conf(), a, b);
    for (auto& [c, P] : ab) {
        Vec gc;
        vec_add(gc, c, Poly(Rational(1)));
        LambdaSeries cnu = embed_with(g, gc, 2 * cutoff, nu);
        for (auto& [m, coef] : P) {
            Monomial lam = cs.restrict(m, {LAM}), del = cs.restrict(m, {DEL});
            IndexSeq Ls = cs.seq_of(del, DEL);
            Poly pre = mul(vs, Poly(lam, Ls.size() % 2 ? -coef : coef), cs.seq_product(nu, Ls));
            for (auto& [sm, v] : cnu) {
                Poly s = mul(vs, pre, Poly(sm, 1));
                for (auto& [mm, x] : s)
                    if (in_box(mm)) series_add(res, mm, v, -x);
            }
        }
    }
    LambdaSeries out;
    for (auto& [m, v] : res) series_add(out, m, g.normal_form(v), 1);
    return out;
}

std::string series_str(const AnnAlgebra& g, const LambdaSeries& s) {
    if (s.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, v] : s) {
        if (!first) os << " + ";
        first = false;
        std::string ms = g.cs().vs.str(m);
        os << (ms.empty() ? "" : ms + "*") << "(" << g.str(v) << ")";
    }
    return os.str();
}

}  // namespace lcsa
