#include "lcsa/conformal.hpp"

#include <sstream>

namespace lcsa {

int Algebra::index(const std::string& n) const {
    for (int i = 0; i < gen_count(); ++i)
        if (gens[i].name == n) return i;
    return -1;
}

void Algebra::finalize() {
    parity.clear();
    names.clear();
    for (auto& g : gens) {
        parity.push_back(g.parity);
        names.push_back(g.name);
    }
    const int n = gen_count();
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            if (table.count({g, h})) continue;
            auto it = table.find({h, g});
            if (it == table.end())
                throw InputError("missing bracket entry for (" + gens[g].name + ", " + gens[h].name + ")");
            int sign = (gens[g].parity && gens[h].parity) ? 1 : -1;
            table[{g, h}] = vec_scale(subst_skew(cs, it->second), sign);
        }
    }
    rules.clear();
    if (mode == Mode::Rewrite) {
        for (auto& rel : relations) {
            if (vec_is_zero(rel)) continue;
            int g = rel.rbegin()->first;
            const Poly& p = rel.rbegin()->second;
            auto lead = p.terms().rbegin();
            if (vs().parity(lead->first)) throw InputError("rewrite relation with odd leading monomial");
            RewriteRule rule;
            rule.gen = g;
            rule.lead = lead->first;
            Vec rest = rel;
            Poly lp;
            lp.add(lead->first, lead->second);
            vec_add(rest, g, -lp);
            // c*lead*g = -rest
            rule.replacement = vec_scale(rest, -(Rational(1) / lead->second));
            rules.push_back(std::move(rule));
        }
    }
    auto img_mu = cs.family_images(LAM, cs.family_vars(MU));
    std::vector<Poly> sum;
    for (int i = 1; i <= cs.spec.n(); ++i) sum.push_back(Poly::var(cs.var(LAM, i)) + Poly::var(cs.var(MU, i)));
    auto img_sum = cs.family_images(LAM, sum);
    table_mu.clear();
    table_sum.clear();
    for (auto& [k, v] : table) {
        table_mu[k] = vec_subst(vs(), v, img_mu);
        table_sum[k] = vec_subst(vs(), v, img_sum);
    }
}

Vec gen_elem(const Algebra&, int g, const Rational& c) {
    Vec v;
    vec_add(v, g, Poly(c));
    return v;
}

Vec partial_elem(const Algebra& A, const IndexSeq& k, int g, const Rational& c) {
    Vec v;
    vec_add(v, g, A.cs.seq_poly(DEL, k, c));
    return v;
}

int vec_parity(const VarSpace& vs, const std::vector<int>& parity, const Vec& v) {
    int par = -1;
    for (auto& [b, p] : v) {
        for (auto& [m, c] : p) {
            int q = vs.parity(m) ^ parity[b];
            if (par < 0)
                par = q;
            else if (par != q)
                return -1;
        }
    }
    return par;
}

int vec_parity(const Algebra& A, const Vec& v) { return vec_parity(A.vs(), A.parity, v); }

namespace {

std::vector<Poly> shift_images(const ConfSpace& cs, Shift s) {
    std::vector<Poly> img;
    for (int i = 1; i <= cs.spec.n(); ++i) {
        switch (s) {
            case Shift::Lambda: img.push_back(Poly::var(cs.var(LAM, i))); break;
            case Shift::Mu: img.push_back(Poly::var(cs.var(MU, i))); break;
            case Shift::LambdaPlusMu:
                img.push_back(Poly::var(cs.var(LAM, i)) + Poly::var(cs.var(MU, i)));
                break;
        }
    }
    return img;
}

}  // namespace

Vec bracket(const Algebra& A, const Vec& x, const Vec& y, Shift s) {
    const ConfSpace& cs = A.cs;
    const VarSpace& vs = cs.vs;
    const auto& tab = s == Shift::Lambda ? A.table : (s == Shift::Mu ? A.table_mu : A.table_sum);
    const auto img = shift_images(cs, s);
    Vec out;
    for (auto& [gx, px] : x) {
        for (auto& [mx, cx] : px) {
            Monomial sx = cs.restrict(mx, {LAM, MU, YV});
            Monomial dx = cs.restrict(mx, {DEL});
            IndexSeq lx = cs.seq_of(dx, DEL);
            Poly left = cs.seq_product(img, lx);
            if (lx.size() & 1) left = -left;
            const int pdx = vs.parity(dx) ^ A.parity[gx];
            for (auto& [gy, py] : y) {
                const Vec& base = tab.at({gx, gy});
                if (vec_is_zero(base)) continue;
                for (auto& [my, cy] : py) {
                    Monomial sy = cs.restrict(my, {LAM, MU, YV});
                    Monomial dy = cs.restrict(my, {DEL});
                    std::vector<int> f = vs.factors(dy);  // applied innermost first
                    Vec V = base;
                    int pz = A.parity[gy];
                    for (int k = int(f.size()) - 1; k >= 0 && !V.empty(); --k) {
                        int i = cs.index(f[k]);
                        int pi = cs.spec.parity(i);
                        V = vec_right(vs, V, Poly::var(f[k]) + img[i - 1], A.parity);
                        if (pi && pz) V = vec_scale(V, -1);
                        pz ^= pi;
                    }
                    if (V.empty()) continue;
                    Rational c = cx * cy;
                    if (vs.parity(sy) && pdx) c = -c;
                    Poly pre = mul(vs, Poly(sx, c), Poly(sy, 1));
                    pre = mul(vs, pre, left);
                    vec_add(out, vec_left(vs, pre, V));
                }
            }
        }
    }
    return out;
}

Vec embed(const Algebra& A, const Vec& v) {
    if (!A.ambient) return v;
    Vec out;
    for (auto& [g, p] : v) vec_add(out, vec_left(A.vs(), p, A.embedding.at(g)));
    return out;
}

Vec bracket_in_ambient(const Algebra& A, const Vec& x, const Vec& y) {
    if (!A.ambient) return bracket(A, x, y);
    return bracket(*A.ambient, embed(A, x), embed(A, y));
}

Vec coeff_extract(const ConfSpace& cs, const Vec& v, const IndexSeq& k) {
    if (!is_canonical(cs.spec, k)) throw InputError("index sequence is not canonical");
    auto [sign, lk] = cs.seq_monomial(LAM, k);
    Rational f(seq_stats(cs.spec, k).f);
    Vec out;
    for (auto& [b, p] : v) {
        Poly q;
        for (auto& [m, c] : p) {
            if (cs.restrict(m, {LAM}) != lk) continue;
            Monomial rest = m;
            for (int i = 1; i <= cs.spec.n(); ++i) rest.e[cs.var(LAM, i)] = 0;
            q.add(rest, c * f);
        }
        vec_add(out, b, q);
    }
    return out;
}

Vec k_product(const Algebra& A, const Vec& a, const Vec& b, const IndexSeq& k) {
    if (canonical_index(A.spec(), k).sign == 0) return {};
    return coeff_extract(A.cs, bracket(A, a, b), k);
}

Vec subst_skew(const ConfSpace& cs, const Vec& v) {
    std::vector<Poly> img;
    for (int i = 1; i <= cs.spec.n(); ++i)
        img.push_back(-(Poly::var(cs.var(LAM, i)) + Poly::var(cs.var(DEL, i))));
    return vec_subst(cs.vs, v, cs.family_images(LAM, img));
}

Vec residual_skew(const Algebra& A, const Vec& a, const Vec& b) {
    int pa = vec_parity(A, a), pb = vec_parity(A, b);
    if (vec_is_zero(a) || vec_is_zero(b)) return {};
    if (pa < 0 || pb < 0) throw InputError("residual_skew needs parity-homogeneous input");
    Vec r = bracket(A, b, a);
    vec_add(r, subst_skew(A.cs, bracket(A, a, b)), (pa && pb) ? -1 : 1);
    return r;
}

Vec residual_jacobi(const Algebra& A, const Vec& a, const Vec& b, const Vec& c) {
    if (vec_is_zero(a) || vec_is_zero(b) || vec_is_zero(c)) return {};
    int pa = vec_parity(A, a), pb = vec_parity(A, b);
    if (pa < 0 || pb < 0 || vec_parity(A, c) < 0) throw InputError("residual_jacobi needs parity-homogeneous input");
    Vec r = bracket(A, a, bracket(A, b, c, Shift::Mu), Shift::Lambda);
    vec_add(r, bracket(A, bracket(A, a, b, Shift::Lambda), c, Shift::LambdaPlusMu), -1);
    vec_add(r, bracket(A, b, bracket(A, a, c, Shift::Lambda), Shift::Mu), (pa && pb) ? 1 : -1);
    return r;
}

namespace {

std::optional<int> vec_degree(const Algebra& A, const Vec& v) {
    std::optional<int> d;
    for (auto& [g, p] : v)
        for (auto& [m, c] : p) {
            int q = A.vs().degree(m) + A.gens[g].degree;
            if (!d)
                d = q;
            else if (*d != q)
                return std::nullopt;
        }
    return d;
}

}  // namespace

std::vector<std::string> residual_grading(const Algebra& A, const Vec& a, const Vec& b) {
    std::vector<std::string> out;
    if (vec_is_zero(a) || vec_is_zero(b)) return out;
    auto da = vec_degree(A, a), db = vec_degree(A, b);
    if (!da || !db) {
        out.push_back("inhomogeneous input");
        return out;
    }
    Vec r = bracket(A, a, b);
    for (auto& [g, p] : r)
        for (auto& [m, c] : p) {
            int d = A.vs().degree(m) + A.gens[g].degree;
            if (d != *da + *db)
                out.push_back("term " + A.vs().str(m) + "*" + A.gens[g].name + " has degree " + std::to_string(d) +
                              ", expected " + std::to_string(*da + *db));
        }
    return out;
}

Vec rewrite_normal(const Algebra& A, const Vec& v, bool reverse_order) {
    if (A.rules.empty()) return v;
    const VarSpace& vs = A.vs();
    Vec cur = v;
    for (int guard = 0; guard < 1000000; ++guard) {
        bool found = false;
        int fg = 0;
        Monomial fm;
        Rational fc;
        const RewriteRule* fr = nullptr;
        for (auto& rule : A.rules) {
            auto it = cur.find(rule.gen);
            if (it == cur.end()) continue;
            auto consider = [&](const Monomial& m, const Rational& c) {
                for (int i = 0; i < vs.n; ++i)
                    if (m.e[i] < rule.lead.e[i]) return false;
                found = true;
                fg = rule.gen;
                fm = m;
                fc = c;
                fr = &rule;
                return true;
            };
            if (reverse_order) {
                for (auto t = it->second.terms().rbegin(); t != it->second.terms().rend(); ++t)
                    if (consider(t->first, t->second)) break;
            } else {
                for (auto& [m, c] : it->second)
                    if (consider(m, c)) break;
            }
            if (found) break;
        }
        if (!found) return cur;
        Monomial q = fm;
        for (int i = 0; i < vs.n; ++i) q.e[i] = std::uint8_t(q.e[i] - fr->lead.e[i]);
        Poly drop;
        drop.add(fm, -fc);
        vec_add(cur, fg, drop);
        // q * lead is fm with no sign since the lead is even
        vec_add(cur, vec_left(vs, Poly(q, fc), fr->replacement));
    }
    throw std::runtime_error("rewrite did not terminate");
}

Vec normal_form(const Algebra& A, const Vec& v) {
    if (A.mode == Mode::Ambient) return embed(A, v);
    if (A.mode == Mode::Rewrite) return rewrite_normal(A, v);
    return v;
}

bool is_zero_in(const Algebra& A, const Vec& v) { return vec_is_zero(normal_form(A, v)); }

std::string elem_str(const Algebra& A, const Vec& v) { return vec_str(A.vs(), v, A.names); }

Report check_algebra(const Algebra& A) {
    Report R;
    R.algebra = A.name;
    R.check = "axioms";
    const int n = A.gen_count();
    auto N = [&](int g) { return A.gens[g].name; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Vec gi = gen_elem(A, i), gj = gen_elem(A, j);
            Vec r = normal_form(A, residual_skew(A, gi, gj));
            if (!vec_is_zero(r)) R.fail("skew(" + N(i) + "," + N(j) + "): " + vec_str(A.vs(), r, A.mode == Mode::Ambient ? A.ambient->names : A.names));
            for (auto& msg : residual_grading(A, gi, gj)) R.fail("grading(" + N(i) + "," + N(j) + "): " + msg);
            if (A.mode == Mode::Ambient) {
                Vec d = embed(A, bracket(A, gi, gj));
                vec_add(d, bracket_in_ambient(A, gi, gj), -1);
                if (!vec_is_zero(d)) R.fail("ambient table mismatch (" + N(i) + "," + N(j) + ")");
            }
            if (A.mode == Mode::Rewrite) {
                Vec t = bracket(A, gi, gj);
                if (rewrite_normal(A, t, false) != rewrite_normal(A, t, true))
                    R.fail("rewrite not confluent on (" + N(i) + "," + N(j) + ")");
            }
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec r = normal_form(A, residual_jacobi(A, gen_elem(A, i), gen_elem(A, j), gen_elem(A, k)));
                if (!vec_is_zero(r)) R.fail("jacobi(" + N(i) + "," + N(j) + "," + N(k) + ")");
            }
    for (std::size_t q = 0; q < A.relations.size(); ++q) {
        const Vec& rel = A.relations[q];
        if (A.mode == Mode::Ambient && !vec_is_zero(embed(A, rel)))
            R.fail("relation " + std::to_string(q) + " is nonzero in the ambient module");
        if (A.mode == Mode::Rewrite && !vec_is_zero(rewrite_normal(A, rel)))
            R.fail("relation " + std::to_string(q) + " does not reduce to zero");
        for (int g = 0; g < n; ++g) {
            if (!is_zero_in(A, bracket(A, rel, gen_elem(A, g))) || !is_zero_in(A, bracket(A, gen_elem(A, g), rel)))
                R.fail("bracket not compatible with relation " + std::to_string(q) + " against " + N(g));
        }
    }
    return R;
}

}  // namespace lcsa
