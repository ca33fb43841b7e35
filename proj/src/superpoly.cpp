#include "lcsa/superpoly.hpp"

#include <algorithm>
#include <sstream>

namespace lcsa {

// ---- VarSpace ----

int VarSpace::add(std::string name, int parity, int degree) {
    if (n >= kMaxVars) throw InputError("too many variables");
    odd[n] = std::uint8_t(parity);
    deg[n] = degree;
    names.push_back(std::move(name));
    return n++;
}

int VarSpace::parity(const Monomial& m) const {
    int p = 0;
    for (int i = 0; i < n; ++i)
        if (odd[i]) p ^= m.e[i] & 1;
    return p;
}

int VarSpace::degree(const Monomial& m) const {
    int d = 0;
    for (int i = 0; i < n; ++i) d += deg[i] * m.e[i];
    return d;
}

int VarSpace::length(const Monomial& m) const {
    int l = 0;
    for (int i = 0; i < n; ++i) l += m.e[i];
    return l;
}

int VarSpace::mul_sign(const Monomial& a, const Monomial& b) const {
    int flips = 0;
    int above = 0;  // odd factors of a with index greater than the current one
    for (int i = 0; i < n; ++i)
        if (odd[i] && a.e[i]) ++above;
    for (int j = 0; j < n; ++j) {
        if (!odd[j]) continue;
        if (a.e[j]) {
            if (b.e[j]) return 0;
            --above;
        } else if (b.e[j]) {
            flips += above;
        }
    }
    return (flips & 1) ? -1 : 1;
}

std::vector<int> VarSpace::factors(const Monomial& m) const {
    std::vector<int> f;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < m.e[i]; ++k) f.push_back(i);
    return f;
}

std::string VarSpace::str(const Monomial& m) const {
    std::string out;
    for (int i = 0; i < n; ++i) {
        if (!m.e[i]) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
    }
    return out;
}

// ---- Poly ----

Poly Poly::var(int v, const Rational& c) {
    Monomial m;
    m.e[v] = 1;
    return Poly(m, c);
}

void Poly::add(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

Poly Poly::operator-() const {
    Poly r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

namespace {

Monomial mono_product(const VarSpace& vs, const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < vs.n; ++i) m.e[i] = std::uint8_t(a.e[i] + b.e[i]);
    return m;
}

}  // namespace

Poly mul(const VarSpace& vs, const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ma, ca] : a) {
        for (auto& [mb, cb] : b) {
            int s = vs.mul_sign(ma, mb);
            if (s == 0) continue;
            Rational c = ca * cb;
            r.add(mono_product(vs, ma, mb), s > 0 ? c : -c);
        }
    }
    return r;
}

Poly mul_mono(const VarSpace& vs, const Poly& a, const Monomial& m, const Rational& c) {
    Poly r;
    for (auto& [ma, ca] : a) {
        int s = vs.mul_sign(ma, m);
        if (s == 0) continue;
        Rational v = ca * c;
        r.add(mono_product(vs, ma, m), s > 0 ? v : -v);
    }
    return r;
}

Poly mono_mul(const VarSpace& vs, const Monomial& m, const Poly& a, const Rational& c) {
    Poly r;
    for (auto& [ma, ca] : a) {
        int s = vs.mul_sign(m, ma);
        if (s == 0) continue;
        Rational v = ca * c;
        r.add(mono_product(vs, m, ma), s > 0 ? v : -v);
    }
    return r;
}

Poly derive(const VarSpace& vs, int v, const Poly& p) {
    Poly r;
    for (auto& [m, c] : p) {
        if (!m.e[v]) continue;
        Monomial d = m;
        if (vs.odd[v]) {
            int before = 0;
            for (int i = 0; i < v; ++i)
                if (vs.odd[i] && m.e[i]) ++before;
            d.e[v] = 0;
            r.add(d, (before & 1) ? -c : c);
        } else {
            d.e[v] = std::uint8_t(m.e[v] - 1);
            r.add(d, c * Rational(m.e[v]));
        }
    }
    return r;
}

Poly subst(const VarSpace& vs, const Poly& p, const std::vector<std::optional<Poly>>& images) {
    Poly r;
    for (auto& [m, c] : p) {
        Poly acc(c);
        for (int v = 0; v < vs.n; ++v) {
            for (int k = 0; k < m.e[v]; ++k) {
                if (v < int(images.size()) && images[v]) {
                    acc = mul(vs, acc, *images[v]);
                } else {
                    Monomial x;
                    x.e[v] = 1;
                    acc = mul_mono(vs, acc, x);
                }
                if (acc.is_zero()) break;
            }
            if (acc.is_zero()) break;
        }
        r += acc;
    }
    return r;
}

int parity_of(const VarSpace& vs, const Poly& p) {
    int par = -1;
    for (auto& [m, c] : p) {
        int q = vs.parity(m);
        if (par < 0)
            par = q;
        else if (par != q)
            return -1;
    }
    return par;
}

std::optional<int> degree_of(const VarSpace& vs, const Poly& p) {
    std::optional<int> d;
    for (auto& [m, c] : p) {
        int q = vs.degree(m);
        if (!d)
            d = q;
        else if (*d != q)
            return std::nullopt;
    }
    return d;
}

std::string str(const VarSpace& vs, const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : p) {
        std::string ms = vs.str(m);
        Rational a = c;
        if (!first) {
            out += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        } else if (a.sign() < 0 && !ms.empty() && a == Rational(-1)) {
            out += "-";
            a = -a;
        }
        first = false;
        if (ms.empty())
            out += a.str();
        else if (a.is_one())
            out += ms;
        else
            out += a.str() + "*" + ms;
    }
    return out;
}

// ---- index sequences ----

Canonical canonical_index(const VarSpec& spec, const IndexSeq& k) {
    Canonical c;
    for (int x : k)
        if (x < 1 || x > spec.n()) throw InputError("index " + std::to_string(x) + " out of range");
    // insertion sort, tracking transpositions of odd entries
    IndexSeq v = k;
    int flips = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
            if (spec.parity(v[j - 1]) && spec.parity(v[j])) ++flips;
            std::swap(v[j - 1], v[j]);
        }
    }
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] == v[i - 1] && spec.parity(v[i])) {
            c.sign = 0;
            c.sorted = v;
            return c;
        }
    c.sign = (flips & 1) ? -1 : 1;
    c.sorted = std::move(v);
    return c;
}

bool is_canonical(const VarSpec& spec, const IndexSeq& k) {
    for (int x : k)
        if (x < 1 || x > spec.n()) return false;
    for (std::size_t i = 1; i < k.size(); ++i) {
        if (k[i] < k[i - 1]) return false;
        if (k[i] == k[i - 1] && spec.parity(k[i])) return false;
    }
    return true;
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::vector<int> multiplicities(const VarSpec& spec, const IndexSeq& k) {
    std::vector<int> m(spec.n() + 1, 0);
    for (int x : k) {
        if (x < 1 || x > spec.n()) throw InputError("index out of range");
        ++m[x];
    }
    return m;
}

IndexSeq seq_from_mults(const std::vector<int>& m) {
    IndexSeq k;
    for (std::size_t i = 1; i < m.size(); ++i)
        for (int j = 0; j < m[i]; ++j) k.push_back(int(i));
    return k;
}

SeqStats seq_stats(const VarSpec& spec, const IndexSeq& k) {
    SeqStats st;
    auto m = multiplicities(spec, k);
    int q = 0;
    for (int i = 1; i <= spec.n(); ++i) {
        st.f *= factorial(m[i]);
        if (spec.parity(i)) q += m[i];
    }
    st.p = q & 1;
    long long tri = 1LL * q * (q + 1) / 2;
    st.eta = (q == 0 || !(tri & 1)) ? 1 : -1;
    return st;
}

IndexSeq reversed(const IndexSeq& k) { return IndexSeq(k.rbegin(), k.rend()); }

std::vector<Split> shift_split(const VarSpec& spec, const IndexSeq& k) {
    auto m = multiplicities(spec, k);
    std::vector<Split> out;
    std::vector<int> c(m.size(), 0);
    while (true) {
        std::vector<int> rest(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) rest[i] = m[i] - c[i];
        Split s;
        s.I = seq_from_mults(c);
        s.R = seq_from_mults(rest);
        IndexSeq ir = s.I;
        ir.insert(ir.end(), s.R.begin(), s.R.end());
        s.sign = canonical_index(spec, ir).sign;
        if (s.sign != 0) out.push_back(std::move(s));
        std::size_t i = 1;
        for (; i < m.size(); ++i) {
            if (c[i] < m[i]) {
                ++c[i];
                break;
            }
            c[i] = 0;
        }
        if (i >= m.size()) break;
    }
    return out;
}

std::vector<IndexSeq> canonical_seqs(const VarSpec& spec, int length) {
    std::vector<IndexSeq> out;
    IndexSeq cur;
    auto rec = [&](auto& self, int start, int left) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= spec.n(); ++i) {
            if (!cur.empty() && cur.back() == i && spec.parity(i)) continue;
            cur.push_back(i);
            self(self, i, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 1, length);
    return out;
}

// ---- ConfSpace ----

ConfSpace::ConfSpace(const VarSpec& s) : spec(s) {
    if (s.r < 0 || s.s < 0 || 4 * s.n() > kMaxVars) throw InputError("unsupported variable counts");
    const char* pre[4] = {"l", "m", "y", "d"};
    const int deg[4] = {-2, -2, 2, -2};
    for (int f = 0; f < 4; ++f)
        for (int i = 1; i <= s.n(); ++i) vs.add(pre[f] + std::to_string(i), s.parity(i), deg[f]);
}

std::pair<int, Monomial> ConfSpace::seq_monomial(Family f, const IndexSeq& k) const {
    Canonical c = canonical_index(spec, k);
    Monomial m;
    if (c.sign == 0) return {0, m};
    for (int x : c.sorted) ++m.e[var(f, x)];
    return {c.sign, m};
}

Poly ConfSpace::seq_poly(Family f, const IndexSeq& k, const Rational& c) const {
    auto [s, m] = seq_monomial(f, k);
    if (s == 0) return Poly();
    return Poly(m, s > 0 ? c : -c);
}

Poly ConfSpace::seq_product(const std::vector<Poly>& images, const IndexSeq& k) const {
    Poly acc(Rational(1));
    for (int x : k) acc = mul(vs, acc, images[x - 1]);
    return acc;
}

Monomial ConfSpace::restrict(const Monomial& m, std::initializer_list<Family> fams) const {
    Monomial r;
    for (Family f : fams)
        for (int i = 1; i <= spec.n(); ++i) r.e[var(f, i)] = m.e[var(f, i)];
    return r;
}

std::vector<std::optional<Poly>> ConfSpace::family_images(Family from, const std::vector<Poly>& to) const {
    std::vector<std::optional<Poly>> img(vs.n);
    for (int i = 1; i <= spec.n(); ++i) img[var(from, i)] = to[i - 1];
    return img;
}

std::vector<Poly> ConfSpace::family_vars(Family f) const {
    std::vector<Poly> v;
    for (int i = 1; i <= spec.n(); ++i) v.push_back(Poly::var(var(f, i)));
    return v;
}

IndexSeq ConfSpace::seq_of(const Monomial& m, Family f) const {
    IndexSeq k;
    for (int i = 1; i <= spec.n(); ++i)
        for (int j = 0; j < m.e[var(f, i)]; ++j) k.push_back(i);
    return k;
}

// ---- Vec ----

void vec_add(Vec& acc, int b, const Poly& p) {
    if (p.is_zero()) return;
    auto [it, fresh] = acc.try_emplace(b, p);
    if (!fresh) {
        it->second += p;
        if (it->second.is_zero()) acc.erase(it);
    }
}

void vec_add(Vec& acc, const Vec& v, const Rational& c) {
    if (c.is_zero()) return;
    for (auto& [b, p] : v) vec_add(acc, b, c.is_one() ? p : p * c);
}

Vec vec_scale(const Vec& v, const Rational& c) {
    Vec r;
    vec_add(r, v, c);
    return r;
}

Vec vec_left(const VarSpace& vs, const Poly& p, const Vec& v) {
    Vec r;
    for (auto& [b, q] : v) vec_add(r, b, mul(vs, p, q));
    return r;
}

Vec vec_right(const VarSpace& vs, const Vec& v, const Poly& q, const std::vector<int>& basis_parity) {
    Vec r;
    for (auto& [b, p] : v) {
        Poly acc;
        for (auto& [mq, cq] : q) {
            bool flip = basis_parity[b] && vs.parity(mq);
            acc += mul_mono(vs, p, mq, flip ? -cq : cq);
        }
        vec_add(r, b, acc);
    }
    return r;
}

Vec vec_subst(const VarSpace& vs, const Vec& v, const std::vector<std::optional<Poly>>& images) {
    Vec r;
    for (auto& [b, p] : v) vec_add(r, b, subst(vs, p, images));
    return r;
}

bool vec_is_zero(const Vec& v) {
    for (auto& [b, p] : v)
        if (!p.is_zero()) return false;
    return true;
}

std::string vec_str(const VarSpace& vs, const Vec& v, const std::vector<std::string>& names) {
    if (vec_is_zero(v)) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [b, p] : v) {
        if (!first) os << " + ";
        first = false;
        std::string ps = str(vs, p);
        if (ps == "1")
            os << names[b];
        else
            os << "(" << ps << ")*" << names[b];
    }
    return os.str();
}

}  // namespace lcsa
