#pragma once

#include "lcsa/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcsa {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kMaxVars = 32;

// r even then s odd indices, numbered 1..r+s.
struct VarSpec {
    int r = 0;
    int s = 0;
    int n() const { return r + s; }
    int parity(int i) const { return i > r ? 1 : 0; }
    bool operator==(const VarSpec&) const = default;
};

using IndexSeq = std::vector<int>;

struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};
    auto operator<=>(const Monomial&) const = default;
};

// A flat list of supercommuting variables; the canonical order of factors
// in a monomial is the variable index order.
struct VarSpace {
    int n = 0;
    std::array<std::uint8_t, kMaxVars> odd{};
    std::array<int, kMaxVars> deg{};
    std::vector<std::string> names;

    int add(std::string name, int parity, int degree);
    int parity(const Monomial& m) const;
    int degree(const Monomial& m) const;
    int length(const Monomial& m) const;
    // Koszul sign of a*b put in canonical order; 0 if an odd variable repeats.
    int mul_sign(const Monomial& a, const Monomial& b) const;
    std::vector<int> factors(const Monomial& m) const;
    std::string str(const Monomial& m) const;
};

class Poly {
public:
    using Map = std::map<Monomial, Rational>;
    Poly() = default;
    explicit Poly(const Rational& c) { add(Monomial{}, c); }
    Poly(const Monomial& m, const Rational& c) { add(m, c); }

    static Poly var(int v, const Rational& c = 1);

    void add(const Monomial& m, const Rational& c);
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }
    Map::const_iterator begin() const { return terms_.begin(); }
    Map::const_iterator end() const { return terms_.end(); }
    Rational coeff(const Monomial& m) const;
    Rational constant() const { return coeff(Monomial{}); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    bool operator==(const Poly&) const = default;

private:
    Map terms_;
};

Poly mul(const VarSpace& vs, const Poly& a, const Poly& b);
Poly mul_mono(const VarSpace& vs, const Poly& a, const Monomial& m, const Rational& c = 1);
Poly mono_mul(const VarSpace& vs, const Monomial& m, const Poly& a, const Rational& c = 1);
// Left super-derivation d/dv.
Poly derive(const VarSpace& vs, int v, const Poly& p);
// Superalgebra homomorphism sending variable v to images[v] (unchanged when absent).
Poly subst(const VarSpace& vs, const Poly& p, const std::vector<std::optional<Poly>>& images);
int parity_of(const VarSpace& vs, const Poly& p);  // -1 when inhomogeneous or zero
std::optional<int> degree_of(const VarSpace& vs, const Poly& p);
std::string str(const VarSpace& vs, const Poly& p);

// ---- index sequences ----

struct Canonical {
    int sign = 1;  // 0 when an odd index repeats
    IndexSeq sorted;
};
Canonical canonical_index(const VarSpec& spec, const IndexSeq& k);
bool is_canonical(const VarSpec& spec, const IndexSeq& k);

struct SeqStats {
    long long f = 1;
    int p = 0;
    int eta = 1;
};
SeqStats seq_stats(const VarSpec& spec, const IndexSeq& k);
long long factorial(int n);
IndexSeq reversed(const IndexSeq& k);
std::vector<int> multiplicities(const VarSpec& spec, const IndexSeq& k);
IndexSeq seq_from_mults(const std::vector<int>& m);

struct Split {
    IndexSeq I, R;
    int sign = 1;
};
std::vector<Split> shift_split(const VarSpec& spec, const IndexSeq& k);

// All canonical sequences of the given length.
std::vector<IndexSeq> canonical_seqs(const VarSpec& spec, int length);

// ---- the conformal variable space: families lambda, mu, y, partial ----

enum Family : int { LAM = 0, MU = 1, YV = 2, DEL = 3 };

struct ConfSpace {
    VarSpec spec;
    VarSpace vs;
    ConfSpace() = default;
    explicit ConfSpace(const VarSpec& s);
    int var(Family f, int i) const { return int(f) * spec.n() + (i - 1); }
    Family family(int v) const { return Family(v / spec.n()); }
    int index(int v) const { return v % spec.n() + 1; }
    // canonical monomial of the ordered product of family variables over k
    std::pair<int, Monomial> seq_monomial(Family f, const IndexSeq& k) const;
    Poly seq_poly(Family f, const IndexSeq& k, const Rational& c = 1) const;
    // ordered product prod_j images[k_j]
    Poly seq_product(const std::vector<Poly>& images, const IndexSeq& k) const;
    // split a monomial into its part in the given families and the rest (sign +1
    // when the families form a prefix of the variable order)
    Monomial restrict(const Monomial& m, std::initializer_list<Family> fams) const;
    // rename / shift a family: lambda_i -> images
    std::vector<std::optional<Poly>> family_images(Family from, const std::vector<Poly>& to) const;
    std::vector<Poly> family_vars(Family f) const;
    IndexSeq seq_of(const Monomial& m, Family f) const;
};

// ---- combinations over a basis with polynomial coefficients ----

using Vec = std::map<int, Poly>;

void vec_add(Vec& acc, int b, const Poly& p);
void vec_add(Vec& acc, const Vec& v, const Rational& c = 1);
Vec vec_scale(const Vec& v, const Rational& c);
Vec vec_left(const VarSpace& vs, const Poly& p, const Vec& v);
// (sum P_c c) * q, with the bimodule sign c q = (-1)^{p(q)p(c)} q c
Vec vec_right(const VarSpace& vs, const Vec& v, const Poly& q, const std::vector<int>& basis_parity);
Vec vec_subst(const VarSpace& vs, const Vec& v, const std::vector<std::optional<Poly>>& images);
bool vec_is_zero(const Vec& v);
std::string vec_str(const VarSpace& vs, const Vec& v, const std::vector<std::string>& names);

}  // namespace lcsa
