#pragma once

#include "lcsa/conformal.hpp"
#include "lcsa/linalg.hpp"

#include <memory>
#include <mutex>
#include <optional>

namespace lcsa {

// y_M a; y is a monomial in the y family of the algebra's ConfSpace (canonical
// order, so y_M for canonical M has coefficient +1).
struct AnnSym {
    Monomial y;
    int gen = 0;
    auto operator<=>(const AnnSym&) const = default;
};

using AnnElement = std::map<AnnSym, Rational>;

void ann_add(AnnElement& acc, const AnnSym& s, const Rational& c);
void ann_add(AnnElement& acc, const AnnElement& v, const Rational& c = 1);
AnnElement ann_scale(const AnnElement& v, const Rational& c);

struct GradedBasis {
    int degree = 0;
    std::vector<AnnSym> span;   // every y_M g of this degree
    std::vector<AnnSym> basis;  // non-pivot symbols; normal forms are supported here
    SparseEchelon<AnnSym> relations;
    int dim() const { return int(basis.size()); }
};

class AnnAlgebra {
public:
    explicit AnnAlgebra(Algebra A);

    const Algebra& conf() const { return A_; }
    const ConfSpace& cs() const { return A_.cs; }
    const std::string& name() const { return A_.name; }

    int sym_degree(const AnnSym& s) const;
    int sym_parity(const AnnSym& s) const;
    std::optional<int> degree(const AnnElement& v) const;  // nullopt: zero or mixed
    int parity(const AnnElement& v) const;                 // -1: zero or mixed

    // y_M g for any sequence M (reordered with its sign)
    AnnElement elem(const IndexSeq& M, int gen, const Rational& c = 1) const;
    AnnElement elem(const IndexSeq& M, const std::string& gen, const Rational& c = 1) const;

    // y-and-partial polynomial times a generator; partials are traded for
    // y-derivatives in the quotient.
    AnnElement reduce(const Poly& yd, int gen) const;

    AnnElement bracket_sym(const AnnSym& u, const AnnSym& v) const;  // no normal form
    AnnElement bracket(const AnnElement& u, const AnnElement& v) const;
    AnnElement normal_form(const AnnElement& v) const;
    bool is_zero(const AnnElement& v) const { return normal_form(v).empty(); }

    // the left derivation d/dy_i on the y-part
    AnnElement dy(int i, const AnnElement& v) const;

    std::shared_ptr<const GradedBasis> graded_basis(int d) const;
    int min_gen_degree() const;

    std::string str(const AnnSym& s) const;
    std::string str(const AnnElement& v) const;

private:
    std::shared_ptr<GradedBasis> build_component(int d) const;

    Algebra A_;
    mutable std::mutex mu_;
    mutable std::map<int, std::shared_ptr<const GradedBasis>> cache_;
};

// right action X (d/dy_j) = (-1)^{p_j p(X)} d/dy_j X, applied over J left to right
Poly right_dy(const ConfSpace& cs, const Poly& y, const IndexSeq& J);

// Elements u_1..u_n of degree -2 with ad(u_i) = d/dy_i on the components
// of degree lo..hi; nullopt if no such elements exist.
std::optional<std::vector<AnnElement>> identify_minus_two(const AnnAlgebra& g, int lo, int hi);

// depth <= 3, degrees -1/-3 purely odd, dim g_-2 = r+s acting as the d/dy_i
Report check_assumptions(const AnnAlgebra& g, int window = 4);

// Truncated series a_lambda = sum (-1)^{p_K} lambda_{rev K}/f(K) y_K a over
// |K| <= cutoff, keyed by the scalar monomial (scalar on the left).
using LambdaSeries = std::map<Monomial, AnnElement>;
LambdaSeries lambda_embed(const AnnAlgebra& g, const Vec& a, int cutoff, Family f = LAM);
// [a_lambda, b_mu] - [a_lambda b]_{lambda+mu}, restricted to lambda- and
// mu-degrees <= cutoff, after normal form. Empty iff the identity holds there.
LambdaSeries embedding_bracket_residual(const AnnAlgebra& g, const Vec& a, const Vec& b, int cutoff);
std::string series_str(const AnnAlgebra& g, const LambdaSeries& s);

}  // namespace lcsa
