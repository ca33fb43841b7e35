#pragma once

#include "lcsa/annihilation.hpp"

#include <memory>

namespace lcsa {

// Free module over the partials with basis m_k. action[g][k] = g_lambda m_k
// as a Vec over the basis, coefficients in lambda (scalars, left) and partials.
struct ConformalModule {
    std::string name;
    std::shared_ptr<const Algebra> alg;
    std::vector<std::string> basis;
    std::vector<int> parity;
    std::vector<std::vector<Vec>> action;

    int rank() const { return int(basis.size()); }
    const ConfSpace& cs() const { return alg->cs; }
};

ConformalModule zero_module(std::shared_ptr<const Algebra> A, std::vector<std::string> basis, std::vector<int> parity);

// a_X m for a generator, the bracket variable given by images of lambda_i
Vec module_act(const ConformalModule& M, int gen, const std::vector<Poly>& X, const Vec& m);
// (Q g)_X m for an algebra element with coefficients in scalars and partials
Vec module_act(const ConformalModule& M, const Vec& a, const std::vector<Poly>& X, const Vec& m);
// action of an annihilation element through coefficient extraction
Vec module_act_ann(const ConformalModule& M, const AnnAlgebra& g, const AnnElement& x, const Vec& m);
Vec basis_vec(int k);
std::string module_elem_str(const ConformalModule& M, const Vec& m);

// parity of the matrix entries, relations acting as zero, [a_l, b_m] = (a_l b)_{l+m}
Report residual_module_axioms(const ConformalModule& M);
Report check_coherent(const ConformalModule& M, const AnnAlgebra& g);

ConformalModule dual_module(const ConformalModule& M);
// (m_i*)* -> (-1)^{p(m_i)} m_i intertwines the actions
Report double_dual_check(const ConformalModule& M);

// T(m_k) = sum_j T[k][j](partials) n_j
struct ModuleMap {
    const ConformalModule* src = nullptr;
    const ConformalModule* dst = nullptr;
    int parity = 0;
    std::vector<Vec> images;
};
Vec map_apply(const ModuleMap& T, const Vec& m);
ModuleMap compose(const ModuleMap& S, const ModuleMap& T);  // S after T
Report check_morphism(const ModuleMap& T);
// (T*f)_lambda m = -(-1)^{p(T)p(f)} f_lambda T(m), as a map dst* -> src*
ModuleMap dual_morphism(const ModuleMap& T, const ConformalModule& src_dual, const ConformalModule& dst_dual);
// rank tests on the span of partial-monomials of degree <= window
bool is_injective(const ModuleMap& T, int window);
bool is_surjective(const ModuleMap& T, int window);
bool maps_equal(const ModuleMap& S, const ModuleMap& T, const Rational& c = 1);  // S == c T

// ---- finite-dimensional g_0-modules ----

struct G0Module {
    std::vector<std::string> names;
    std::vector<int> parity;
    std::vector<AnnElement> span;
    std::vector<Matrix> mats;
    std::map<AnnSym, Matrix> basis_mats;  // on the degree-0 basis of g
    int dim() const { return int(names.size()); }
};

// validates parity, linear consistency and commutators; throws InputError
G0Module make_g0_module(const AnnAlgebra& g, std::vector<std::string> names, std::vector<int> parity,
                        std::vector<AnnElement> span, std::vector<Matrix> mats);
G0Module trivial_g0(const AnnAlgebra& g, int dim = 1);
G0Module character_g0(const AnnAlgebra& g, const std::map<AnnSym, Rational>& weights, int parity = 0);
// basis of the characters of g_0 (functionals vanishing on [g_0, g_0])
std::vector<std::map<AnnSym, Rational>> g0_characters(const AnnAlgebra& g);
// g_0 acting on the component of the given degree by brackets
G0Module adjoint_g0(const AnnAlgebra& g, int degree);
// F twisted by a character: x acts by F(x) + w(x)
G0Module twist_g0(const AnnAlgebra& g, const G0Module& F, const std::map<AnnSym, Rational>& w);
Matrix g0_matrix(const AnnAlgebra& g, const G0Module& F, const AnnElement& x);
std::vector<Rational> coords(const AnnAlgebra& g, int degree, const AnnElement& x);

// ---- shift character ----

struct ShiftCharacter {
    std::map<AnnSym, Rational> chi, rho, str2;  // on the degree-0 basis
    Rational value(const AnnAlgebra& g, const AnnElement& x) const;
};
ShiftCharacter shift_character(const AnnAlgebra& g);
// chi on brackets, chi = -rho + str on g_-2
Report check_shift_character(const AnnAlgebra& g, const ShiftCharacter& chi);
// x.v_h* = chi_x v_h* - (-1)^{p(x)p(v_h)} sum_k v_h*(x.v_k) v_k*
G0Module chi_shift(const AnnAlgebra& g, const G0Module& F, const ShiftCharacter& chi);
// degree-0 elements spanning the center of g_0, and the grading element (ad = degree) if any
std::vector<AnnElement> g0_center(const AnnAlgebra& g);
std::optional<AnnElement> grading_element(const AnnAlgebra& g);

// ---- generalized Verma modules ----

struct VermaOptions {
    unsigned permute_seed = 0;  // 0: ascending degree then basis order; else shuffled within each degree
    int window = -1;            // degree window for g_>0 and reachability checks; -1: 2*depth*n
    int threads = 1;
};

struct VermaModule {
    const AnnAlgebra* g = nullptr;
    G0Module F;
    std::vector<AnnSym> negs;    // d_1..d_n in the chosen order
    std::vector<AnnElement> us;  // u_i with ad(u_i) = d/dy_i
    int depth = 0;
    int window = 0;
    ConformalModule module;
    int index(unsigned mask, int h) const { return int(mask) * F.dim() + h; }
    unsigned full_mask() const { return (1u << negs.size()) - 1; }
    int neg_parity(unsigned mask) const;
};

// throws InputError naming the failed assumption
VermaModule build_verma(const AnnAlgebra& g, const G0Module& F, const VermaOptions& opt = {});
// normal form of a word in the negative part applied to v_h (letters: AnnElements of degree < 0)
Vec pbw_normalize(const VermaModule& V, const std::vector<AnnElement>& word, int h = 0);
// a_lambda (d_i m_k) from the annihilation action against the M1 rule
Report verma_m1_check(const VermaModule& V);

Report dual_verma_restriction(const VermaModule& V, const ShiftCharacter& chi);
Report verify_duality(const AnnAlgebra& g, const G0Module& F, const VermaOptions& opt = {});

}  // namespace lcsa
