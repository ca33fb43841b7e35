#pragma once

#include "lcsa/report.hpp"
#include "lcsa/superpoly.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace lcsa {

struct Generator {
    std::string name;
    int parity = 0;
    int degree = 0;
    bool operator==(const Generator&) const = default;
};

enum class Mode { Free, Ambient, Rewrite };

// P*g with lead | P (lead a monomial in even partials) becomes (P/lead)*replacement.
struct RewriteRule {
    int gen = 0;
    Monomial lead;
    Vec replacement;
};

// Elements are Vec over generator indices with coefficients in the
// ConfSpace polynomial ring (lambda, mu scalars to the left of partials).
struct Algebra {
    std::string name;
    std::string family;  // builtin tag ("RW", "K", "RE36", "RE38", "RE510"), empty for user input
    ConfSpace cs;
    std::vector<Generator> gens;
    std::map<std::pair<int, int>, Vec> table;  // [g_lambda h], complete after finalize()
    Mode mode = Mode::Free;
    std::shared_ptr<const Algebra> ambient;
    std::vector<Vec> embedding;  // per generator, over ambient generators
    std::vector<Vec> relations;  // zero in the algebra
    std::vector<RewriteRule> rules;

    // derived, filled by finalize()
    std::map<std::pair<int, int>, Vec> table_mu, table_sum;
    std::vector<int> parity;
    std::vector<std::string> names;

    const VarSpace& vs() const { return cs.vs; }
    const VarSpec& spec() const { return cs.spec; }
    int index(const std::string& name) const;  // -1 if unknown
    int gen_count() const { return int(gens.size()); }

    // Fills missing table entries by skew-symmetry, orients relations in
    // rewrite mode and caches the shifted tables. Throws InputError when a
    // pair has no entry in either order.
    void finalize();
};

Vec gen_elem(const Algebra& A, int g, const Rational& c = 1);
Vec partial_elem(const Algebra& A, const IndexSeq& k, int g, const Rational& c = 1);

int vec_parity(const Algebra& A, const Vec& v);  // -1 inhomogeneous/zero
int vec_parity(const VarSpace& vs, const std::vector<int>& parity, const Vec& v);

enum class Shift { Lambda, Mu, LambdaPlusMu };

// The lambda-bracket extended by sesquilinearity. Scalars (lambda, mu) in
// either argument are pulled out with Koszul signs; the bracket variable is
// lambda, mu or lambda+mu.
Vec bracket(const Algebra& A, const Vec& x, const Vec& y, Shift s = Shift::Lambda);
Vec bracket_in_ambient(const Algebra& A, const Vec& x, const Vec& y);

// f(K) times the coefficient of lambda_K; K must be canonical.
Vec coeff_extract(const ConfSpace& cs, const Vec& v, const IndexSeq& k);
Vec k_product(const Algebra& A, const Vec& a, const Vec& b, const IndexSeq& k);
// lambda -> -lambda - partial
Vec subst_skew(const ConfSpace& cs, const Vec& v);

Vec residual_skew(const Algebra& A, const Vec& a, const Vec& b);
Vec residual_jacobi(const Algebra& A, const Vec& a, const Vec& b, const Vec& c);
std::vector<std::string> residual_grading(const Algebra& A, const Vec& a, const Vec& b);

Vec embed(const Algebra& A, const Vec& v);
Vec rewrite_normal(const Algebra& A, const Vec& v, bool reverse_order = false);
// Canonical representative for the zero test: rewrite normal form, the
// ambient image, or v itself.
Vec normal_form(const Algebra& A, const Vec& v);
bool is_zero_in(const Algebra& A, const Vec& v);

std::string elem_str(const Algebra& A, const Vec& v);

Report check_algebra(const Algebra& A);

}  // namespace lcsa
