#pragma once

#include "lcsa/conformal.hpp"

#include <random>
#include <string>

// random inputs shared by the unit tests and the acceptance suite
namespace lcsa::sampling {

inline Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    int n = num(rng);
    if (n == 0) n = 1;
    return Rational(n, den(rng));
}

// random monomial over the given families, at most `len` factors
inline Monomial random_mono(std::mt19937_64& rng, const ConfSpace& cs, std::initializer_list<Family> fams, int len) {
    std::vector<int> vars;
    for (Family f : fams)
        for (int i = 1; i <= cs.spec.n(); ++i) vars.push_back(cs.var(f, i));
    Monomial m;
    std::uniform_int_distribution<int> L(0, len);
    std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
    int l = L(rng);
    for (int k = 0; k < l; ++k) {
        int v = vars[pick(rng)];
        if (cs.vs.odd[v] && m.e[v]) continue;
        ++m.e[v];
    }
    return m;
}

inline Poly random_poly(std::mt19937_64& rng, const ConfSpace& cs, std::initializer_list<Family> fams, int len, int terms) {
    Poly p;
    for (int t = 0; t < terms; ++t) p.add(random_mono(rng, cs, fams, len), small_rational(rng));
    return p;
}

// parity-homogeneous random element with coefficients in the given families
inline Vec random_elem(std::mt19937_64& rng, const Algebra& A, int parity, std::initializer_list<Family> fams = {DEL},
                       int len = 2, int terms = 3) {
    Vec v;
    std::uniform_int_distribution<int> g(0, A.gen_count() - 1);
    for (int t = 0; t < 20 && int(v.size()) < terms; ++t) {
        int gi = g(rng);
        Monomial m = random_mono(rng, A.cs, fams, len);
        if ((A.vs().parity(m) ^ A.gens[gi].parity) != parity) continue;
        vec_add(v, gi, Poly(m, small_rational(rng)));
    }
    return v;
}

// a few random edits: deletions, insertions, swaps, truncation, repeated lines
inline std::string mutate_text(std::mt19937_64& rng, std::string s) {
    static const std::string alphabet = "abdly0123456789 \n\t()=+-/[];,*#\"_xXe\x01\xff";
    std::uniform_int_distribution<int> op(0, 6);
    int rounds = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int r = 0; r < rounds && !s.empty(); ++r) {
        std::uniform_int_distribution<std::size_t> at(0, s.size() - 1);
        std::size_t p = at(rng);
        switch (op(rng)) {
            case 0: s.erase(p, std::uniform_int_distribution<std::size_t>(1, 12)(rng)); break;
            case 1: s.insert(s.begin() + long(p), alphabet[rng() % alphabet.size()]); break;
            case 2: s[p] = alphabet[rng() % alphabet.size()]; break;
            case 3: s.resize(p); break;
            case 4: {
                std::size_t q = at(rng);
                std::swap(s[p], s[q]);
                break;
            }
            case 5: {
                std::size_t e = s.find('\n', p);
                s.insert(p, s.substr(p, e == std::string::npos ? std::string::npos : e - p + 1));
                break;
            }
            default: s.insert(p, " 99999999999999999999999/0 "); break;
        }
    }
    return s;
}

}  // namespace lcsa::sampling
