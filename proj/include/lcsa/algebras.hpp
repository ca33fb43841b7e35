#pragma once

#include "lcsa/conformal.hpp"

#include <array>
#include <string>
#include <vector>

namespace lcsa {

Algebra build_rw(int r, int s);
Algebra build_kn(int n);
// with_sl2_term=false gives the odd-odd table exactly as printed, which
// fails Jacobi on (c, b, b); see README.
Algebra build_re36(bool with_sl2_term = true);
Algebra build_re38();
Algebra build_re510();
Algebra build_re510_ambient();

// "RW(2,1)", "K(3)", "K(1,3)", "RE36", "RE38", "RE510"; throws InputError.
Algebra build_by_name(const std::string& name);
std::vector<std::string> builtin_names();

// permutation sign helpers; 0 on repeated indices
int eps3(int i, int j);  // sign of (i, j, t) with {i,j,t} = {1,2,3}
int third3(int i, int j);
int perm_sign(const std::vector<int>& p);

// sl2 with basis E, F, H acting on F^2 = <e1, e2>; indices 0,1,2 and 0,1
namespace sl2 {
// [x, y] = sum c_z z
std::array<Rational, 3> bracket(int x, int y);
// x.e_v = sum c_w e_w
std::array<Rational, 2> act(int x, int v);
// e_j . e_k in the symmetric square, as an element of sl2
std::array<Rational, 3> sym(int j, int k);
// e_j ^ e_k
Rational wedge(int j, int k);
Rational trace(int x, int y);
}  // namespace sl2

}  // namespace lcsa
