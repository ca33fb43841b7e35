#pragma once

#include "lcsa/repmod.hpp"

#include <string>
#include <string_view>

namespace lcsa {

struct SourceLoc {
    int line = 1;
    int col = 1;
};

// every diagnostic from the text formats; what() is "line:col: message"
struct ParseError : InputError {
    SourceLoc loc;
    ParseError(SourceLoc l, const std::string& msg)
        : InputError(std::to_string(l.line) + ":" + std::to_string(l.col) + ": " + msg), loc(l) {}
};

// .lcsa text -> finalized algebra. Products are read left to right and
// normalized (Koszul signs applied by the engine).
Algebra parse_algebra(std::string_view text);
std::string print_algebra(const Algebra& A);
// one element in the expression syntax of bracket lines, e.g. "d1 a + 2 l1 b"
Vec parse_element(std::string_view text, const Algebra& A);
// a built-in name or the path of a .lcsa file
Algebra load_algebra(const std::string& arg);
// structural equality of presentations; on mismatch `why` names the first difference
bool same_presentation(const Algebra& a, const Algebra& b, std::string* why = nullptr);

// .g0m text against an annihilation algebra. Degree-0 directions not reached
// by the listed elements act by zero.
G0Module parse_g0_module(std::string_view text, const AnnAlgebra& g);
std::string print_g0_module(const AnnAlgebra& g, const G0Module& F);

inline constexpr const char* kToolName = "lcsa";
inline constexpr const char* kToolVersion = "0.1.0";

std::string emit_report(const Report& r);

}  // namespace lcsa
