#include "doctest.h"
#include "helpers.hpp"

#include "lcsa/algebras.hpp"
#include "lcsa/dsl.hpp"

using namespace lcsa;
using testutil::kSeed;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_algebra(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("parse a small presentation") {
    Algebra A = parse_algebra("algebra RW(1,0)\n gen a even deg -2\n bracket a a = d1 a + 2 l1 a\n");
    CHECK(A.name == "RW");
    CHECK(A.gen_count() == 1);
    Algebra W = build_rw(1, 0);
    CHECK(A.table == W.table);
    CHECK(check_algebra(A).pass);
}

TEST_CASE("products are read left to right") {
    // l2 and d2 are odd: d2 l2 a = -l2 d2 a; a right factor picks up the Koszul sign of b
    Algebra A = parse_algebra("algebra t (1, 1)\ngen a even deg 0\ngen b odd deg 0\n"
                              "bracket a a = d2 l2 a\nbracket a b = 0\nbracket b b = b d2\n");
    const ConfSpace& cs = A.cs;
    Monomial m;
    m.e[cs.var(LAM, 2)] = 1;
    m.e[cs.var(DEL, 2)] = 1;
    CHECK(A.table.at({0, 0}) == Vec{{0, Poly(m, -1)}});
    CHECK(A.table.at({1, 1}) == Vec{{1, Poly::var(cs.var(DEL, 2), -1)}});
}

TEST_CASE("empty generator list is a valid algebra") {
    Algebra A = parse_algebra("algebra triv (1, 0)\n");
    CHECK(A.gen_count() == 0);
    CHECK(check_algebra(A).pass);
}

TEST_CASE("diagnostics carry locations") {
    CHECK(error_of("algebra X (1,0)\ngen a even deg -2\ngen b even deg -2\nbracket a b = l1 c\n") ==
          "4:18: unknown generator 'c'");
    CHECK(error_of("algebra X (1,0)\ngen a even deg -2\nbracket a a = d1 a\ngen b odd deg 0\n")
              .find("missing bracket entry") != std::string::npos);
    CHECK(error_of("algebra X (0,1)\ngen a even deg -2\nbracket a a = d1 a\n").find("parity mismatch") != std::string::npos);
    CHECK(error_of("algebra X (1,0)\ngen a even deg\n").rfind("2:15:", 0) == 0);
    CHECK(error_of("algebra X (1,0)\ngen a even deg -2\nbracket a a = d3 a\n").find("out of range") != std::string::npos);
    CHECK(error_of("algebra X (1,0)\ngen d1 even deg -2\n").find("reserved") != std::string::npos);
    CHECK(error_of("algebra X (1,0)\ngen a even deg -2 $\n") == "2:19: unexpected character '$'");
    CHECK(error_of("algebra X (1,0)\ngen a even deg -2\nbracket a a = 1/0 a\n").find("invalid rational") != std::string::npos);
}

TEST_CASE("round trip of every built-in") {
    for (std::string nm : {"RW(1,0)", "RW(1,1)", "RW(2,1)", "RW(1,2)", "RW(3,0)", "RW(0,3)", "K(1,2)", "K(1,3)", "K(1,4)",
                           "RE36", "RE36-printed", "RE38", "RE510", "RE510-ambient"}) {
        CAPTURE(nm);
        Algebra A = build_by_name(nm);
        std::string text = print_algebra(A);
        Algebra B = parse_algebra(text);
        std::string why;
        CHECK_MESSAGE(same_presentation(A, B, &why), why);
        CHECK(print_algebra(B) == text);
    }
}

TEST_CASE("built-ins by name") {
    CHECK(parse_algebra("builtin RW 2 1\n").table == build_rw(2, 1).table);
    CHECK(parse_algebra("# comment\nbuiltin K 3").name == "K(3)");
    CHECK(parse_algebra("builtin RE36").gen_count() == build_re36().gen_count());
    CHECK(error_of("builtin RW 2\n") == "1:9: wrong parameters for built-in 'RW'");
    CHECK(error_of("builtin E44\n").find("unknown algebra") != std::string::npos);
    CHECK(error_of("builtin K 2\ngen a even deg 0\n").rfind("2:1:", 0) == 0);
}

TEST_CASE("g0-module files") {
    AnnAlgebra g(build_kn(3));
    G0Module F = parse_g0_module("g0module for \"K(3)\"\nbasis v even\nact y1 one = [5]\n", g);
    CHECK(F.dim() == 1);
    CHECK(g0_matrix(g, F, g.elem({1}, "one")) == Matrix{{5}});
    // unlisted directions act by zero
    CHECK(g0_matrix(g, F, g.elem({}, "xi12")) == Matrix{{0}});
    G0Module T = parse_g0_module("g0module\nbasis v even\n", g);
    for (auto& [s, M] : T.basis_mats) CHECK(M == Matrix{{0}});
    // round trip through the printer
    G0Module F2 = parse_g0_module(print_g0_module(g, F), g);
    CHECK(F2.basis_mats == F.basis_mats);

    auto err = [&](const AnnAlgebra& h, const std::string& text) {
        try {
            parse_g0_module(text, h);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(err(g, "g0module\nbasis v even\nact y1 one = [1 2]\n").find("matrix is not 1x1") != std::string::npos);
    CHECK(err(g, "g0module\nbasis v even\nact y1 one = [x]\n").find("non-rational") != std::string::npos);
    CHECK(err(g, "g0module\nbasis v even\nact one = [1]\n").find("not of degree 0") != std::string::npos);
    CHECK(err(g, "g0module for RE36\nbasis v even\n").find("RE36") != std::string::npos);
    // odd element of gl(1|1) with an even-even entry
    AnnAlgebra w(build_rw(1, 1));
    CHECK(err(w, "g0module\nbasis u even, v odd\nact y1 a2 = [1 0; 0 0]\n").find("parity") != std::string::npos);
    // the adjoint module printed and read back
    G0Module ad = adjoint_g0(w, -2);
    std::string txt = print_g0_module(w, ad);
    CHECK(parse_g0_module(txt, w).basis_mats == ad.basis_mats);
}

TEST_CASE("report JSON") {
    Report r;
    r.algebra = "RE510";
    r.check = "ann-dim";
    r.dims["0"] = "24";
    r.characters["y"] = Rational(-3, 2).str();
    auto j = emit_report(r);
    CHECK(j.find("\"status\":\"pass\"") != std::string::npos);
    CHECK(j.find("\"dims\":{\"0\":\"24\"}") != std::string::npos);
    CHECK(j.find("\"-3/2\"") != std::string::npos);
    CHECK(j.rfind("{\"tool\":\"lcsa\",\"version\":", 0) == 0);
    r.fail("jacobi(a,b,c)");
    CHECK(emit_report(r).find("\"witnesses\":[\"jacobi(a,b,c)\"]") != std::string::npos);
}

TEST_CASE("fuzz: malformed input gives located diagnostics") {
    std::mt19937_64 rng(kSeed);
    std::vector<std::string> seeds;
    for (std::string nm : {"RW(1,0)", "RW(1,1)", "K(1,2)", "RW(2,1)"}) seeds.push_back(print_algebra(build_by_name(nm)));
    AnnAlgebra w(build_rw(1, 1));
    std::string mod = print_g0_module(w, adjoint_g0(w, -2));
    int parsed = 0, diagnosed = 0, other = 0;
    for (int t = 0; t < 10000; ++t) {
        bool module = t % 5 == 4;
        std::string text = module ? mod : seeds[rng() % seeds.size()];
        text = t % 10 == 9 ? [&] {
            std::string junk;
            int L = int(rng() % 80);
            for (int k = 0; k < L; ++k) junk += char(rng() % 256);
            return junk;
        }()
                           : sampling::mutate_text(rng, text);
        try {
            if (module)
                parse_g0_module(text, w);
            else
                parse_algebra(text);
            ++parsed;
        } catch (const ParseError& e) {
            if (e.loc.line >= 1 && e.loc.col >= 1) ++diagnosed;
            else ++other;
        } catch (const std::exception& e) {
            ++other;
            if (other < 5) MESSAGE(e.what() << "\n---\n" << text);
        }
    }
    CHECK(other == 0);
    CHECK(parsed + diagnosed == 10000);
    CHECK(diagnosed > 5000);
}
