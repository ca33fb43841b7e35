#include "lcsa/acceptance.hpp"
#include "lcsa/algebras.hpp"
#include "lcsa/dsl.hpp"
#include "lcsa/geometric.hpp"
#include "lcsa/repmod.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

using namespace lcsa;

namespace {

struct Opts {
    bool json = false;
    unsigned seed = 20241016;
    int threads = 1;
    std::string out;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string text_report(const Report& r) {
    std::ostringstream os;
    os << r.check;
    if (!r.algebra.empty()) os << " " << r.algebra;
    os << ": " << (r.pass ? "pass" : "fail") << "\n";
    for (auto& [k, v] : ordered_entries(r.dims)) os << "  " << k << " = " << v << "\n";
    for (auto& [k, v] : r.characters) os << "  chi(" << k << ") = " << v << "\n";
    for (auto& w : r.witnesses) os << "  witness: " << w << "\n";
    for (auto& n : r.notes) os << "  note: " << n << "\n";
    return os.str();
}

// "1,2,2", "(1, 2)", "" -> index sequence
IndexSeq parse_index(const std::string& s, const VarSpec& spec) {
    static const std::regex ok(R"(\s*\(?\s*(\d+(\s*,\s*\d+)*)?\s*\)?\s*)");
    if (!std::regex_match(s, ok)) throw InputError("bad index sequence '" + s + "'");
    IndexSeq k;
    static const std::regex num(R"(\d+)");
    for (auto it = std::sregex_iterator(s.begin(), s.end(), num); it != std::sregex_iterator(); ++it) {
        if (it->length() > 3) throw InputError("index out of range in '" + s + "'");
        int i = std::stoi(it->str());
        if (i < 1 || i > spec.n()) throw InputError("index " + std::to_string(i) + " out of range 1.." + std::to_string(spec.n()));
        k.push_back(i);
    }
    return k;
}

int emit(const Opts& o, const Report& r) {
    std::string text = o.json ? emit_report(r) + "\n" : text_report(r);
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out);
        if (!f) throw InputError("cannot write '" + o.out + "'");
        f << text;
    }
    return r.pass ? 0 : 1;
}

Report cmd_check(const std::string& alg) {
    Algebra A = load_algebra(alg);
    Report r = check_algebra(A);
    if (!r.pass) return r;
    AnnAlgebra g(A);
    Report as = check_assumptions(g);
    for (auto& [k, v] : as.dims) r.dims["dim g_" + k] = v;
    for (auto& w : as.witnesses) r.fail("assumptions: " + w);
    for (auto& n : as.notes) r.notes.push_back(n);
    return r;
}

Report cmd_bracket(const std::string& alg, const std::string& xs, const std::string& ys) {
    Algebra A = load_algebra(alg);
    Vec x = parse_element(xs, A), y = parse_element(ys, A);
    Report r;
    r.algebra = A.name;
    r.check = "bracket";
    Vec v = normal_form(A, bracket(A, x, y));
    r.dims["result"] = v.empty() ? "0" : elem_str(A, v);
    return r;
}

Report cmd_kproduct(const std::string& alg, const std::string& as, const std::string& bs, const std::string& ks) {
    Algebra A = load_algebra(alg);
    Vec a = parse_element(as, A), b = parse_element(bs, A);
    auto can = canonical_index(A.spec(), parse_index(ks, A.spec()));
    Report r;
    r.algebra = A.name;
    r.check = "kproduct";
    Vec v;
    if (can.sign != 0) v = normal_form(A, vec_scale(k_product(A, a, b, can.sorted), can.sign));
    r.dims["result"] = v.empty() ? "0" : elem_str(A, v);
    return r;
}

Report cmd_ann_dim(const std::string& alg, int from, int to) {
    if (from > to) throw InputError("--from must not exceed --to");
    if (to - from > 64) throw InputError("degree range too long");
    AnnAlgebra g(load_algebra(alg));
    Report r;
    r.algebra = g.name();
    r.check = "ann-dim";
    for (int d = from; d <= to; ++d) r.dims[std::to_string(d)] = std::to_string(g.graded_basis(d)->dim());
    return r;
}

Report cmd_realize(const std::string& alg, int dmax, int threads) {
    AnnAlgebra g(load_algebra(alg));
    if (!realization_tag(g.conf())) throw InputError("no geometric realization known for '" + g.name() + "'");
    Report r = check_realization(g, dmax, nullptr, threads);
    r.algebra = g.name();
    r.check = "realize-check";
    return r;
}

Report cmd_shift_char(const std::string& alg) {
    AnnAlgebra g(load_algebra(alg));
    ShiftCharacter X = shift_character(g);
    Report r = check_shift_character(g, X);
    r.algebra = g.name();
    r.check = "shift-char";
    for (auto& [s, v] : X.chi) r.characters[g.str(s)] = v.str();
    const std::string& fam = g.conf().family;
    if (fam == "K" && g.conf().index("one") >= 0) r.characters["y"] = X.value(g, g.elem({1}, "one")).str();
    if (fam == "RW") {
        int n = g.cs().spec.n(), rr = g.cs().spec.r;
        AnnElement ev, od;
        for (int i = 1; i <= n; ++i) ann_add(i <= rr ? ev : od, g.elem({i}, i - 1, -1));
        r.characters["even Euler field"] = X.value(g, ev).str();
        r.characters["odd Euler field"] = X.value(g, od).str();
    }
    if (auto e = grading_element(g)) r.characters["grading element"] = X.value(g, *e).str();
    return r;
}

Report cmd_verma_dual(const std::string& alg, const std::string& file, const Opts& o) {
    AnnAlgebra g(load_algebra(alg));
    G0Module F = parse_g0_module(read_file(file), g);
    VermaOptions vo;
    vo.threads = o.threads;
    Report r = verify_duality(g, F, vo);
    r.algebra = g.name();
    r.check = "verma-dual";
    return r;
}

int cmd_selftest(const Opts& o, bool quick, const std::vector<int>& only) {
    AcceptanceOptions ao;
    ao.seed = o.seed;
    ao.threads = o.threads;
    ao.slow = !quick;
    ao.only = only;
    Report all;
    all.check = "selftest";
    std::ostringstream buf;
    ao.on_result = [&](const Report& r) {
        all.dims[r.check] = r.pass ? "pass" : "fail";
        if (!r.pass) all.pass = false;
        for (auto& w : r.witnesses) all.fail(r.check + ": " + w);
        if (!o.json) {
            std::string line = std::string(r.pass ? "PASS " : "FAIL ") + r.check + "\n";
            if (o.out.empty()) std::cout << line << std::flush;
            buf << line;
        }
    };
    run_acceptance(ao);
    if (o.json) return emit(o, all);
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        f << buf.str();
    }
    return all.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local conformal superalgebras: checks and Verma module duality"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    Opts o;
    if (const char* t = std::getenv("LCSA_THREADS")) {
        try {
            o.threads = std::max(1, std::stoi(t));
        } catch (...) {
            std::cerr << "ignoring LCSA_THREADS='" << t << "'\n";
        }
    }
    app.add_flag("--json", o.json, "print one JSON object");
    app.add_option("--seed", o.seed, "random seed");
    app.add_option("--threads", o.threads, "worker threads (default from LCSA_THREADS)")->check(CLI::Range(1, 256));
    app.add_option("--out", o.out, "write the output to a file");

    std::string alg, x, y, k, file;
    int from = 0, to = 0, dmax = 4;
    bool quick = false;
    std::vector<int> only;
    auto global = [&](CLI::App* s) {
        s->fallthrough();
        return s;
    };
    auto* c_check = global(app.add_subcommand("check", "axioms of a conformal superalgebra"));
    c_check->add_option("alg", alg, "built-in name or .lcsa file")->required();
    auto* c_br = global(app.add_subcommand("bracket", "lambda-bracket of two elements"));
    c_br->add_option("alg", alg)->required();
    c_br->add_option("x", x)->required();
    c_br->add_option("y", y)->required();
    auto* c_kp = global(app.add_subcommand("kproduct", "K-product of two elements"));
    c_kp->add_option("alg", alg)->required();
    c_kp->add_option("a", x)->required();
    c_kp->add_option("b", y)->required();
    c_kp->add_option("K", k, "index sequence, e.g. 1,2")->required();
    auto* c_ad = global(app.add_subcommand("ann-dim", "graded dimensions of the annihilation algebra"));
    c_ad->add_option("alg", alg)->required();
    c_ad->add_option("--from", from)->required();
    c_ad->add_option("--to", to)->required();
    auto* c_rc = global(app.add_subcommand("realize-check", "compare with the geometric realization"));
    c_rc->add_option("alg", alg)->required();
    c_rc->add_option("--dmax", dmax)->check(CLI::Range(0, 12));
    auto* c_sc = global(app.add_subcommand("shift-char", "the shift character on g_0"));
    c_sc->add_option("alg", alg)->required();
    auto* c_vd = global(app.add_subcommand("verma-dual", "duality of the Verma module built on a g0-module file"));
    c_vd->add_option("alg", alg)->required();
    c_vd->add_option("module-file", file)->required();
    auto* c_st = global(app.add_subcommand("selftest", "run the acceptance criteria"));
    c_st->add_flag("--quick", quick, "skip the rank-1024 E(5,10) Verma module");
    c_st->add_option("--only", only, "criteria to run")->check(CLI::Range(1, 9));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*c_check) return emit(o, cmd_check(alg));
        if (*c_br) return emit(o, cmd_bracket(alg, x, y));
        if (*c_kp) return emit(o, cmd_kproduct(alg, x, y, k));
        if (*c_ad) return emit(o, cmd_ann_dim(alg, from, to));
        if (*c_rc) return emit(o, cmd_realize(alg, dmax, o.threads));
        if (*c_sc) return emit(o, cmd_shift_char(alg));
        if (*c_vd) return emit(o, cmd_verma_dual(alg, file, o));
        if (*c_st) return cmd_selftest(o, quick, only);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
