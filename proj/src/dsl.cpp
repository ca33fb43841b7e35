#include "lcsa/dsl.hpp"

#include "json.hpp"

#include "lcsa/algebras.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace lcsa {

namespace {

enum class Tok { Ident, String, Int, Sym, Newline, End };

struct Token {
    Tok kind;
    std::string text;
    SourceLoc loc;
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string t, SourceLoc l) {
        if (k == Tok::Newline && (out.empty() || out.back().kind == Tok::Newline)) return;
        out.push_back({k, std::move(t), l});
    };
    while (i < s.size()) {
        char c = s[i];
        SourceLoc here{line, col};
        if (c == '\n') {
            push(Tok::Newline, "\n", here);
            ++i, ++line, col = 1;
        } else if (c == ' ' || c == '\t' || c == '\r') {
            ++i, ++col;
        } else if (c == '#') {
            while (i < s.size() && s[i] != '\n') ++i, ++col;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            push(Tok::Int, std::string(s.substr(i, j - i)), here);
            col += int(j - i);
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            push(Tok::Ident, std::string(s.substr(i, j - i)), here);
            col += int(j - i);
            i = j;
        } else if (c == '"') {
            std::string t;
            std::size_t j = i + 1;
            int cc = col + 1;
            for (;;) {
                if (j >= s.size() || s[j] == '\n') throw ParseError(here, "unterminated string");
                if (s[j] == '"') break;
                if (s[j] == '\\' && j + 1 < s.size() && (s[j + 1] == '"' || s[j + 1] == '\\')) ++j, ++cc;
                t += s[j];
                ++j, ++cc;
            }
            push(Tok::String, t, here);
            col = cc + 1;
            i = j + 1;
        } else if (std::string_view("()=+-/[];,*").find(c) != std::string_view::npos) {
            push(Tok::Sym, std::string(1, c), here);
            ++i, ++col;
        } else {
            std::ostringstream m;
            if (static_cast<unsigned char>(c) < 32 || static_cast<unsigned char>(c) >= 127)
                m << "unexpected byte 0x" << std::hex << int(static_cast<unsigned char>(c));
            else
                m << "unexpected character '" << c << "'";
            throw ParseError(here, m.str());
        }
    }
    push(Tok::Newline, "\n", {line, col});
    out.push_back({Tok::End, "", {line, col}});
    return out;
}

const std::regex kVarTok(R"(([ldy])([0-9]+))");
const std::regex kIdent(R"([A-Za-z_][A-Za-z0-9_]*)");
constexpr int kMaxFactors = 48;

bool reserved(const std::string& s) {
    return std::regex_match(s, kVarTok) || s == "end";
}

class Cursor {
public:
    explicit Cursor(std::vector<Token> t) : t_(std::move(t)) {}

    const Token& peek(int k = 0) const { return t_[std::min(i_ + k, t_.size() - 1)]; }
    Token take() {
        Token r = peek();
        if (i_ < t_.size() - 1) ++i_;
        return r;
    }
    std::size_t pos() const { return i_; }
    void seek(std::size_t p) { i_ = p; }

    bool at_sym(char c) const { return peek().kind == Tok::Sym && peek().text[0] == c; }
    bool at_word(const char* w) const { return peek().kind == Tok::Ident && peek().text == w; }
    bool at_eol() const { return peek().kind == Tok::Newline || peek().kind == Tok::End; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(peek().loc, msg + describe()); }

    std::string describe() const {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Newline: return " (found end of line)";
            case Tok::End: return " (found end of input)";
            case Tok::String: return " (found string \"" + t.text + "\")";
            default: return " (found '" + t.text + "')";
        }
    }

    void expect_sym(char c) {
        if (!at_sym(c)) fail(std::string("expected '") + c + "'");
        take();
    }
    void expect_word(const char* w) {
        if (!at_word(w)) fail(std::string("expected '") + w + "'");
        take();
    }
    void end_decl() {
        if (!at_eol()) fail("expected end of line");
        while (peek().kind == Tok::Newline) take();
    }
    void skip_newlines() {
        while (peek().kind == Tok::Newline) take();
    }

    std::string name(const char* what) {
        if (peek().kind != Tok::Ident && peek().kind != Tok::String) fail(std::string("expected ") + what);
        return take().text;
    }

    long long integer(long long lo, long long hi, const char* what) {
        SourceLoc l = peek().loc;
        bool neg = false;
        if (at_sym('-')) take(), neg = true;
        if (peek().kind != Tok::Int) fail(std::string("expected ") + what);
        long long v = 0;
        auto& s = peek().text;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size()) throw ParseError(l, std::string(what) + " out of range");
        take();
        if (neg) v = -v;
        if (v < lo || v > hi)
            throw ParseError(l, std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        return v;
    }

    // INT ["/" INT], optional leading minus
    Rational rational(bool allow_sign) {
        SourceLoc l = peek().loc;
        bool neg = false;
        if (allow_sign && at_sym('-')) take(), neg = true;
        if (peek().kind != Tok::Int) fail("expected a rational number");
        std::string txt = take().text;
        if (at_sym('/')) {
            take();
            if (peek().kind != Tok::Int) fail("expected a denominator");
            txt += "/" + take().text;
        }
        if (txt.size() > 60) throw ParseError(l, "number too long");
        Rational r;
        try {
            r = Rational::parse(txt);
        } catch (const std::exception&) {
            throw ParseError(l, "invalid rational '" + txt + "'");
        }
        return neg ? -r : r;
    }

private:
    std::vector<Token> t_;
    std::size_t i_ = 0;
};

struct Names {
    std::vector<std::string> names;
    std::vector<int> parity;
    int find(const std::string& n) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == n) return int(i);
        return -1;
    }
};

// sum of terms [q] factor* ; variables before the generator multiply on the
// left, after it on the right
Vec parse_expr(Cursor& c, const ConfSpace& cs, const Names& gens) {
    Vec out;
    if (c.peek().kind == Tok::Int && c.peek().text == "0" && (c.peek(1).kind == Tok::Newline || c.peek(1).kind == Tok::End)) {
        c.take();
        return out;
    }
    Rational sign = 1;
    if (c.at_sym('-')) c.take(), sign = -1;
    else if (c.at_sym('+')) c.take();
    int n = cs.spec.n();
    for (;;) {
        SourceLoc tl = c.peek().loc;
        Rational coeff = sign;
        if (c.peek().kind == Tok::Int) coeff *= c.rational(false);
        Poly left(coeff);
        std::vector<int> right;
        int gen = -1, factors = 0;
        while (c.peek().kind == Tok::Ident || c.peek().kind == Tok::String || c.at_sym('*')) {
            if (c.at_sym('*')) {
                c.take();
                continue;
            }
            Token t = c.take();
            if (++factors > kMaxFactors) throw ParseError(t.loc, "too many factors in one term");
            std::smatch m;
            if (t.kind == Tok::Ident && std::regex_match(t.text, m, kVarTok)) {
                char f = m[1].str()[0];
                if (f == 'y') throw ParseError(t.loc, "'" + t.text + "' is not allowed here (use l<i> or d<i>)");
                if (m[2].length() > 2) throw ParseError(t.loc, "variable index out of range in '" + t.text + "'");
                int idx = std::stoi(m[2]);
                if (idx < 1 || idx > n)
                    throw ParseError(t.loc, "variable index " + std::to_string(idx) + " out of range 1.." + std::to_string(n));
                int v = cs.var(f == 'l' ? LAM : DEL, idx);
                if (gen < 0)
                    left = mul_mono(cs.vs, left, [&] {
                        Monomial mm;
                        mm.e[v] = 1;
                        return mm;
                    }());
                else
                    right.push_back(v);
                continue;
            }
            if (gen >= 0) throw ParseError(t.loc, "two generators in one term ('" + gens.names[gen] + "' and '" + t.text + "')");
            gen = gens.find(t.text);
            if (gen < 0) throw ParseError(t.loc, "unknown generator '" + t.text + "'");
        }
        if (gen < 0) {
            if (c.at_eol() || c.at_sym('+') || c.at_sym('-')) throw ParseError(tl, "term has no generator");
            c.fail("expected a term");
        }
        Vec v;
        vec_add(v, gen, left);
        for (int var : right) v = vec_right(cs.vs, v, Poly::var(var), gens.parity);
        vec_add(out, v);
        if (c.at_sym('+')) {
            c.take();
            sign = 1;
        } else if (c.at_sym('-')) {
            c.take();
            sign = -1;
        } else {
            break;
        }
    }
    if (!c.at_eol()) c.fail("unexpected token in expression");
    return out;
}

struct Pending {
    enum Kind { Bracket, Relation, Embed } kind;
    SourceLoc loc;
    int a = -1, b = -1;
    std::size_t pos = 0;
};

Algebra parse_block(Cursor& c, bool nested) {
    c.skip_newlines();
    SourceLoc head = c.peek().loc;
    c.expect_word("algebra");
    Algebra A;
    A.name = c.name("an algebra name");
    c.expect_sym('(');
    long long r = c.integer(0, 8, "even variable count");
    c.expect_sym(',');
    long long s = c.integer(0, 8, "odd variable count");
    c.expect_sym(')');
    if (r + s < 1 || r + s > 8) throw ParseError(head, "need 1 <= r+s <= 8");
    A.cs = ConfSpace(VarSpec{int(r), int(s)});
    c.end_decl();
    Names gens;
    std::vector<Pending> todo;
    std::shared_ptr<Algebra> ambient;
    bool mode_set = false;
    for (;;) {
        if (c.peek().kind == Tok::End) {
            if (nested) c.fail("expected 'end' closing the ambient block");
            break;
        }
        if (nested && c.at_word("end")) {
            c.take();
            break;
        }
        SourceLoc dl = c.peek().loc;
        if (c.peek().kind != Tok::Ident) c.fail("expected a declaration");
        std::string kw = c.take().text;
        if (kw == "gen") {
            SourceLoc nl = c.peek().loc;
            std::string nm = c.name("a generator name");
            if (reserved(nm)) throw ParseError(nl, "'" + nm + "' is reserved for variables");
            if (gens.find(nm) >= 0) throw ParseError(nl, "generator '" + nm + "' declared twice");
            int par;
            if (c.at_word("even")) par = 0;
            else if (c.at_word("odd")) par = 1;
            else c.fail("expected 'even' or 'odd'");
            c.take();
            c.expect_word("deg");
            int deg = int(c.integer(-1000, 1000, "degree"));
            A.gens.push_back({nm, par, deg});
            gens.names.push_back(nm);
            gens.parity.push_back(par);
            if (gens.names.size() > 4096) throw ParseError(nl, "too many generators");
            c.end_decl();
        } else if (kw == "family") {
            A.family = c.name("a family tag");
            c.end_decl();
        } else if (kw == "mode") {
            if (mode_set) throw ParseError(dl, "mode given twice");
            mode_set = true;
            std::string m = c.name("a mode");
            if (m == "free") A.mode = Mode::Free;
            else if (m == "rewrite") A.mode = Mode::Rewrite;
            else if (m == "ambient") A.mode = Mode::Ambient;
            else throw ParseError(dl, "unknown mode '" + m + "' (free, rewrite, ambient)");
            c.end_decl();
        } else if (kw == "bracket") {
            Pending p{Pending::Bracket, dl};
            for (int* slot : {&p.a, &p.b}) {
                SourceLoc nl = c.peek().loc;
                std::string nm = c.name("a generator name");
                *slot = gens.find(nm);
                if (*slot < 0) throw ParseError(nl, "unknown generator '" + nm + "'");
            }
            c.expect_sym('=');
            p.pos = c.pos();
            for (auto& q : todo)
                if (q.kind == Pending::Bracket && q.a == p.a && q.b == p.b)
                    throw ParseError(dl, "bracket " + gens.names[p.a] + " " + gens.names[p.b] + " given twice");
            todo.push_back(p);
            while (!c.at_eol()) c.take();
            c.end_decl();
        } else if (kw == "relation") {
            todo.push_back({Pending::Relation, dl, -1, -1, c.pos()});
            while (!c.at_eol()) c.take();
            c.end_decl();
        } else if (kw == "embed") {
            SourceLoc nl = c.peek().loc;
            std::string nm = c.name("a generator name");
            int g = gens.find(nm);
            if (g < 0) throw ParseError(nl, "unknown generator '" + nm + "'");
            c.expect_sym('=');
            for (auto& q : todo)
                if (q.kind == Pending::Embed && q.a == g) throw ParseError(dl, "embedding of '" + nm + "' given twice");
            todo.push_back({Pending::Embed, dl, g, -1, c.pos()});
            while (!c.at_eol()) c.take();
            c.end_decl();
        } else if (kw == "ambient") {
            if (ambient) throw ParseError(dl, "ambient given twice");
            c.end_decl();
            ambient = std::make_shared<Algebra>(parse_block(c, true));
            c.end_decl();
            if (!(ambient->cs.spec == A.cs.spec)) throw ParseError(dl, "ambient algebra has different variables");
        } else {
            throw ParseError(dl, "unknown declaration '" + kw + "'");
        }
    }
    std::size_t resume = c.pos();
    if (A.mode == Mode::Ambient) {
        if (!ambient) throw ParseError(head, "mode ambient needs an ambient block");
        A.embedding.assign(A.gen_count(), Vec{});
    } else if (ambient) {
        throw ParseError(head, "ambient block given but mode is not ambient");
    }
    std::vector<bool> embedded(A.gen_count(), false);
    Names amb;
    if (ambient) amb = Names{ambient->names, ambient->parity};
    for (auto& p : todo) {
        c.seek(p.pos);
        if (p.kind == Pending::Bracket) {
            Vec v = parse_expr(c, A.cs, gens);
            int want = gens.parity[p.a] ^ gens.parity[p.b];
            for (auto& [g, P] : v)
                for (auto& [m, q] : P)
                    if ((A.vs().parity(m) ^ gens.parity[g]) != want)
                        throw ParseError(p.loc, "parity mismatch in bracket " + gens.names[p.a] + " " + gens.names[p.b] +
                                                    ": term with " + gens.names[g] + " has the wrong parity");
            A.table[{p.a, p.b}] = v;
        } else if (p.kind == Pending::Relation) {
            A.relations.push_back(parse_expr(c, A.cs, gens));
        } else {
            if (!ambient) throw ParseError(p.loc, "embed needs an ambient block");
            A.embedding[p.a] = parse_expr(c, A.cs, amb);
            embedded[p.a] = true;
        }
    }
    c.seek(resume);
    if (ambient) {
        for (int g = 0; g < A.gen_count(); ++g)
            if (!embedded[g]) throw ParseError(head, "no embedding given for '" + gens.names[g] + "'");
        A.ambient = ambient;
    }
    try {
        A.finalize();
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(head, e.what());
    }
    return A;
}

std::string quote_name(const std::string& s) {
    if (std::regex_match(s, kIdent) && !reserved(s)) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') q += '\\';
        q += ch;
    }
    return q + "\"";
}

std::string var_word(const ConfSpace& cs, int v) {
    static const char* fam = "lmyd";
    return std::string(1, fam[cs.family(v)]) + std::to_string(cs.index(v));
}

std::string print_expr(const ConfSpace& cs, const Vec& v, const std::vector<std::string>& names) {
    std::string out;
    bool first = true;
    for (auto& [g, P] : v)
        for (auto& [m, q] : P) {
            Rational a = q;
            if (first) {
                if (a.sign() < 0) out += "-", a = -a;
            } else {
                out += a.sign() < 0 ? " - " : " + ";
                if (a.sign() < 0) a = -a;
            }
            first = false;
            if (!a.is_one()) out += a.str() + " ";
            for (int var : cs.vs.factors(m)) {
                int f = cs.family(var);
                if (f != LAM && f != DEL) throw std::logic_error("only lambda and partial variables can be printed");
                out += var_word(cs, var) + " ";
            }
            out += quote_name(names[g]);
        }
    return first ? "0" : out;
}

void print_block(std::ostringstream& os, const Algebra& A, const std::string& ind) {
    os << ind << "algebra " << quote_name(A.name) << " (" << A.spec().r << ", " << A.spec().s << ")\n";
    if (!A.family.empty()) os << ind << "family " << quote_name(A.family) << "\n";
    if (A.mode == Mode::Rewrite) os << ind << "mode rewrite\n";
    if (A.mode == Mode::Ambient) os << ind << "mode ambient\n";
    for (auto& g : A.gens) os << ind << "gen " << quote_name(g.name) << (g.parity ? " odd" : " even") << " deg " << g.degree << "\n";
    for (auto& [k, v] : A.table)
        os << ind << "bracket " << quote_name(A.names[k.first]) << " " << quote_name(A.names[k.second]) << " = "
           << print_expr(A.cs, v, A.names) << "\n";
    for (auto& r : A.relations) os << ind << "relation " << print_expr(A.cs, r, A.names) << "\n";
    if (A.mode == Mode::Ambient && A.ambient) {
        os << ind << "ambient\n";
        print_block(os, *A.ambient, ind + "  ");
        os << ind << "end\n";
        for (int g = 0; g < A.gen_count(); ++g)
            os << ind << "embed " << quote_name(A.names[g]) << " = " << print_expr(A.cs, A.embedding[g], A.ambient->names) << "\n";
    }
}

// [q] y<i>* NAME terms
AnnElement parse_ann(Cursor& c, const AnnAlgebra& g) {
    AnnElement out;
    const Algebra& A = g.conf();
    Rational sign = 1;
    if (c.at_sym('-')) c.take(), sign = -1;
    int n = g.cs().spec.n();
    for (;;) {
        SourceLoc tl = c.peek().loc;
        Rational coeff = sign;
        if (c.peek().kind == Tok::Int) coeff *= c.rational(false);
        IndexSeq K;
        int gen = -1;
        while (gen < 0 && (c.peek().kind == Tok::Ident || c.peek().kind == Tok::String || c.at_sym('*'))) {
            if (c.at_sym('*')) {
                c.take();
                continue;
            }
            Token t = c.take();
            std::smatch m;
            if (t.kind == Tok::Ident && std::regex_match(t.text, m, kVarTok) && m[1].str() == "y") {
                if (m[2].length() > 2) throw ParseError(t.loc, "index out of range in '" + t.text + "'");
                int idx = std::stoi(m[2]);
                if (idx < 1 || idx > n) throw ParseError(t.loc, "y index out of range 1.." + std::to_string(n));
                if (K.size() >= std::size_t(kMaxFactors)) throw ParseError(t.loc, "too many factors in one term");
                K.push_back(idx);
                continue;
            }
            gen = A.index(t.text);
            if (gen < 0) throw ParseError(t.loc, "unknown generator '" + t.text + "'");
        }
        if (gen < 0) throw ParseError(tl, "term has no generator");
        ann_add(out, g.elem(K, gen, coeff));
        if (c.at_sym('+')) {
            c.take();
            sign = 1;
        } else if (c.at_sym('-')) {
            c.take();
            sign = -1;
        } else {
            break;
        }
    }
    return out;
}

Matrix parse_matrix(Cursor& c) {
    Matrix M;
    c.expect_sym('[');
    M.emplace_back();
    for (;;) {
        if (c.at_sym(']')) {
            c.take();
            break;
        }
        if (c.at_sym(';')) {
            c.take();
            M.emplace_back();
            continue;
        }
        if (c.at_sym(',')) {
            c.take();
            continue;
        }
        if (c.peek().kind == Tok::Int || c.at_sym('-')) {
            M.back().push_back(c.rational(true));
            continue;
        }
        c.fail("non-rational matrix entry");
    }
    if (M.size() == 1 && M[0].empty()) M.clear();
    return M;
}

}  // namespace

Algebra parse_algebra(std::string_view text) {
    Cursor c(lex(text));
    c.skip_newlines();
    if (c.at_word("builtin")) {
        // builtin RW 2 1 | builtin K 3 | builtin RE36
        c.take();
        SourceLoc at = c.peek().loc;
        std::string fam = c.name("a built-in family");
        std::vector<long long> args;
        while (c.peek().kind == Tok::Int) args.push_back(c.integer(0, 8, "a built-in parameter"));
        c.end_decl();
        c.skip_newlines();
        if (c.peek().kind != Tok::End) c.fail("trailing input after the builtin line");
        std::string name = fam;
        if (fam == "RW" && args.size() == 2) name += "(" + std::to_string(args[0]) + "," + std::to_string(args[1]) + ")";
        else if (fam == "K" && args.size() == 1) name += "(" + std::to_string(args[0]) + ")";
        else if (!args.empty() || fam == "RW" || fam == "K")
            throw ParseError(at, "wrong parameters for built-in '" + fam + "'");
        try {
            return build_by_name(name);
        } catch (const std::exception& e) {
            throw ParseError(at, e.what());
        }
    }
    Algebra A = parse_block(c, false);
    c.skip_newlines();
    if (c.peek().kind != Tok::End) c.fail("trailing input after the algebra");
    return A;
}

Vec parse_element(std::string_view text, const Algebra& A) {
    Cursor c(lex(text));
    Names gens{A.names, A.parity};
    Vec v = parse_expr(c, A.cs, gens);
    c.skip_newlines();
    if (c.peek().kind != Tok::End) c.fail("trailing input after the element");
    return v;
}

Algebra load_algebra(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) {
        std::ifstream in(arg);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_algebra(ss.str());
    }
    return build_by_name(arg);
}

std::string print_algebra(const Algebra& A) {
    std::ostringstream os;
    print_block(os, A, "");
    return os.str();
}

bool same_presentation(const Algebra& a, const Algebra& b, std::string* why) {
    auto no = [&](const std::string& w) {
        if (why) *why = w;
        return false;
    };
    if (a.name != b.name) return no("name");
    if (a.family != b.family) return no("family");
    if (!(a.spec() == b.spec())) return no("variables");
    if (a.gens != b.gens) return no("generators");
    if (a.mode != b.mode) return no("mode");
    if (a.table != b.table) {
        for (auto& [k, v] : a.table) {
            auto it = b.table.find(k);
            if (it == b.table.end() || it->second != v) return no("bracket " + a.names[k.first] + " " + a.names[k.second]);
        }
        return no("bracket table");
    }
    if (a.relations != b.relations) return no("relations");
    if (a.embedding != b.embedding) return no("embedding");
    if (bool(a.ambient) != bool(b.ambient)) return no("ambient");
    if (a.ambient && !same_presentation(*a.ambient, *b.ambient, why)) {
        if (why) *why = "ambient: " + *why;
        return false;
    }
    return true;
}

G0Module parse_g0_module(std::string_view text, const AnnAlgebra& g) {
    Cursor c(lex(text));
    c.skip_newlines();
    SourceLoc head = c.peek().loc;
    c.expect_word("g0module");
    if (c.at_word("for")) {
        c.take();
        SourceLoc nl = c.peek().loc;
        std::string an = c.name("an algebra name");
        if (an != g.name()) throw ParseError(nl, "module is written for '" + an + "' but the algebra is '" + g.name() + "'");
    }
    c.end_decl();
    std::vector<std::string> names;
    std::vector<int> parity;
    std::vector<AnnElement> span;
    std::vector<Matrix> mats;
    std::vector<SourceLoc> mat_locs;
    while (c.peek().kind != Tok::End) {
        SourceLoc dl = c.peek().loc;
        if (c.at_word("basis")) {
            c.take();
            for (;;) {
                SourceLoc nl = c.peek().loc;
                std::string nm = c.name("a basis vector name");
                for (auto& x : names)
                    if (x == nm) throw ParseError(nl, "basis vector '" + nm + "' declared twice");
                if (c.at_word("even")) parity.push_back(0);
                else if (c.at_word("odd")) parity.push_back(1);
                else c.fail("expected 'even' or 'odd'");
                c.take();
                names.push_back(nm);
                if (names.size() > 256) throw ParseError(nl, "too many basis vectors");
                if (!c.at_sym(',')) break;
                c.take();
            }
            c.end_decl();
        } else if (c.at_word("act")) {
            c.take();
            SourceLoc el = c.peek().loc;
            AnnElement x = parse_ann(c, g);
            if (x.empty() || g.is_zero(x)) throw ParseError(el, "element is zero");
            auto d = g.degree(g.normal_form(x));
            if (!d || *d != 0) throw ParseError(el, "element " + g.str(x) + " is not of degree 0");
            c.expect_sym('=');
            SourceLoc ml = c.peek().loc;
            span.push_back(x);
            mats.push_back(parse_matrix(c));
            mat_locs.push_back(ml);
            c.end_decl();
        } else {
            c.fail("expected 'basis' or 'act'");
        }
        (void)dl;
    }
    int dim = int(names.size());
    for (std::size_t k = 0; k < mats.size(); ++k) {
        bool ok = int(mats[k].size()) == dim;
        for (auto& row : mats[k]) ok = ok && int(row.size()) == dim;
        if (!ok) throw ParseError(mat_locs[k], "matrix is not " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    // unreached degree-0 directions act by zero
    auto gb = g.graded_basis(0);
    SparseEchelon<int> ech;
    for (auto& x : span) {
        auto cx = coords(g, 0, x);
        SparseRow<int> row;
        for (std::size_t t = 0; t < cx.size(); ++t)
            if (!cx[t].is_zero()) row[int(t)] = cx[t];
        ech.insert(row);
    }
    for (int t = 0; t < gb->dim(); ++t) {
        SparseRow<int> row{{t, Rational(1)}};
        if (ech.insert(row)) {
            span.push_back({{gb->basis[t], 1}});
            mats.push_back(Matrix(dim, std::vector<Rational>(dim)));
        }
    }
    try {
        return make_g0_module(g, names, parity, span, mats);
    } catch (const InputError& e) {
        throw ParseError(head, e.what());
    }
}

std::string print_g0_module(const AnnAlgebra& g, const G0Module& F) {
    std::ostringstream os;
    os << "g0module for " << quote_name(g.name()) << "\n";
    for (int i = 0; i < F.dim(); ++i) os << "basis " << quote_name(F.names[i]) << (F.parity[i] ? " odd" : " even") << "\n";
    const ConfSpace& cs = g.cs();
    for (auto& [s, M] : F.basis_mats) {
        os << "act ";
        for (int v : cs.vs.factors(s.y)) os << "y" << cs.index(v) << " ";
        os << quote_name(g.conf().names[s.gen]) << " = [";
        for (int i = 0; i < F.dim(); ++i) {
            if (i) os << "; ";
            for (int j = 0; j < F.dim(); ++j) os << (j ? " " : "") << M[i][j].str();
        }
        os << "]\n";
    }
    return os.str();
}

std::string emit_report(const Report& r) {
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["algebra"] = r.algebra;
    j["check"] = r.check;
    j["status"] = r.pass ? "pass" : "fail";
    j["witnesses"] = r.witnesses;
    j["dims"] = nlohmann::ordered_json::object();
    for (auto& [k, v] : ordered_entries(r.dims)) j["dims"][k] = v;
    j["characters"] = nlohmann::ordered_json::object();
    for (auto& [k, v] : r.characters) j["characters"][k] = v;
    return j.dump();
}

}  // namespace lcsa
