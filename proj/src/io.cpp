#include "wbc/io.hpp"

#include <cctype>
#include <sstream>

namespace wbc {

// --- printers --------------------------------------------------------------

static void print_bits(std::ostringstream& out, const char* tag, Bits b, int n) {
    out << tag << "[";
    for (int i = 0; i < n; i++) out << ((b >> i) & 1) << (i + 1 < n ? "," : "");
    out << "]";
}

static void print_exps(std::ostringstream& out, const char* tag, const std::vector<int>& v) {
    out << tag << "[";
    for (size_t i = 0; i < v.size(); i++) out << v[i] << (i + 1 < v.size() ? "," : "");
    out << "]";
}

std::string BCMonomial::str() const {
    std::ostringstream out;
    if (diag.r > 0) {
        print_bits(out, "c", alpha, diag.r);
        out << " ";
    }
    out << diag.str();
    if (diag.t > 0) {
        out << " ";
        print_bits(out, "cb", beta, diag.t);
    }
    return out.str();
}

std::string RegularMonomial::str() const {
    std::ostringstream out;
    if (core.diag.r > 0) {
        print_exps(out, "x", x);
        out << " ";
    }
    out << core.str();
    if (core.diag.t > 0) {
        out << " ";
        print_exps(out, "xb", xb);
    }
    return out.str();
}

template <typename Element>
static std::string element_str(const Element& e) {
    if (e.terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [m, c] : e.terms) {
        if (!first) out << " + ";
        first = false;
        bool parens = c.terms().size() > 1;
        out << (parens ? "(" + c.str() + ")" : c.str()) << " * " << m.str();
    }
    return out.str();
}

std::string BCElement::str() const { return element_str(*this); }
std::string AffElement::str() const { return element_str(*this); }

// --- expression parser ------------------------------------------------------

namespace {

struct ExprParser {
    const std::string& s;
    size_t pos = 0;
    const AffineAlgebra& alg;
    bool allow_affine;

    ExprParser(const std::string& text, const AffineAlgebra& a, bool affine)
        : s(text), alg(a), allow_affine(affine) {}

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) pos++;
    }
    bool peek(char c) {
        skip();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            pos++;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& m) {
        throw ParseError("element parse error at " + std::to_string(pos) + ": " + m);
    }
    int parse_uint() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) pos++;
        if (start == pos) fail("expected integer");
        return std::stoi(s.substr(start, pos - start));
    }

    AffElement parse() {
        AffElement v = parse_expr();
        skip();
        if (pos != s.size()) fail("trailing input");
        return v;
    }

    AffElement parse_expr() {
        AffElement v = parse_term();
        for (;;) {
            skip();
            if (eat('+'))
                v = v + parse_term();
            else if (eat('-'))
                v = v - parse_term();
            else
                return v;
        }
    }

    AffElement parse_term() {
        AffElement v = parse_factor();
        for (;;) {
            skip();
            if (eat('*'))
                v = alg.mul(v, parse_factor());
            else
                return v;
        }
    }

    AffElement parse_factor() {
        AffElement v = parse_atom();
        skip();
        if (eat('^')) {
            int e = parse_uint();
            v = alg.pow(v, e);
        }
        return v;
    }

    bool next_is_bracket_after(size_t off) {
        size_t p = pos + off;
        return p < s.size() && s[p] == '[';
    }

    AffElement scalar_elt(const Scalar& c) { return alg.one().scale(c); }

    AffElement parse_atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        char ch = s[pos];
        if (ch == '(') {
            pos++;
            AffElement v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (ch == '-') {
            pos++;
            return -parse_factor();
        }
        if (std::isdigit((unsigned char)ch)) {
            int num = parse_uint();
            skip();
            if (pos < s.size() && s[pos] == '/') {
                pos++;
                int den = parse_uint();
                return scalar_elt(Scalar(Rational(num, den)));
            }
            return scalar_elt(Scalar(num));
        }
        if (ch == 'w') {
            pos++;
            return scalar_elt(Scalar::omega(parse_uint()));
        }
        if (ch == 'e') {
            pos++;
            int i = parse_uint();
            if (i == 1) return alg.gen(Gen::e1());
            // e_k as a word
            if (i < 1 || i > std::min(alg.r(), alg.t())) fail("e index out of range");
            AffElement v = alg.one();
            for (Gen g : word_of_e(i)) v = alg.mul(v, alg.gen(g));
            return v;
        }
        if (ch == 's') {
            pos++;
            bool barred = pos < s.size() && s[pos] == 'b';
            if (barred) pos++;
            int i = parse_uint();
            return alg.gen(barred ? Gen::sb(i) : Gen::s(i));
        }
        // c / cb generators vs c[ / cb[ segments vs x / xb
        if (ch == 'c' || ch == 'x') {
            bool barred = pos + 1 < s.size() && s[pos + 1] == 'b';
            size_t head = barred ? 2 : 1;
            if (next_is_bracket_after(head)) return parse_monomial();
            pos += head;
            if (ch == 'c') {
                int i = parse_uint();
                return alg.gen(barred ? Gen::cb(i) : Gen::c(i));
            }
            if (!allow_affine) fail("affine symbol in a finite element");
            int i = parse_uint();
            return barred ? alg.gen_xb(i) : alg.gen_x(i);
        }
        if (ch == 'D') return parse_monomial();
        fail(std::string("unexpected character '") + ch + "'");
    }

    std::vector<int> parse_int_list(size_t count) {
        std::vector<int> v;
        if (!eat('[')) fail("expected '['");
        for (size_t i = 0; i < count; i++) {
            v.push_back(parse_uint());
            if (i + 1 < count && !eat(',')) fail("expected ','");
        }
        if (!eat(']')) fail("expected ']'");
        return v;
    }

    AffElement parse_monomial() {
        int r = alg.r(), t = alg.t();
        RegularMonomial m;
        m.x.assign(r, 0);
        m.xb.assign(t, 0);
        skip();
        if (pos < s.size() && s[pos] == 'x' && pos + 1 < s.size() && s[pos + 1] == '[') {
            pos++;
            m.x = parse_int_list(r);
        }
        skip();
        if (pos < s.size() && s[pos] == 'c' && pos + 1 < s.size() && s[pos + 1] == '[') {
            pos++;
            auto bits = parse_int_list(r);
            for (int i = 0; i < r; i++)
                if (bits[i]) m.core.alpha |= 1u << i;
        }
        skip();
        if (pos >= s.size() || s[pos] != 'D') fail("expected diagram");
        size_t start = pos;
        int depth = 0;
        while (pos < s.size()) {
            if (s[pos] == '{') depth++;
            if (s[pos] == '}') {
                depth--;
                pos++;
                if (depth == 0) break;
                continue;
            }
            pos++;
        }
        m.core.diag = parse_diagram(s.substr(start, pos - start), r, t);
        skip();
        if (pos + 1 < s.size() && s[pos] == 'c' && s[pos + 1] == 'b') {
            size_t save = pos;
            pos += 2;
            if (peek('[')) {
                auto bits = parse_int_list(t);
                for (int j = 0; j < t; j++)
                    if (bits[j]) m.core.beta |= 1u << j;
            } else {
                pos = save;
            }
        }
        skip();
        if (pos + 1 < s.size() && s[pos] == 'x' && s[pos + 1] == 'b') {
            size_t save = pos;
            pos += 2;
            if (peek('[')) {
                m.xb = parse_int_list(t);
            } else {
                pos = save;
            }
        }
        bool has_x = false;
        for (int e : m.x) has_x |= e != 0;
        for (int e : m.xb) has_x |= e != 0;
        if (has_x && !allow_affine) fail("affine exponents in a finite element");
        AffElement v(r, t);
        v.add_term(m, Scalar(1));
        return v;
    }
};

} // namespace

AffElement parse_aff_element(const std::string& text, const AffineAlgebra& alg) {
    ExprParser p(text, alg, true);
    return p.parse();
}

BCElement parse_bc_element(const std::string& text, const FiniteAlgebra& alg) {
    AffineAlgebra aff(alg.r(), alg.t());
    ExprParser p(text, aff, false);
    AffElement e = p.parse();
    BCElement out(alg.r(), alg.t());
    for (auto& [m, c] : e.terms) {
        for (int v : m.x)
            if (v) throw ParseError("affine exponents in a finite element");
        for (int v : m.xb)
            if (v) throw ParseError("affine exponents in a finite element");
        out.add_term(m.core, c);
    }
    return out;
}

} // namespace wbc
