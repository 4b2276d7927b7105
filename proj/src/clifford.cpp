#include "wbc/clifford.hpp"

#include <cctype>
#include <sstream>

namespace wbc {

std::string Perm::cycle_str() const {
    std::ostringstream out;
    std::vector<bool> seen(size(), false);
    bool any = false;
    for (int i = 0; i < size(); i++) {
        if (seen[i]) continue;
        out << "(";
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out << " ";
            first = false;
            out << (j + 1);
            j = img[j];
        }
        out << ")";
        any = true;
    }
    if (!any) out << "()";
    return out.str();
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p(n);
    std::vector<int>& v = p.img;
    do {
        out.push_back(p);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::string CliffordWord::str() const {
    std::ostringstream out;
    out << "c[";
    for (int i = 0; i < n; i++) out << ((alpha >> i) & 1) << (i + 1 < n ? "," : "");
    out << "] * " << w.cycle_str();
    return out.str();
}

CWElement CWElement::one(int n, SignType e) {
    CWElement r(n, e);
    r.terms[CliffordWord(n, e)] = Scalar(1);
    return r;
}

CWElement CWElement::gen_s(int n, SignType e, int i) {
    if (i < 1 || i >= n) throw Error("s index out of range");
    CWElement r(n, e);
    CliffordWord w(n, e);
    w.w = Perm::transposition(n, i - 1, i);
    r.terms[w] = Scalar(1);
    return r;
}

CWElement CWElement::transposition(int n, SignType e, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n || a == b) throw Error("transposition out of range");
    CWElement r(n, e);
    CliffordWord w(n, e);
    w.w = Perm::transposition(n, a - 1, b - 1);
    r.terms[w] = Scalar(1);
    return r;
}

CWElement CWElement::gen_c(int n, SignType e, int i) {
    if (i < 1 || i > n) throw Error("c index out of range");
    CWElement r(n, e);
    CliffordWord w(n, e);
    w.alpha = 1u << (i - 1);
    r.terms[w] = Scalar(1);
    return r;
}

void CWElement::add_term(const CliffordWord& word, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms.find(word);
    if (it == terms.end()) {
        terms[word] = coeff;
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms.erase(it);
    }
}

CWElement CWElement::operator+(const CWElement& o) const {
    if (n != o.n || eps != o.eps) throw ShapeError("CWElement shape mismatch");
    CWElement r = *this;
    for (auto& [w, c] : o.terms) r.add_term(w, c);
    return r;
}

CWElement CWElement::operator-(const CWElement& o) const { return *this + (-o); }

CWElement CWElement::operator-() const {
    CWElement r(n, eps);
    for (auto& [w, c] : terms) r.terms[w] = -c;
    return r;
}

CWElement CWElement::scale(const Scalar& c) const {
    CWElement r(n, eps);
    if (c.is_zero()) return r;
    for (auto& [w, k] : terms) r.terms[w] = k * c;
    return r;
}

std::string CWElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [w, c] : terms) {
        Scalar coeff = c;
        if (!first) {
            bool neg = c.is_rational() && c.rational_value() < 0;
            out << (neg ? " - " : " + ");
            if (neg) coeff = -c;
        }
        first = false;
        bool simple = coeff.is_rational();
        out << (simple ? coeff.str() : "(" + coeff.str() + ")") << " * " << w.str();
    }
    return out.str();
}

// Multiplies two normal-ordered decoration words: c^a * c^b with sign from
// anticommutation and eps at each square.  Returns the sign, sets a ^= b.
static int merge_words(Bits& a, Bits b, SignType eps) {
    int sign = 1;
    while (b) {
        int k = __builtin_ctz(b);
        b &= b - 1;
        sign *= merge_bit_from_right(a, k, eps);
    }
    return sign;
}

CWElement cw_mul(const CWElement& a, const CWElement& b) {
    if (a.n != b.n || a.eps != b.eps) throw ShapeError("CWElement shape mismatch in cw_mul");
    CWElement r(a.n, a.eps);
    for (auto& [wa, ca] : a.terms) {
        for (auto& [wb, cb] : b.terms) {
            // (c^a u)(c^b v) = sign * c^(a ^ b') (u v), where b' carries the
            // indices of b pulled through u:  u c_k = c_{(k) u^{-1}} u.
            Perm uinv = wa.w.inverse();
            // Collect pulled indices in increasing k; count inversions of the
            // relabeled sequence to normal order it.
            std::vector<int> seq;
            Bits bb = wb.alpha;
            while (bb) {
                int k = __builtin_ctz(bb);
                bb &= bb - 1;
                seq.push_back(uinv(k));
            }
            int sign = 1;
            for (size_t i = 0; i < seq.size(); i++)
                for (size_t j = i + 1; j < seq.size(); j++)
                    if (seq[i] > seq[j]) sign = -sign;
            Bits bprime = 0;
            for (int k : seq) bprime |= 1u << k;
            CliffordWord w(a.n, a.eps);
            w.alpha = wa.alpha;
            sign *= merge_words(w.alpha, bprime, a.eps);
            w.w = wa.w.then(wb.w);
            r.add_term(w, ca * cb * Scalar(sign));
        }
    }
    return r;
}

CWElement jm_L(int n, SignType eps, int i) {
    if (i < 1 || i > n) throw Error("jm_L index out of range");
    CWElement frak(n, eps);
    for (int j = 1; j < i; j++) frak = frak + CWElement::transposition(n, eps, j, i);
    CWElement ci = CWElement::gen_c(n, eps, i);
    CWElement conj = cw_mul(cw_mul(ci, frak), ci);
    return eps == SignType::Minus ? frak + conj : frak - conj;
}

// --- parsing: `c[1,0,1] * (1 2 3)(4)` terms joined by +/- -----------------

namespace {

struct CWParser {
    const std::string& s;
    size_t pos = 0;
    int n;
    SignType eps;

    CWParser(const std::string& text, int n_, SignType e) : s(text), n(n_), eps(e) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) pos++;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            pos++;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& m) {
        throw ParseError("clifford parse error at " + std::to_string(pos) + ": " + m);
    }

    int parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) pos++;
        if (start == pos) fail("expected integer");
        return std::stoi(s.substr(start, pos - start));
    }

    CWElement parse() {
        CWElement total(n, eps);
        bool negate = eat('-');
        for (;;) {
            CWElement term = parse_term();
            total = negate ? total - term : total + term;
            skip_ws();
            if (eat('+'))
                negate = false;
            else if (eat('-'))
                negate = true;
            else
                break;
        }
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return total;
    }

    CWElement parse_term() {
        skip_ws();
        Scalar coeff(1);
        if (pos < s.size() && (std::isdigit((unsigned char)s[pos]) || s[pos] == '(')) {
            // optional leading scalar; '(' here could also start a cycle, so
            // only treat it as a scalar when followed by digits + ')um'..
            if (std::isdigit((unsigned char)s[pos])) {
                size_t save = pos;
                int num = parse_int();
                skip_ws();
                if (pos < s.size() && s[pos] == '/') {
                    pos++;
                    int den = parse_int();
                    coeff = Scalar(Rational(num, den));
                    skip_ws();
                    if (!eat('*')) fail("expected '*'");
                } else if (pos < s.size() && s[pos] == '*') {
                    pos++;
                    coeff = Scalar(num);
                } else {
                    pos = save;
                }
            }
        }
        CliffordWord w(n, eps);
        skip_ws();
        if (pos < s.size() && s[pos] == 'c') {
            pos++;
            if (!eat('[')) fail("expected '['");
            for (int i = 0; i < n; i++) {
                int bit = parse_int();
                if (bit) w.alpha |= 1u << i;
                if (i + 1 < n && !eat(',')) fail("expected ','");
            }
            if (!eat(']')) fail("expected ']'");
            skip_ws();
            if (eat('*')) skip_ws();
        }
        // cycles
        if (pos < s.size() && s[pos] == '(') {
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 0);
            while (eat('(')) {
                std::vector<int> cyc;
                skip_ws();
                while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
                    cyc.push_back(parse_int() - 1);
                    skip_ws();
                }
                if (!eat(')')) fail("expected ')'");
                for (size_t i = 0; i < cyc.size(); i++) {
                    if (cyc[i] < 0 || cyc[i] >= n) fail("cycle entry out of range");
                    img[cyc[i]] = cyc[(i + 1) % cyc.size()];
                }
                skip_ws();
            }
            w.w.img = img;
        }
        CWElement e(n, eps);
        e.add_term(w, coeff);
        return e;
    }
};

} // namespace

CWElement parse_cw_element(const std::string& text, int n, SignType eps) {
    CWParser p(text, n, eps);
    return p.parse();
}

} // namespace wbc
