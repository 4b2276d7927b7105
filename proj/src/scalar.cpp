#include "wbc/scalar.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>

namespace wbc {

namespace {
std::atomic<int> g_max_omega_index{199};
}

int OmegaMono::degree() const {
    int d = 0;
    for (auto& [v, e] : factors) d += e;
    return d;
}

bool OmegaMono::operator<(const OmegaMono& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    return factors < o.factors;
}

Scalar::Scalar(const Rational& r) {
    Rational c = r;
    c.canonicalize(); // Rational(p, q) does not canonicalize on its own
    if (c != 0) terms_[OmegaMono{}] = c;
}

Scalar::Scalar(long n) {
    if (n != 0) terms_[OmegaMono{}] = Rational(n);
}

int Scalar::max_omega_index() { return g_max_omega_index.load(); }
void Scalar::set_max_omega_index(int n) { g_max_omega_index.store(n); }

Scalar Scalar::omega(int n) {
    if (n < 1 || n % 2 == 0)
        throw Error("omega index must be odd and positive, got w" + std::to_string(n));
    if (n > max_omega_index())
        throw Error("omega index w" + std::to_string(n) + " exceeds the configured bound " +
                    std::to_string(max_omega_index()));
    Scalar s;
    OmegaMono m;
    m.factors.push_back({n, 1});
    s.terms_[m] = 1;
    return s;
}

bool Scalar::is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.factors.empty();
}

Rational Scalar::rational_value() const {
    if (terms_.empty()) return 0;
    if (!is_rational()) throw Error("scalar is not a plain rational: " + str());
    return terms_.begin()->second;
}

void Scalar::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }
Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r = *this;
    r += o;
    return r;
}
Scalar Scalar::operator-(const Scalar& o) const {
    Scalar r = *this;
    r -= o;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r;
    for (auto& [ma, ca] : terms_) {
        for (auto& [mb, cb] : o.terms_) {
            OmegaMono m;
            auto ia = ma.factors.begin(), ib = mb.factors.begin();
            while (ia != ma.factors.end() || ib != mb.factors.end()) {
                if (ib == mb.factors.end() || (ia != ma.factors.end() && ia->first < ib->first)) {
                    m.factors.push_back(*ia++);
                } else if (ia == ma.factors.end() || ib->first < ia->first) {
                    m.factors.push_back(*ib++);
                } else {
                    m.factors.push_back({ia->first, ia->second + ib->second});
                    ++ia;
                    ++ib;
                }
            }
            auto it = r.terms_.find(m);
            if (it == r.terms_.end())
                r.terms_[m] = ca * cb;
            else
                it->second += ca * cb;
        }
    }
    r.prune();
    return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

bool Scalar::operator<(const Scalar& o) const { return terms_ < o.terms_; }

Scalar Scalar::pow(int e) const {
    if (e < 0) throw Error("negative scalar power");
    Scalar r(1);
    for (int i = 0; i < e; i++) r *= *this;
    return r;
}

Scalar Scalar::specialize(const std::map<int, Rational>& assignment) const {
    Scalar r;
    for (auto& [m, c] : terms_) {
        Rational v = c;
        for (auto& [var, e] : m.factors) {
            auto it = assignment.find(var);
            if (it == assignment.end())
                throw MissingVariableError("missing assignment for w" + std::to_string(var));
            for (int i = 0; i < e; i++) v *= it->second;
        }
        r += Scalar(v);
    }
    return r;
}

std::vector<int> Scalar::variables() const {
    std::vector<int> vs;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.factors)
            if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    return vs;
}

int Scalar::degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

std::string rational_str(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest monomial first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit_coeff = (a == 1) && !m.factors.empty();
        if (!unit_coeff) out << rational_str(a);
        bool lead = unit_coeff;
        for (auto& [v, e] : m.factors) {
            if (!lead) out << "*";
            lead = false;
            out << "w" << v;
            if (e > 1) out << "^" << e;
        }
    }
    return out.str();
}

Scalar operator*(const Rational& r, const Scalar& s) { return Scalar(r) * s; }

// --- parsing -------------------------------------------------------------

namespace {

struct ScalarParser {
    const std::string& s;
    size_t pos = 0;

    explicit ScalarParser(const std::string& text) : s(text) {}

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
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("scalar parse error at position " + std::to_string(pos) + ": " + msg);
    }

    Scalar parse_expr() {
        Scalar v = parse_term();
        for (;;) {
            skip_ws();
            if (eat('+'))
                v += parse_term();
            else if (eat('-'))
                v -= parse_term();
            else
                return v;
        }
    }

    Scalar parse_term() {
        Scalar v = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*'))
                v *= parse_factor();
            else
                return v;
        }
    }

    Scalar parse_factor() {
        Scalar base = parse_atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) pos++;
            if (start == pos) fail("expected exponent");
            base = base.pow(std::stoi(s.substr(start, pos - start)));
        }
        return base;
    }

    Scalar parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (eat('(')) {
            Scalar v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (eat('-')) return -parse_factor();
        if (s[pos] == 'w') {
            pos++;
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) pos++;
            if (start == pos) fail("expected omega index after 'w'");
            return Scalar::omega(std::stoi(s.substr(start, pos - start)));
        }
        if (std::isdigit((unsigned char)s[pos])) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) pos++;
            std::string num = s.substr(start, pos - start);
            skip_ws();
            if (pos < s.size() && s[pos] == '/') {
                pos++;
                skip_ws();
                size_t ds = pos;
                while (pos < s.size() && std::isdigit((unsigned char)s[pos])) pos++;
                if (ds == pos) fail("expected denominator");
                Rational r(num + "/" + s.substr(ds, pos - ds));
                r.canonicalize();
                return Scalar(r);
            }
            return Scalar(Rational(num));
        }
        fail(std::string("unexpected character '") + s[pos] + "'");
    }
};

} // namespace

Rational parse_rational(const std::string& text) {
    Scalar s = parse_scalar(text);
    return s.rational_value();
}

Scalar parse_scalar(const std::string& text) {
    ScalarParser p(text);
    Scalar v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

} // namespace wbc
