#include "wbc/bcrt.hpp"

#include <sstream>

namespace wbc {

void BCElement::add_term(const BCMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

BCElement BCElement::operator+(const BCElement& o) const {
    if (r != o.r || t != o.t) throw ShapeError("BCElement shape mismatch");
    BCElement x = *this;
    for (auto& [m, c] : o.terms) x.add_term(m, c);
    return x;
}

BCElement BCElement::operator-(const BCElement& o) const { return *this + (-o); }

BCElement BCElement::operator-() const {
    BCElement x(r, t);
    for (auto& [m, c] : terms) x.terms[m] = -c;
    return x;
}

BCElement BCElement::scale(const Scalar& c) const {
    BCElement x(r, t);
    if (c.is_zero()) return x;
    for (auto& [m, k] : terms) x.terms[m] = k * c;
    return x;
}

int BCElement::parity() const {
    int p = -1;
    for (auto& [m, c] : terms) {
        if (p == -1)
            p = m.parity();
        else if (p != m.parity())
            return -1;
    }
    return p;
}

FiniteAlgebra::FiniteAlgebra(int r, int t) : r_(r), t_(t) {
    if (r < 0 || t < 0) throw Error("negative strand count");
}

BCMonomial FiniteAlgebra::one_mono() const {
    BCMonomial m;
    m.diag = WalledDiagram::identity(r_, t_);
    return m;
}

BCElement FiniteAlgebra::one() const {
    BCElement e(r_, t_);
    e.terms[one_mono()] = Scalar(1);
    return e;
}

void FiniteAlgebra::check_gen(Gen g) const {
    switch (g.kind) {
    case Gen::S:
        if (g.idx < 1 || g.idx >= r_) throw Error("s index out of range");
        break;
    case Gen::SB:
        if (g.idx < 1 || g.idx >= t_) throw Error("sbar index out of range");
        break;
    case Gen::C:
        if (g.idx < 1 || g.idx > r_) throw Error("c index out of range");
        break;
    case Gen::CB:
        if (g.idx < 1 || g.idx > t_) throw Error("cbar index out of range");
        break;
    case Gen::E1:
        if (r_ < 1 || t_ < 1)
            throw Error("e_1 does not exist when r = 0 or t = 0");
        break;
    }
}

BCElement FiniteAlgebra::gen(Gen g) const {
    check_gen(g);
    BCMonomial m = one_mono();
    switch (g.kind) {
    case Gen::S: m.diag = diagram_s(r_, t_, g.idx); break;
    case Gen::SB: m.diag = diagram_sb(r_, t_, g.idx); break;
    case Gen::C: m.alpha = 1u << (g.idx - 1); break;
    case Gen::CB: m.beta = 1u << (g.idx - 1); break;
    case Gen::E1: m.diag = diagram_e1(r_, t_); break;
    }
    BCElement e(r_, t_);
    e.terms[m] = Scalar(1);
    return e;
}

std::optional<std::pair<int, BCMonomial>> FiniteAlgebra::mul_gen_right(const BCMonomial& m,
                                                                       Gen g) const {
    check_gen(g);
    BCMonomial x = m;
    int sign = 1;
    const WalledDiagram& d = m.diag;
    switch (g.kind) {
    case Gen::S:
        x.diag = compose(d, diagram_s(r_, t_, g.idx)).diagram;
        break;
    case Gen::SB: {
        int j = g.idx - 1;
        Bits lo = 1u << j, hi = 1u << (j + 1);
        if ((x.beta & lo) && (x.beta & hi)) sign = -sign;
        Bits rest = x.beta & ~(lo | hi);
        x.beta = rest | ((x.beta & lo) ? hi : 0) | ((x.beta & hi) ? lo : 0);
        x.diag = compose(d, diagram_sb(r_, t_, g.idx)).diagram;
        break;
    }
    case Gen::C: {
        if (parity_of(x.beta)) sign = -sign;
        int p = d.match[d.bot_u(g.idx - 1)];
        if (d.is_top(p))
            sign *= merge_bit_from_right(x.alpha, d.strand(p), SignType::Minus);
        else
            sign *= merge_bit_from_left(x.beta, d.strand(p), SignType::Plus);
        break;
    }
    case Gen::CB:
        sign *= merge_bit_from_right(x.beta, g.idx - 1, SignType::Plus);
        break;
    case Gen::E1: {
        if (d.match[d.bot_u(0)] == d.bot_b(0)) return std::nullopt; // closed loop
        bool sigma = x.beta & 1u;
        x.beta &= ~1u;
        if (sigma) {
            int p = d.match[d.bot_u(0)];
            if (d.is_top(p))
                sign *= merge_bit_from_right(x.alpha, d.strand(p), SignType::Minus);
            else
                sign *= merge_bit_from_left(x.beta, d.strand(p), SignType::Plus);
        }
        auto res = compose(d, diagram_e1(r_, t_));
        if (res.loops != 0) throw Error("unexpected loop in e_1 composition");
        x.diag = res.diagram;
        break;
    }
    }
    return std::make_pair(sign, x);
}

BCElement FiniteAlgebra::mul_word(const BCElement& a, const GenWord& w) const {
    BCElement cur = a;
    for (Gen g : w) {
        BCElement next(r_, t_);
        for (auto& [m, c] : cur.terms) {
            auto res = mul_gen_right(m, g);
            if (res) next.add_term(res->second, c * Scalar(res->first));
        }
        cur = next;
    }
    return cur;
}

BCElement FiniteAlgebra::element_of_word(const GenWord& w) const { return mul_word(one(), w); }

GenWord FiniteAlgebra::word_of_monomial(const BCMonomial& m) const {
    GenWord w;
    for (int i = 0; i < r_; i++)
        if (m.alpha & (1u << i)) w.push_back(Gen::c(i + 1));
    GenWord dw = generator_word(m.diag);
    w.insert(w.end(), dw.begin(), dw.end());
    for (int j = 0; j < t_; j++)
        if (m.beta & (1u << j)) w.push_back(Gen::cb(j + 1));
    return w;
}

std::pair<int, std::optional<BCMonomial>> FiniteAlgebra::mul_mono(const BCMonomial& a,
                                                                  const BCMonomial& b) const {
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = mono_cache_.find(PairKey{a, b});
        if (it != mono_cache_.end()) {
            if (it->second.first == 0) return {0, std::nullopt};
            return {it->second.first, it->second.second};
        }
    }
    GenWord w = word_of_monomial(b);
    int sign = 1;
    BCMonomial cur = a;
    bool zero = false;
    for (Gen g : w) {
        auto res = mul_gen_right(cur, g);
        if (!res) {
            zero = true;
            break;
        }
        sign *= res->first;
        cur = res->second;
    }
    std::lock_guard<std::mutex> lock(cache_mu_);
    if (zero) {
        mono_cache_[PairKey{a, b}] = {0, BCMonomial{}};
        return {0, std::nullopt};
    }
    mono_cache_[PairKey{a, b}] = {sign, cur};
    return {sign, cur};
}

BCElement FiniteAlgebra::mul(const BCElement& a, const BCElement& b) const {
    if (a.r != r_ || a.t != t_ || b.r != r_ || b.t != t_)
        throw ShapeError("BCElement algebra mismatch");
    BCElement out(r_, t_);
    for (auto& [mb, cb] : b.terms) {
        for (auto& [ma, ca] : a.terms) {
            auto [sign, mono] = mul_mono(ma, mb);
            if (mono) out.add_term(*mono, ca * cb * Scalar(sign));
        }
    }
    return out;
}

BCElement FiniteAlgebra::pow(const BCElement& a, int e) const {
    BCElement out = one();
    for (int i = 0; i < e; i++) out = mul(out, a);
    return out;
}

BCElement FiniteAlgebra::tau(const BCElement& a) const {
    BCElement out(r_, t_);
    for (auto& [m, c] : a.terms) {
        GenWord w = word_of_monomial(m);
        std::reverse(w.begin(), w.end());
        out = out + element_of_word(w).scale(c);
    }
    return out;
}

BCElement FiniteAlgebra::e_ij_elt(int i, int j) const {
    return element_of_word(word_of_e_ij(i, j));
}

BCElement FiniteAlgebra::e_elt(int k) const { return e_ij_elt(k, k); }

BCElement FiniteAlgebra::eta(int i) const {
    BCElement out = zero();
    for (int j = 1; j < i; j++)
        out = out + e_ij_elt(i, j) - element_of_word(word_of_transposition(j, i, false));
    return out;
}

BCElement FiniteAlgebra::etabar(int i) const {
    BCElement out = zero();
    for (int j = 1; j < i; j++)
        out = out + e_ij_elt(j, i) - element_of_word(word_of_transposition(j, i, true));
    return out;
}

BCElement FiniteAlgebra::jm_y(int i) const {
    if (i < 1 || i > r_) throw Error("jm_y index out of range");
    BCElement h = eta(i);
    BCElement ci = gen(Gen::c(i));
    return h + mul(mul(ci, h), ci);
}

BCElement FiniteAlgebra::jm_ybar(int i) const {
    if (i < 1 || i > t_) throw Error("jm_ybar index out of range");
    BCElement h = etabar(i);
    BCElement ci = gen(Gen::cb(i));
    return h - mul(mul(ci, h), ci);
}

BCElement FiniteAlgebra::jm_L(int i) const {
    if (i < 1 || i > r_) throw Error("jm_L index out of range");
    BCElement frak = zero();
    for (int j = 1; j < i; j++) frak = frak + element_of_word(word_of_transposition(j, i, false));
    BCElement ci = gen(Gen::c(i));
    return frak + mul(mul(ci, frak), ci);
}

BCElement FiniteAlgebra::jm_Lbar(int i) const {
    if (i < 1 || i > t_) throw Error("jm_Lbar index out of range");
    BCElement frak = zero();
    for (int j = 1; j < i; j++) frak = frak + element_of_word(word_of_transposition(j, i, true));
    BCElement ci = gen(Gen::cb(i));
    return frak - mul(mul(ci, frak), ci);
}

BCElement FiniteAlgebra::omega_ak(int a, int k, bool barred) const {
    if (k < 1 || k > std::min(r_, t_)) throw Error("omega_ak: k out of range");
    BCElement y = barred ? jm_ybar(k) : jm_y(k);
    BCElement ek = e_elt(k);
    BCElement E = mul(mul(ek, pow(y, a)), ek);

    int k0 = k - 1; // 0-based strand of e_k
    Bits low_mask = (1u << k0) - 1;
    BCElement Z(r_, t_);
    for (auto& [m, c] : E.terms) {
        if ((m.alpha & ~low_mask) || (m.beta & ~low_mask))
            throw Error("omega_ak: decoration outside the embedded subalgebra");
        const WalledDiagram& d = m.diag;
        bool shape = d.match[d.top_u(k0)] == d.top_b(k0) && d.match[d.bot_u(k0)] == d.bot_b(k0);
        for (int l = k0 + 1; l < r_ && shape; l++) shape = d.match[d.top_u(l)] == d.bot_u(l);
        for (int l = k0 + 1; l < t_ && shape; l++) shape = d.match[d.top_b(l)] == d.bot_b(l);
        if (!shape) throw Error("omega_ak: product not of the form Z e_k");
        BCMonomial z = m;
        z.diag.link(z.diag.top_u(k0), z.diag.bot_u(k0));
        z.diag.link(z.diag.top_b(k0), z.diag.bot_b(k0));
        Z.add_term(z, c);
    }
    if (!(mul(Z, ek) == E)) throw Error("omega_ak: extraction verification failed");
    return Z;
}

std::vector<BCMonomial> FiniteAlgebra::basis() const {
    std::vector<BCMonomial> out;
    auto diagrams = enumerate_diagrams(r_, t_);
    for (auto& d : diagrams)
        for (Bits a = 0; a < (1u << r_); a++)
            for (Bits b = 0; b < (1u << t_); b++) {
                BCMonomial m;
                m.alpha = a;
                m.diag = d;
                m.beta = b;
                out.push_back(m);
            }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace wbc
