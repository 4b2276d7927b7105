#include "wbc/affine.hpp"

#include <algorithm>
#include <cassert>

namespace wbc {

// --- AffElement ------------------------------------------------------------

void AffElement::add_term(const RegularMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

AffElement AffElement::operator+(const AffElement& o) const {
    if (r != o.r || t != o.t) throw ShapeError("AffElement shape mismatch");
    AffElement x = *this;
    for (auto& [m, c] : o.terms) x.add_term(m, c);
    return x;
}

AffElement AffElement::operator-(const AffElement& o) const { return *this + (-o); }

AffElement AffElement::operator-() const {
    AffElement x(r, t);
    for (auto& [m, c] : terms) x.terms[m] = -c;
    return x;
}

AffElement AffElement::scale(const Scalar& c) const {
    AffElement x(r, t);
    if (c.is_zero()) return x;
    for (auto& [m, k] : terms) x.terms[m] = k * c;
    return x;
}

int AffElement::degree() const {
    int d = 0;
    for (auto& [m, c] : terms) d = std::max(d, m.degree());
    return d;
}

// --- omega-bar recursion -----------------------------------------------------
//
// e_1 xbar_1^m = sum_j A[m][j] e_1 x_1^j, driven by the exact reductions
//   e_1 x_1^{2j}   xbar_1 = -e_1 x_1^{2j+1}
//   e_1 x_1^{2j-1} xbar_1 = -e_1 x_1^{2j} - omega_{2j-1} e_1 .

std::vector<std::vector<Scalar>> xbar_to_x_coeffs(int max_m) {
    std::vector<std::vector<Scalar>> A(max_m + 1);
    A[0] = {Scalar(1)};
    for (int m = 0; m < max_m; m++) {
        A[m + 1].assign(m + 2, Scalar(0));
        for (int k = 0; k <= m; k++) {
            if (A[m][k].is_zero()) continue;
            A[m + 1][k + 1] -= A[m][k];
            if (k % 2 == 1) A[m + 1][0] -= A[m][k] * Scalar::omega(k);
        }
    }
    return A;
}

Scalar omega_bar(int n) {
    if (n <= 0) return Scalar(0);
    auto A = xbar_to_x_coeffs(n);
    Scalar out(0);
    for (int j = 1; j <= n; j += 2) out += A[n][j] * Scalar::omega(j);
    return out;
}

// --- engine ------------------------------------------------------------------

struct AffineAlgebra::Item {
    Scalar coeff;
    PrimeMonomial m;
    std::vector<ASym> pending; // folded left to right
};

namespace {

void append_fin(std::vector<ASym>& v, const GenWord& w) {
    for (Gen g : w) v.push_back(ASym::fin(g));
}

int count_index(const std::vector<int>& word, int idx) {
    int c = 0;
    for (int v : word)
        if (v == idx) c++;
    return c;
}

// Slides a word of s/c symbols (one family) rightward through a dot word;
// relabels the dots in place and returns the crossing sign.
int slide_fin_right(const GenWord& fw, std::vector<int>& dots, bool barred) {
    int sign = 1;
    for (auto it = fw.rbegin(); it != fw.rend(); ++it) {
        Gen g = *it;
        if (g.kind == (barred ? Gen::SB : Gen::S)) {
            for (int& d : dots) {
                if (d == g.idx)
                    d = g.idx + 1;
                else if (d == g.idx + 1)
                    d = g.idx;
            }
        } else if (g.kind == (barred ? Gen::CB : Gen::C)) {
            if (count_index(dots, g.idx) % 2) sign = -sign;
        } else {
            throw Error("slide_fin_right: unsupported symbol");
        }
    }
    return sign;
}

} // namespace

AffineAlgebra::AffineAlgebra(int r, int t, long fuel) : r_(r), t_(t), fin_(r, t), fuel_(fuel) {}

PrimeElement AffineAlgebra::prime_one() const {
    PrimeElement e;
    PrimeMonomial m;
    m.core.diag = WalledDiagram::identity(r_, t_);
    e.terms[m] = Scalar(1);
    return e;
}

PrimeElement AffineAlgebra::prime_from_finite(const BCElement& e) const {
    if (e.r != r_ || e.t != t_) throw ShapeError("prime_from_finite: shape mismatch");
    PrimeElement out;
    for (auto& [m, c] : e.terms) {
        PrimeMonomial pm;
        pm.core = m;
        out.terms[pm] = c;
    }
    return out;
}

bool AffineAlgebra::canonical_ready(const PrimeMonomial& m) const {
    for (size_t p = 0; p + 1 < m.xp.size(); p++)
        if (m.xp[p] < m.xp[p + 1]) return false;
    for (size_t p = 0; p + 1 < m.xbp.size(); p++)
        if (m.xbp[p] > m.xbp[p + 1]) return false;
    return true;
}

// One adjacent swap fix.  Inside the xp word (target: non-increasing):
//   x'_l x'_m = x'_m x'_l + x'_l T - x'_l c_l c_m T - x'_m T - x'_m c_l c_m T
// with l < m and T = word((l,m)); the finite corrections slide right through
// the trailing dots and fold into the core from the left.  Inside the xbp
// word (target: non-decreasing):
//   xbar'_m xbar'_l = xbar'_l xbar'_m - xbar'_l Tb - xbar'_l cb_l cb_m Tb
//                     + xbar'_m Tb - xbar'_m cb_l cb_m Tb
// whose corrections slide right out of the monomial and join the pending
// word.
void AffineAlgebra::push_sorted_fixups(Item item, std::vector<Item>& stack) const {
    struct Corr {
        int dot;
        bool with_c;
        int sign;
    };
    auto& xp = item.m.xp;
    for (size_t p = 0; p + 1 < xp.size(); p++) {
        if (xp[p] < xp[p + 1]) {
            int l = xp[p], mm = xp[p + 1];
            GenWord T = word_of_transposition(l, mm, false);
            std::vector<int> suffix(xp.begin() + p + 2, xp.end());

            Item main = item;
            main.m.xp[p] = mm;
            main.m.xp[p + 1] = l;
            stack.push_back(std::move(main));

            for (Corr corr :
                 {Corr{l, false, +1}, Corr{l, true, -1}, Corr{mm, false, -1}, Corr{mm, true, -1}}) {
                GenWord fw;
                if (corr.with_c) {
                    fw.push_back(Gen::c(l));
                    fw.push_back(Gen::c(mm));
                }
                fw.insert(fw.end(), T.begin(), T.end());
                Item it2 = item;
                it2.coeff *= Scalar(corr.sign);
                std::vector<int> suf = suffix;
                it2.coeff *= Scalar(slide_fin_right(fw, suf, false));
                it2.m.xp.resize(p);
                it2.m.xp.push_back(corr.dot);
                it2.m.xp.insert(it2.m.xp.end(), suf.begin(), suf.end());
                // fold fw into the core from the left, innermost symbol first
                for (auto itg = fw.rbegin(); itg != fw.rend(); ++itg) {
                    Gen g = *itg;
                    if (g.kind == Gen::S) {
                        Bits a = it2.m.core.alpha;
                        int j = g.idx - 1;
                        Bits lo = 1u << j, hi = 1u << (j + 1);
                        if ((a & lo) && (a & hi)) it2.coeff *= Scalar(-1);
                        Bits restbits = a & ~(lo | hi);
                        it2.m.core.alpha = restbits | ((a & lo) ? hi : 0) | ((a & hi) ? lo : 0);
                        it2.m.core.diag =
                            compose(diagram_s(r_, t_, g.idx), it2.m.core.diag).diagram;
                    } else {
                        it2.coeff *=
                            Scalar(merge_bit_from_left(it2.m.core.alpha, g.idx - 1, SignType::Minus));
                    }
                }
                stack.push_back(std::move(it2));
            }
            return;
        }
    }
    auto& xbp = item.m.xbp;
    for (size_t p = 0; p + 1 < xbp.size(); p++) {
        if (xbp[p] > xbp[p + 1]) {
            int mm = xbp[p], l = xbp[p + 1];
            GenWord T = word_of_transposition(l, mm, true);
            std::vector<int> suffix(xbp.begin() + p + 2, xbp.end());

            Item main = item;
            main.m.xbp[p] = l;
            main.m.xbp[p + 1] = mm;
            stack.push_back(std::move(main));

            for (Corr corr :
                 {Corr{l, false, -1}, Corr{l, true, -1}, Corr{mm, false, +1}, Corr{mm, true, -1}}) {
                GenWord fw;
                if (corr.with_c) {
                    fw.push_back(Gen::cb(l));
                    fw.push_back(Gen::cb(mm));
                }
                fw.insert(fw.end(), T.begin(), T.end());
                Item it2 = item;
                it2.coeff *= Scalar(corr.sign);
                std::vector<int> suf = suffix;
                it2.coeff *= Scalar(slide_fin_right(fw, suf, true));
                it2.m.xbp.resize(p);
                it2.m.xbp.push_back(corr.dot);
                it2.m.xbp.insert(it2.m.xbp.end(), suf.begin(), suf.end());
                std::vector<ASym> pend;
                append_fin(pend, fw);
                pend.insert(pend.end(), item.pending.begin(), item.pending.end());
                it2.pending = std::move(pend);
                stack.push_back(std::move(it2));
            }
            return;
        }
    }
    throw Error("push_sorted_fixups: no inversion (internal error)");
}

void AffineAlgebra::inject(const Item& item, std::vector<Item>& stack, PrimeElement& out,
                           long& fuel) const {
    (void)out;
    (void)fuel;
    ASym sym = item.pending.front();
    std::vector<ASym> rest(item.pending.begin() + 1, item.pending.end());
    const PrimeMonomial& m = item.m;

    auto push = [&](Scalar coeff, PrimeMonomial mono, std::vector<ASym> pend) {
        if (coeff.is_zero()) return;
        stack.push_back(Item{std::move(coeff), std::move(mono), std::move(pend)});
    };

    if (sym.kind == ASym::XBP) {
        if (sym.idx < 1 || sym.idx > t_) throw Error("xbar index out of range");
        PrimeMonomial mono = m;
        mono.xbp.push_back(sym.idx);
        push(item.coeff, std::move(mono), std::move(rest));
        return;
    }

    if (sym.kind == ASym::XP) {
        if (sym.idx < 1 || sym.idx > r_) throw Error("x index out of range");
        int i = sym.idx;
        if (!m.xbp.empty()) {
            // cross the rightmost xbar' dot:
            // xbar'_j x'_i = x'_i xbar'_j + (e_ij + ebar_ij) xbar'_j
            //               + x'_i e_ij - x'_i ebar_ij
            int j = m.xbp.back();
            PrimeMonomial m0 = m;
            m0.xbp.pop_back();
            GenWord eij = word_of_e_ij(i, j);

            std::vector<ASym> pA{ASym::xp(i), ASym::xbp(j)};
            pA.insert(pA.end(), rest.begin(), rest.end());
            push(item.coeff, m0, std::move(pA));

            std::vector<ASym> pB1;
            append_fin(pB1, eij);
            pB1.push_back(ASym::xbp(j));
            pB1.insert(pB1.end(), rest.begin(), rest.end());
            push(item.coeff, m0, std::move(pB1));

            std::vector<ASym> pB2{ASym::fin(Gen::c(i))};
            append_fin(pB2, eij);
            pB2.push_back(ASym::fin(Gen::c(i)));
            pB2.push_back(ASym::xbp(j));
            pB2.insert(pB2.end(), rest.begin(), rest.end());
            push(item.coeff, m0, std::move(pB2));

            std::vector<ASym> pC1{ASym::xp(i)};
            append_fin(pC1, eij);
            pC1.insert(pC1.end(), rest.begin(), rest.end());
            push(item.coeff, m0, std::move(pC1));

            std::vector<ASym> pC2{ASym::xp(i), ASym::fin(Gen::c(i))};
            append_fin(pC2, eij);
            pC2.push_back(ASym::fin(Gen::c(i)));
            pC2.insert(pC2.end(), rest.begin(), rest.end());
            push(-item.coeff, m0, std::move(pC2));
            return;
        }
        // the dot crosses cbar^beta (free) and transits the diagram
        const WalledDiagram& d = m.core.diag;
        int p = d.match[d.bot_u(i - 1)];
        if (d.is_top(p)) {
            // vertical strand: exits above the core as x'_{x*}
            int xstar = d.strand(p);
            Scalar c = item.coeff;
            if (m.core.alpha & (1u << xstar)) c = -c;
            PrimeMonomial mono = m;
            mono.xp.push_back(xstar + 1);
            push(std::move(c), std::move(mono), std::move(rest));
        } else {
            // horizontal edge (i, jbar): converts, exits below as -xbar'_j
            int jj = d.strand(p);
            Scalar c = -item.coeff;
            if (m.core.beta & (1u << jj)) c = -c;
            PrimeMonomial mono = m;
            mono.xbp.insert(mono.xbp.begin(), jj + 1);
            push(std::move(c), std::move(mono), std::move(rest));
        }
        return;
    }

    // finite generator
    Gen g = sym.g;
    fin_.check_gen(g);
    switch (g.kind) {
    case Gen::S:
    case Gen::C: {
        auto res = fin_.mul_gen_right(m.core, g);
        if (res) {
            PrimeMonomial mono = m;
            mono.core = res->second;
            push(item.coeff * Scalar(res->first), std::move(mono), std::move(rest));
        }
        return;
    }
    case Gen::CB: {
        Scalar c = item.coeff;
        if (count_index(m.xbp, g.idx) % 2) c = -c;
        auto res = fin_.mul_gen_right(m.core, g);
        if (res) {
            PrimeMonomial mono = m;
            mono.core = res->second;
            push(c * Scalar(res->first), std::move(mono), std::move(rest));
        }
        return;
    }
    case Gen::SB: {
        PrimeMonomial mono = m;
        for (int& v : mono.xbp) {
            if (v == g.idx)
                v = g.idx + 1;
            else if (v == g.idx + 1)
                v = g.idx;
        }
        auto res = fin_.mul_gen_right(mono.core, g);
        if (res) {
            mono.core = res->second;
            push(item.coeff * Scalar(res->first), std::move(mono), std::move(rest));
        }
        return;
    }
    case Gen::E1: {
        const WalledDiagram& d = m.core.diag;
        int d1 = count_index(m.xbp, 1);
        if (d.match[d.bot_u(0)] == d.bot_b(0)) {
            // the bottom (1,1bar) edge closes into a loop carrying the
            // index-1 dots and the cbar_1 decoration
            bool sigma = m.core.beta & 1u;
            Scalar val = sigma ? Scalar(0) : omega_bar(d1);
            if (val.is_zero()) return;
            PrimeMonomial mono = m;
            mono.core.beta &= ~1u;
            auto res = compose(d, diagram_e1(r_, t_));
            if (res.loops != 1) throw Error("inject: expected exactly one loop");
            mono.core.diag = res.diagram;
            mono.xbp.erase(std::remove(mono.xbp.begin(), mono.xbp.end(), 1), mono.xbp.end());
            push(item.coeff * val, std::move(mono), std::move(rest));
            return;
        }
        if (d1 > 0) {
            // peel the rightmost index-1 dot (strip trailing higher dots
            // past e_1 first):  xbar'_1 e_1 = -x'_1 e_1
            size_t pos = m.xbp.size();
            while (pos > 0 && m.xbp[pos - 1] != 1) pos--;
            PrimeMonomial mono = m;
            std::vector<int> stripped(m.xbp.begin() + pos, m.xbp.end());
            mono.xbp.resize(pos - 1); // drop the dot and the tail
            std::vector<ASym> pend{ASym::xp(1), ASym::fin(Gen::e1())};
            for (int v : stripped) pend.push_back(ASym::xbp(v));
            pend.insert(pend.end(), rest.begin(), rest.end());
            push(-item.coeff, std::move(mono), std::move(pend));
            return;
        }
        if (m.core.beta & 1u) {
            // cbar_1 e_1 = c_1 e_1; reposition the pending c_1 on the right
            Scalar c = item.coeff;
            if (parity_of(m.core.beta & ~1u)) c = -c;
            PrimeMonomial mono = m;
            mono.core.beta &= ~1u;
            std::vector<ASym> pend{ASym::fin(Gen::c(1)), ASym::fin(Gen::e1())};
            pend.insert(pend.end(), rest.begin(), rest.end());
            push(std::move(c), std::move(mono), std::move(pend));
            return;
        }
        auto res = fin_.mul_gen_right(m.core, g);
        if (!res) throw Error("inject: unexpected zero in loop-free e_1 fold");
        PrimeMonomial mono = m;
        mono.core = res->second;
        push(item.coeff * Scalar(res->first), std::move(mono), std::move(rest));
        return;
    }
    }
}

void AffineAlgebra::reduce_items(std::vector<Item>& stack, PrimeElement& out, long& fuel) const {
    while (!stack.empty()) {
        if (--fuel < 0) throw FuelError("affine rewrite exceeded its fuel budget");
        Item item = std::move(stack.back());
        stack.pop_back();
        if (item.coeff.is_zero()) continue;
        if (!canonical_ready(item.m)) {
            push_sorted_fixups(std::move(item), stack);
            continue;
        }
        if (item.pending.empty()) {
            out.add_term(item.m, item.coeff);
            continue;
        }
        inject(item, stack, out, fuel);
    }
}

static std::vector<ASym> word_of_prime(const FiniteAlgebra& fin, const PrimeMonomial& m) {
    std::vector<ASym> w;
    for (int v : m.xp) w.push_back(ASym::xp(v));
    for (Gen g : fin.word_of_monomial(m.core)) w.push_back(ASym::fin(g));
    for (int v : m.xbp) w.push_back(ASym::xbp(v));
    return w;
}

PrimeElement AffineAlgebra::prime_mul_sym(const PrimeElement& a, const ASym& s) const {
    PrimeElement out;
    long fuel = fuel_;
    std::vector<Item> stack;
    for (auto& [m, c] : a.terms) stack.push_back(Item{c, m, {s}});
    reduce_items(stack, out, fuel);
    return out;
}

PrimeElement AffineAlgebra::prime_mul(const PrimeElement& a, const PrimeElement& b) const {
    PrimeElement out;
    for (auto& [mb, cb] : b.terms) {
        for (auto& [ma, ca] : a.terms) {
            PrimeElement part;
            bool found = false;
            {
                std::lock_guard<std::mutex> lock(mu_);
                auto it = prime_cache_.find({ma, mb});
                if (it != prime_cache_.end()) {
                    part = it->second;
                    found = true;
                }
            }
            if (!found) {
                long fuel = fuel_;
                std::vector<Item> stack{Item{Scalar(1), ma, word_of_prime(fin_, mb)}};
                reduce_items(stack, part, fuel);
                std::lock_guard<std::mutex> lock(mu_);
                prime_cache_[{ma, mb}] = part;
            }
            Scalar w = ca * cb;
            for (auto& [m, c] : part.terms) out.add_term(m, c * w);
        }
    }
    return out;
}

// --- basis conversions -------------------------------------------------------

PrimeElement AffineAlgebra::to_prime(const AffElement& a) const {
    if (a.r != r_ || a.t != t_) throw ShapeError("to_prime: shape mismatch");
    PrimeElement out;
    for (auto& [m, c] : a.terms) {
        PrimeElement pm;
        bool found = false;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = to_prime_cache_.find(m);
            if (it != to_prime_cache_.end()) {
                pm = it->second;
                found = true;
            }
        }
        if (!found) {
            // x^gamma (as products of x_i = x'_i - L_i) . core . xbar^delta
            pm = prime_one();
            for (int i = 1; i <= r_; i++) {
                if (m.x[i - 1] == 0) continue;
                PrimeElement xi;
                PrimeMonomial dot;
                dot.core.diag = WalledDiagram::identity(r_, t_);
                dot.xp = {i};
                xi.add_term(dot, Scalar(1));
                PrimeElement li = prime_from_finite(fin_.jm_L(i));
                for (auto& [lm, lc] : li.terms) xi.add_term(lm, -lc);
                for (int e = 0; e < m.x[i - 1]; e++) pm = prime_mul(pm, xi);
            }
            BCElement core(r_, t_);
            core.terms[m.core] = Scalar(1);
            pm = prime_mul(pm, prime_from_finite(core));
            for (int j = 1; j <= t_; j++) {
                if (m.xb[j - 1] == 0) continue;
                PrimeElement xj;
                PrimeMonomial dot;
                dot.core.diag = WalledDiagram::identity(r_, t_);
                dot.xbp = {j};
                xj.add_term(dot, Scalar(1));
                PrimeElement lj = prime_from_finite(fin_.jm_Lbar(j));
                for (auto& [lm, lc] : lj.terms) xj.add_term(lm, -lc);
                for (int e = 0; e < m.xb[j - 1]; e++) pm = prime_mul(pm, xj);
            }
            std::lock_guard<std::mutex> lock(mu_);
            to_prime_cache_[m] = pm;
        }
        for (auto& [pmm, pc] : pm.terms) out.add_term(pmm, pc * c);
    }
    return out;
}

AffElement AffineAlgebra::to_regular(const PrimeElement& p) const {
    AffElement out(r_, t_);
    for (auto& [m, c] : p.terms) {
        AffElement conv(r_, t_);
        bool found = false;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = to_regular_cache_.find(m);
            if (it != to_regular_cache_.end()) {
                conv = it->second;
                found = true;
            }
        }
        if (!found) {
            if (!m.xp.empty()) {
                // x'_i rest = x_i rest + L_i rest
                int i = m.xp.front();
                PrimeMonomial restm = m;
                restm.xp.erase(restm.xp.begin());
                PrimeElement reste;
                reste.add_term(restm, Scalar(1));
                AffElement base = to_regular(reste);
                for (auto& [bm, bc] : base.terms) {
                    RegularMonomial shifted = bm;
                    shifted.x[i - 1] += 1;
                    conv.add_term(shifted, bc);
                }
                conv = conv + to_regular(prime_mul(prime_from_finite(fin_.jm_L(i)), reste));
            } else if (!m.xbp.empty()) {
                // rest xbar'_j = rest xbar_j + rest Lbar_j
                int j = m.xbp.back();
                PrimeMonomial restm = m;
                restm.xbp.pop_back();
                PrimeElement reste;
                reste.add_term(restm, Scalar(1));
                AffElement base = to_regular(reste);
                for (auto& [bm, bc] : base.terms) {
                    RegularMonomial shifted = bm;
                    shifted.xb[j - 1] += 1;
                    conv.add_term(shifted, bc);
                }
                conv = conv + to_regular(prime_mul(reste, prime_from_finite(fin_.jm_Lbar(j))));
            } else {
                RegularMonomial rm;
                rm.x.assign(r_, 0);
                rm.xb.assign(t_, 0);
                rm.core = m.core;
                conv.add_term(rm, Scalar(1));
            }
            std::lock_guard<std::mutex> lock(mu_);
            to_regular_cache_[m] = conv;
        }
        out = out + conv.scale(c);
    }
    return out;
}

// --- public operations ---------------------------------------------------------

AffElement AffineAlgebra::one() const {
    AffElement e(r_, t_);
    RegularMonomial m;
    m.x.assign(r_, 0);
    m.xb.assign(t_, 0);
    m.core.diag = WalledDiagram::identity(r_, t_);
    e.terms[m] = Scalar(1);
    return e;
}

AffElement AffineAlgebra::from_finite(const BCElement& e) const {
    if (e.r != r_ || e.t != t_) throw ShapeError("from_finite: shape mismatch");
    AffElement out(r_, t_);
    for (auto& [m, c] : e.terms) {
        RegularMonomial rm;
        rm.x.assign(r_, 0);
        rm.xb.assign(t_, 0);
        rm.core = m;
        out.terms[rm] = c;
    }
    return out;
}

AffElement AffineAlgebra::gen_x(int i) const {
    if (i < 1 || i > r_) throw Error("x index out of range");
    AffElement e = one();
    AffElement out(r_, t_);
    for (auto& [m, c] : e.terms) {
        RegularMonomial rm = m;
        rm.x[i - 1] = 1;
        out.terms[rm] = c;
    }
    return out;
}

AffElement AffineAlgebra::gen_xb(int j) const {
    if (j < 1 || j > t_) throw Error("xbar index out of range");
    AffElement e = one();
    AffElement out(r_, t_);
    for (auto& [m, c] : e.terms) {
        RegularMonomial rm = m;
        rm.xb[j - 1] = 1;
        out.terms[rm] = c;
    }
    return out;
}

AffElement AffineAlgebra::gen(Gen g) const { return from_finite(fin_.gen(g)); }

AffElement AffineAlgebra::mul(const AffElement& a, const AffElement& b) const {
    return to_regular(prime_mul(to_prime(a), to_prime(b)));
}

AffElement AffineAlgebra::pow(const AffElement& a, int e) const {
    AffElement out = one();
    for (int i = 0; i < e; i++) out = mul(out, a);
    return out;
}

AffElement AffineAlgebra::mul_gen_right(const AffElement& a, const ASym& s) const {
    return to_regular(prime_mul_sym(to_prime(a), s));
}

AffElement AffineAlgebra::sigma(const AffElement& a) const {
    AffElement out(r_, t_);
    for (auto& [m, c] : a.terms) {
        // sigma(x^gamma B xbar^delta) = xbar^delta tau(B) x^gamma
        AffElement xe = one(), xbe = one();
        {
            AffElement tmp(r_, t_);
            for (auto& [om, oc] : xe.terms) {
                RegularMonomial rm = om;
                rm.x = m.x;
                tmp.terms[rm] = oc;
            }
            xe = tmp;
        }
        {
            AffElement tmp(r_, t_);
            for (auto& [om, oc] : xbe.terms) {
                RegularMonomial rm = om;
                rm.xb = m.xb;
                tmp.terms[rm] = oc;
            }
            xbe = tmp;
        }
        BCElement core(r_, t_);
        core.terms[m.core] = Scalar(1);
        AffElement mid = from_finite(fin_.tau(core));
        out = out + mul(mul(xbe, mid), xe).scale(c);
    }
    return out;
}

// --- Phi_k ---------------------------------------------------------------------

PhiK::PhiK(int r, int t, int k) : rsrc_(r), tsrc_(t), k_(k) {
    if (k < 1) throw Error("Phi_k requires k >= 1");
    target_ = std::make_shared<FiniteAlgebra>(r + k, t + k);
}

BCElement PhiK::x1() const { return target_->jm_y(k_ + 1); }
BCElement PhiK::xb1() const { return target_->jm_ybar(k_ + 1); }

BCElement PhiK::gen(Gen g) const {
    switch (g.kind) {
    case Gen::S: return target_->gen(Gen::s(k_ + g.idx));
    case Gen::SB: return target_->gen(Gen::sb(k_ + g.idx));
    case Gen::C: return target_->gen(Gen::c(k_ + g.idx));
    case Gen::CB: return target_->gen(Gen::cb(k_ + g.idx));
    case Gen::E1: return target_->e_elt(k_ + 1);
    }
    throw Error("unreachable");
}

BCElement PhiK::x(int i) const {
    // Phi(x_1) = y_{k+1}; Phi(x_{i+1}) = s Phi(x_i) s - (1 - c c') s
    BCElement cur = x1();
    for (int n = 1; n < i; n++) {
        BCElement s = gen(Gen::s(n));
        BCElement c1 = gen(Gen::c(n)), c2 = gen(Gen::c(n + 1));
        cur = target_->mul(target_->mul(s, cur), s) - s + target_->mul(target_->mul(c1, c2), s);
    }
    return cur;
}

BCElement PhiK::xb(int j) const {
    BCElement cur = xb1();
    for (int n = 1; n < j; n++) {
        BCElement s = gen(Gen::sb(n));
        BCElement c1 = gen(Gen::cb(n)), c2 = gen(Gen::cb(n + 1));
        cur = target_->mul(target_->mul(s, cur), s) - s - target_->mul(target_->mul(c1, c2), s);
    }
    return cur;
}

BCElement PhiK::omega(int a) const { return target_->omega_ak(a, k_ + 1); }
BCElement PhiK::omega_barred(int a) const { return target_->omega_ak(a, k_ + 1, true); }

BCElement PhiK::apply(const AffElement& e) const {
    BCElement out = target_->zero();
    for (auto& [m, c] : e.terms) {
        // scalar: substitute the central omega_{n,k+1} for each w_n
        BCElement scal = target_->zero();
        for (auto& [mono, coeff] : c.terms()) {
            BCElement term = target_->one().scale(coeff);
            for (auto& [var, exp] : mono.factors)
                for (int x = 0; x < exp; x++) term = target_->mul(term, omega(var));
            scal = scal + term;
        }
        BCElement img = scal;
        for (int i = 1; i <= rsrc_; i++)
            for (int n = 0; n < m.x[i - 1]; n++) img = target_->mul(img, x(i));
        BCElement coreimg = target_->one();
        FiniteAlgebra src(rsrc_, tsrc_);
        for (Gen g : src.word_of_monomial(m.core)) coreimg = target_->mul(coreimg, gen(g));
        img = target_->mul(img, coreimg);
        for (int j = 1; j <= tsrc_; j++)
            for (int n = 0; n < m.xb[j - 1]; n++) img = target_->mul(img, xb(j));
        out = out + img;
    }
    return out;
}

} // namespace wbc
