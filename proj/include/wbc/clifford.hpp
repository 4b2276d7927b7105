#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "wbc/perm.hpp"
#include "wbc/scalar.hpp"

namespace wbc {

// Sign of the square of an odd generator: Minus for the c_i family
// (c_i^2 = -1), Plus for the barred family (cbar_i^2 = +1).
enum class SignType : int8_t { Minus = -1, Plus = +1 };

using Bits = uint32_t;

inline int popcount_below(Bits b, int i) { return __builtin_popcount(b & ((1u << i) - 1)); }
inline int popcount_above(Bits b, int i) {
    return __builtin_popcount(b & ~((1u << (i + 1)) - 1));
}
inline int parity_of(Bits b) { return __builtin_popcount(b) & 1; }

// Merges one odd generator of index i (0-based) into the normal-ordered
// decoration word encoded by bits, arriving from the right.  Returns the
// accumulated sign and flips the bit.
inline int merge_bit_from_right(Bits& bits, int i, SignType eps) {
    int sign = (popcount_above(bits, i) & 1) ? -1 : 1;
    if (bits & (1u << i)) {
        if (eps == SignType::Minus) sign = -sign;
        bits &= ~(1u << i);
    } else {
        bits |= (1u << i);
    }
    return sign;
}

// Same, arriving from the left of the word.
inline int merge_bit_from_left(Bits& bits, int i, SignType eps) {
    int sign = (popcount_below(bits, i) & 1) ? -1 : 1;
    if (bits & (1u << i)) {
        if (eps == SignType::Minus) sign = -sign;
        bits &= ~(1u << i);
    } else {
        bits |= (1u << i);
    }
    return sign;
}

// Normal-form basis element c^alpha * w of the Hecke-Clifford algebra on n
// strands: alpha in Z_2^n, w a permutation acting on the right of {1..n}.
struct CliffordWord {
    int n = 0;
    SignType eps = SignType::Minus;
    Bits alpha = 0;
    Perm w;

    CliffordWord() = default;
    CliffordWord(int n_, SignType e) : n(n_), eps(e), w(n_) {}

    int parity() const { return parity_of(alpha); }
    bool operator<(const CliffordWord& o) const {
        if (alpha != o.alpha) return alpha < o.alpha;
        return w < o.w;
    }
    bool operator==(const CliffordWord& o) const {
        return n == o.n && eps == o.eps && alpha == o.alpha && w == o.w;
    }
    std::string str() const;
};

struct CWElement {
    int n = 0;
    SignType eps = SignType::Minus;
    std::map<CliffordWord, Scalar> terms;

    CWElement() = default;
    CWElement(int n_, SignType e) : n(n_), eps(e) {}

    static CWElement zero(int n, SignType e) { return CWElement(n, e); }
    static CWElement one(int n, SignType e);
    static CWElement gen_s(int n, SignType e, int i);   // s_i, 1-based, 1 <= i < n
    static CWElement gen_c(int n, SignType e, int i);   // c_i, 1-based
    static CWElement transposition(int n, SignType e, int a, int b); // (a, b), 1-based

    void add_term(const CliffordWord& word, const Scalar& coeff);
    bool is_zero() const { return terms.empty(); }
    CWElement operator+(const CWElement& o) const;
    CWElement operator-(const CWElement& o) const;
    CWElement operator-() const;
    CWElement scale(const Scalar& c) const;
    bool operator==(const CWElement& o) const {
        return n == o.n && eps == o.eps && terms == o.terms;
    }
    std::string str() const;
};

// Product expanded on the normal-form basis.  Signs come from normal
// ordering the odd generators and from eps at each squared generator.
CWElement cw_mul(const CWElement& a, const CWElement& b);

// The i-th Jucys-Murphy element, 1-based:  L_i = frakL_i + c_i frakL_i c_i
// for the Minus family,  Lbar_i = frakL_i - c_i frakL_i c_i for Plus,
// where frakL_i = sum_{j<i} (j, i).  L_1 = 0.
CWElement jm_L(int n, SignType eps, int i);

CWElement parse_cw_element(const std::string& text, int n, SignType eps);

} // namespace wbc
