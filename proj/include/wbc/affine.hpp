#pragma once

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wbc/bcrt.hpp"

namespace wbc {

// Regular monomial x^gamma . (c^alpha d1^{-1} e^f w d2 cbar^beta) . xbar^delta
// of the affine algebra; the omega factors live in the Scalar coefficients.
struct RegularMonomial {
    std::vector<int> x;  // gamma, length r
    BCMonomial core;
    std::vector<int> xb; // delta, length t

    int degree() const {
        int d = 0;
        for (int e : x) d += e;
        for (int e : xb) d += e;
        return d;
    }
    int parity() const { return core.parity(); }
    bool operator<(const RegularMonomial& o) const {
        if (x != o.x) return x < o.x;
        if (!(core == o.core)) return core < o.core;
        return xb < o.xb;
    }
    bool operator==(const RegularMonomial& o) const {
        return x == o.x && core == o.core && xb == o.xb;
    }
    std::string str() const;
};

struct AffElement {
    int r = 0, t = 0;
    std::map<RegularMonomial, Scalar> terms;

    AffElement() = default;
    AffElement(int r_, int t_) : r(r_), t(t_) {}

    bool is_zero() const { return terms.empty(); }
    void add_term(const RegularMonomial& m, const Scalar& c);
    AffElement operator+(const AffElement& o) const;
    AffElement operator-(const AffElement& o) const;
    AffElement operator-() const;
    AffElement scale(const Scalar& c) const;
    bool operator==(const AffElement& o) const {
        return r == o.r && t == o.t && terms == o.terms;
    }
    int degree() const;
    std::string str() const;
};

// Internal basis of the rewriting engine: the primed symbols
// x'_i = s_{i-1}...s_1 x_1 s_1...s_{i-1} slide through crossings freely.
// Word order: x'_{i} exponents written with descending strand index on the
// left of the core, ascending xbar'_j on the right.
struct PrimeMonomial {
    std::vector<int> xp;
    BCMonomial core;
    std::vector<int> xbp;

    bool operator<(const PrimeMonomial& o) const {
        if (xp != o.xp) return xp < o.xp;
        if (!(core == o.core)) return core < o.core;
        return xbp < o.xbp;
    }
    bool operator==(const PrimeMonomial& o) const {
        return xp == o.xp && core == o.core && xbp == o.xbp;
    }
};

struct PrimeElement {
    std::map<PrimeMonomial, Scalar> terms;
    void add_term(const PrimeMonomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms.find(m);
        if (it == terms.end())
            terms[m] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
};

// Engine symbol: the finite generators plus the primed affine symbols.
struct ASym {
    enum Kind { Fin, XP, XBP } kind;
    Gen g{};   // for Fin
    int idx = 0; // for XP / XBP, 1-based

    static ASym fin(Gen g) { return {Fin, g, 0}; }
    static ASym xp(int i) { return {XP, Gen{}, i}; }
    static ASym xbp(int j) { return {XBP, Gen{}, j}; }
};

// Coefficients of  e_1 xbar_1^m = sum_j A[m][j] e_1 x_1^j  and their inverse,
// used for the omega-bar values and for deriving g from f.
std::vector<std::vector<Scalar>> xbar_to_x_coeffs(int max_m);

// omega-bar_n as a polynomial in the odd omegas (0 for n even or n == 0).
Scalar omega_bar(int n);

class AffineAlgebra {
  public:
    AffineAlgebra(int r, int t, long fuel = 2'000'000);

    int r() const { return r_; }
    int t() const { return t_; }
    const FiniteAlgebra& finite() const { return fin_; }

    AffElement zero() const { return AffElement(r_, t_); }
    AffElement one() const;
    AffElement from_finite(const BCElement& e) const;
    AffElement gen_x(int i) const;   // x_i as an element
    AffElement gen_xb(int j) const;  // xbar_j
    AffElement gen(Gen g) const;

    AffElement mul(const AffElement& a, const AffElement& b) const;
    AffElement pow(const AffElement& a, int e) const;
    AffElement mul_gen_right(const AffElement& a, const ASym& s) const;

    // Anti-involution fixing all generators (word reversal).
    AffElement sigma(const AffElement& a) const;

    // --- prime basis plumbing (exposed for tests) ---
    PrimeElement to_prime(const AffElement& a) const;
    AffElement to_regular(const PrimeElement& p) const;
    PrimeElement prime_mul(const PrimeElement& a, const PrimeElement& b) const;
    PrimeElement prime_mul_sym(const PrimeElement& a, const ASym& s) const;
    PrimeElement prime_one() const;
    PrimeElement prime_from_finite(const BCElement& e) const;

    long fuel() const { return fuel_; }
    void set_fuel(long f) { fuel_ = f; }

  private:
    int r_, t_;
    FiniteAlgebra fin_;
    long fuel_;

    struct Item; // coeff . monomial . pending word
    void reduce_items(std::vector<Item>& stack, PrimeElement& out, long& fuel) const;
    void inject(const Item& item, std::vector<Item>& stack, PrimeElement& out, long& fuel) const;
    bool canonical_ready(const PrimeMonomial& m) const;
    void push_sorted_fixups(Item item, std::vector<Item>& stack) const;

    mutable std::mutex mu_;
    mutable std::map<std::pair<PrimeMonomial, PrimeMonomial>, PrimeElement> prime_cache_;
    mutable std::map<RegularMonomial, PrimeElement> to_prime_cache_;
    mutable std::map<PrimeMonomial, AffElement> to_regular_cache_;
};

// Images of the affine generators under Phi_k : BCaff_{r,t} -> BC_{r+k,t+k}.
// `target` must be the finite algebra on (r+k, t+k) strands.
class PhiK {
  public:
    PhiK(int r, int t, int k);

    const FiniteAlgebra& target() const { return *target_; }
    int k() const { return k_; }

    BCElement x1() const;   // y_{k+1}
    BCElement xb1() const;  // ybar_{k+1}
    BCElement gen(Gen g) const;
    BCElement x(int i) const;  // Phi_k(x_i), via the defining recursion
    BCElement xb(int j) const;
    BCElement omega(int a) const;     // omega_{a,k+1}
    BCElement omega_barred(int a) const;

    // Image of a whole affine element (omega variables in scalars are
    // substituted by the central omega_{a,k+1} elements).
    BCElement apply(const AffElement& e) const;

  private:
    int rsrc_, tsrc_, k_;
    std::shared_ptr<FiniteAlgebra> target_;
};

} // namespace wbc
