#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wbc/clifford.hpp"
#include "wbc/diagram.hpp"
#include "wbc/scalar.hpp"

namespace wbc {

// Basis element c^alpha d1^{-1} e^f w d2 cbar^beta of BC_{r,t}: decoration
// bits at the top unbarred (alpha) and bottom barred (beta) vertices of a
// walled diagram.
struct BCMonomial {
    Bits alpha = 0;
    WalledDiagram diag;
    Bits beta = 0;

    int parity() const { return (parity_of(alpha) + parity_of(beta)) & 1; }
    bool operator<(const BCMonomial& o) const {
        if (!(diag.match == o.diag.match)) return diag.match < o.diag.match;
        if (alpha != o.alpha) return alpha < o.alpha;
        return beta < o.beta;
    }
    bool operator==(const BCMonomial& o) const {
        return alpha == o.alpha && beta == o.beta && diag == o.diag;
    }
    std::string str() const;
};

struct BCElement {
    int r = 0, t = 0;
    std::map<BCMonomial, Scalar> terms;

    BCElement() = default;
    BCElement(int r_, int t_) : r(r_), t(t_) {}

    bool is_zero() const { return terms.empty(); }
    void add_term(const BCMonomial& m, const Scalar& c);
    BCElement operator+(const BCElement& o) const;
    BCElement operator-(const BCElement& o) const;
    BCElement operator-() const;
    BCElement scale(const Scalar& c) const;
    bool operator==(const BCElement& o) const {
        return r == o.r && t == o.t && terms == o.terms;
    }
    // -1 mixed/zero, else 0 or 1
    int parity() const;
    std::string str() const;
};

// The finite walled Brauer-Clifford superalgebra BC_{r,t}.  Products of two
// basis monomials are single signed monomials (or zero); they are memoized.
class FiniteAlgebra {
  public:
    FiniteAlgebra(int r, int t);

    int r() const { return r_; }
    int t() const { return t_; }

    BCMonomial one_mono() const;
    BCElement one() const;
    BCElement zero() const { return BCElement(r_, t_); }
    BCElement gen(Gen g) const;     // generator as an element
    BCElement element_of_word(const GenWord& w) const;

    // m . g expanded on the basis: a single signed monomial or nothing.
    std::optional<std::pair<int, BCMonomial>> mul_gen_right(const BCMonomial& m, Gen g) const;

    BCElement mul_word(const BCElement& a, const GenWord& w) const;
    BCElement mul(const BCElement& a, const BCElement& b) const;
    BCElement pow(const BCElement& a, int e) const;

    // Anti-involution fixing every generator, computed by word reversal.
    BCElement tau(const BCElement& a) const;

    // Jucys-Murphy machinery.
    BCElement eta(int i) const;      // sum_{j<i} (e_{i,j} - (j,i))
    BCElement etabar(int i) const;   // sum_{j<i} (e_{j,i} - (jbar,ibar))
    BCElement jm_y(int i) const;     // eta_i + c_i eta_i c_i
    BCElement jm_ybar(int i) const;  // etabar_i - cbar_i etabar_i cbar_i
    BCElement jm_L(int i) const;     // frakL_i + c_i frakL_i c_i
    BCElement jm_Lbar(int i) const;

    BCElement e_elt(int k) const;    // e_k
    BCElement e_ij_elt(int i, int j) const;

    // The unique Z in the embedded BC_{k-1,k-1} with e_k y_k^a e_k = Z e_k.
    // Throws if the product does not lie in (BC_{k-1,k-1}) e_k, which would
    // signal a multiplication bug.
    BCElement omega_ak(int a, int k, bool barred = false) const;

    // All basis monomials in canonical order.
    std::vector<BCMonomial> basis() const;

    // Generator word of a monomial (coefficient +1 replay).
    GenWord word_of_monomial(const BCMonomial& m) const;

    void check_gen(Gen g) const;

  private:
    int r_, t_;
    mutable std::mutex cache_mu_;
    struct PairKey {
        BCMonomial a, b;
        bool operator<(const PairKey& o) const {
            if (!(a == o.a)) return a < o.a;
            return b < o.b;
        }
    };
    // 0 coefficient encodes the zero product
    mutable std::map<PairKey, std::pair<int, BCMonomial>> mono_cache_;

    std::pair<int, std::optional<BCMonomial>> mul_mono(const BCMonomial& a,
                                                       const BCMonomial& b) const;
};

} // namespace wbc
