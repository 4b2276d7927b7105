#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wbc/affine.hpp"

namespace wbc {

struct TorsionReport {
    struct Entry {
        int ell;
        Rational b;
    };
    std::vector<Entry> nonzero; // non-admissible witnesses
    bool admissible() const { return nonzero.empty(); }
};

// Level ell = k + 2m cyclotomic data: f(x) = x^k prod_i (x^2 - usq_i),
// seed values for the odd omegas below ell, and everything derived from
// them: the admissible omega stream and the coefficients of g.
class CycloSpec {
  public:
    // usq holds the squares u_i^2 (nonzero); seeds maps odd n < k+2m to
    // omega_n.  Missing seeds default to 0.
    CycloSpec(int k, std::vector<Rational> usq, std::map<int, Rational> seeds);

    int k() const { return k_; }
    int m() const { return (int)usq_.size(); }
    int level() const { return k_ + 2 * m(); }

    // Coefficients a_1..a_2m with f(x) = x^{k+2m} + sum_i a_i x^{k+2m-i}.
    const std::vector<Rational>& f_tail() const { return a_; }
    // Monic f as a dense coefficient vector, degree ell down to 0.
    std::vector<Rational> f_coeffs() const;
    // Monic g of degree ell with e_1 f(x_1) = (-1)^k e_1 g(xbar_1); derived,
    // validated against the even/odd support shape of (6.8).
    const std::vector<Rational>& g_coeffs() const { return g_; }
    int k1() const { return k1_; }
    int m1() const { return (m_ell() - k1_) / 2; }

    // omega_n of the unique admissible continuation, any n >= 0.
    Rational omega(int n) const;
    std::map<int, Rational> omega_assignment(int max_index) const;

    // The stream with explicit seed entries taken at face value, including
    // ones above the threshold that may contradict the recursion.
    std::vector<Rational> claimed_stream(int L) const;
    // Witnesses b_l != 0 against the claimed stream (empty iff admissible).
    TorsionReport torsion_report(int L = 0) const;
    bool admissible(int L = 0) const { return torsion_report(L).admissible(); }

    std::string str() const;

    static CycloSpec parse_file(const std::string& text);

  private:
    int m_ell() const { return k_ + 2 * (int)usq_.size(); }
    void extend_stream(int n) const;
    void derive_g();

    int k_;
    std::vector<Rational> usq_;
    std::map<int, Rational> seeds_;
    mutable std::vector<Rational> stream_; // omega_0, omega_1, ...
    std::vector<Rational> a_;
    std::vector<Rational> g_; // ell down to 0
    int k1_ = 0;
};

// omega_{k+2m}, ..., computed by the admissibility recursion; returns
// `count` values starting at index `from`.
std::vector<Rational> admissible_stream(const CycloSpec& spec, int from, int count);

// Checks b_l = omega_l + a_1 omega_{l-1} + ... + a_2m omega_{l-2m} = 0 for
// k+2m <= l <= L against user-supplied omega values.
TorsionReport torsion_check(const CycloSpec& spec, const std::vector<Rational>& omegas, int L);

// Reduces an affine element into the cyclotomic quotient: every exponent
// ends up in Z_ell and the omega variables are specialized.
AffElement reduce_cyclo(const AffineAlgebra& alg, const AffElement& a, const CycloSpec& spec);

// Rank formula 2^{r+t} ell^{r+t} (r+t)!.
Rational cyclo_rank(const CycloSpec& spec, int r, int t);

// All cyclotomic regular monomials (exponents below ell).
std::vector<RegularMonomial> cyclo_monomials(const AffineAlgebra& alg, const CycloSpec& spec);

// delta_k <-> omega_k dictionary: deltabar_k = (-1)^k omega_k and
// delta_k = deltabar_k + sum_{0<i<k/2} delta_{2i-1} deltabar_{k-2i}.
// Sequences are indexed from 1.
std::vector<Rational> omega_to_delta(const std::vector<Rational>& omega);
std::vector<Rational> delta_to_omega(const std::vector<Rational>& delta);

} // namespace wbc
