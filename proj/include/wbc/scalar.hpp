#pragma once

#include <gmpxx.h>
#include <map>
#include <string>
#include <vector>

#include "wbc/error.hpp"

namespace wbc {

using Rational = mpq_class;

// mpq_class(p, q) keeps the fraction unreduced; always build via frac().
inline Rational frac(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

// A power product of central parameters w1, w3, w5, ...  Factors are
// (odd variable index, exponent) pairs, sorted by index, exponents > 0.
struct OmegaMono {
    std::vector<std::pair<int, int>> factors;

    int degree() const;
    bool operator==(const OmegaMono& o) const { return factors == o.factors; }
    // Graded order: total degree first, then lexicographic on the exponent
    // sequence read along increasing variable index.
    bool operator<(const OmegaMono& o) const;
};

// Exact coefficient: a polynomial over Q in the odd central parameters.
// Plain rationals are the constant polynomials.  Kept in canonical expanded
// form with sorted monomials; equality is syntactic.
class Scalar {
  public:
    Scalar() = default;
    Scalar(const Rational& r);
    Scalar(long n);

    static Scalar omega(int n); // the variable w_n, n odd and >= 1
    static int max_omega_index();
    static void set_max_omega_index(int n);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    Rational rational_value() const; // requires is_rational()

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator*=(const Scalar& o);
    bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const; // arbitrary total order for maps

    Scalar pow(int e) const;

    // Substitutes rationals for every variable occurring in the scalar.
    // Missing assignments raise MissingVariableError naming the variable.
    Scalar specialize(const std::map<int, Rational>& assignment) const;

    // Variables occurring with nonzero exponent.
    std::vector<int> variables() const;
    int degree() const;

    const std::map<OmegaMono, Rational>& terms() const { return terms_; }

    std::string str() const;

  private:
    void prune();
    // monomial -> coefficient, canonical ascending order, no zero coeffs
    std::map<OmegaMono, Rational> terms_;
};

Scalar operator*(const Rational& r, const Scalar& s);

std::string rational_str(const Rational& r);
Rational parse_rational(const std::string& text);
Scalar parse_scalar(const std::string& text);

} // namespace wbc
