#pragma once

#include <map>
#include <string>
#include <vector>

#include "wbc/bcrt.hpp"

namespace wbc {

// Mixed tensor space V^{. r} (x) (V*)^{. t} for V the (n|n) superspace with
// basis v_i, i in {+-1..+-n}; parity [i] = 0 for i > 0, 1 for i < 0.
// Basis vectors of the tensor space are index tuples; the algebra acts on
// the right (matrices compose left-to-right).
class TensorRep {
  public:
    TensorRep(int n, int r, int t);

    int n() const { return n_; }
    int dim() const { return dim_; }

    // Sparse right-action matrix: column-major map from basis index to the
    // list of (row, coeff).  Stored as act[v] = image of basis vector v.
    using Vec = std::map<long, Rational>;
    struct Mat {
        int dim = 0;
        std::vector<Vec> cols; // cols[v] = (v) . M
    };

    Mat identity() const;
    Mat build_generator(Gen g) const;
    Mat compose(const Mat& a, const Mat& b) const; // apply a, then b
    Mat add(const Mat& a, const Mat& b) const;
    Mat scale(const Mat& a, const Rational& c) const;
    bool equal(const Mat& a, const Mat& b) const;
    bool is_zero(const Mat& a) const;

    Mat rep_mono(const BCMonomial& m, const FiniteAlgebra& alg) const;
    Mat rep(const BCElement& e, const FiniteAlgebra& alg) const;

    // Rank over Q of the span of the given matrices (flattened).
    int rank(const std::vector<Mat>& mats) const;

    // index <-> tuple helpers; each entry in {0..2n-1} encodes i in I
    long tuple_to_index(const std::vector<int>& tup) const;
    std::vector<int> index_to_tuple(long idx) const;
    int entry_parity(int e) const { return e >= n_ ? 1 : 0; } // [i]

  private:
    int n_, r_, t_;
    long dim_;
};

} // namespace wbc
