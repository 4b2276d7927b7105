#include "wbc/oracle.hpp"

#include <cstdint>

namespace wbc {

TensorRep::TensorRep(int n, int r, int t) : n_(n), r_(r), t_(t) {
    if (n < 1) throw Error("superspace rank must be positive");
    dim_ = 1;
    for (int i = 0; i < r + t; i++) dim_ *= 2 * n;
}

long TensorRep::tuple_to_index(const std::vector<int>& tup) const {
    long idx = 0, mul = 1;
    for (int e : tup) {
        idx += e * mul;
        mul *= 2 * n_;
    }
    return idx;
}

std::vector<int> TensorRep::index_to_tuple(long idx) const {
    std::vector<int> tup(r_ + t_);
    for (int i = 0; i < r_ + t_; i++) {
        tup[i] = idx % (2 * n_);
        idx /= 2 * n_;
    }
    return tup;
}

TensorRep::Mat TensorRep::identity() const {
    Mat m;
    m.dim = (int)dim_;
    m.cols.resize(dim_);
    for (long v = 0; v < dim_; v++) m.cols[v][v] = 1;
    return m;
}

// E_{ab} on V:    E_{ab} v_x = delta_{x,b} v_a.
// E_{ab} on V*:   E_{ab} vbar_x = -(-1)^{[a]([a]+[b])} delta_{x,a} vbar_b.
// Indices a, b, x are encoded 0..2n-1 with parity [e] = (e >= n).

TensorRep::Mat TensorRep::build_generator(Gen g) const {
    Mat m;
    m.dim = (int)dim_;
    m.cols.resize(dim_);
    int nn = 2 * n_;

    auto prefix_parity = [&](const std::vector<int>& tup, int slot) {
        int p = 0;
        for (int j = 0; j < slot; j++) p ^= entry_parity(tup[j]);
        return p;
    };

    for (long v = 0; v < dim_; v++) {
        std::vector<int> tup = index_to_tuple(v);
        switch (g.kind) {
        case Gen::C: {
            int slot = g.idx - 1;
            int x = tup[slot];
            // c(v_{+i}) = v_{-i}, c(v_{-i}) = -v_{+i}; c is odd
            int sign = prefix_parity(tup, slot) ? -1 : 1;
            std::vector<int> out = tup;
            if (x < n_) {
                out[slot] = x + n_;
            } else {
                out[slot] = x - n_;
                sign = -sign;
            }
            m.cols[v][tuple_to_index(out)] += sign;
            break;
        }
        case Gen::CB: {
            // cbar(vbar_{+-i}) = -vbar_{-+i}; the global sign makes
            // e_1 c_1 = e_1 cbar_1 hold against the contraction above,
            // and cbar^2 = +1 is preserved
            int slot = r_ + g.idx - 1;
            int x = tup[slot];
            int sign = prefix_parity(tup, slot) ? 1 : -1;
            std::vector<int> out = tup;
            out[slot] = x < n_ ? x + n_ : x - n_;
            m.cols[v][tuple_to_index(out)] += sign;
            break;
        }
        case Gen::S:
        case Gen::SB: {
            // pi_{p,q}(Omega_0) with Omega_0 = sum (-1)^{[b]} E_{ab} (x) E_{ba}
            int p = g.kind == Gen::S ? g.idx - 1 : r_ + g.idx - 1;
            int q = p + 1;
            int xp = tup[p], xq = tup[q];
            int Sp = prefix_parity(tup, p), Sq = prefix_parity(tup, q);
            if (g.kind == Gen::S) {
                // both slots carry V: nonzero terms need b = xp, a = xq
                int a = xq, b = xp;
                int opp = (entry_parity(a) + entry_parity(b)) & 1;
                int sign = ((entry_parity(b) + opp * (Sp + Sq)) & 1) ? -1 : 1;
                std::vector<int> out = tup;
                out[p] = a;
                out[q] = b;
                m.cols[v][tuple_to_index(out)] += sign;
            } else {
                // both slots carry V*: nonzero terms need a = xp, b = xq
                int a = xp, b = xq;
                int opp = (entry_parity(a) + entry_parity(b)) & 1;
                int e = entry_parity(b) +
                        entry_parity(a) * (entry_parity(a) + entry_parity(b)) +
                        entry_parity(b) * (entry_parity(b) + entry_parity(a)) +
                        opp * (Sp + Sq);
                // two minus signs from the V* action
                int sign = (e & 1) ? -1 : 1;
                std::vector<int> out = tup;
                out[p] = b;
                out[q] = a;
                m.cols[v][tuple_to_index(out)] += sign;
            }
            break;
        }
        case Gen::E1: {
            // e_i = -pi_{i, ibar}(Omega_0); only e_1 is a generator
            int p = 0, q = r_;
            int xp = tup[p], xq = tup[q];
            if (xp != xq) break; // delta_{b, xp} delta_{b, xq}
            int b = xp;
            int Sp = prefix_parity(tup, p), Sq = prefix_parity(tup, q);
            for (int a = 0; a < nn; a++) {
                int opp = (entry_parity(a) + entry_parity(b)) & 1;
                // -1 (def) * (-1)^{[b]} (Omega_0) * -(-1)^{[b]([b]+[a])} (V*)
                int e = entry_parity(b) + entry_parity(b) * (entry_parity(b) + entry_parity(a)) +
                        opp * (Sp + Sq);
                int sign = (e & 1) ? -1 : 1;
                std::vector<int> out = tup;
                out[p] = a;
                out[q] = a;
                m.cols[v][tuple_to_index(out)] += sign;
            }
            break;
        }
        }
    }
    return m;
}

TensorRep::Mat TensorRep::compose(const Mat& a, const Mat& b) const {
    Mat m;
    m.dim = a.dim;
    m.cols.resize(a.dim);
    for (long v = 0; v < a.dim; v++) {
        for (auto& [w, c] : a.cols[v]) {
            for (auto& [u, d] : b.cols[w]) {
                Rational& slot = m.cols[v][u];
                slot += c * d;
                if (slot == 0) m.cols[v].erase(u);
            }
        }
    }
    return m;
}

TensorRep::Mat TensorRep::add(const Mat& a, const Mat& b) const {
    Mat m = a;
    for (long v = 0; v < b.dim; v++) {
        for (auto& [u, d] : b.cols[v]) {
            Rational& slot = m.cols[v][u];
            slot += d;
            if (slot == 0) m.cols[v].erase(u);
        }
    }
    return m;
}

TensorRep::Mat TensorRep::scale(const Mat& a, const Rational& c) const {
    Mat m;
    m.dim = a.dim;
    m.cols.resize(a.dim);
    if (c == 0) return m;
    for (long v = 0; v < a.dim; v++)
        for (auto& [u, d] : a.cols[v]) m.cols[v][u] = c * d;
    return m;
}

bool TensorRep::equal(const Mat& a, const Mat& b) const {
    for (long v = 0; v < a.dim; v++)
        if (a.cols[v] != b.cols[v]) return false;
    return true;
}

bool TensorRep::is_zero(const Mat& a) const {
    for (auto& col : a.cols)
        if (!col.empty()) return false;
    return true;
}

TensorRep::Mat TensorRep::rep_mono(const BCMonomial& m, const FiniteAlgebra& alg) const {
    Mat out = identity();
    for (Gen g : alg.word_of_monomial(m)) out = compose(out, build_generator(g));
    return out;
}

TensorRep::Mat TensorRep::rep(const BCElement& e, const FiniteAlgebra& alg) const {
    Mat out;
    out.dim = (int)dim_;
    out.cols.resize(dim_);
    for (auto& [m, c] : e.terms) out = add(out, scale(rep_mono(m, alg), c.rational_value()));
    return out;
}

// Rank via Gaussian elimination modulo a large prime.  Entries of basis
// matrices are integers, so this is an exact lower bound on the rational
// rank; a full-rank result is exact.
int TensorRep::rank(const std::vector<Mat>& mats) const {
    const int64_t P = 2147483647; // 2^31 - 1
    auto to_mod = [&](const Rational& q) -> int64_t {
        mpz_class num = q.get_num(), den = q.get_den();
        int64_t a = (int64_t)mpz_fdiv_ui(num.get_mpz_t(), (unsigned long)P);
        int64_t b = (int64_t)mpz_fdiv_ui(den.get_mpz_t(), (unsigned long)P);
        // b^{-1} mod P
        int64_t inv = 1, base = b % P, e = P - 2;
        while (e) {
            if (e & 1) inv = (__int128)inv * base % P;
            base = (__int128)base * base % P;
            e >>= 1;
        }
        return (__int128)a * inv % P;
    };

    std::vector<std::map<long, int64_t>> rows;
    for (auto& m : mats) {
        std::map<long, int64_t> row;
        for (long v = 0; v < m.dim; v++)
            for (auto& [u, c] : m.cols[v]) {
                int64_t x = to_mod(c);
                if (x) row[v * (long)m.dim + u] = x;
            }
        // eliminate against stored pivot rows
        for (auto& pivot : rows) {
            if (row.empty()) break;
            long pk = pivot.begin()->first;
            auto it = row.find(pk);
            if (it == row.end()) continue;
            int64_t factor = it->second;
            // row -= factor * pivot (pivot is normalized to leading 1)
            for (auto& [k, val] : pivot) {
                int64_t& slot = row[k];
                slot = (int64_t)((((__int128)slot - (__int128)factor * val) % P + P) % P);
                if (slot == 0) row.erase(k);
            }
        }
        if (row.empty()) continue;
        // normalize leading coefficient to 1
        int64_t lead = row.begin()->second;
        int64_t inv = 1, base = lead % P, e = P - 2;
        while (e) {
            if (e & 1) inv = (__int128)inv * base % P;
            base = (__int128)base * base % P;
            e >>= 1;
        }
        for (auto& [k, val] : row) val = (__int128)val * inv % P;
        rows.push_back(std::move(row));
        // keep rows sorted by pivot for a triangular basis
        std::sort(rows.begin(), rows.end(),
                  [](auto& a, auto& b) { return a.begin()->first < b.begin()->first; });
    }
    return (int)rows.size();
}

} // namespace wbc
