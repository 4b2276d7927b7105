#pragma once

#include <string>
#include <vector>

#include "wbc/perm.hpp"

namespace wbc {

// Generator token of the finite walled Brauer-Clifford algebra.
// Indices are 1-based: S(i) = s_i, SB(j) = sbar_j, C(i) = c_i,
// CB(j) = cbar_j, E1 = e_1.
struct Gen {
    enum Kind { S, SB, C, CB, E1 } kind;
    int idx = 0;

    static Gen s(int i) { return {S, i}; }
    static Gen sb(int j) { return {SB, j}; }
    static Gen c(int i) { return {C, i}; }
    static Gen cb(int j) { return {CB, j}; }
    static Gen e1() { return {E1, 1}; }
};

using GenWord = std::vector<Gen>;

// Tuple data of an element of D^f_{r,t}:  d = s_{f,i_f} sbar_{f,j_f} ...
// s_{1,i_1} sbar_{1,j_1}  with  1 <= i_1 < ... < i_f <= r  and  k <= j_k <= t.
struct DWordData {
    std::vector<int> i, j; // 1-based, both of length f

    int f() const { return (int)i.size(); }
    bool operator==(const DWordData& o) const { return i == o.i && j == o.j; }
};

struct Factorization {
    DWordData d1, d2;
    int f = 0;
    Perm wu, wb; // permutations of the last r-f / t-f strands, shifted to 0-based
};

// Wall-respecting perfect matching on the 2(r+t) vertices of an (r,t)
// diagram.  Vertex ids: top unbarred 0..r-1, top barred r..r+t-1, bottom
// unbarred N..N+r-1, bottom barred N+r..2N-1 with N = r+t.
struct WalledDiagram {
    int r = 0, t = 0;
    std::vector<int> match;

    WalledDiagram() = default;
    static WalledDiagram identity(int r, int t);

    int N() const { return r + t; }
    int top_u(int i) const { return i; }             // 0-based strand
    int top_b(int j) const { return r + j; }
    int bot_u(int i) const { return N() + i; }
    int bot_b(int j) const { return N() + r + j; }

    bool is_top(int v) const { return v < N(); }
    bool is_barred(int v) const { int p = v % N(); return p >= r; }
    int strand(int v) const { int p = v % N(); return p < r ? p : p - r; } // 0-based

    void link(int a, int b) { match[a] = b; match[b] = a; }
    void validate() const; // throws on wall violations or non-perfect input

    int horizontal_count() const; // f
    bool operator==(const WalledDiagram& o) const {
        return r == o.r && t == o.t && match == o.match;
    }
    bool operator<(const WalledDiagram& o) const { return match < o.match; }

    std::string str() const;
};

// Diagrams of the generators.
WalledDiagram diagram_s(int r, int t, int i);   // s_i, 1 <= i < r
WalledDiagram diagram_sb(int r, int t, int j);  // sbar_j, 1 <= j < t
WalledDiagram diagram_e1(int r, int t);         // e_1, needs r,t >= 1

// Stacks a above b; returns the number of closed loops removed.
struct ComposeResult {
    WalledDiagram diagram;
    int loops = 0;
};
ComposeResult compose(const WalledDiagram& a, const WalledDiagram& b);

// Canonical factorization d1^{-1} e^f w d2 of a valid matching; two equal
// matchings factorize identically (the horizontal edges are peeled in
// increasing unbarred-endpoint order).
Factorization factorize(const WalledDiagram& d);
WalledDiagram recompose(int r, int t, const Factorization& fac);

// Word in the generators that multiplies out to the diagram's basis
// monomial with trivial decorations and coefficient +1.
GenWord generator_word(const WalledDiagram& d);
GenWord word_of_transposition(int a, int b, bool barred); // (a,b), 1-based
GenWord word_of_srange(int a, int b, bool barred);        // s_{a,b}
GenWord word_of_e(int k);                                 // e_k = e_{k,k}
GenWord word_of_e_ij(int i, int j);                       // e_{i,j}

// The unbarred / barred permutation parts of a D-word.
Perm dword_perm_u(const DWordData& d, int r);
Perm dword_perm_b(const DWordData& d, int t);

std::vector<DWordData> enumerate_dwords(int r, int t, int f);
std::vector<WalledDiagram> enumerate_diagrams(int r, int t);

WalledDiagram parse_diagram(const std::string& text, int r, int t);

} // namespace wbc
