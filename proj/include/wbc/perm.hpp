#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "wbc/error.hpp"

namespace wbc {

// Permutation of {0, ..., n-1} acting on the right of positions: the image
// of i is img[i], and (i)(uv) = ((i)u)v throughout the project.
struct Perm {
    std::vector<int> img;

    Perm() = default;
    explicit Perm(int n) : img(n) { std::iota(img.begin(), img.end(), 0); }

    int size() const { return (int)img.size(); }
    int operator()(int i) const { return img[i]; }
    bool is_identity() const {
        for (int i = 0; i < size(); i++)
            if (img[i] != i) return false;
        return true;
    }

    // apply *this, then v
    Perm then(const Perm& v) const {
        Perm r;
        r.img.resize(size());
        for (int i = 0; i < size(); i++) r.img[i] = v.img[img[i]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.img.resize(size());
        for (int i = 0; i < size(); i++) r.img[img[i]] = i;
        return r;
    }

    static Perm transposition(int n, int a, int b) {
        Perm p(n);
        std::swap(p.img[a], p.img[b]);
        return p;
    }

    bool operator==(const Perm& o) const { return img == o.img; }
    bool operator<(const Perm& o) const { return img < o.img; }

    // Decomposition into adjacent transpositions s_i = (i, i+1), 0-based i,
    // such that the product left-to-right equals *this.
    std::vector<int> adjacent_word() const {
        std::vector<int> word;
        std::vector<int> v = img;
        for (int pass = 0; pass < size(); pass++) {
            bool moved = false;
            for (int i = 0; i + 1 < size(); i++) {
                if (v[i] > v[i + 1]) {
                    std::swap(v[i], v[i + 1]);
                    word.push_back(i);
                    moved = true;
                }
            }
            if (!moved) break;
        }
        // v is now sorted; the word in generation order rebuilds img when
        // multiplied left-to-right onto the identity
        return word;
    }

    std::string cycle_str() const;
};

// Enumerates all permutations of {0..n-1} in lexicographic order.
std::vector<Perm> all_perms(int n);

} // namespace wbc
