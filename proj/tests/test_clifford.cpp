#include <doctest.h>

#include "wbc/clifford.hpp"
#include "wbc/verify.hpp"

using namespace wbc;

namespace {
CWElement word(int n, SignType e, std::vector<int> gens) {
    // positive k = s_k, negative k = c_{-k}
    CWElement r = CWElement::one(n, e);
    for (int g : gens)
        r = cw_mul(r, g > 0 ? CWElement::gen_s(n, e, g) : CWElement::gen_c(n, e, -g));
    return r;
}
} // namespace

TEST_CASE("defining relations of the Clifford families") {
    for (SignType eps : {SignType::Minus, SignType::Plus}) {
        int n = 3;
        auto one = CWElement::one(n, eps);
        for (int i = 1; i <= n; i++) {
            CWElement sq = cw_mul(CWElement::gen_c(n, eps, i), CWElement::gen_c(n, eps, i));
            CHECK(sq == (eps == SignType::Minus ? -one : one));
        }
        for (int i = 1; i <= n; i++)
            for (int j = 1; j <= n; j++) {
                if (i == j) continue;
                auto ci = CWElement::gen_c(n, eps, i), cj = CWElement::gen_c(n, eps, j);
                CHECK((cw_mul(ci, cj) + cw_mul(cj, ci)).is_zero());
            }
        for (int i = 1; i < n; i++) {
            auto s = CWElement::gen_s(n, eps, i);
            CHECK(cw_mul(s, s) == one);
        }
        // w^{-1} c_i w = c_{(i)w} for adjacent transpositions
        for (int j = 1; j < n; j++)
            for (int i = 1; i <= n; i++) {
                int img = i == j ? j + 1 : (i == j + 1 ? j : i);
                auto s = CWElement::gen_s(n, eps, j);
                CHECK(cw_mul(cw_mul(s, CWElement::gen_c(n, eps, i)), s) ==
                      CWElement::gen_c(n, eps, img));
            }
    }
}

TEST_CASE("spec multiplication examples") {
    int n = 2;
    // s1 . c1 = c2 s1
    auto lhs = word(n, SignType::Minus, {1, -1});
    CWElement expect(n, SignType::Minus);
    CliffordWord w(n, SignType::Minus);
    w.alpha = 2; // c_2
    w.w = Perm::transposition(n, 0, 1);
    expect.add_term(w, Scalar(1));
    CHECK(lhs == expect);

    auto c1 = CWElement::gen_c(n, SignType::Minus, 1);
    CHECK(cw_mul(c1, c1) == -CWElement::one(n, SignType::Minus));
    auto cb1 = CWElement::gen_c(n, SignType::Plus, 1);
    CHECK(cw_mul(cb1, cb1) == CWElement::one(n, SignType::Plus));
}

TEST_CASE("Jucys-Murphy elements") {
    int n = 3;
    CHECK(jm_L(n, SignType::Minus, 1).is_zero());
    // L_2 = (1,2) + c_2 (1,2) c_2
    auto L2 = jm_L(n, SignType::Minus, 2);
    auto t12 = CWElement::transposition(n, SignType::Minus, 1, 2);
    auto c2 = CWElement::gen_c(n, SignType::Minus, 2);
    CHECK(L2 == t12 + cw_mul(cw_mul(c2, t12), c2));

    // s_i L_i s_i = L_{i+1} - (1 - c_i c_{i+1}) s_i
    for (SignType eps : {SignType::Minus, SignType::Plus}) {
        for (int i = 1; i < n; i++) {
            auto s = CWElement::gen_s(n, eps, i);
            auto ci = CWElement::gen_c(n, eps, i), cj = CWElement::gen_c(n, eps, i + 1);
            auto lhs = cw_mul(cw_mul(s, jm_L(n, eps, i)), s);
            auto corr = eps == SignType::Minus ? s - cw_mul(cw_mul(ci, cj), s)
                                               : s + cw_mul(cw_mul(ci, cj), s);
            CHECK(lhs == jm_L(n, eps, i + 1) - corr);
        }
    }
}

TEST_CASE("Jucys-Murphy commutation, exhaustive small n") {
    for (SignType eps : {SignType::Minus, SignType::Plus}) {
        for (int n = 2; n <= 4; n++) {
            std::vector<CWElement> L(n + 1);
            for (int i = 1; i <= n; i++) L[i] = jm_L(n, eps, i);
            for (int i = 1; i <= n; i++)
                for (int j = 1; j <= n; j++) CHECK((cw_mul(L[i], L[j]) - cw_mul(L[j], L[i])).is_zero());
            for (int i = 1; i < n; i++)
                for (int k = 1; k <= n; k++) {
                    if (k == i || k == i + 1) continue;
                    auto s = CWElement::gen_s(n, eps, i);
                    CHECK((cw_mul(s, L[k]) - cw_mul(L[k], s)).is_zero());
                }
            for (int i = 1; i <= n; i++)
                for (int k = 1; k <= n; k++) {
                    auto c = CWElement::gen_c(n, eps, i);
                    auto lhs = cw_mul(c, L[k]);
                    auto rhs = cw_mul(L[k], c);
                    if (i == k)
                        CHECK((lhs + rhs).is_zero());
                    else
                        CHECK((lhs - rhs).is_zero());
                }
        }
    }
}

TEST_CASE("basis count and parity split") {
    // super rank (2^{n-1} n!, 2^{n-1} n!): multiply out all products of basis
    // elements of HC_2 and check closure stays in the basis with sign
    int n = 3;
    long even = 0, odd = 0;
    for (Bits a = 0; a < (1u << n); a++)
        (parity_of(a) ? odd : even) += 1;
    long fact = 6;
    CHECK(even * fact == (1 << (n - 1)) * fact);
    CHECK(odd * fact == (1 << (n - 1)) * fact);
}

TEST_CASE("associativity on random triples") {
    Rng rng(99);
    int n = 3;
    auto random_elt = [&](SignType eps) {
        CWElement e(n, eps);
        for (int k = 0; k < 3; k++) {
            CliffordWord w(n, eps);
            w.alpha = (Bits)rng.uniform(1 << n);
            auto perms = all_perms(n);
            w.w = perms[rng.uniform((int)perms.size())];
            e.add_term(w, Scalar(Rational(rng.uniform(7) - 3, 1 + rng.uniform(2))));
        }
        return e;
    };
    for (SignType eps : {SignType::Minus, SignType::Plus})
        for (int i = 0; i < 30; i++) {
            auto a = random_elt(eps), b = random_elt(eps), c = random_elt(eps);
            CHECK(cw_mul(cw_mul(a, b), c) == cw_mul(a, cw_mul(b, c)));
        }
}

TEST_CASE("clifford word text round trip") {
    int n = 3;
    Rng rng(5);
    auto perms = all_perms(n);
    for (int i = 0; i < 20; i++) {
        CWElement e(n, SignType::Minus);
        for (int k = 0; k < 2; k++) {
            CliffordWord w(n, SignType::Minus);
            w.alpha = (Bits)rng.uniform(1 << n);
            w.w = perms[rng.uniform((int)perms.size())];
            e.add_term(w, Scalar(Rational(rng.uniform(5) - 2)));
        }
        CHECK(parse_cw_element(e.str(), n, SignType::Minus) == e);
    }
}
