#include <doctest.h>

#include "wbc/scalar.hpp"
#include "wbc/verify.hpp"

using namespace wbc;

TEST_CASE("rational arithmetic basics") {
    Scalar half(Rational(1, 2));
    CHECK(half + half == Scalar(1));
    CHECK((Scalar::omega(1) * Scalar::omega(1)).str() == "w1^2");
    CHECK((Scalar::omega(3) - Scalar::omega(3)).is_zero());
    CHECK((Scalar::omega(3) - Scalar::omega(3)).str() == "0");
}

TEST_CASE("only odd omega variables exist") {
    CHECK_THROWS_AS(Scalar::omega(2), Error);
    CHECK_THROWS_AS(Scalar::omega(0), Error);
    CHECK_THROWS_AS(Scalar::omega(100001), Error); // beyond the configured cap
}

TEST_CASE("specialize") {
    Scalar s = Scalar::omega(1);
    CHECK(s.specialize({{1, Rational(-4)}}) == Scalar(Rational(-4)));
    Scalar q = Scalar::omega(1) * Scalar::omega(1) + Scalar::omega(3);
    CHECK(q.specialize({{1, Rational(1)}, {3, Rational(2)}}) == Scalar(3));
    CHECK_THROWS_AS(Scalar::omega(3).specialize({{1, Rational(1)}}), MissingVariableError);
}

TEST_CASE("ring axioms on random scalars") {
    Rng rng(12345);
    auto random_scalar = [&]() {
        Scalar s(0);
        for (int i = 0; i < 3; i++) {
            Scalar term(Rational(rng.uniform(9) - 4, 1 + rng.uniform(3)));
            int nv = rng.uniform(3);
            for (int v = 0; v < nv; v++) term *= Scalar::omega(1 + 2 * rng.uniform(3));
            s += term;
        }
        return s;
    };
    for (int i = 0; i < 50; i++) {
        Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * Scalar(1) == a);
        CHECK((a + Scalar(0)) == a);
    }
}

TEST_CASE("specialize is a ring homomorphism") {
    Rng rng(777);
    std::map<int, Rational> assign{{1, Rational(2)}, {3, frac(-1, 2)}, {5, Rational(3)}};
    auto random_scalar = [&]() {
        Scalar s(0);
        for (int i = 0; i < 3; i++) {
            Scalar term(Rational(rng.uniform(9) - 4, 1 + rng.uniform(3)));
            int nv = rng.uniform(3);
            for (int v = 0; v < nv; v++) term *= Scalar::omega(1 + 2 * rng.uniform(3));
            s += term;
        }
        return s;
    };
    for (int i = 0; i < 40; i++) {
        Scalar a = random_scalar(), b = random_scalar();
        CHECK((a * b).specialize(assign) == a.specialize(assign) * b.specialize(assign));
        CHECK((a + b).specialize(assign) == a.specialize(assign) + b.specialize(assign));
    }
}

TEST_CASE("scalar text round trip") {
    Rng rng(31);
    for (int i = 0; i < 30; i++) {
        Scalar s(0);
        for (int k = 0; k < 3; k++) {
            Scalar term(Rational(rng.uniform(9) - 4, 1 + rng.uniform(4)));
            int nv = rng.uniform(3);
            for (int v = 0; v < nv; v++) term *= Scalar::omega(1 + 2 * rng.uniform(4));
            s += term;
        }
        CHECK(parse_scalar(s.str()) == s);
    }
    CHECK(parse_scalar("1/2 + 1/2") == Scalar(1));
    CHECK(parse_scalar("w1^2*w3 - w3*w1^2").is_zero());
    CHECK(parse_scalar("-3/4") == Scalar(Rational(-3, 4)));
}
