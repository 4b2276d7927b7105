#include <doctest.h>

#include "wbc/io.hpp"
#include "wbc/verify.hpp"

using namespace wbc;

TEST_CASE("finite element print/parse fixed point") {
    FiniteAlgebra alg(2, 2);
    Rng rng(1234);
    for (int s = 0; s < 25; s++) {
        BCElement e = random_bc_element(alg, rng, 3, false);
        BCElement back = parse_bc_element(e.str(), alg);
        CHECK(back == e);
        CHECK(back.str() == e.str());
    }
    CHECK(parse_bc_element("0", alg).is_zero());
}

TEST_CASE("affine element print/parse fixed point") {
    AffineAlgebra alg(2, 1);
    Rng rng(4321);
    for (int s = 0; s < 20; s++) {
        AffElement e(2, 1);
        e.add_term(random_regular_monomial(alg, rng, 3), Scalar(frac(rng.uniform(7) - 3, 2)));
        e.add_term(random_regular_monomial(alg, rng, 2), Scalar::omega(1) + Scalar(1));
        AffElement back = parse_aff_element(e.str(), alg);
        CHECK(back == e);
        CHECK(back.str() == e.str());
    }
}

TEST_CASE("generator shorthand expressions") {
    FiniteAlgebra alg(1, 1);
    BCElement e1 = parse_bc_element("e1", alg);
    CHECK(e1 == alg.gen(Gen::e1()));
    CHECK(parse_bc_element("e1 * e1", alg).is_zero());
    CHECK(parse_bc_element("c1^2 + 1", alg).is_zero());
    CHECK(parse_bc_element("cb1 * cb1", alg) == alg.one());

    AffineAlgebra aff(1, 1);
    AffElement p = parse_aff_element("e1 * x1 * e1 - w1 * e1", aff);
    CHECK(p.is_zero());
    AffElement q = parse_aff_element("x1 + xb1", aff);
    CHECK(q == aff.gen_x(1) + aff.gen_xb(1));
}

TEST_CASE("affine atoms rejected in finite elements") {
    FiniteAlgebra alg(1, 1);
    CHECK_THROWS_AS(parse_bc_element("x1", alg), ParseError);
    CHECK_THROWS_AS(parse_bc_element("xb1 * e1", alg), ParseError);
}

TEST_CASE("parse errors carry positions") {
    FiniteAlgebra alg(1, 1);
    CHECK_THROWS_AS(parse_bc_element("e1 +", alg), ParseError);
    CHECK_THROWS_AS(parse_bc_element("q9", alg), ParseError);
    CHECK_THROWS_AS(parse_bc_element("s1", alg), Error); // no s_1 when r = 1
}

TEST_CASE("scalar coefficients with omegas survive the round trip") {
    AffineAlgebra alg(1, 1);
    AffElement e = alg.gen(Gen::e1()).scale(Scalar::omega(3) * Scalar::omega(3) -
                                            Scalar(frac(1, 2)));
    CHECK(parse_aff_element(e.str(), alg) == e);
}
