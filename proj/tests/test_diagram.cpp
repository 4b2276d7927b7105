#include <doctest.h>

#include "wbc/bcrt.hpp"
#include "wbc/diagram.hpp"

using namespace wbc;

namespace {
long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; i++) f *= i;
    return f;
}
} // namespace

TEST_CASE("identity and e_1 factorizations") {
    auto id = WalledDiagram::identity(1, 1);
    auto fid = factorize(id);
    CHECK(fid.f == 0);
    CHECK(fid.wu.is_identity());
    CHECK(fid.wb.is_identity());

    auto e1 = diagram_e1(1, 1);
    auto fe = factorize(e1);
    CHECK(fe.f == 1);
    CHECK(fe.d1.i == std::vector<int>{1});
    CHECK(fe.d1.j == std::vector<int>{1});
    CHECK(fe.d2.i == std::vector<int>{1});
}

TEST_CASE("e_{2,1} factorization carries the 1->2 range word") {
    // conjugate of e_1 by s_1 inside (2,1)
    auto d = compose(compose(diagram_s(2, 1, 1), diagram_e1(2, 1)).diagram, diagram_s(2, 1, 1))
                 .diagram;
    auto f = factorize(d);
    CHECK(f.f == 1);
    CHECK(f.d1.i == std::vector<int>{2});
    CHECK(f.d1.j == std::vector<int>{1});
    CHECK(f.d2.i == std::vector<int>{2});
}

TEST_CASE("diagram counts match (r+t)!") {
    for (auto [r, t] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}}) {
        auto ds = enumerate_diagrams(r, t);
        CHECK((long)ds.size() == factorial(r + t));
        for (size_t i = 0; i + 1 < ds.size(); i++) CHECK(!(ds[i] == ds[i + 1])); // no duplicates
    }
}

TEST_CASE("D-word count identity") {
    for (int r = 1; r <= 3; r++)
        for (int t = 1; t <= 3; t++) {
            long total = 0;
            for (int f = 0; f <= std::min(r, t); f++) {
                long nf = (long)enumerate_dwords(r, t, f).size();
                total += nf * nf * factorial(r - f) * factorial(t - f);
            }
            CHECK(total == factorial(r + t));
        }
}

TEST_CASE("factorize then recompose is the identity") {
    for (auto [r, t] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}}) {
        for (auto& d : enumerate_diagrams(r, t)) {
            auto f = factorize(d);
            CHECK(recompose(r, t, f) == d);
        }
    }
}

TEST_CASE("composition loop counting") {
    auto e1 = diagram_e1(1, 1);
    auto res = compose(e1, e1);
    CHECK(res.loops == 1);
    CHECK(res.diagram == e1);
    auto id = WalledDiagram::identity(2, 2);
    CHECK(compose(id, id).loops == 0);
}

TEST_CASE("generator words replay to the diagram") {
    for (auto [r, t] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}}) {
        FiniteAlgebra alg(r, t);
        for (auto& d : enumerate_diagrams(r, t)) {
            BCElement got = alg.element_of_word(generator_word(d));
            REQUIRE(got.terms.size() == 1);
            auto& [m, c] = *got.terms.begin();
            CHECK(m.alpha == 0u);
            CHECK(m.beta == 0u);
            CHECK(m.diag == d);
            CHECK(c == Scalar(1));
        }
    }
}

TEST_CASE("spec word example for e_2 in (2,2)") {
    GenWord w = word_of_e(2);
    REQUIRE(w.size() == 5);
    CHECK(w[0].kind == Gen::SB);
    CHECK(w[1].kind == Gen::S);
    CHECK(w[2].kind == Gen::E1);
    CHECK(w[3].kind == Gen::S);
    CHECK(w[4].kind == Gen::SB);
}

TEST_CASE("diagram text round trip") {
    for (auto [r, t] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 2}}) {
        for (auto& d : enumerate_diagrams(r, t)) CHECK(parse_diagram(d.str(), r, t) == d);
    }
}

TEST_CASE("invalid matchings are rejected") {
    WalledDiagram d = WalledDiagram::identity(2, 2);
    d.match[0] = 1; // top_u(0) - top_u(1): does not cross the wall
    d.match[1] = 0;
    d.match[4] = 5;
    d.match[5] = 4;
    CHECK_THROWS_AS(d.validate(), ShapeError);
}
