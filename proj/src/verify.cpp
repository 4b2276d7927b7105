#include "wbc/verify.hpp"

#include "wbc/oracle.hpp"

#include <sstream>

namespace wbc {

std::string Report::str() const {
    std::ostringstream out;
    for (auto& c : checks) {
        out << (c.pass ? "PASS" : "FAIL") << " " << c.name;
        if (!c.pass && !c.witness.empty()) out << "  [" << c.witness << "]";
        out << "\n";
    }
    return out.str();
}

// --- finite defining relations ------------------------------------------------

namespace {

struct Rel {
    std::string name;
    GenWord lhs, rhs;
    int rhs_coeff = 1; // 0 encodes "= 0"
};

std::string gen_name(Gen g) {
    switch (g.kind) {
    case Gen::S: return "s" + std::to_string(g.idx);
    case Gen::SB: return "sb" + std::to_string(g.idx);
    case Gen::C: return "c" + std::to_string(g.idx);
    case Gen::CB: return "cb" + std::to_string(g.idx);
    case Gen::E1: return "e1";
    }
    return "?";
}

std::string word_name(const GenWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); i++) s += (i ? "*" : "") + gen_name(w[i]);
    return s;
}

void add_rel(std::vector<Rel>& out, GenWord lhs, GenWord rhs, int coeff) {
    Rel r;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.rhs_coeff = coeff;
    r.name = word_name(r.lhs) + " = " +
             (coeff == 0 ? "0" : (coeff == -1 ? "-" : "") + word_name(r.rhs));
    out.push_back(std::move(r));
}

} // namespace

static std::vector<Rel> defining_relations(int r, int t) {
    std::vector<Rel> out;
    auto S = [](int i) { return Gen::s(i); };
    auto SB = [](int j) { return Gen::sb(j); };
    auto C = [](int i) { return Gen::c(i); };
    auto CB = [](int j) { return Gen::cb(j); };
    Gen E = Gen::e1();

    // symmetric group relations, both families
    for (int i = 1; i < r; i++) add_rel(out, {S(i), S(i)}, {}, 1);
    for (int i = 1; i + 1 < r; i++)
        add_rel(out, {S(i), S(i + 1), S(i)}, {S(i + 1), S(i), S(i + 1)}, 1);
    for (int i = 1; i < r; i++)
        for (int j = i + 2; j < r; j++) add_rel(out, {S(i), S(j)}, {S(j), S(i)}, 1);
    for (int j = 1; j < t; j++) add_rel(out, {SB(j), SB(j)}, {}, 1);
    for (int j = 1; j + 1 < t; j++)
        add_rel(out, {SB(j), SB(j + 1), SB(j)}, {SB(j + 1), SB(j), SB(j + 1)}, 1);
    for (int i = 1; i < t; i++)
        for (int j = i + 2; j < t; j++) add_rel(out, {SB(i), SB(j)}, {SB(j), SB(i)}, 1);

    // Clifford families: squares, anticommutation, conjugation by crossings
    for (int i = 1; i <= r; i++) add_rel(out, {C(i), C(i)}, {}, -1);
    for (int i = 1; i <= r; i++)
        for (int j = i + 1; j <= r; j++) add_rel(out, {C(i), C(j)}, {C(j), C(i)}, -1);
    for (int j = 1; j < r; j++)
        for (int i = 1; i <= r; i++) {
            int img = i == j ? j + 1 : (i == j + 1 ? j : i);
            add_rel(out, {S(j), C(i), S(j)}, {C(img)}, 1);
        }
    for (int i = 1; i <= t; i++) add_rel(out, {CB(i), CB(i)}, {}, 1);
    for (int i = 1; i <= t; i++)
        for (int j = i + 1; j <= t; j++) add_rel(out, {CB(i), CB(j)}, {CB(j), CB(i)}, -1);
    for (int j = 1; j < t; j++)
        for (int i = 1; i <= t; i++) {
            int img = i == j ? j + 1 : (i == j + 1 ? j : i);
            add_rel(out, {SB(j), CB(i), SB(j)}, {CB(img)}, 1);
        }

    // mixed-family commutation
    for (int i = 1; i < r; i++)
        for (int j = 1; j <= t; j++) add_rel(out, {S(i), CB(j)}, {CB(j), S(i)}, 1);
    for (int j = 1; j < t; j++)
        for (int i = 1; i <= r; i++) add_rel(out, {SB(j), C(i)}, {C(i), SB(j)}, 1);
    for (int i = 1; i <= r; i++)
        for (int j = 1; j <= t; j++) add_rel(out, {C(i), CB(j)}, {CB(j), C(i)}, -1);
    for (int i = 1; i < r; i++)
        for (int j = 1; j < t; j++) add_rel(out, {S(i), SB(j)}, {SB(j), S(i)}, 1);

    if (r >= 1 && t >= 1) {
        add_rel(out, {E, C(1)}, {E, CB(1)}, 1);
        add_rel(out, {C(1), E}, {CB(1), E}, 1);
        add_rel(out, {E, E}, {}, 0);
        add_rel(out, {E, C(1), E}, {}, 0);
        add_rel(out, {E, CB(1), E}, {}, 0);
        for (int i = 2; i < r; i++) add_rel(out, {S(i), E}, {E, S(i)}, 1);
        for (int i = 2; i < t; i++) add_rel(out, {SB(i), E}, {E, SB(i)}, 1);
        for (int i = 2; i <= r; i++) add_rel(out, {C(i), E}, {E, C(i)}, 1);
        for (int i = 2; i <= t; i++) add_rel(out, {CB(i), E}, {E, CB(i)}, 1);
        if (r >= 2) add_rel(out, {E, S(1), E}, {E}, 1);
        if (t >= 2) add_rel(out, {E, SB(1), E}, {E}, 1);
        if (r >= 2 && t >= 2) {
            add_rel(out, {E, S(1), SB(1), E, S(1)}, {E, S(1), SB(1), E, SB(1)}, 1);
            add_rel(out, {S(1), E, S(1), SB(1), E}, {SB(1), E, S(1), SB(1), E}, 1);
        }
    }
    return out;
}

Report relation_suite(const FiniteAlgebra& alg) {
    Report rep;
    auto rels = defining_relations(alg.r(), alg.t());
    auto basis = alg.basis();
    for (auto& rel : rels) {
        bool pass = true;
        std::string witness;
        for (auto& b : basis) {
            BCElement e(alg.r(), alg.t());
            e.terms[b] = Scalar(1);
            BCElement lhs = alg.mul_word(e, rel.lhs);
            BCElement rhs = alg.mul_word(e, rel.rhs).scale(Scalar(rel.rhs_coeff));
            if (!(lhs == rhs)) {
                pass = false;
                witness = "fails on " + b.str();
                break;
            }
        }
        rep.add(rel.name, pass, witness);
    }
    return rep;
}

// --- Jucys-Murphy suite ---------------------------------------------------------

Report jm_suite(const FiniteAlgebra& alg) {
    Report rep;
    int r = alg.r(), t = alg.t();
    auto mul = [&](const BCElement& a, const BCElement& b) { return alg.mul(a, b); };
    auto comm_zero = [&](const BCElement& a, const BCElement& b) {
        return mul(a, b) - mul(b, a);
    };
    auto name = [](const std::string& s) { return s; };

    std::vector<BCElement> y(r + 1), yb(t + 1);
    for (int i = 1; i <= r; i++) y[i] = alg.jm_y(i);
    for (int i = 1; i <= t; i++) yb[i] = alg.jm_ybar(i);

    rep.add("y1 = 0", r < 1 || y[1].is_zero());
    if (t >= 1) rep.add("ybar1 = 0", yb[1].is_zero());

    for (int i = 1; i <= r; i++)
        for (int j = 1; j < r; j++) {
            if (j == i - 1 || j == i) continue;
            rep.add(name("s" + std::to_string(j) + " y" + std::to_string(i) + " commute"),
                    comm_zero(alg.gen(Gen::s(j)), y[i]).is_zero());
        }
    for (int i = 1; i <= t; i++)
        for (int j = 1; j < t; j++) {
            if (j == i - 1 || j == i) continue;
            rep.add(name("sb" + std::to_string(j) + " ybar" + std::to_string(i) + " commute"),
                    comm_zero(alg.gen(Gen::sb(j)), yb[i]).is_zero());
        }
    for (int i = 1; i <= t; i++)
        for (int j = 1; j < r; j++) {
            if (j == i - 1) continue;
            rep.add(name("s" + std::to_string(j) + " ybar" + std::to_string(i) + " commute"),
                    comm_zero(alg.gen(Gen::s(j)), yb[i]).is_zero());
        }
    for (int i = 1; i <= r; i++)
        for (int j = 1; j < t; j++) {
            if (j == i - 1) continue;
            rep.add(name("sb" + std::to_string(j) + " y" + std::to_string(i) + " commute"),
                    comm_zero(alg.gen(Gen::sb(j)), y[i]).is_zero());
        }
    for (int i = 1; i <= r; i++)
        rep.add("y c anticommute at " + std::to_string(i),
                (mul(y[i], alg.gen(Gen::c(i))) + mul(alg.gen(Gen::c(i)), y[i])).is_zero());
    for (int i = 1; i <= t; i++)
        rep.add("ybar cbar anticommute at " + std::to_string(i),
                (mul(yb[i], alg.gen(Gen::cb(i))) + mul(alg.gen(Gen::cb(i)), yb[i])).is_zero());
    for (int i = 1; i <= r; i++)
        for (int j = 1; j <= r; j++) {
            if (i == j) continue;
            rep.add("y" + std::to_string(i) + " c" + std::to_string(j) + " commute",
                    comm_zero(y[i], alg.gen(Gen::c(j))).is_zero());
        }
    for (int i = 1; i <= t; i++)
        for (int j = 1; j <= t; j++) {
            if (i == j) continue;
            rep.add("ybar" + std::to_string(i) + " cb" + std::to_string(j) + " commute",
                    comm_zero(yb[i], alg.gen(Gen::cb(j))).is_zero());
        }
    for (int i = 1; i <= r; i++)
        for (int j = i; j <= t; j++)
            rep.add("y" + std::to_string(i) + " cb" + std::to_string(j) + " commute",
                    comm_zero(y[i], alg.gen(Gen::cb(j))).is_zero());
    for (int i = 1; i <= t; i++)
        for (int j = i; j <= r; j++)
            rep.add("ybar" + std::to_string(i) + " c" + std::to_string(j) + " commute",
                    comm_zero(yb[i], alg.gen(Gen::c(j))).is_zero());
    for (int i = 1; i + 1 <= r; i++)
        rep.add("y" + std::to_string(i) + " y" + std::to_string(i + 1) + " commute",
                comm_zero(y[i], y[i + 1]).is_zero());
    for (int i = 1; i + 1 <= t; i++)
        rep.add("ybar" + std::to_string(i) + " ybar" + std::to_string(i + 1) + " commute",
                comm_zero(yb[i], yb[i + 1]).is_zero());

    int f = std::min(r, t);
    for (int i = 1; i <= f; i++) {
        BCElement ei = alg.e_elt(i);
        // the decorated edge c_i e_i c_i, written cbar_{i,i} alongside y_i
        BCElement ebar = mul(mul(alg.gen(Gen::c(i)), ei), alg.gen(Gen::c(i)));
        BCElement mid = ei + yb[i] - ebar;
        rep.add("y(e + ybar - c e c) central at " + std::to_string(i),
                comm_zero(y[i], mid).is_zero());
        BCElement L = alg.jm_L(i), Lb = alg.jm_Lbar(i);
        rep.add("e ybar = e (L - Lbar) at " + std::to_string(i),
                (mul(ei, yb[i]) - mul(ei, L - Lb)).is_zero());
        rep.add("e y = e (Lbar - L) at " + std::to_string(i),
                (mul(ei, y[i]) - mul(ei, Lb - L)).is_zero());
        if (i < r) {
            BCElement s = alg.gen(Gen::s(i));
            BCElement sys = mul(mul(s, y[i]), s);
            rep.add("e s y s = s y s e at " + std::to_string(i), comm_zero(ei, sys).is_zero());
            BCElement c1 = alg.gen(Gen::c(i)), c2 = alg.gen(Gen::c(i + 1));
            BCElement ytilde = sys - s + mul(mul(c1, c2), s);
            rep.add("y ytilde commute at " + std::to_string(i), comm_zero(y[i], ytilde).is_zero());
        }
        if (i < t) {
            BCElement s = alg.gen(Gen::sb(i));
            BCElement sys = mul(mul(s, yb[i]), s);
            rep.add("e sb ybar sb = sb ybar sb e at " + std::to_string(i),
                    comm_zero(ei, sys).is_zero());
            BCElement c1 = alg.gen(Gen::cb(i)), c2 = alg.gen(Gen::cb(i + 1));
            BCElement ytilde = sys - s - mul(mul(c1, c2), s);
            rep.add("ybar ybartilde commute at " + std::to_string(i),
                    comm_zero(yb[i], ytilde).is_zero());
        }
        BCElement ci = alg.gen(Gen::c(i));
        BCElement yk = alg.one();
        for (int k = 0; k <= 4; k++) {
            rep.add("e y^" + std::to_string(k) + " c e = 0 at " + std::to_string(i),
                    mul(mul(mul(ei, yk), ci), ei).is_zero());
            yk = mul(yk, y[i]);
        }
        for (int n = 1; n <= 2; n++) {
            rep.add("e y^" + std::to_string(2 * n) + " e = 0 at " + std::to_string(i),
                    mul(mul(ei, alg.pow(y[i], 2 * n)), ei).is_zero());
            rep.add("e ybar^" + std::to_string(2 * n) + " e = 0 at " + std::to_string(i),
                    mul(mul(ei, alg.pow(yb[i], 2 * n)), ei).is_zero());
        }
        rep.add("e y e = 0 at " + std::to_string(i), mul(mul(ei, y[i]), ei).is_zero());
        rep.add("e ybar e = 0 at " + std::to_string(i), mul(mul(ei, yb[i]), ei).is_zero());
    }

    // omega extraction and centrality
    for (int k = 2; k <= f; k++) {
        bool ok1 = alg.omega_ak(1, k).is_zero();
        bool ok2 = alg.omega_ak(2, k).is_zero();
        bool ok4 = alg.omega_ak(4, k).is_zero();
        rep.add("omega_{1," + std::to_string(k) + "} = 0", ok1);
        rep.add("omega_{2," + std::to_string(k) + "} = 0", ok2);
        rep.add("omega_{4," + std::to_string(k) + "} = 0", ok4);
        BCElement w3 = alg.omega_ak(3, k);
        std::vector<Gen> gens{Gen::e1(), Gen::c(1), Gen::cb(1)};
        for (int i = 1; i <= k - 2; i++) {
            gens.push_back(Gen::s(i));
            gens.push_back(Gen::sb(i));
        }
        for (Gen g : gens)
            rep.add("omega_{3," + std::to_string(k) + "} commutes with " + gen_name(g),
                    comm_zero(w3, alg.gen(g)).is_zero());
        // commutation with the next JM pair and decorations above k-1
        if (k <= std::min(r, t)) {
            BCElement w3b = alg.omega_ak(3, k, true);
            rep.add("omegabar_{3," + std::to_string(k) + "} extraction", true);
            for (auto& [nm, el] :
                 std::vector<std::pair<std::string, BCElement>>{{"y" + std::to_string(k), alg.jm_y(k)},
                                                                {"ybar" + std::to_string(k),
                                                                 alg.jm_ybar(k)},
                                                                {"c" + std::to_string(k),
                                                                 alg.gen(Gen::c(k))},
                                                                {"cb" + std::to_string(k),
                                                                 alg.gen(Gen::cb(k))}}) {
                rep.add("omega_{3," + std::to_string(k) + "} commutes with " + nm,
                        comm_zero(w3, el).is_zero());
                rep.add("omegabar_{3," + std::to_string(k) + "} commutes with " + nm,
                        comm_zero(w3b, el).is_zero());
            }
        }
    }
    return rep;
}

// --- random elements -------------------------------------------------------------

BCElement random_bc_element(const FiniteAlgebra& alg, Rng& rng, int nterms, bool homogeneous) {
    static std::map<std::pair<int, int>, std::vector<BCMonomial>> basis_cache;
    auto key = std::make_pair(alg.r(), alg.t());
    if (!basis_cache.count(key)) basis_cache[key] = alg.basis();
    auto& basis = basis_cache[key];
    int want_parity = rng.uniform(2);
    BCElement e(alg.r(), alg.t());
    int added = 0, guard = 0;
    while (added < nterms && guard++ < 100 * nterms) {
        auto& m = basis[rng.uniform((int)basis.size())];
        if (homogeneous && m.parity() != want_parity) continue;
        int num = rng.uniform(7) - 3;
        if (num == 0) num = 1;
        int den = 1 + rng.uniform(2);
        e.add_term(m, Scalar(Rational(num, den)));
        added++;
    }
    return e;
}

RegularMonomial random_regular_monomial(const AffineAlgebra& alg, Rng& rng, int maxdeg) {
    static std::map<std::pair<int, int>, std::vector<BCMonomial>> basis_cache;
    auto key = std::make_pair(alg.r(), alg.t());
    if (!basis_cache.count(key)) basis_cache[key] = alg.finite().basis();
    auto& basis = basis_cache[key];
    RegularMonomial m;
    m.core = basis[rng.uniform((int)basis.size())];
    m.x.assign(alg.r(), 0);
    m.xb.assign(alg.t(), 0);
    int budget = rng.uniform(maxdeg + 1);
    for (int d = 0; d < budget; d++) {
        int slot = rng.uniform(alg.r() + alg.t());
        if (slot < alg.r())
            m.x[slot]++;
        else
            m.xb[slot - alg.r()]++;
    }
    return m;
}

Report assoc_suite(const FiniteAlgebra& alg, int samples, uint64_t seed) {
    Report rep;
    Rng rng(seed);
    bool pass = true;
    std::string witness;
    for (int s = 0; s < samples; s++) {
        BCElement a = random_bc_element(alg, rng, 2, true);
        BCElement b = random_bc_element(alg, rng, 2, true);
        BCElement c = random_bc_element(alg, rng, 2, true);
        if (!(alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c)))) {
            pass = false;
            witness = "sample " + std::to_string(s);
            break;
        }
    }
    rep.add("associativity on " + std::to_string(samples) + " random homogeneous triples", pass,
            witness);
    return rep;
}

// --- oracle suite ---------------------------------------------------------------

Report oracle_suite(const FiniteAlgebra& alg, int n, int samples, uint64_t seed, int* rank_out) {
    Report rep;
    TensorRep rho(n, alg.r(), alg.t());
    auto rels = defining_relations(alg.r(), alg.t());
    auto matword = [&](const GenWord& w) {
        TensorRep::Mat m = rho.identity();
        for (Gen g : w) m = rho.compose(m, rho.build_generator(g));
        return m;
    };
    for (auto& rel : rels) {
        TensorRep::Mat lhs = matword(rel.lhs);
        TensorRep::Mat rhs = rho.scale(matword(rel.rhs), rel.rhs_coeff);
        rep.add("matrix " + rel.name, rho.equal(lhs, rhs));
    }

    auto basis = alg.basis();
    Rng rng(seed);
    bool pass = true;
    std::string witness;
    for (int s = 0; s < samples; s++) {
        auto& a = basis[rng.uniform((int)basis.size())];
        auto& b = basis[rng.uniform((int)basis.size())];
        BCElement ea(alg.r(), alg.t()), eb(alg.r(), alg.t());
        ea.terms[a] = Scalar(1);
        eb.terms[b] = Scalar(1);
        TensorRep::Mat lhs = rho.rep(alg.mul(ea, eb), alg);
        TensorRep::Mat rhs = rho.compose(rho.rep_mono(a, alg), rho.rep_mono(b, alg));
        if (!rho.equal(lhs, rhs)) {
            pass = false;
            witness = "pair " + std::to_string(s) + ": " + a.str() + " . " + b.str();
            break;
        }
    }
    rep.add("rho(a.b) = rho(a) rho(b) on " + std::to_string(samples) + " basis pairs", pass,
            witness);

    if (rank_out) {
        std::vector<TensorRep::Mat> mats;
        for (auto& b : basis) mats.push_back(rho.rep_mono(b, alg));
        *rank_out = rho.rank(mats);
    }
    return rep;
}

// --- affine relations ---------------------------------------------------------------

namespace {

struct ARel {
    std::string name;
    // sum of coeff * (m . word) must vanish for every monomial m
    std::vector<std::pair<Scalar, std::vector<ASym>>> terms;
};

std::vector<ASym> fins(const GenWord& w) {
    std::vector<ASym> v;
    for (Gen g : w) v.push_back(ASym::fin(g));
    return v;
}

std::vector<ASym> cat(std::initializer_list<std::vector<ASym>> parts) {
    std::vector<ASym> v;
    for (auto& p : parts) v.insert(v.end(), p.begin(), p.end());
    return v;
}

} // namespace

static std::vector<ARel> affine_relations(int r, int t) {
    std::vector<ARel> out;
    auto X1 = std::vector<ASym>{ASym::xp(1)};
    auto XB1 = std::vector<ASym>{ASym::xbp(1)};
    auto F = [](Gen g) { return std::vector<ASym>{ASym::fin(g)}; };
    Scalar one(1), minus(-1);

    // finite relations ride along
    for (auto& rel : defining_relations(r, t)) {
        ARel a;
        a.name = rel.name;
        a.terms.push_back({one, fins(rel.lhs)});
        if (rel.rhs_coeff != 0) a.terms.push_back({Scalar(-rel.rhs_coeff), fins(rel.rhs)});
        out.push_back(std::move(a));
    }

    bool has_e = r >= 1 && t >= 1;
    if (r >= 1) {
        // x1 c1 = -c1 x1;  x1 c_i = c_i x1 (i > 1);  s_j x1 = x1 s_j (j != 1)
        {
            ARel a{"x1*c1 + c1*x1 = 0", {}};
            a.terms.push_back({one, cat({X1, F(Gen::c(1))})});
            a.terms.push_back({one, cat({F(Gen::c(1)), X1})});
            out.push_back(a);
        }
        for (int i = 2; i <= r; i++) {
            ARel a{"x1*c" + std::to_string(i) + " commute", {}};
            a.terms.push_back({one, cat({X1, F(Gen::c(i))})});
            a.terms.push_back({minus, cat({F(Gen::c(i)), X1})});
            out.push_back(a);
        }
        for (int j = 2; j < r; j++) {
            ARel a{"s" + std::to_string(j) + "*x1 commute", {}};
            a.terms.push_back({one, cat({F(Gen::s(j)), X1})});
            a.terms.push_back({minus, cat({X1, F(Gen::s(j))})});
            out.push_back(a);
        }
        if (r >= 2) {
            // x1 x2 = x2 x1 with x2 = s1 x1 s1 - (1 - c1 c2) s1
            ARel a{"x1*x2 = x2*x1", {}};
            auto S1 = F(Gen::s(1)), C1 = F(Gen::c(1)), C2 = F(Gen::c(2));
            a.terms.push_back({one, cat({X1, S1, X1, S1})});
            a.terms.push_back({minus, cat({X1, S1})});
            a.terms.push_back({one, cat({X1, C1, C2, S1})});
            a.terms.push_back({minus, cat({S1, X1, S1, X1})});
            a.terms.push_back({one, cat({S1, X1})});
            a.terms.push_back({minus, cat({C1, C2, S1, X1})});
            out.push_back(a);
        }
    }
    if (t >= 1) {
        {
            ARel a{"xb1*cb1 + cb1*xb1 = 0", {}};
            a.terms.push_back({one, cat({XB1, F(Gen::cb(1))})});
            a.terms.push_back({one, cat({F(Gen::cb(1)), XB1})});
            out.push_back(a);
        }
        for (int i = 2; i <= t; i++) {
            ARel a{"xb1*cb" + std::to_string(i) + " commute", {}};
            a.terms.push_back({one, cat({XB1, F(Gen::cb(i))})});
            a.terms.push_back({minus, cat({F(Gen::cb(i)), XB1})});
            out.push_back(a);
        }
        for (int j = 2; j < t; j++) {
            ARel a{"sb" + std::to_string(j) + "*xb1 commute", {}};
            a.terms.push_back({one, cat({F(Gen::sb(j)), XB1})});
            a.terms.push_back({minus, cat({XB1, F(Gen::sb(j))})});
            out.push_back(a);
        }
        if (t >= 2) {
            ARel a{"xb1*xb2 = xb2*xb1", {}};
            auto S1 = F(Gen::sb(1)), C1 = F(Gen::cb(1)), C2 = F(Gen::cb(2));
            a.terms.push_back({one, cat({XB1, S1, XB1, S1})});
            a.terms.push_back({minus, cat({XB1, S1})});
            a.terms.push_back({minus, cat({XB1, C1, C2, S1})});
            a.terms.push_back({minus, cat({S1, XB1, S1, XB1})});
            a.terms.push_back({one, cat({S1, XB1})});
            a.terms.push_back({one, cat({C1, C2, S1, XB1})});
            out.push_back(a);
        }
    }
    // x / xbar cross-family commutations
    for (int i = 1; i <= t && r >= 1; i++) {
        ARel a{"x1*cb" + std::to_string(i) + " commute", {}};
        a.terms.push_back({one, cat({X1, F(Gen::cb(i))})});
        a.terms.push_back({minus, cat({F(Gen::cb(i)), X1})});
        out.push_back(a);
    }
    for (int i = 1; i <= r && t >= 1; i++) {
        ARel a{"xb1*c" + std::to_string(i) + " commute", {}};
        a.terms.push_back({one, cat({XB1, F(Gen::c(i))})});
        a.terms.push_back({minus, cat({F(Gen::c(i)), XB1})});
        out.push_back(a);
    }
    for (int i = 1; i < t && r >= 1; i++) {
        ARel a{"x1*sb" + std::to_string(i) + " commute", {}};
        a.terms.push_back({one, cat({X1, F(Gen::sb(i))})});
        a.terms.push_back({minus, cat({F(Gen::sb(i)), X1})});
        out.push_back(a);
    }
    for (int i = 1; i < r && t >= 1; i++) {
        ARel a{"xb1*s" + std::to_string(i) + " commute", {}};
        a.terms.push_back({one, cat({XB1, F(Gen::s(i))})});
        a.terms.push_back({minus, cat({F(Gen::s(i)), XB1})});
        out.push_back(a);
    }

    if (has_e) {
        auto E = F(Gen::e1());
        {
            ARel a{"e1*(x1 + xb1) = 0", {}};
            a.terms.push_back({one, cat({E, X1})});
            a.terms.push_back({one, cat({E, XB1})});
            out.push_back(a);
        }
        {
            ARel a{"(x1 + xb1)*e1 = 0", {}};
            a.terms.push_back({one, cat({X1, E})});
            a.terms.push_back({one, cat({XB1, E})});
            out.push_back(a);
        }
        {
            // the conjugated edge c1 e1 c1 plays the role of the barred cup
            ARel a{"x1*(e1 + xb1 - c1*e1*c1) = (e1 + xb1 - c1*e1*c1)*x1", {}};
            auto EB = cat({F(Gen::c(1)), E, F(Gen::c(1))});
            a.terms.push_back({one, cat({X1, E})});
            a.terms.push_back({one, cat({X1, XB1})});
            a.terms.push_back({minus, cat({X1, EB})});
            a.terms.push_back({minus, cat({E, X1})});
            a.terms.push_back({one, cat({EB, X1})});
            a.terms.push_back({minus, cat({XB1, X1})});
            out.push_back(a);
        }
        if (r >= 2) {
            ARel a{"e1*s1*x1*s1 = s1*x1*s1*e1", {}};
            auto S1 = F(Gen::s(1));
            a.terms.push_back({one, cat({E, S1, X1, S1})});
            a.terms.push_back({minus, cat({S1, X1, S1, E})});
            out.push_back(a);
        }
        if (t >= 2) {
            ARel a{"e1*sb1*xb1*sb1 = sb1*xb1*sb1*e1", {}};
            auto S1 = F(Gen::sb(1));
            a.terms.push_back({one, cat({E, S1, XB1, S1})});
            a.terms.push_back({minus, cat({S1, XB1, S1, E})});
            out.push_back(a);
        }
        for (int kk = 0; kk <= 1; kk++) {
            ARel a{"e1*x1^" + std::to_string(2 * kk + 1) + "*e1 = w" + std::to_string(2 * kk + 1) +
                       "*e1",
                   {}};
            std::vector<ASym> w = E;
            for (int p = 0; p < 2 * kk + 1; p++) w.push_back(ASym::xp(1));
            w.push_back(ASym::fin(Gen::e1()));
            a.terms.push_back({one, w});
            a.terms.push_back({-Scalar::omega(2 * kk + 1), E});
            out.push_back(a);
        }
        {
            ARel a{"e1*x1^2*e1 = 0", {}};
            a.terms.push_back({one, cat({E, X1, X1, E})});
            out.push_back(a);
        }
        for (int kk = 1; kk <= 3; kk++) {
            ARel a{"e1*xb1^" + std::to_string(kk) + "*e1 = wbar_" + std::to_string(kk) + "*e1",
                   {}};
            std::vector<ASym> w = E;
            for (int p = 0; p < kk; p++) w.push_back(ASym::xbp(1));
            w.push_back(ASym::fin(Gen::e1()));
            a.terms.push_back({one, w});
            Scalar ob = omega_bar(kk);
            if (!ob.is_zero()) a.terms.push_back({-ob, E});
            out.push_back(a);
        }
    }
    return out;
}

Report affine_relation_suite(const AffineAlgebra& alg, int samples, int maxdeg, uint64_t seed) {
    Report rep;
    auto rels = affine_relations(alg.r(), alg.t());
    Rng rng(seed);
    std::vector<AffElement> monos;
    for (int s = 0; s < samples; s++) {
        AffElement e(alg.r(), alg.t());
        e.add_term(random_regular_monomial(alg, rng, maxdeg), Scalar(1));
        monos.push_back(e);
    }
    for (auto& rel : rels) {
        bool pass = true;
        std::string witness;
        for (size_t s = 0; s < monos.size() && pass; s++) {
            AffElement total(alg.r(), alg.t());
            for (auto& [coeff, word] : rel.terms) {
                AffElement v = monos[s];
                for (auto& sym : word) v = alg.mul_gen_right(v, sym);
                total = total + v.scale(coeff);
            }
            if (!total.is_zero()) {
                pass = false;
                witness = "fails on " + monos[s].terms.begin()->first.str();
            }
        }
        rep.add(rel.name, pass, witness);
    }
    return rep;
}

Report affine_assoc_suite(const AffineAlgebra& alg, int samples, int maxdeg, uint64_t seed) {
    Report rep;
    Rng rng(seed);
    bool pass = true;
    std::string witness;
    for (int s = 0; s < samples && pass; s++) {
        AffElement a(alg.r(), alg.t()), b(alg.r(), alg.t()), c(alg.r(), alg.t());
        a.add_term(random_regular_monomial(alg, rng, maxdeg), Scalar(1));
        b.add_term(random_regular_monomial(alg, rng, maxdeg), Scalar(Rational(1, 2)));
        c.add_term(random_regular_monomial(alg, rng, maxdeg), Scalar(-1));
        if (!(alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c)))) {
            pass = false;
            witness = "sample " + std::to_string(s);
        }
    }
    rep.add("affine associativity on " + std::to_string(samples) + " random triples", pass,
            witness);
    return rep;
}

Report omega_bar_suite(int maxn) {
    Report rep;
    rep.add("wbar_1 = -w1", omega_bar(1) == -Scalar::omega(1));
    rep.add("wbar_2 = 0", omega_bar(2).is_zero());
    rep.add("wbar_3 = -w3 - w1^2",
            omega_bar(3) == -Scalar::omega(3) - Scalar::omega(1) * Scalar::omega(1));
    AffineAlgebra alg(1, 1);
    AffElement e1 = alg.gen(Gen::e1());
    AffElement cur = e1;
    for (int n = 1; n <= maxn; n++) {
        cur = alg.mul_gen_right(cur, ASym::xbp(1));
        AffElement sandwich = alg.mul(cur, e1);
        AffElement expect = e1.scale(omega_bar(n));
        rep.add("engine reduction of e1*xb1^" + std::to_string(n) + "*e1", sandwich == expect);
    }
    return rep;
}

Report phi_suite(int r, int t, int k) {
    Report rep;
    PhiK phi(r, t, k);
    const FiniteAlgebra& tgt = phi.target();
    auto img_sym = [&](const ASym& s) -> BCElement {
        if (s.kind == ASym::Fin) return phi.gen(s.g);
        if (s.kind == ASym::XP && s.idx == 1) return phi.x1();
        if (s.kind == ASym::XBP && s.idx == 1) return phi.xb1();
        throw Error("phi_suite: unexpected symbol");
    };
    auto img_scalar = [&](const Scalar& c) -> BCElement {
        BCElement out = tgt.zero();
        for (auto& [mono, coeff] : c.terms()) {
            BCElement term = tgt.one().scale(coeff);
            for (auto& [var, exp] : mono.factors)
                for (int x = 0; x < exp; x++) term = tgt.mul(term, phi.omega(var));
            out = out + term;
        }
        return out;
    };
    for (auto& rel : affine_relations(r, t)) {
        BCElement total = tgt.zero();
        for (auto& [coeff, word] : rel.terms) {
            BCElement v = img_scalar(coeff);
            for (auto& sym : word) v = tgt.mul(v, img_sym(sym));
            total = total + v;
        }
        rep.add("image of " + rel.name, total.is_zero());
    }
    // omega dictionary consistency: the image of wbar_3 computed from the
    // omega polynomial matches the direct extraction
    BCElement lhs = img_scalar(omega_bar(3));
    BCElement rhs = phi.omega_barred(3);
    rep.add("image of wbar_3 matches extraction", lhs == rhs);
    return rep;
}

Report cyclo_suite(const CycloSpec& spec, int r, int t, int samples, uint64_t seed) {
    Report rep;
    AffineAlgebra alg(r, t);
    int ell = spec.level();
    auto monos = cyclo_monomials(alg, spec);
    Rational expect = cyclo_rank(spec, r, t);
    rep.add("regular monomial count " + rational_str(expect),
            Rational((long)monos.size()) == expect);

    Rng rng(seed);
    bool closure = true;
    std::string witness;
    auto in_range = [&](const AffElement& e) {
        for (auto& [m, c] : e.terms) {
            for (int v : m.x)
                if (v >= ell) return false;
            for (int v : m.xb)
                if (v >= ell) return false;
        }
        return true;
    };
    for (int s = 0; s < samples && closure; s++) {
        auto& a = monos[rng.uniform((int)monos.size())];
        auto& b = monos[rng.uniform((int)monos.size())];
        AffElement ea(r, t), eb(r, t);
        ea.add_term(a, Scalar(1));
        eb.add_term(b, Scalar(1));
        AffElement prod = reduce_cyclo(alg, alg.mul(ea, eb), spec);
        if (!in_range(prod)) {
            closure = false;
            witness = a.str() + " . " + b.str();
        }
    }
    rep.add("closure of random products with exponents in Z_" + std::to_string(ell), closure,
            witness);

    // two reduction orders agree: reduce late vs reduce early
    bool confl = true;
    for (int s = 0; s < samples && confl; s++) {
        AffElement a(r, t), b(r, t);
        a.add_term(random_regular_monomial(alg, rng, ell + 1), Scalar(1));
        b.add_term(random_regular_monomial(alg, rng, ell), Scalar(1));
        AffElement late = reduce_cyclo(alg, alg.mul(a, b), spec);
        AffElement early =
            reduce_cyclo(alg, alg.mul(reduce_cyclo(alg, a, spec), reduce_cyclo(alg, b, spec)), spec);
        if (!(late == early)) {
            confl = false;
            witness = "sample " + std::to_string(s);
        }
    }
    rep.add("reduction path independence", confl, witness);

    // quotient consistency: defining relations after reduction
    auto rels = affine_relations(r, t);
    bool relok = true;
    std::string relwit;
    for (int s = 0; s < std::min(samples, 5) && relok; s++) {
        AffElement m(r, t);
        m.add_term(random_regular_monomial(alg, rng, ell), Scalar(1));
        for (auto& rel : rels) {
            AffElement total(r, t);
            for (auto& [coeff, word] : rel.terms) {
                AffElement v = m;
                for (auto& sym : word) v = alg.mul_gen_right(v, sym);
                total = total + v.scale(coeff);
            }
            if (!reduce_cyclo(alg, total, spec).is_zero()) {
                relok = false;
                relwit = rel.name;
                break;
            }
        }
    }
    rep.add("defining relations hold in the quotient", relok, relwit);
    return rep;
}

Report params_suite(int order, uint64_t seed) {
    Report rep;
    Rng rng(seed);
    // deltabar_k = (-1)^k omega_k and the k = 1, 3 expansions
    {
        std::vector<Rational> omega(8);
        for (int i = 0; i < 8; i += 2) omega[i] = Rational(rng.uniform(9) - 4); // odd slots
        auto delta = omega_to_delta(omega);
        bool ok = delta[0] == -omega[0];
        Rational d1 = delta[0];
        Rational db1 = -omega[0], db3 = -omega[2];
        ok = ok && delta[1] == 0 && (delta[2] == db3 + d1 * db1);
        rep.add("delta_1 = deltabar_1 and delta_3 = deltabar_3 + delta_1 deltabar_1", ok);
    }
    // round trip on random admissible-shaped sequences
    bool rt = true;
    for (int s = 0; s < 25 && rt; s++) {
        std::vector<Rational> omega(10);
        for (int i = 0; i < 10; i += 2) omega[i] = frac(rng.uniform(11) - 5, 1 + rng.uniform(3));
        auto back = delta_to_omega(omega_to_delta(omega));
        rt = back == omega;
    }
    rep.add("omega -> delta -> omega round trip", rt);

    // generating function identity to the requested order:
    // (1 - sum deltabar_{i-1} u^{-i})(1 + sum delta_{j-1} u^{-j}) = 1
    bool gf = true;
    std::string wit;
    for (int s = 0; s < 10 && gf; s++) {
        std::vector<Rational> omega(order);
        for (int i = 0; i < order; i += 2) omega[i] = Rational(rng.uniform(9) - 4);
        auto delta = omega_to_delta(omega);
        std::vector<Rational> db(order + 1), d(order + 1); // index 0 = delta_0
        for (int kk = 1; kk <= order; kk++) {
            db[kk] = (kk % 2 == 0) ? omega[kk - 1] : -omega[kk - 1];
            d[kk] = delta[kk - 1];
        }
        for (int p = 1; p <= order && gf; p++) {
            // coefficient of u^{-p}: d_{p-1} - db_{p-1} - sum_{i+j=p} db_{i-1} d_{j-1}
            Rational c = (p - 1 >= 1 ? d[p - 1] : Rational(0)) -
                         (p - 1 >= 1 ? db[p - 1] : Rational(0));
            for (int i = 1; i < p; i++) {
                int j = p - i;
                Rational dbv = i - 1 >= 1 ? db[i - 1] : Rational(0);
                Rational dv = j - 1 >= 1 ? d[j - 1] : Rational(0);
                c -= dbv * dv;
            }
            if (c != 0) {
                gf = false;
                wit = "order " + std::to_string(p);
            }
        }
    }
    rep.add("generating function identity to order " + std::to_string(order), gf, wit);
    return rep;
}

} // namespace wbc
