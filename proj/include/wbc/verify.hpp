#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wbc/affine.hpp"
#include "wbc/bcrt.hpp"
#include "wbc/cyclotomic.hpp"

namespace wbc {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness; // failure detail, empty on pass
};

struct Report {
    std::vector<CheckResult> checks;

    void add(const std::string& name, bool pass, const std::string& witness = "") {
        checks.push_back({name, pass, witness});
    }
    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::string str() const;
};

// Defining relations (2.1)-(2.3) and items (1)-(10) checked as right
// operators on every basis monomial.
Report relation_suite(const FiniteAlgebra& alg);

// Jucys-Murphy identities: the (1)-(13) list, omega extraction, centrality.
Report jm_suite(const FiniteAlgebra& alg);

Report assoc_suite(const FiniteAlgebra& alg, int samples, uint64_t seed);

Report oracle_suite(const FiniteAlgebra& alg, int n, int samples, uint64_t seed, int* rank_out);

// Affine defining relations as right operators on random regular monomials,
// plus associativity on random triples.
Report affine_relation_suite(const AffineAlgebra& alg, int samples, int maxdeg, uint64_t seed);
Report affine_assoc_suite(const AffineAlgebra& alg, int samples, int maxdeg, uint64_t seed);

// omega-bar recursion values against independent engine reduction.
Report omega_bar_suite(int maxn);

// Phi_k maps every affine defining relation to zero in BC_{r+k,t+k}.
Report phi_suite(int r, int t, int k);

Report cyclo_suite(const CycloSpec& spec, int r, int t, int samples, uint64_t seed);

Report params_suite(int order, uint64_t seed);

// Deterministic xorshift generator for all randomized suites.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int uniform(int n) { return (int)(next() % (uint64_t)n); }
};

BCElement random_bc_element(const FiniteAlgebra& alg, Rng& rng, int nterms, bool homogeneous);
RegularMonomial random_regular_monomial(const AffineAlgebra& alg, Rng& rng, int maxdeg);

} // namespace wbc
