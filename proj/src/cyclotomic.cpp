#include "wbc/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wbc {

CycloSpec::CycloSpec(int k, std::vector<Rational> usq, std::map<int, Rational> seeds)
    : k_(k), usq_(std::move(usq)), seeds_(std::move(seeds)) {
    if (k < 0) throw Error("cyclotomic: k must be nonnegative");
    if (level() < 1) throw Error("cyclotomic: level must be positive");
    for (auto& u : usq_)
        if (u == 0) throw Error("cyclotomic: u^2 values must be nonzero");
    for (auto& [n, v] : seeds_) {
        if (n < 1) throw Error("cyclotomic: omega indices start at 1");
        if (n % 2 == 0 && v != 0)
            throw AdmissibilityError("cyclotomic: omega_{2n} must be zero (got w" +
                                     std::to_string(n) + " = " + rational_str(v) + ")");
    }
    // a_i with f = x^{k+2m} + sum a_i x^{k+2m-i}: only even i appear,
    // a_{2s} = (-1)^s e_s(usq).
    int m = (int)usq_.size();
    std::vector<Rational> esym(m + 1);
    esym[0] = 1;
    for (int i = 0; i < m; i++)
        for (int s = std::min(i + 1, m); s >= 1; s--) esym[s] += esym[s - 1] * usq_[i];
    a_.assign(2 * m, Rational(0));
    for (int s = 1; s <= m; s++) {
        Rational v = esym[s];
        if (s % 2 == 1) v = -v;
        a_[2 * s - 1] = v; // a_{2s}, stored 0-based
    }
    derive_g();
}

std::vector<Rational> CycloSpec::f_coeffs() const {
    int ell = level();
    std::vector<Rational> f(ell + 1); // f[d] = coefficient of x^d
    f[ell] = 1;
    for (int i = 1; i <= 2 * (int)usq_.size(); i++) f[ell - i] = a_[i - 1];
    return f;
}

void CycloSpec::extend_stream(int n) const {
    if (stream_.empty()) stream_.push_back(0); // omega_0 = 0
    int ell = level(), m2 = 2 * (int)usq_.size();
    while ((int)stream_.size() <= n) {
        int idx = (int)stream_.size();
        Rational v = 0;
        if (idx % 2 == 0) {
            v = 0;
        } else if (idx < ell) {
            auto it = seeds_.find(idx);
            if (it != seeds_.end()) v = it->second;
        } else {
            for (int i = 1; i <= m2; i++) {
                if (a_[i - 1] == 0) continue;
                v -= a_[i - 1] * stream_[idx - i];
            }
        }
        stream_.push_back(v);
    }
}

Rational CycloSpec::omega(int n) const {
    if (n < 0) throw Error("omega index must be nonnegative");
    extend_stream(n);
    return stream_[n];
}

std::map<int, Rational> CycloSpec::omega_assignment(int max_index) const {
    std::map<int, Rational> out;
    for (int n = 1; n <= max_index; n += 2) out[n] = omega(n);
    return out;
}

std::vector<Rational> CycloSpec::claimed_stream(int L) const {
    std::vector<Rational> vals(L + 1, Rational(0)); // vals[n] = omega_n
    int ell = level(), m2 = 2 * (int)usq_.size();
    for (int n = 1; n <= L; n++) {
        auto it = seeds_.find(n);
        if (it != seeds_.end()) {
            vals[n] = it->second;
        } else if (n % 2 == 1 && n >= ell) {
            for (int i = 1; i <= m2; i++)
                if (a_[i - 1] != 0 && n - i >= 0) vals[n] -= a_[i - 1] * vals[n - i];
        }
    }
    return std::vector<Rational>(vals.begin() + 1, vals.end());
}

TorsionReport CycloSpec::torsion_report(int L) const {
    int maxseed = 0;
    for (auto& [n, v] : seeds_) maxseed = std::max(maxseed, n);
    if (L <= 0) L = std::max(level(), maxseed) + 2 * (int)usq_.size() + 1;
    return torsion_check(*this, claimed_stream(L), L);
}

void CycloSpec::derive_g() {
    int ell = level();
    // A[m][j] with e_1 xbar^m = sum_j A[m][j] e_1 x^j, omega values plugged in
    auto A = xbar_to_x_coeffs(ell);
    std::map<int, Rational> assign = omega_assignment(2 * ell + 1);
    auto Aval = [&](int m, int j) -> Rational {
        if (j >= (int)A[m].size()) return 0;
        return A[m][j].specialize(assign).rational_value();
    };
    // invert: e_1 x^s = sum_m B[s][m] e_1 xbar^m, using
    // x^s = (-1)^s (xbar^s - sum_{j<s} A[s][j] x^j) by forward substitution
    std::vector<std::vector<Rational>> B(ell + 1, std::vector<Rational>(ell + 1, Rational(0)));
    for (int s = 0; s <= ell; s++) {
        B[s][s] = (s % 2 == 0) ? 1 : -1;
        for (int j = 0; j < s; j++) {
            Rational c = Aval(s, j);
            if (c == 0) continue;
            Rational fac = (s % 2 == 0) ? -c : c; // (-1)^s * (-A[s][j])
            for (int mth = 0; mth <= j; mth++) B[s][mth] += fac * B[j][mth];
        }
    }
    std::vector<Rational> f = f_coeffs();
    g_.assign(ell + 1, Rational(0));
    for (int s = 0; s <= ell; s++) {
        if (f[s] == 0) continue;
        for (int mth = 0; mth <= ell; mth++) g_[mth] += f[s] * B[s][mth];
    }
    if (k_ % 2 == 1)
        for (auto& c : g_) c = -c;
    if (g_[ell] != 1) throw Error("derive_g: derived g is not monic (internal error)");
    k1_ = ell;
    for (int mth = 0; mth <= ell; mth++)
        if (g_[mth] != 0) {
            k1_ = mth;
            break;
        }
    for (int mth = 0; mth <= ell; mth++)
        if (g_[mth] != 0 && (mth % 2) != (ell % 2))
            throw AdmissibilityError("derive_g: g violates the paired-root shape");
}

std::string CycloSpec::str() const {
    std::ostringstream out;
    out << "k=" << k_;
    for (auto& u : usq_) out << " u2=" << rational_str(u);
    for (auto& [n, v] : seeds_) out << " w" << n << "=" << rational_str(v);
    return out.str();
}

CycloSpec CycloSpec::parse_file(const std::string& text) {
    int k = 0;
    std::vector<Rational> usq;
    std::map<int, Rational> seeds;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.empty() || tok[0] == '#') {
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("cyclo spec: expected key=value, got " + tok);
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "k") {
            k = std::stoi(val);
        } else if (key == "u2") {
            usq.push_back(parse_rational(val));
        } else if (key.size() > 1 && key[0] == 'w') {
            seeds[std::stoi(key.substr(1))] = parse_rational(val);
        } else {
            throw ParseError("cyclo spec: unknown key " + key);
        }
    }
    return CycloSpec(k, usq, seeds);
}

std::vector<Rational> admissible_stream(const CycloSpec& spec, int from, int count) {
    std::vector<Rational> out;
    for (int n = from; n < from + count; n++) out.push_back(spec.omega(n));
    return out;
}

TorsionReport torsion_check(const CycloSpec& spec, const std::vector<Rational>& omegas, int L) {
    TorsionReport rep;
    auto value = [&](int n) -> Rational {
        if (n <= 0) return 0;
        if (n <= (int)omegas.size()) return omegas[n - 1];
        return spec.omega(n);
    };
    for (int n = 2; n <= L; n += 2)
        if (value(n) != 0) rep.nonzero.push_back({n, value(n)});
    int start = spec.level();
    const auto& a = spec.f_tail();
    for (int ell = start; ell <= L; ell++) {
        Rational b = value(ell);
        for (int i = 1; i <= (int)a.size(); i++) b += a[i - 1] * value(ell - i);
        if (b != 0) rep.nonzero.push_back({ell, b});
    }
    return rep;
}

Rational cyclo_rank(const CycloSpec& spec, int r, int t) {
    Rational v = 1;
    for (int i = 0; i < r + t; i++) v *= 2 * spec.level();
    for (int i = 2; i <= r + t; i++) v *= i;
    return v;
}

std::vector<RegularMonomial> cyclo_monomials(const AffineAlgebra& alg, const CycloSpec& spec) {
    int ell = spec.level();
    std::vector<RegularMonomial> out;
    auto basis = alg.finite().basis();
    std::vector<int> x(alg.r(), 0), xb(alg.t(), 0);
    auto advance = [&](std::vector<int>& v) -> bool {
        for (size_t i = 0; i < v.size(); i++) {
            if (++v[i] < ell) return true;
            v[i] = 0;
        }
        return false;
    };
    do {
        std::vector<int> xb2(alg.t(), 0);
        do {
            for (auto& b : basis) {
                RegularMonomial m;
                m.x = x;
                m.core = b;
                m.xb = xb2;
                out.push_back(m);
            }
        } while (advance(xb2));
    } while (advance(x));
    std::sort(out.begin(), out.end());
    return out;
}

AffElement reduce_cyclo(const AffineAlgebra& alg, const AffElement& a, const CycloSpec& spec) {
    TorsionReport rep = spec.torsion_report();
    if (!rep.admissible())
        throw AdmissibilityError("reduce_cyclo: non-admissible parameters, b_" +
                                 std::to_string(rep.nonzero.front().ell) + " = " +
                                 rational_str(rep.nonzero.front().b));
    int ell = spec.level();
    auto assign_for = [&](const Scalar& s) {
        std::map<int, Rational> assign;
        for (int v : s.variables()) assign[v] = spec.omega(v);
        return assign;
    };
    auto specialize_elt = [&](const AffElement& e) {
        AffElement out(e.r, e.t);
        for (auto& [m, c] : e.terms) out.add_term(m, c.specialize(assign_for(c)));
        return out;
    };

    AffElement cur = specialize_elt(a);
    const auto& atail = spec.f_tail();
    const auto& g = spec.g_coeffs();

    for (int guard = 0; guard < 64; guard++) {
        bool high = false;
        for (auto& [m, c] : cur.terms) {
            for (int e : m.x) high |= e >= ell;
            for (int e : m.xb) high |= e >= ell;
        }
        if (!high) return cur;

        PrimeElement P = alg.to_prime(cur);
        // substitute f(x'_i) = 0 and g(xbar'_j) = 0 until exponents drop
        bool changed = true;
        while (changed) {
            changed = false;
            PrimeElement next;
            for (auto& [m, c] : P.terms) {
                int hit_i = 0, hit_j = 0;
                for (int i = 1; i <= alg.r() && !hit_i; i++)
                    if ((int)std::count(m.xp.begin(), m.xp.end(), i) >= ell) hit_i = i;
                for (int j = 1; j <= alg.t() && !hit_j && !hit_i; j++)
                    if ((int)std::count(m.xbp.begin(), m.xbp.end(), j) >= ell) hit_j = j;
                if (!hit_i && !hit_j) {
                    next.add_term(m, c);
                    continue;
                }
                changed = true;
                if (hit_i) {
                    // (x'_i)^ell = - sum_s a_s (x'_i)^{ell-s}
                    for (int s = 1; s <= (int)atail.size(); s++) {
                        if (atail[s - 1] == 0) continue;
                        PrimeMonomial mm = m;
                        int removed = 0;
                        for (auto it = mm.xp.begin(); it != mm.xp.end() && removed < s;)
                            if (*it == hit_i) {
                                it = mm.xp.erase(it);
                                removed++;
                            } else {
                                ++it;
                            }
                        next.add_term(mm, c * Scalar(-atail[s - 1]));
                    }
                    if (ell > (int)atail.size()) {
                        // powers below x^k vanish only implicitly: f has no
                        // terms below x^k, so nothing else to add
                    }
                } else {
                    // (xbar'_j)^ell = - sum_s g_{ell-s} (xbar'_j)^{ell-s}
                    for (int s = 1; s <= ell; s++) {
                        Rational coeff = g[ell - s];
                        if (coeff == 0) continue;
                        PrimeMonomial mm = m;
                        int removed = 0;
                        for (auto it = mm.xbp.begin(); it != mm.xbp.end() && removed < s;)
                            if (*it == hit_j) {
                                it = mm.xbp.erase(it);
                                removed++;
                            } else {
                                ++it;
                            }
                        next.add_term(mm, c * Scalar(-coeff));
                    }
                }
            }
            P = std::move(next);
        }
        cur = specialize_elt(alg.to_regular(P));
    }
    throw FuelError("reduce_cyclo: reduction did not stabilize");
}

std::vector<Rational> omega_to_delta(const std::vector<Rational>& omega) {
    int n = (int)omega.size();
    std::vector<Rational> deltabar(n + 1), delta(n + 1);
    for (int kk = 1; kk <= n; kk++) {
        deltabar[kk] = (kk % 2 == 0) ? omega[kk - 1] : -omega[kk - 1];
        Rational v = deltabar[kk];
        for (int i = 1; 2 * i < kk; i++) v += delta[2 * i - 1] * deltabar[kk - 2 * i];
        delta[kk] = v;
    }
    return std::vector<Rational>(delta.begin() + 1, delta.end());
}

std::vector<Rational> delta_to_omega(const std::vector<Rational>& delta) {
    int n = (int)delta.size();
    std::vector<Rational> deltabar(n + 1), omega(n);
    std::vector<Rational> d(n + 1);
    for (int kk = 1; kk <= n; kk++) d[kk] = delta[kk - 1];
    for (int kk = 1; kk <= n; kk++) {
        Rational v = d[kk];
        for (int i = 1; 2 * i < kk; i++) v -= d[2 * i - 1] * deltabar[kk - 2 * i];
        deltabar[kk] = v;
        omega[kk - 1] = (kk % 2 == 0) ? deltabar[kk] : -deltabar[kk];
    }
    return omega;
}

} // namespace wbc
