// Command-line front end for the walled Brauer-Clifford engine: exact
// multiplication, basis listings, verification suites, cyclotomic parameter
// tools, and the tensor-space oracle.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "wbc/io.hpp"
#include "wbc/oracle.hpp"
#include "wbc/verify.hpp"

using namespace wbc;

namespace {

// exit codes: 2 parse error, 3 shape mismatch, 4 fuel exhausted,
// 5 non-admissible parameters, 1 any other failure
int classify(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return 2;
    if (dynamic_cast<const ShapeError*>(&e)) return 3;
    if (dynamic_cast<const FuelError*>(&e)) return 4;
    if (dynamic_cast<const AdmissibilityError*>(&e)) return 5;
    return 1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Options {
    std::string algebra = "finite";
    int r = 1, t = 1;
    std::string spec_path;
    int n = 0;
    long long seed = -1;
    long fuel = 2'000'000;
    int samples = 200;
};

CycloSpec load_spec(const Options& opt) {
    if (opt.spec_path.empty()) throw ParseError("--spec is required for cyclotomic operations");
    return CycloSpec::parse_file(slurp(opt.spec_path));
}

uint64_t require_seed(const Options& opt) {
    if (opt.seed < 0) throw ParseError("--seed is required for randomized suites");
    return (uint64_t)opt.seed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact walled Brauer-Clifford superalgebra engine"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--algebra", opt.algebra)->check(CLI::IsMember({"finite", "affine", "cyclotomic"}));
    app.add_option("-r", opt.r);
    app.add_option("-t", opt.t);
    app.add_option("--spec", opt.spec_path);
    app.add_option("--n", opt.n);
    app.add_option("--seed", opt.seed);
    app.add_option("--fuel", opt.fuel);
    app.add_option("--samples", opt.samples);

    std::string lhs_file, rhs_file, elt_file, suite, direction;
    std::vector<std::string> values;
    int count = 8, kphi = 1;

    auto* mul = app.add_subcommand("mul", "multiply two elements");
    mul->add_option("lhs", lhs_file)->required();
    mul->add_option("rhs", rhs_file)->required();

    auto* basis = app.add_subcommand("basis", "list the basis / regular monomials");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite)
        ->required()
        ->check(CLI::IsMember({"relations", "jm", "assoc", "oracle", "phi", "cyclo", "params"}));
    verify->add_option("--k", kphi);

    auto* admissible = app.add_subcommand("admissible", "derive the admissible parameter stream");
    admissible->add_option("--count", count);

    auto* reduce = app.add_subcommand("reduce", "reduce an element into the cyclotomic quotient");
    reduce->add_option("element", elt_file)->required();

    auto* convert = app.add_subcommand("convert-params", "convert between omega and delta values");
    convert->add_option("direction", direction)
        ->required()
        ->check(CLI::IsMember({"omega-to-delta", "delta-to-omega"}));
    convert->add_option("values", values);

    auto* orank = app.add_subcommand("oracle-rank", "rank of the tensor-space representation");

    // global flags may appear after the subcommand name
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*mul) {
            if (opt.algebra == "finite") {
                FiniteAlgebra alg(opt.r, opt.t);
                BCElement a = parse_bc_element(slurp(lhs_file), alg);
                BCElement b = parse_bc_element(slurp(rhs_file), alg);
                std::cout << alg.mul(a, b).str() << "\n";
            } else {
                AffineAlgebra alg(opt.r, opt.t, opt.fuel);
                AffElement a = parse_aff_element(slurp(lhs_file), alg);
                AffElement b = parse_aff_element(slurp(rhs_file), alg);
                AffElement prod = alg.mul(a, b);
                if (opt.algebra == "cyclotomic") prod = reduce_cyclo(alg, prod, load_spec(opt));
                std::cout << prod.str() << "\n";
            }
            return 0;
        }
        if (*basis) {
            if (opt.algebra == "finite") {
                FiniteAlgebra alg(opt.r, opt.t);
                auto b = alg.basis();
                for (auto& m : b) std::cout << m.str() << "\n";
                std::cout << b.size() << "\n";
            } else if (opt.algebra == "cyclotomic") {
                CycloSpec spec = load_spec(opt);
                auto rep = spec.torsion_report();
                if (!rep.admissible())
                    throw AdmissibilityError("non-admissible spec, b_" +
                                             std::to_string(rep.nonzero.front().ell) + " = " +
                                             rational_str(rep.nonzero.front().b));
                AffineAlgebra alg(opt.r, opt.t, opt.fuel);
                auto monos = cyclo_monomials(alg, spec);
                for (auto& m : monos) std::cout << m.str() << "\n";
                std::cout << monos.size() << "\n";
            } else {
                throw ParseError("basis requires --algebra finite or cyclotomic");
            }
            return 0;
        }
        if (*verify) {
            Report rep;
            if (suite == "relations") {
                rep = relation_suite(FiniteAlgebra(opt.r, opt.t));
            } else if (suite == "jm") {
                rep = jm_suite(FiniteAlgebra(opt.r, opt.t));
            } else if (suite == "assoc") {
                rep = assoc_suite(FiniteAlgebra(opt.r, opt.t), opt.samples, require_seed(opt));
            } else if (suite == "oracle") {
                int n = opt.n > 0 ? opt.n : opt.r + opt.t;
                int rank = 0;
                rep = oracle_suite(FiniteAlgebra(opt.r, opt.t), n, opt.samples, require_seed(opt),
                                   &rank);
                std::cout << "rank " << rank << " of " << (1 << (opt.r + opt.t)) << "*"
                          << "(r+t)!-dimensional algebra image\n";
            } else if (suite == "phi") {
                rep = phi_suite(opt.r, opt.t, kphi);
            } else if (suite == "cyclo") {
                rep = cyclo_suite(load_spec(opt), opt.r, opt.t, opt.samples, require_seed(opt));
            } else if (suite == "params") {
                rep = params_suite(10, 1);
            }
            std::cout << rep.str();
            return rep.all_pass() ? 0 : 1;
        }
        if (*admissible) {
            CycloSpec spec = load_spec(opt);
            std::cout << "level " << spec.level() << "\n";
            std::cout << "g coefficients (degree " << spec.level() << " down to 0):";
            for (int d = spec.level(); d >= 0; d--)
                std::cout << " " << rational_str(spec.g_coeffs()[d]);
            std::cout << "\n";
            auto stream = admissible_stream(spec, 1, count);
            std::cout << "omega stream:";
            for (auto& v : stream) std::cout << " " << rational_str(v);
            std::cout << "\n";
            auto rep = spec.torsion_report();
            if (rep.admissible()) {
                std::cout << "admissible\n";
                return 0;
            }
            for (auto& e : rep.nonzero)
                std::cout << "witness b_" << e.ell << " = " << rational_str(e.b) << "\n";
            return 5;
        }
        if (*reduce) {
            CycloSpec spec = load_spec(opt);
            AffineAlgebra alg(opt.r, opt.t, opt.fuel);
            AffElement a = parse_aff_element(slurp(elt_file), alg);
            std::cout << reduce_cyclo(alg, a, spec).str() << "\n";
            return 0;
        }
        if (*convert) {
            std::vector<Rational> in;
            for (auto& v : values) in.push_back(parse_rational(v));
            auto out = direction == "omega-to-delta" ? omega_to_delta(in) : delta_to_omega(in);
            for (size_t i = 0; i < out.size(); i++)
                std::cout << (i ? " " : "") << rational_str(out[i]);
            std::cout << "\n";
            return 0;
        }
        if (*orank) {
            int n = opt.n > 0 ? opt.n : opt.r + opt.t;
            FiniteAlgebra alg(opt.r, opt.t);
            TensorRep rho(n, opt.r, opt.t);
            std::vector<TensorRep::Mat> mats;
            for (auto& b : alg.basis()) mats.push_back(rho.rep_mono(b, alg));
            std::cout << "basis " << mats.size() << " rank " << rho.rank(mats) << " dim "
                      << rho.dim() << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify(e);
    }
    return 0;
}
