// Python bindings for the main operations: string-based element I/O on top
// of the exact C++ engine.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wbc/io.hpp"
#include "wbc/oracle.hpp"
#include "wbc/verify.hpp"

namespace py = pybind11;
using namespace wbc;

namespace {

CycloSpec spec_from_text(const std::string& text) { return CycloSpec::parse_file(text); }

std::vector<std::string> to_strs(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    for (auto& x : v) out.push_back(rational_str(x));
    return out;
}

std::vector<Rational> from_strs(const std::vector<std::string>& v) {
    std::vector<Rational> out;
    for (auto& s : v) out.push_back(parse_rational(s));
    return out;
}

py::list report_to_list(const Report& rep) {
    py::list out;
    for (auto& c : rep.checks) out.append(py::make_tuple(c.name, c.pass, c.witness));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact walled Brauer-Clifford superalgebra engine";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<ShapeError>(m, "ShapeError");
    py::register_exception<FuelError>(m, "FuelError");
    py::register_exception<AdmissibilityError>(m, "AdmissibilityError");

    m.def(
        "mul",
        [](const std::string& algebra, int r, int t, const std::string& lhs,
           const std::string& rhs, const std::string& spec, long fuel) {
            if (algebra == "finite") {
                FiniteAlgebra alg(r, t);
                return alg.mul(parse_bc_element(lhs, alg), parse_bc_element(rhs, alg)).str();
            }
            AffineAlgebra alg(r, t, fuel);
            AffElement p = alg.mul(parse_aff_element(lhs, alg), parse_aff_element(rhs, alg));
            if (algebra == "cyclotomic") p = reduce_cyclo(alg, p, spec_from_text(spec));
            return p.str();
        },
        py::arg("algebra"), py::arg("r"), py::arg("t"), py::arg("lhs"), py::arg("rhs"),
        py::arg("spec") = "", py::arg("fuel") = 2'000'000L);

    m.def("basis_count", [](int r, int t) {
        FiniteAlgebra alg(r, t);
        return (long)alg.basis().size();
    });

    m.def("basis", [](int r, int t) {
        FiniteAlgebra alg(r, t);
        std::vector<std::string> out;
        for (auto& b : alg.basis()) out.push_back(b.str());
        return out;
    });

    m.def(
        "reduce",
        [](int r, int t, const std::string& element, const std::string& spec, long fuel) {
            AffineAlgebra alg(r, t, fuel);
            return reduce_cyclo(alg, parse_aff_element(element, alg), spec_from_text(spec)).str();
        },
        py::arg("r"), py::arg("t"), py::arg("element"), py::arg("spec"),
        py::arg("fuel") = 2'000'000L);

    m.def("omega_bar", [](int n) { return omega_bar(n).str(); });

    m.def("admissible_stream", [](const std::string& spec, int from, int count) {
        return to_strs(admissible_stream(spec_from_text(spec), from, count));
    });

    m.def("is_admissible", [](const std::string& spec) {
        return spec_from_text(spec).admissible();
    });

    m.def("derived_g", [](const std::string& spec) {
        return to_strs(spec_from_text(spec).g_coeffs());
    });

    m.def("omega_to_delta",
          [](const std::vector<std::string>& v) { return to_strs(omega_to_delta(from_strs(v))); });
    m.def("delta_to_omega",
          [](const std::vector<std::string>& v) { return to_strs(delta_to_omega(from_strs(v))); });

    m.def(
        "cyclo_count",
        [](const std::string& spec, int r, int t) {
            return rational_str(cyclo_rank(spec_from_text(spec), r, t));
        },
        py::arg("spec"), py::arg("r"), py::arg("t"));

    m.def(
        "oracle_rank",
        [](int r, int t, int n) {
            FiniteAlgebra alg(r, t);
            TensorRep rho(n > 0 ? n : r + t, r, t);
            std::vector<TensorRep::Mat> mats;
            for (auto& b : alg.basis()) mats.push_back(rho.rep_mono(b, alg));
            return rho.rank(mats);
        },
        py::arg("r"), py::arg("t"), py::arg("n") = 0);

    m.def(
        "verify",
        [](const std::string& suite, int r, int t, int samples, uint64_t seed, int k,
           const std::string& spec) {
            Report rep;
            if (suite == "relations")
                rep = relation_suite(FiniteAlgebra(r, t));
            else if (suite == "jm")
                rep = jm_suite(FiniteAlgebra(r, t));
            else if (suite == "assoc")
                rep = assoc_suite(FiniteAlgebra(r, t), samples, seed);
            else if (suite == "oracle")
                rep = oracle_suite(FiniteAlgebra(r, t), r + t, samples, seed, nullptr);
            else if (suite == "affine")
                rep = affine_relation_suite(AffineAlgebra(r, t), samples, 3, seed);
            else if (suite == "phi")
                rep = phi_suite(r, t, k);
            else if (suite == "cyclo")
                rep = cyclo_suite(spec_from_text(spec), r, t, samples, seed);
            else if (suite == "params")
                rep = params_suite(10, seed);
            else
                throw ParseError("unknown suite: " + suite);
            return report_to_list(rep);
        },
        py::arg("suite"), py::arg("r") = 1, py::arg("t") = 1, py::arg("samples") = 50,
        py::arg("seed") = 1, py::arg("k") = 1, py::arg("spec") = "");

    m.def("sigma", [](int r, int t, const std::string& element) {
        AffineAlgebra alg(r, t);
        return alg.sigma(parse_aff_element(element, alg)).str();
    });

    m.def("tau", [](int r, int t, const std::string& element) {
        FiniteAlgebra alg(r, t);
        return alg.tau(parse_bc_element(element, alg)).str();
    });
}
