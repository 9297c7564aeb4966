#include "wpoly/asymptotics.hpp"
#include "wpoly/closed_form.hpp"
#include "wpoly/json_io.hpp"
#include "wpoly/linext.hpp"
#include "wpoly/poset.hpp"
#include "wpoly/realroots.hpp"
#include "wpoly/reproduction.hpp"
#include "wpoly/search.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace wpoly;

namespace {

// Polynomials and reports cross the boundary as JSON text; the Python layer decodes them.
std::string poly_json(const IntPolynomial& p) { return polynomial_to_json(p).dump(); }

IntPolynomial poly_from_strings(const std::vector<std::string>& coeffs)
{
    nlohmann::json j;
    j["coeffs"] = coeffs;
    return polynomial_from_json(j);
}

Rational rational_from(const std::string& text)
{
    Rational r(text);
    r.canonicalize();
    return r;
}

} // namespace

PYBIND11_MODULE(_core, mod)
{
    mod.doc() = "W-polynomials of naturally labeled posets";

    auto poset_error = py::register_exception<PosetError>(mod, "PosetError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(mod, "BudgetExceeded", PyExc_RuntimeError);
    (void)poset_error;

    py::class_<Poset>(mod, "Poset")
        .def(py::init(&Poset::validate), py::arg("p"), py::arg("relations"))
        .def_static("parse", &parse_poset, py::arg("text"))
        .def_static("pmn", &make_pmn, py::arg("m"), py::arg("n"))
        .def_static("disjoint_chains", &make_disjoint_chains, py::arg("m"), py::arg("n"))
        .def_static("antichain", &make_antichain, py::arg("p"))
        .def_static("chain", &make_chain, py::arg("p"))
        .def_property_readonly("size", &Poset::size)
        .def_property_readonly("covers", &Poset::covers)
        .def("less", &Poset::less, py::arg("a"), py::arg("b"))
        .def("closure_pairs", &Poset::closure_pairs)
        .def("is_naturally_labeled", [](const Poset& p) { return is_naturally_labeled(p); })
        .def("format", &format_poset)
        .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; })
        .def("__repr__", [](const Poset& p) { return "<Poset p=" + std::to_string(p.size()) + ">"; });

    mod.def(
        "linear_extensions",
        [](const Poset& p, std::uint64_t limit) {
            std::vector<std::vector<Label>> out;
            for (auto& e : linear_extensions(p, limit))
                out.push_back(std::move(e.seq));
            return out;
        },
        py::arg("poset"), py::arg("limit") = default_enumeration_budget);
    mod.def(
        "w_enumerative_json",
        [](const Poset& p, std::uint64_t budget) {
            py::gil_scoped_release release;
            return poly_json(w_polynomial_enumerative(p, budget));
        },
        py::arg("poset"), py::arg("budget") = default_enumeration_budget);
    mod.def(
        "count_linear_extensions",
        [](const Poset& p) { return count_linear_extensions_dp(p).get_str(); }, py::arg("poset"));

    mod.def("w_pmn_json", [](int m, int n) { return poly_json(w_pmn(m, n)); }, py::arg("m"), py::arg("n"));
    mod.def(
        "w_disjoint_chains_json", [](int m, int n) { return poly_json(w_disjoint_chains(m, n)); }, py::arg("m"),
        py::arg("n"));
    mod.def("eulerian_json", [](int p) { return poly_json(eulerian_polynomial(p)); }, py::arg("p"));

    mod.def(
        "analyze_json",
        [](const std::vector<std::string>& coeffs, bool want_approx) {
            const IntPolynomial p = poly_from_strings(coeffs);
            py::gil_scoped_release release;
            return report_to_json(analyze(p, want_approx)).dump();
        },
        py::arg("coeffs"), py::arg("want_approx") = false);
    mod.def(
        "is_unimodal", [](const std::vector<std::string>& coeffs) { return is_unimodal(poly_from_strings(coeffs)); },
        py::arg("coeffs"));

    mod.def(
        "scan_json",
        [](const std::string& m_range, const std::string& n_range, bool only_failures, bool want_approx,
           unsigned jobs) {
            const ScanOptions options{only_failures, want_approx, jobs};
            std::vector<SearchResult> results;
            {
                py::gil_scoped_release release;
                results = scan(parse_range(m_range), parse_range(n_range), options);
            }
            std::vector<std::string> out;
            for (const auto& r : results)
                out.push_back(search_result_to_json(r).dump());
            return out;
        },
        py::arg("m_range"), py::arg("n_range"), py::arg("only_failures") = false, py::arg("want_approx") = false,
        py::arg("jobs") = 0);

    mod.def(
        "gamma_factor", [](int n, int k) { return gamma_factor(n, k).get_str(); }, py::arg("n"), py::arg("k"));
    mod.def(
        "convergence_gap",
        [](int m, int n, const std::string& a, int samples) {
            const Rational ra = rational_from(a);
            py::gil_scoped_release release;
            return convergence_gap(m, n, ra, samples);
        },
        py::arg("m"), py::arg("n"), py::arg("a") = "4", py::arg("samples") = 100);
    mod.def(
        "near_unit_magnitude",
        [](int m, int n, const std::string& a, int samples) {
            return near_unit_magnitude_check(m, n, rational_from(a), samples);
        },
        py::arg("m"), py::arg("n"), py::arg("a") = "4", py::arg("samples") = 200);
    mod.def("first_bessel_zero", &first_bessel_zero, py::arg("K") = 40);
    mod.def("eval_bessel_j0", &eval_bessel_j0, py::arg("x"), py::arg("K") = 40);
    mod.def("eval_f_series", &eval_f_series, py::arg("t"), py::arg("K") = 40);
    mod.def(
        "zeros_of_f_truncation",
        [](int K, const std::string& a) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& iv : zeros_of_F_truncation(K, rational_from(a)))
                out.emplace_back(iv.lo.get_str(), iv.hi.get_str());
            return out;
        },
        py::arg("K"), py::arg("a") = "4");

    mod.def(
        "reproduction_battery",
        [](bool quick) {
            std::vector<std::tuple<std::string, bool, std::string>> out;
            for (const auto& c : run_reproduction_battery({.quick = quick}))
                out.emplace_back(c.name, c.passed, c.detail);
            return out;
        },
        py::arg("quick") = true);
}
