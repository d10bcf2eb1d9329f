#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "betaq/analytics.hpp"
#include "betaq/basis.hpp"
#include "betaq/cmeval.hpp"
#include "betaq/eisenstein.hpp"
#include "betaq/errors.hpp"
#include "betaq/etaq.hpp"
#include "betaq/lambert.hpp"
#include "betaq/suite.hpp"

namespace py = pybind11;
using namespace betaq;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<std::string> coeff_strings(const QSeries& s) {
    std::vector<std::string> out;
    for (const auto& c : s.coeffs()) out.push_back(c.get_str());
    return out;
}

} // namespace

PYBIND11_MODULE(_betaq, m) {
    py::register_exception<NotInSpace>(m, "NotInSpace", PyExc_ValueError);
    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

    py::class_<QSeries>(m, "QSeries")
        .def_property_readonly("offset", &QSeries::offset)
        .def_property_readonly("truncation", &QSeries::truncation)
        .def_property_readonly("coeffs", &coeff_strings)
        .def("coeff", [](const QSeries& s, long e) { return s.coeff(e).get_str(); })
        .def("is_zero", &QSeries::is_zero)
        .def("to_json", [](const QSeries& s) { return to_py(nlohmann::json(s)); })
        .def("__eq__", [](const QSeries& a, const QSeries& b) { return a == b; })
        .def("__add__", [](const QSeries& a, const QSeries& b) { return a + b; })
        .def("__sub__", [](const QSeries& a, const QSeries& b) { return a - b; })
        .def("__mul__", [](const QSeries& a, const QSeries& b) { return a * b; })
        .def("__repr__", [](const QSeries& s) { return s.to_string(); });

    m.def("eta_expand", [](const std::string& q, long trunc) { return eta_expand(EtaQuotient::parse(q), trunc); },
          py::arg("quotient"), py::arg("trunc"));
    m.def("h_k_series", &h_k_series, py::arg("k"), py::arg("trunc"));
    m.def("lambert_expand", &lambert_expand, py::arg("k"), py::arg("trunc"));
    m.def("euler_number", [](int n) { return euler_number(n).get_str(); });
    m.def("t_count", [](int k, long n) { return t_count(k, n).get_str(); }, py::arg("k"), py::arg("n"));

    m.def("verify_theorem2", [](int k, long trunc) { return to_py(verify_theorem2(k, trunc)); }, py::arg("k"),
          py::arg("trunc"));
    m.def(
        "classical_identity",
        [](const std::string& name, long trunc) {
            auto which = parse_classical(name);
            if (!which) throw UsageError("unknown identity '" + name + "'");
            return to_py(classical_report(*which, trunc));
        },
        py::arg("name"), py::arg("trunc"));
    m.def(
        "decompose",
        [](int k, long trunc) {
            Decomposition d = decompose(t_cusp_series(k, trunc), build_basis(k, trunc));
            nlohmann::json j = d;
            j["conditions"] = cusp_conditions(d);
            return to_py(j);
        },
        py::arg("k"), py::arg("trunc"), "decomposition of f_k - H_k with its cusp conditions");
    m.def("cm_report", [](int k, int r, long prec) { return to_py(cm_report(k, r, prec)); }, py::arg("k"),
          py::arg("r"), py::arg("prec") = 256);
    m.def(
        "limit_check",
        [](int k, long prec) {
            auto grid = default_limit_grid(prec);
            return to_py(limit_check(k, grid));
        },
        py::arg("k"), py::arg("prec") = 128);
    m.def(
        "run_suite",
        [](int k_max) {
            SuiteOptions opts;
            opts.k_max = k_max;
            std::vector<std::tuple<std::string, bool, std::string>> out;
            for (const auto& r : run_suite(opts)) out.emplace_back(r.id, r.pass, r.detail);
            return out;
        },
        py::arg("k_max") = 6);
}
