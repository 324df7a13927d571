#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "galmeasure/asymptotics.hpp"
#include "galmeasure/catalog.hpp"
#include "galmeasure/cli.hpp"
#include "galmeasure/measure.hpp"
#include "galmeasure/montecarlo.hpp"
#include "galmeasure/scenario_io.hpp"
#include "galmeasure/sylow_measure.hpp"
#include "galmeasure/version.hpp"

namespace py = pybind11;
using namespace galmeas;

namespace {

py::object fraction(const Rational& r) {
    static py::object ctor = py::module_::import("fractions").attr("Fraction");
    return ctor(py::str(r.to_string()));
}

py::object big(const BigInt& v) {
    static py::object ctor = py::module_::import("builtins").attr("int");
    return ctor(py::str(v.to_string()));
}

py::dict measure_dict(const MeasureReport& r) {
    py::dict out;
    for (const auto& t : r.per_target) out[py::str(t.name)] = fraction(t.value);
    return out;
}

struct PyScenario {
    CoverScenario scenario;
};

struct PyForm {
    SignedPowerSum form;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact measures on Galois cover scenarios via finite group counting";
    m.attr("__version__") = kToolVersion;

    py::register_exception<ValidationError>(m, "ValidationError");
    py::register_exception<ResourceError>(m, "ResourceError");

    py::class_<PyForm>(m, "ClosedForm")
        .def_property_readonly("base", [](const PyForm& f) { return f.form.base; })
        .def_property_readonly("e1", [](const PyForm& f) { return f.form.e1; })
        .def_property_readonly("terms",
                               [](const PyForm& f) {
                                   py::list out;
                                   for (const auto& t : f.form.terms)
                                       out.append(py::make_tuple(big(t.coeff), t.scale));
                                   return out;
                               })
        .def("evaluate", [](const PyForm& f, int e) { return fraction(f.form.evaluate(e)); },
             py::arg("e"))
        .def(
            "omega_sum",
            [](const PyForm& f, int start) -> py::object {
                auto r = omega_sum(f.form, start);
                if (r.infinite) return py::module_::import("math").attr("inf");
                return fraction(r.value);
            },
            py::arg("start") = 1)
        .def("ultralimit", [](const PyForm& f) { return ultralimit(f.form).value; });

    py::class_<PyScenario>(m, "Scenario")
        .def_static("from_catalog",
                    [](const std::string& id) { return PyScenario{catalog_scenario(id)}; },
                    py::arg("id"))
        .def_static("from_json",
                    [](const std::string& text, const std::string& id) {
                        return PyScenario{realize_scenario(parse_scenario_text(text), id)};
                    },
                    py::arg("text"), py::arg("id") = "inline")
        .def_static("from_file",
                    [](const std::string& path) {
                        return PyScenario{realize_scenario(load_scenario_file(path), path)};
                    },
                    py::arg("path"))
        .def_property_readonly("id", [](const PyScenario& s) { return s.scenario.id(); })
        .def_property_readonly("group_order",
                               [](const PyScenario& s) { return s.scenario.group()->order(); })
        .def_property_readonly("g0_order",
                               [](const PyScenario& s) { return s.scenario.g0().order(); })
        .def_property_readonly("split", [](const PyScenario& s) { return s.scenario.split(); })
        .def_property_readonly("targets",
                               [](const PyScenario& s) {
                                   std::vector<std::string> names;
                                   for (const auto& t : s.scenario.targets())
                                       names.push_back(t.name);
                                   return names;
                               })
        .def("measure",
             [](const PyScenario& s, int e) { return measure_dict(measure_at(s.scenario, e)); },
             py::arg("e"))
        .def("measure_split",
             [](const PyScenario& s, int e) {
                 return measure_dict(measure_split_at(s.scenario, e));
             },
             py::arg("e"))
        .def("measure_all_regular",
             [](const PyScenario& s, int e) {
                 return measure_dict(measure_all_regular(s.scenario, e));
             },
             py::arg("e"))
        .def("closed_form",
             [](const PyScenario& s, const std::string& target) {
                 return PyForm{closed_form(s.scenario, target)};
             },
             py::arg("target"))
        .def("generic_target", [](const PyScenario& s) { return generic_target(s.scenario); })
        .def("prop_measure",
             [](const PyScenario& s, long long p, int e, std::vector<std::string> targets) {
                 return measure_dict(prop_measure_at(s.scenario, p, e, std::move(targets)));
             },
             py::arg("p"), py::arg("e"), py::arg("targets") = std::vector<std::string>{})
        .def("bijection_factor",
             [](const PyScenario& s, const std::string& target, int e) {
                 auto r = bijection_factor(s.scenario, target, e);
                 py::dict out;
                 out["normalizer_index"] = r.normalizer_index;
                 out["factor"] = fraction(r.factor);
                 out["original"] = fraction(r.original.value);
                 out["induced"] = fraction(r.induced_value);
                 out["identity_holds"] = r.identity_holds;
                 out["preserved_at_e1"] = r.preserved_at_e1;
                 return out;
             },
             py::arg("target"), py::arg("e"))
        .def("sample",
             [](const PyScenario& s, const std::string& target, int e, long long samples,
                uint64_t seed) {
                 auto r = sample_measure(s.scenario, target, e, samples, seed);
                 py::dict out;
                 out["accepted"] = r.accepted;
                 out["hits"] = r.hits;
                 out["estimate"] = fraction(r.estimate);
                 out["exact"] = fraction(r.exact);
                 out["sigma"] = r.sigma;
                 out["within_4_sigma"] = r.within_4_sigma;
                 out["no_regular_samples"] = r.no_regular_samples;
                 out["generator"] = r.generator;
                 return out;
             },
             py::arg("target"), py::arg("e"), py::arg("samples"), py::arg("seed"));

    m.def("catalog_ids", [] { return catalog_ids(); });
    m.def("catalog_is_tower", &catalog_is_tower, py::arg("id"));
    m.def(
        "verify_refinement",
        [](const std::string& tower_id, int e) {
            auto r = verify_refinement(catalog_tower(tower_id), e);
            py::dict out;
            out["counts_all_equal"] = r.counts_all_equal;
            out["common_count"] = big(r.common_count);
            out["predicted"] = big(r.predicted);
            out["matches_prediction"] = r.matches_prediction;
            out["measures_agree"] = r.measures_agree;
            return out;
        },
        py::arg("tower_id"), py::arg("e"));
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
