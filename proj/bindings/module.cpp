#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ulrich/classify.hpp"
#include "ulrich/oracle.hpp"
#include "ulrich/rank2.hpp"
#include "ulrich/report.hpp"

namespace py = pybind11;
using namespace ulrich;

PYBIND11_MODULE(_ulrich_core, m) {
    m.doc() = "Exact intersection theory, cohomology oracle, and Ulrich bundle "
              "constructors on geometrically ruled surfaces";

    py::register_exception<InvalidSurface>(m, "InvalidSurface", PyExc_ValueError);
    py::register_exception<InvalidPolarization>(m, "InvalidPolarization",
                                                PyExc_ValueError);
    py::register_exception<ConditionViolated>(m, "ConditionViolatedError",
                                              PyExc_ValueError);

    py::class_<TwistLabel>(m, "TwistLabel")
        .def(py::init<>())
        .def_static("generator", &TwistLabel::generator)
        .def("is_zero", &TwistLabel::is_zero)
        .def("is_general", &TwistLabel::is_general)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__repr__", &TwistLabel::to_string);

    py::class_<DivisorClass>(m, "DivisorClass")
        .def(py::init<Int, Int>(), py::arg("a"), py::arg("b"))
        .def(py::init<Int, Int, TwistLabel>(), py::arg("a"), py::arg("b"),
             py::arg("twist"))
        .def_readonly("a", &DivisorClass::a)
        .def_readonly("b", &DivisorClass::b)
        .def_readonly("twist", &DivisorClass::twist)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def("__rmul__", [](const DivisorClass& d, Int n) { return n * d; })
        .def(py::self == py::self)
        .def("same_class", &DivisorClass::same_class)
        .def("__repr__", &DivisorClass::to_string);

    py::class_<RuledSurface>(m, "RuledSurface")
        .def(py::init<Int, Int>(), py::arg("g"), py::arg("e"))
        .def_property_readonly("g", &RuledSurface::genus)
        .def_property_readonly("e", &RuledSurface::invariant)
        .def("k_twist", &RuledSurface::k_twist)
        .def("chi_structure_sheaf", &RuledSurface::chi_structure_sheaf);

    py::class_<Polarization>(m, "Polarization")
        .def(py::init<Int, Int, const RuledSurface&>(), py::arg("alpha"),
             py::arg("beta"), py::arg("surface"))
        .def_property_readonly("alpha", &Polarization::alpha)
        .def_property_readonly("beta", &Polarization::beta)
        .def_property_readonly("cls", &Polarization::cls);

    m.def("intersect", &intersect);
    m.def("canonical_class", &canonical_class);
    m.def("euler_char_line", &euler_char_line);
    m.def("rank2_chi", &rank2_chi);
    m.def("twist_chern", &twist_chern);

    py::class_<CohTable>(m, "CohTable")
        .def_readonly("h0", &CohTable::h0)
        .def_readonly("h1", &CohTable::h1)
        .def_readonly("h2", &CohTable::h2)
        .def("chi", &CohTable::chi)
        .def("all_zero", &CohTable::all_zero)
        .def(py::self == py::self)
        .def("__repr__", [](const CohTable& t) {
            return "CohTable(h0=" + std::to_string(t.h0) +
                   ", h1=" + std::to_string(t.h1) +
                   ", h2=" + std::to_string(t.h2) + ")";
        });

    py::class_<SearchBox>(m, "SearchBox")
        .def(py::init([](Int a_min, Int a_max, Int b_min, Int b_max) {
                 return SearchBox{a_min, a_max, b_min, b_max};
             }),
             py::arg("a_min"), py::arg("a_max"), py::arg("b_min"), py::arg("b_max"))
        .def_static("default_for", &SearchBox::default_for)
        .def_readonly("a_min", &SearchBox::a_min)
        .def_readonly("a_max", &SearchBox::a_max)
        .def_readonly("b_min", &SearchBox::b_min)
        .def_readonly("b_max", &SearchBox::b_max);

    m.def("cohomology", &cohomology);
    m.def("is_ulrich_line", &is_ulrich_line);
    m.def("search_ulrich_lines", &search_ulrich_lines);

    py::class_<Classification>(m, "Classification")
        .def("empty", &Classification::empty)
        .def_property_readonly("pair", [](const Classification& c) {
            return c.pair ? py::cast(*c.pair) : py::object(py::none());
        });

    m.def("ulrich_pair", &ulrich_pair);
    m.def("numeric_ulrich_line", &numeric_ulrich_line);
    m.def("classify_line_bundles", &classify_line_bundles);
    m.def("reconcile_with_oracle", &reconcile_with_oracle);

    py::enum_<Stability>(m, "Stability")
        .value("StrictlySemistable", Stability::StrictlySemistable)
        .value("Stable", Stability::Stable);

    py::class_<ExtensionData>(m, "ExtensionData")
        .def_readonly("sub", &ExtensionData::sub)
        .def_readonly("quot", &ExtensionData::quot)
        .def_readonly("z_length", &ExtensionData::z_length)
        .def_readonly("c1", &ExtensionData::c1)
        .def_readonly("c2", &ExtensionData::c2)
        .def_readonly("ext_dim", &ExtensionData::ext_dim)
        .def_readonly("family_dim", &ExtensionData::family_dim)
        .def_readonly("stability", &ExtensionData::stability)
        .def_readonly("genericity", &ExtensionData::genericity);

    py::class_<CbBudget>(m, "CbBudget")
        .def_readonly("h0_budget", &CbBudget::h0_budget)
        .def_readonly("z_length", &CbBudget::z_length)
        .def_readonly("ok", &CbBudget::ok);

    py::class_<StabilityReport>(m, "StabilityReport")
        .def_readonly("sub_degree", &StabilityReport::sub_degree)
        .def_readonly("c1_degree", &StabilityReport::c1_degree)
        .def_readonly("slope_equal", &StabilityReport::slope_equal)
        .def_readonly("flag", &StabilityReport::flag)
        .def_readonly("justification", &StabilityReport::justification);

    m.def("special_c2", &special_c2);
    m.def("verify_initialized_reduction", &verify_initialized_reduction);
    m.def("construct_rank2", &construct_rank2);
    m.def("ideal_sheaf_recipe", &ideal_sheaf_recipe);
    m.def("cayley_bacharach_budget", &cayley_bacharach_budget);
    m.def("step2_section_count", &step2_section_count);
    m.def("stability_report", &stability_report);

    m.def("sweep_row_json",
          [](Int g, Int e, Int alpha, Int beta, bool with_oracle) {
              return to_json(evaluate_row(g, e, alpha, beta, with_oracle)).dump();
          },
          py::arg("g"), py::arg("e"), py::arg("alpha"), py::arg("beta"),
          py::arg("with_oracle") = false);
}
