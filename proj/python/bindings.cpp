#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "vortexq/classes.hpp"
#include "vortexq/cli.hpp"
#include "vortexq/hrr.hpp"
#include "vortexq/oracle.hpp"
#include "vortexq/power_series.hpp"
#include "vortexq/report_io.hpp"

namespace py = pybind11;
using namespace vortexq;

namespace {

py::object to_py(const Integer& value) { return py::module_::import("builtins").attr("int")(to_string(value)); }

py::object to_py(const Rational& value) {
  return py::module_::import("fractions").attr("Fraction")(to_string(value));
}

ModuliParams make_params(int genus, int vortices, const std::string& area_quanta) {
  return ModuliParams(genus, vortices, parse_rational(area_quanta));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Hilbert-space dimensions for vortices on a compact Riemann surface";

  py::register_exception<IntegralityError>(m, "IntegralityError", PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
  py::register_exception<SizeBoundError>(m, "SizeBoundError", PyExc_ValueError);

  py::class_<DimensionReport>(m, "DimensionReport")
      .def_property_readonly("genus", [](const DimensionReport& r) { return r.params.genus; })
      .def_property_readonly("vortices", [](const DimensionReport& r) { return r.params.vortices; })
      .def_property_readonly("area_quanta", [](const DimensionReport& r) { return to_py(r.params.area_quanta); })
      .def_property_readonly("dimension",
                             [](const DimensionReport& r) -> py::object {
                               return r.dimension ? to_py(*r.dimension) : py::none();
                             })
      .def_property_readonly("closed_form",
                             [](const DimensionReport& r) -> py::object {
                               return r.closed_form ? to_py(*r.closed_form) : py::none();
                             })
      .def_property_readonly("euler_characteristic",
                             [](const DimensionReport& r) -> py::object {
                               if (is_integer(r.euler_characteristic)) {
                                 return to_py(to_integer(r.euler_characteristic));
                               }
                               return to_py(r.euler_characteristic);
                             })
      .def_readonly("vanishing_guaranteed", &DimensionReport::vanishing_guaranteed)
      .def_property_readonly("method", [](const DimensionReport& r) { return std::string(to_string(r.method)); })
      .def_readonly("notes", &DimensionReport::notes)
      .def("to_json", [](const DimensionReport& r) { return dump_json(report_to_json(r)); })
      .def("__repr__", [](const DimensionReport& r) {
        std::ostringstream os;
        write_human(os, r);
        return os.str();
      });

  m.def(
      "vortex_dimension",
      [](int genus, int vortices, const std::string& area_quanta, const std::string& method) {
        return vortex_dimension(make_params(genus, vortices, area_quanta), parse_method(method));
      },
      py::arg("genus"), py::arg("vortices"), py::arg("area_quanta"), py::arg("method") = "hrr_ring");

  m.def(
      "euler_characteristic",
      [](int genus, int vortices, const std::string& area_quanta, const std::string& eta_coeff,
         const std::vector<std::string>& sigma_coeffs) {
        const ModuliParams p = make_params(genus, vortices, area_quanta);
        CohomologyClass c = quantum_line_class(p);
        if (!eta_coeff.empty()) {
          c.eta_coeff = parse_rational(eta_coeff);
          c.role = ClassRole::custom;
        }
        if (!sigma_coeffs.empty()) {
          c.sigma_coeffs.clear();
          for (const auto& b : sigma_coeffs) {
            c.sigma_coeffs.push_back(parse_rational(b));
          }
          c.role = ClassRole::custom;
        }
        return to_py(euler_characteristic(c, p));
      },
      py::arg("genus"), py::arg("vortices"), py::arg("area_quanta"), py::arg("eta_coeff") = "",
      py::arg("sigma_coeffs") = std::vector<std::string>{});

  m.def(
      "closed_form_dimension",
      [](int genus, int vortices, const std::string& area_quanta) {
        return to_py(closed_form_dimension(make_params(genus, vortices, area_quanta)));
      },
      py::arg("genus"), py::arg("vortices"), py::arg("area_quanta"));

  m.def(
      "residue_coefficient", [](long k0, int n) { return to_py(residue_coefficient(k0, n)); }, py::arg("k0"),
      py::arg("n"));

  m.def(
      "todd_series",
      [](int order) {
        py::list out;
        const TruncatedSeries series = todd_series(order);
        for (const auto& c : series.coefficients()) {
          out.append(to_py(c));
        }
        return out;
      },
      py::arg("order"));

  m.def(
      "classes_json",
      [](int genus, int vortices, const std::string& area_quanta) {
        return dump_json(classes_to_json(make_params(genus, vortices, area_quanta)));
      },
      py::arg("genus"), py::arg("vortices"), py::arg("area_quanta"));

  m.def(
      "verify_reduced_ring",
      [](int genus, int vortices) { return dump_json(verification_to_json(oracle::verify_reduced_ring(genus, vortices))); },
      py::arg("genus"), py::arg("vortices"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
