#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twbeam/config.hpp"
#include "twbeam/csv.hpp"
#include "twbeam/solver.hpp"
#include "twbeam/sweep.hpp"
#include "twbeam/verify.hpp"

namespace py = pybind11;
using namespace twbeam;

namespace {

std::pair<std::vector<double>, Eigen::VectorXcd> response(
    const BeamConfig& beam, const AbsorberConfig& absorber,
    const ExcitationConfig& excitation, std::size_t modes,
    std::size_t grid_points) {
  const ModalBasis basis(modes, beam.length);
  const AssembledSystem sys = assemble(beam, basis);
  const HarmonicSolution sol =
      harmonic_response(sys, basis, absorber, excitation);
  std::vector<double> grid = uniform_grid(beam.length, grid_points);
  Eigen::VectorXcd field = physical_field(sol, basis, grid);
  return {std::move(grid), std::move(field)};
}

double cost_function_py(const std::vector<double>& grid,
                        const std::vector<std::complex<double>>& field,
                        double start, double end) {
  return cost_function(Envelope::from_field(grid, field),
                       Section(start, end));
}

std::vector<double> natural_frequencies_py(const BeamConfig& beam,
                                           double absorber_location,
                                           double stiffness, std::size_t count,
                                           std::size_t modes) {
  const ModalBasis basis(modes, beam.length);
  const AssembledSystem sys = assemble(beam, basis);
  const Eigen::VectorXd u = coupling_vector(basis, absorber_location);
  return natural_frequencies(sys, u, stiffness, count);
}

CFMap cf_map_py(const BeamConfig& beam, double absorber_location,
                double frequency, const GridAxis& k_axis,
                const GridAxis& c_axis, std::size_t modes, unsigned threads) {
  const ModalBasis basis(modes, beam.length);
  SweepOptions opts;
  opts.threads = threads;
  return cf_map(beam, basis, absorber_location, frequency, k_axis, c_axis,
                opts);
}

}  // namespace

PYBIND11_MODULE(_twbeam, m) {
  m.doc() =
      "Traveling-wave response of tapered and functionally graded cantilever "
      "beams with an intermediate spring-damper absorber";

  py::class_<PowerLawProfile>(m, "PowerLawProfile")
      .def(py::init<double, double, double>(), py::arg("left"),
           py::arg("right"), py::arg("gradient_index") = 1.0)
      .def_static("constant", &PowerLawProfile::constant, py::arg("value"))
      .def_property_readonly("left", &PowerLawProfile::left)
      .def_property_readonly("right", &PowerLawProfile::right)
      .def_property_readonly("gradient_index",
                             &PowerLawProfile::gradient_index)
      .def("evaluate", &PowerLawProfile::evaluate, py::arg("x"),
           py::arg("length"));

  py::class_<BeamConfig>(m, "BeamConfig")
      .def(py::init<double, PowerLawProfile, PowerLawProfile, PowerLawProfile,
                    PowerLawProfile>(),
           py::arg("length"), py::arg("width"), py::arg("thickness"),
           py::arg("modulus"), py::arg("density"))
      .def_static("uniform", &BeamConfig::uniform, py::arg("length"),
                  py::arg("width"), py::arg("thickness"), py::arg("modulus"),
                  py::arg("density"))
      .def_readonly("length", &BeamConfig::length)
      .def_readonly("width", &BeamConfig::width)
      .def_readonly("thickness", &BeamConfig::thickness)
      .def_readonly("modulus", &BeamConfig::modulus)
      .def_readonly("density", &BeamConfig::density);

  py::class_<AbsorberConfig>(m, "AbsorberConfig")
      .def(py::init<double, double, double>(), py::arg("location"),
           py::arg("stiffness"), py::arg("damping"))
      .def_readonly("location", &AbsorberConfig::location)
      .def_readonly("stiffness", &AbsorberConfig::stiffness)
      .def_readonly("damping", &AbsorberConfig::damping);

  py::class_<ExcitationConfig>(m, "ExcitationConfig")
      .def(py::init<double, double>(), py::arg("frequency"),
           py::arg("amplitude") = 1.0)
      .def_readonly("frequency", &ExcitationConfig::frequency)
      .def_readonly("amplitude", &ExcitationConfig::amplitude)
      .def("omega", &ExcitationConfig::omega);

  py::class_<GridAxis> axis(m, "GridAxis");
  py::enum_<GridAxis::Scale>(axis, "Scale")
      .value("linear", GridAxis::Scale::linear)
      .value("logarithmic", GridAxis::Scale::logarithmic);
  axis.def(py::init<std::string, double, double, std::size_t,
                    GridAxis::Scale>(),
           py::arg("name"), py::arg("min"), py::arg("max"), py::arg("count"),
           py::arg("scale") = GridAxis::Scale::linear)
      .def_static("default_stiffness", &GridAxis::default_stiffness)
      .def_static("default_damping", &GridAxis::default_damping)
      .def_static("default_frequency", &GridAxis::default_frequency)
      .def_readonly("name", &GridAxis::name)
      .def_readonly("count", &GridAxis::count)
      .def("values", &GridAxis::values);

  py::class_<CFMap>(m, "CFMap")
      .def_readonly("frequency", &CFMap::frequency)
      .def_readonly("k_axis", &CFMap::k_axis)
      .def_readonly("c_axis", &CFMap::c_axis)
      .def_readonly("values", &CFMap::values)
      .def("min_value", &CFMap::min_value);

  m.def("section_area", &section_area, py::arg("beam"), py::arg("x"));
  m.def("section_inertia", &section_inertia, py::arg("beam"), py::arg("x"));
  m.def("natural_frequencies", &natural_frequencies_py, py::arg("beam"),
        py::arg("absorber_location"), py::arg("stiffness") = 0.0,
        py::arg("count") = 10, py::arg("modes") = 100);
  m.def("nondimensionalize_frequency", &nondimensionalize_frequency,
        py::arg("omega"), py::arg("beam"));
  m.def("response", &response, py::arg("beam"), py::arg("absorber"),
        py::arg("excitation"), py::arg("modes") = 100,
        py::arg("grid_points") = 2001,
        "Steady-state complex field W(x) on a uniform grid; returns (x, W)");
  m.def("cost_function", &cost_function_py, py::arg("grid"), py::arg("field"),
        py::arg("start"), py::arg("end"));
  m.def("default_tw_section",
        [](double l1, double length, double margin) {
          const Section s = default_tw_section(l1, length, margin);
          return std::make_pair(s.start, s.end);
        },
        py::arg("absorber_location"), py::arg("length"),
        py::arg("margin_fraction") = 0.05);
  m.def("cf_map", &cf_map_py, py::arg("beam"), py::arg("absorber_location"),
        py::arg("frequency"), py::arg("k_axis"), py::arg("c_axis"),
        py::arg("modes") = 100, py::arg("threads") = 0);
  m.def("optimal_region_measure", &optimal_region_measure, py::arg("map"),
        py::arg("threshold") = 0.3);
  m.def("mean_preserving_taper", &mean_preserving_taper, py::arg("base"),
        py::arg("ratio"), py::arg("gradient_index") = 1.0);
  m.def("with_gradient_index", &with_gradient_index, py::arg("base"),
        py::arg("n"));
  m.def("verify",
        [](unsigned threads) {
          const VerifyReport report = run_verification(threads);
          py::list checks;
          for (const VerifyCheck& c : report.checks)
            checks.append(py::make_tuple(c.name, c.passed, c.measured,
                                         c.limit, c.detail));
          return py::make_tuple(report.all_passed(), checks);
        },
        py::arg("threads") = 0,
        "Built-in verification; returns (all_passed, checks)");
}
