#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twophoton/convert.hpp"
#include "twophoton/errors.hpp"
#include "twophoton/experiments.hpp"
#include "twophoton/fields.hpp"
#include "twophoton/franson.hpp"
#include "twophoton/run.hpp"
#include "twophoton/scan.hpp"
#include "twophoton/spectral.hpp"

namespace py = pybind11;
using namespace twophoton;

PYBIND11_MODULE(_core, m) {
  m.doc() = "two-photon coincidence and visibility simulator";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  // spectral
  py::enum_<spectral::Shape>(m, "Shape").value("Gaussian", spectral::Shape::Gaussian);

  py::class_<spectral::SpectralAmplitude>(m, "SpectralAmplitude",
                                          "normalized one-photon spectral amplitude")
      .def(py::init<double, double, spectral::Shape>(), py::arg("center"), py::arg("width"),
           py::arg("shape") = spectral::Shape::Gaussian)
      .def_property_readonly("center", &spectral::SpectralAmplitude::center)
      .def_property_readonly("width", &spectral::SpectralAmplitude::width)
      .def("position_width", &spectral::SpectralAmplitude::position_width)
      .def("evaluate", &spectral::SpectralAmplitude::evaluate, py::arg("k"));

  py::class_<spectral::OverlapKernel>(m, "OverlapKernel",
                                      "joint spectral product psi_s(k) psi_i(k_p - k)")
      .def(py::init<spectral::SpectralAmplitude, spectral::SpectralAmplitude, double>(),
           py::arg("signal"), py::arg("idler"), py::arg("pump_wavenumber"))
      .def_static("degenerate", &spectral::OverlapKernel::degenerate, py::arg("signal"),
                  py::arg("pump_wavenumber"))
      .def_property_readonly("pump_wavenumber", &spectral::OverlapKernel::pump_wavenumber)
      .def("product_center", &spectral::OverlapKernel::product_center)
      .def("product_width", &spectral::OverlapKernel::product_width);

  m.def("overlap_integral", &spectral::overlap_integral, py::arg("kernel"),
        py::arg("displacement"));
  m.def("suppression_ratio", &spectral::suppression_ratio, py::arg("kernel"),
        py::arg("delta_l"));

  // fields
  py::enum_<fields::Source>(m, "Source")
      .value("Signal", fields::Source::Signal)
      .value("Idler", fields::Source::Idler);

  py::class_<fields::FieldTerm>(m, "FieldTerm")
      .def_readonly("amplitude", &fields::FieldTerm::amplitude)
      .def_readonly("source", &fields::FieldTerm::source)
      .def_readonly("det_phase", &fields::FieldTerm::det_phase)
      .def_readonly("has_random_phase", &fields::FieldTerm::has_random_phase);

  py::class_<fields::FieldExpr>(m, "FieldExpr", "coherent sum of tagged plane-wave terms")
      .def(py::init<>())
      .def("add",
           [](fields::FieldExpr& e, double amplitude, fields::Source source, double det_phase,
              bool has_random_phase) { e.add(amplitude, source, det_phase, has_random_phase); },
           py::arg("amplitude"), py::arg("source"), py::arg("det_phase"),
           py::arg("has_random_phase"))
      .def("terms", &fields::FieldExpr::terms)
      .def("merged", &fields::FieldExpr::merged)
      .def("intensity", &fields::FieldExpr::intensity, py::arg("delta"));

  py::class_<fields::DetectorField>(m, "DetectorField",
                                    "polarization components summing in intensity")
      .def(py::init<fields::FieldExpr>())
      .def(py::init<std::vector<fields::FieldExpr>>())
      .def_readonly("components", &fields::DetectorField::components)
      .def("intensity", &fields::DetectorField::intensity, py::arg("delta"));

  py::enum_<fields::AverageMethod>(m, "AverageMethod")
      .value("Analytic", fields::AverageMethod::Analytic)
      .value("MonteCarlo", fields::AverageMethod::MonteCarlo);

  py::class_<fields::PhaseAverage>(m, "PhaseAverage")
      .def_readonly("value", &fields::PhaseAverage::value)
      .def_readonly("method", &fields::PhaseAverage::method)
      .def_readonly("std_error", &fields::PhaseAverage::std_error)
      .def_readonly("samples", &fields::PhaseAverage::samples)
      .def_readonly("seed", &fields::PhaseAverage::seed);

  m.def("average_over_delta", &fields::average_over_delta, py::arg("d1"), py::arg("d2"));
  m.def("average_over_delta_monte_carlo", &fields::average_over_delta_monte_carlo,
        py::arg("d1"), py::arg("d2"), py::arg("samples"), py::arg("seed"));
  m.def("apply_polarizer", &fields::apply_polarizer, py::arg("horizontal"), py::arg("vertical"),
        py::arg("theta"));
  m.def(
      "build_eraser_fields",
      [](double phi, std::optional<double> theta1, std::optional<double> theta2,
         double amplitude_s, double amplitude_i) {
        return fields::build_eraser_fields({phi, theta1, theta2, amplitude_s, amplitude_i});
      },
      py::arg("phi"), py::arg("theta1") = std::nullopt, py::arg("theta2") = std::nullopt,
      py::arg("amplitude_s") = 1.0, py::arg("amplitude_i") = 1.0);
  m.def("coincidence_poly", &fields::coincidence_poly, py::arg("d1"), py::arg("d2"),
        py::arg("label") = std::string());

  // convert
  py::class_<convert::SourceMultiset>(m, "SourceMultiset")
      .def_static("parse", &convert::SourceMultiset::parse, py::arg("token"))
      .def_readonly("count_a", &convert::SourceMultiset::count_a)
      .def_readonly("count_b", &convert::SourceMultiset::count_b)
      .def("degree", &convert::SourceMultiset::degree)
      .def("has_repeated_source", &convert::SourceMultiset::has_repeated_source)
      .def("__str__", &convert::SourceMultiset::str);

  py::class_<convert::PolyTerm>(m, "PolyTerm")
      .def_readonly("sources", &convert::PolyTerm::sources)
      .def_readonly("coefficient", &convert::PolyTerm::coefficient)
      .def_readonly("label", &convert::PolyTerm::label);

  py::class_<convert::IntensityPoly>(m, "IntensityPoly",
                                     "sum of source-tagged intensity monomials")
      .def(py::init<>())
      .def(
          "add",
          [](convert::IntensityPoly& p, const std::string& sources, double coefficient,
             const std::string& label) {
            p.add(convert::SourceMultiset::parse(sources), coefficient, label);
          },
          py::arg("sources"), py::arg("coefficient"), py::arg("label") = std::string())
      .def("terms", &convert::IntensityPoly::terms)
      .def("total", &convert::IntensityPoly::total)
      .def(
          "coefficient",
          [](const convert::IntensityPoly& p, const std::string& sources) {
            return p.coefficient(convert::SourceMultiset::parse(sources));
          },
          py::arg("sources"))
      .def("__len__", &convert::IntensityPoly::size)
      .def("__eq__", [](const convert::IntensityPoly& a, const convert::IntensityPoly& b) {
        return a == b;
      });

  m.def("apply_conversion_rule", &convert::apply_conversion_rule, py::arg("poly"),
        "drop monomials that repeat a source");
  m.def("visibility_of", &convert::visibility_of, py::arg("poly"), py::arg("modulated_label"),
        py::arg("constant_labels"));
  m.def("verify_rule_on_grid", &convert::verify_rule_on_grid, py::arg("classical_model"),
        py::arg("quantum_reference"), py::arg("grid"),
        py::arg("shared_factor") = std::function<double(const convert::Params&)>());

  py::class_<convert::RuleGridReport>(m, "RuleGridReport")
      .def_readonly("max_abs_deviation", &convert::RuleGridReport::max_abs_deviation)
      .def_readonly("points", &convert::RuleGridReport::points)
      .def_readonly("worst_index", &convert::RuleGridReport::worst_index);

  // scans
  py::class_<FringeScan>(m, "FringeScan")
      .def_readonly("parameter", &FringeScan::parameter)
      .def_readonly("values", &FringeScan::values)
      .def_property_readonly("curves",
                             [](const FringeScan& scan) {
                               py::dict out;
                               for (const auto& [name, samples] : scan.curves)
                                 out[py::str(name)] = samples;
                               return out;
                             })
      .def(
          "curve",
          [](const FringeScan& scan, const std::string& model) {
            const auto* samples = scan.curve(model);
            return samples ? std::optional<std::vector<double>>(*samples) : std::nullopt;
          },
          py::arg("model"))
      .def("visibility",
           [](const FringeScan& scan, const std::string& model) { return scan.visibility(model); },
           py::arg("model"));

  m.def("fit_fringe_visibility",
        [](const std::vector<double>& x, const std::vector<double>& y, double period) {
          return fit_fringe_visibility(x, y, period);
        },
        py::arg("x"), py::arg("y"), py::arg("period"));

  // experiments
  py::class_<experiments::GhoshMandelConfig>(m, "GhoshMandelConfig")
      .def(py::init<>())
      .def_readwrite("amplitude_a", &experiments::GhoshMandelConfig::amplitude_a)
      .def_readwrite("amplitude_b", &experiments::GhoshMandelConfig::amplitude_b)
      .def_readwrite("fringe_spacing", &experiments::GhoshMandelConfig::fringe_spacing)
      .def_readwrite("detector_scale_1", &experiments::GhoshMandelConfig::detector_scale_1)
      .def_readwrite("detector_scale_2", &experiments::GhoshMandelConfig::detector_scale_2);

  m.def("ghosh_mandel_quantum", &experiments::ghosh_mandel_quantum, py::arg("cfg"),
        py::arg("x1"), py::arg("x2"));
  m.def("ghosh_mandel_classical", &experiments::ghosh_mandel_classical, py::arg("cfg"),
        py::arg("x1"), py::arg("x2"));
  m.def("ghosh_mandel_classical_from_fields", &experiments::ghosh_mandel_classical_from_fields,
        py::arg("cfg"), py::arg("x1"), py::arg("x2"));
  m.def("ghosh_mandel_visibility", &experiments::ghosh_mandel_visibility, py::arg("cfg"));
  m.def("ghosh_mandel_poly", &experiments::ghosh_mandel_poly, py::arg("cfg"));
  m.def("ghosh_mandel_converted", &experiments::ghosh_mandel_converted, py::arg("cfg"),
        py::arg("x1"), py::arg("x2"));

  py::enum_<experiments::EraserCase>(m, "EraserCase")
      .value("NoPolarizers", experiments::EraserCase::NoPolarizers)
      .value("OnePolarizer", experiments::EraserCase::OnePolarizer)
      .value("TwoPolarizers", experiments::EraserCase::TwoPolarizers);

  py::class_<experiments::EraserConfig>(m, "EraserConfig")
      .def(py::init<>())
      .def_readwrite("phi", &experiments::EraserConfig::phi)
      .def_readwrite("theta1", &experiments::EraserConfig::theta1)
      .def_readwrite("theta2", &experiments::EraserConfig::theta2)
      .def_readwrite("intensity_s", &experiments::EraserConfig::intensity_s)
      .def_readwrite("intensity_i", &experiments::EraserConfig::intensity_i)
      .def("experiment_case", &experiments::EraserConfig::experiment_case);

  py::enum_<experiments::Model>(m, "Model")
      .value("Classical", experiments::Model::Classical)
      .value("Converted", experiments::Model::Converted)
      .value("QuantumReference", experiments::Model::QuantumReference);

  m.def("eraser_coincidence", &experiments::eraser_coincidence, py::arg("cfg"), py::arg("model"));
  m.def("eraser_quantum_reference", &experiments::eraser_quantum_reference, py::arg("cfg"));
  m.def("eraser_poly", &experiments::eraser_poly, py::arg("cfg"));
  m.def("eraser_monte_carlo", &experiments::eraser_monte_carlo, py::arg("cfg"),
        py::arg("samples"), py::arg("seed"));

  py::class_<experiments::ModelSet>(m, "ModelSet")
      .def(py::init<>())
      .def_readwrite("classical", &experiments::ModelSet::classical)
      .def_readwrite("converted", &experiments::ModelSet::converted)
      .def_readwrite("quantum", &experiments::ModelSet::quantum)
      .def_readwrite("monte_carlo", &experiments::ModelSet::monte_carlo);

  py::class_<experiments::MonteCarloOptions>(m, "MonteCarloOptions")
      .def(py::init<>())
      .def_readwrite("samples", &experiments::MonteCarloOptions::samples)
      .def_readwrite("seed", &experiments::MonteCarloOptions::seed);

  py::enum_<experiments::EraserParameter>(m, "EraserParameter")
      .value("Phi", experiments::EraserParameter::Phi)
      .value("Theta1", experiments::EraserParameter::Theta1)
      .value("Theta2", experiments::EraserParameter::Theta2);

  m.def("scan_ghosh_mandel", &experiments::scan_ghosh_mandel, py::arg("cfg"),
        py::arg("dx_start"), py::arg("dx_stop"), py::arg("points"),
        py::arg("models") = experiments::ModelSet{});
  m.def("scan_eraser", &experiments::scan_eraser, py::arg("cfg"), py::arg("parameter"),
        py::arg("start"), py::arg("stop"), py::arg("points"),
        py::arg("models") = experiments::ModelSet{},
        py::arg("mc") = std::optional<experiments::MonteCarloOptions>());

  // franson
  py::enum_<franson::Window>(m, "Window")
      .value("Narrow", franson::Window::Narrow)
      .value("Wide", franson::Window::Wide);

  py::class_<franson::FransonConfig>(m, "FransonConfig")
      .def(py::init<double, double, spectral::SpectralAmplitude, double, double,
                    franson::Window>(),
           py::arg("path_difference"), py::arg("pump_wavenumber"), py::arg("signal_spectrum"),
           py::arg("detector_position_s") = 0.0, py::arg("detector_position_i") = 0.0,
           py::arg("window") = franson::Window::Narrow)
      .def_property_readonly("path_difference", &franson::FransonConfig::path_difference)
      .def_property_readonly("pump_wavenumber", &franson::FransonConfig::pump_wavenumber)
      .def_property_readonly("detector_position_s", &franson::FransonConfig::detector_position_s)
      .def_property_readonly("detector_position_i", &franson::FransonConfig::detector_position_i)
      .def("with_positions", &franson::FransonConfig::with_positions, py::arg("x_s"),
           py::arg("x_i"))
      .def("kernel", &franson::FransonConfig::kernel)
      .def("regime_parameter", &franson::FransonConfig::regime_parameter)
      .def("suppression_regime", &franson::FransonConfig::suppression_regime);

  py::class_<franson::TwoPhotonAmplitudes>(m, "TwoPhotonAmplitudes")
      .def_readonly("ss", &franson::TwoPhotonAmplitudes::ss)
      .def_readonly("ll", &franson::TwoPhotonAmplitudes::ll)
      .def_readonly("sl", &franson::TwoPhotonAmplitudes::sl)
      .def_readonly("ls", &franson::TwoPhotonAmplitudes::ls);

  m.def("amplitudes", &franson::amplitudes, py::arg("cfg"));
  m.def("coincidence_narrow", &franson::coincidence_narrow, py::arg("cfg"));
  m.def("coincidence_wide", &franson::coincidence_wide, py::arg("cfg"));
  m.def("coincidence_classical", &franson::coincidence_classical, py::arg("cfg"));

  py::class_<franson::FringeModels>(m, "FringeModels")
      .def(py::init<>())
      .def_readwrite("narrow", &franson::FringeModels::narrow)
      .def_readwrite("wide", &franson::FringeModels::wide)
      .def_readwrite("classical", &franson::FringeModels::classical);

  m.def("fringe_scan", &franson::fringe_scan, py::arg("cfg"), py::arg("models"),
        py::arg("n_periods"), py::arg("points"));
  m.def("fringe_scan_range", &franson::fringe_scan_range, py::arg("cfg"), py::arg("models"),
        py::arg("phase_start"), py::arg("phase_stop"), py::arg("points"));
  m.def("classify_window", &franson::classify_window, py::arg("path_difference"),
        py::arg("coincidence_path"));

  m.attr("SPEED_OF_LIGHT_UM_PER_NS") = franson::kSpeedOfLightUmPerNs;
  m.attr("SUPPRESSION_THRESHOLD") = franson::kSuppressionThreshold;

  // csv/report plumbing shared with the command line tool
  m.def("format_csv", &cli::format_csv, py::arg("scan"));
  m.def(
      "convert_report",
      [](const std::string& text, const std::string& modulated_label) {
        return cli::convert_report_from_text(text, modulated_label).text;
      },
      py::arg("text"), py::arg("modulated_label") = std::string("fringe"));
}
