#include <numbers>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ckosc/classical.hpp"
#include "ckosc/figures.hpp"
#include "ckosc/numerics.hpp"
#include "ckosc/output.hpp"
#include "ckosc/quantum.hpp"
#include "ckosc/scenario_file.hpp"
#include "ckosc/validation.hpp"

namespace py = pybind11;
using namespace ckosc;

namespace {

py::dict rows_to_columns(const std::vector<OutputRow>& rows) {
  py::dict out;
  for (const auto& name : output_columns()) {
    py::array_t<double> col(static_cast<py::ssize_t>(rows.size()));
    auto view = col.mutable_unchecked<1>();
    for (std::size_t i = 0; i < rows.size(); ++i) view(static_cast<py::ssize_t>(i)) = rows[i].column(name);
    out[py::str(name)] = col;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "C++ core of the ckosc package";
  m.attr("__version__") = "0.1.0";

  static py::handle error_type = py::exception<Error>(m, "Error", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error_type.ptr(), (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<OscillatorParams>(m, "OscillatorParams")
      .def(py::init([](double m_, double omega0, double gamma, double hbar) {
             return OscillatorParams{m_, omega0, gamma, hbar, 0.0};
           }),
           py::arg("m") = 1.0, py::arg("omega0") = 1.0, py::arg("gamma") = 0.0, py::arg("hbar") = 1.0)
      .def_readwrite("m", &OscillatorParams::m)
      .def_readwrite("omega0", &OscillatorParams::omega0)
      .def_readwrite("gamma", &OscillatorParams::gamma)
      .def_readwrite("hbar", &OscillatorParams::hbar)
      .def_readwrite("omega", &OscillatorParams::omega)
      .def("__repr__", [](const OscillatorParams& p) {
        return "OscillatorParams(m=" + std::to_string(p.m) + ", omega0=" + std::to_string(p.omega0) +
               ", gamma=" + std::to_string(p.gamma) + ", hbar=" + std::to_string(p.hbar) +
               ", omega=" + std::to_string(p.omega) + ")";
      });

  py::class_<InitialState>(m, "InitialState")
      .def(py::init([](double Q0, double varphi) { return InitialState{Q0, varphi}; }),
           py::arg("Q0") = 0.0, py::arg("varphi") = 0.0)
      .def_readwrite("Q0", &InitialState::Q0)
      .def_readwrite("varphi", &InitialState::varphi);

  py::class_<TimeGrid>(m, "TimeGrid")
      .def(py::init([](double t_end, double dt) { return TimeGrid{t_end, dt}; }), py::arg("t_end") = 20.0,
           py::arg("dt") = 0.01)
      .def_readwrite("t_end", &TimeGrid::t_end)
      .def_readwrite("dt", &TimeGrid::dt)
      .def("steps", &TimeGrid::steps);

  py::class_<ZeroForce>(m, "ZeroForce").def(py::init<>());
  py::class_<ConstantForce>(m, "ConstantForce")
      .def(py::init([](double f0) { return ConstantForce{f0}; }), py::arg("f0"))
      .def_readwrite("f0", &ConstantForce::f0);
  py::class_<TmafmForce>(m, "TmafmForce")
      .def(py::init([](double F_ext, double k, double D0, double a0, double omega_d, double m_eff) {
             return TmafmForce{F_ext, k, D0, a0, omega_d, m_eff};
           }),
           py::arg("F_ext"), py::arg("k"), py::arg("D0"), py::arg("a0"), py::arg("omega_d"),
           py::arg("m_eff") = 1.0)
      .def_readwrite("F_ext", &TmafmForce::F_ext)
      .def_readwrite("k", &TmafmForce::k)
      .def_readwrite("D0", &TmafmForce::D0)
      .def_readwrite("a0", &TmafmForce::a0)
      .def_readwrite("omega_d", &TmafmForce::omega_d)
      .def_readwrite("m_eff", &TmafmForce::m_eff);
  py::class_<SawtoothForce>(m, "SawtoothForce")
      .def(py::init([](double f0, double m_, double omega_d, int n_terms) {
             return SawtoothForce{f0, m_, omega_d, n_terms};
           }),
           py::arg("f0"), py::arg("m"), py::arg("omega_d"), py::arg("n_terms") = 1000)
      .def_readwrite("f0", &SawtoothForce::f0)
      .def_readwrite("m", &SawtoothForce::m)
      .def_readwrite("omega_d", &SawtoothForce::omega_d)
      .def_readwrite("n_terms", &SawtoothForce::n_terms);
  py::class_<TabulatedForce>(m, "TabulatedForce")
      .def(py::init([](std::vector<double> t, std::vector<double> f) { return TabulatedForce{t, f}; }),
           py::arg("t"), py::arg("f"))
      .def_readwrite("t", &TabulatedForce::t)
      .def_readwrite("f", &TabulatedForce::f);

  py::class_<Scenario>(m, "Scenario")
      .def(py::init([](OscillatorParams p, InitialState init, ForceModel force, TimeGrid grid, double chi) {
             return Scenario{p, init, std::move(force), grid, chi};
           }),
           py::arg("params"), py::arg("init"), py::arg("force") = ForceModel{ZeroForce{}},
           py::arg("grid") = TimeGrid{}, py::arg("chi") = std::numbers::pi / 2)
      .def_readwrite("params", &Scenario::params)
      .def_readwrite("init", &Scenario::init)
      .def_readwrite("force", &Scenario::force)
      .def_readwrite("grid", &Scenario::grid)
      .def_readwrite("chi", &Scenario::chi);

  py::class_<TrajectoryPoint>(m, "TrajectoryPoint")
      .def(py::init<>())
      .def_readwrite("t", &TrajectoryPoint::t)
      .def_readwrite("Q", &TrajectoryPoint::Q)
      .def_readwrite("Qdot", &TrajectoryPoint::Qdot)
      .def_readwrite("P", &TrajectoryPoint::P)
      .def_readwrite("P_k", &TrajectoryPoint::P_k);

  py::class_<EnergyRecord>(m, "EnergyRecord")
      .def_readonly("t", &EnergyRecord::t)
      .def_readonly("e_classical", &EnergyRecord::e_classical)
      .def_readonly("e_quantum", &EnergyRecord::e_quantum)
      .def_readonly("zero_point", &EnergyRecord::zero_point);

  py::class_<WavePacket>(m, "WavePacket")
      .def_readonly("t", &WavePacket::t)
      .def_readonly("center", &WavePacket::center)
      .def_readonly("sigma", &WavePacket::sigma)
      .def_readonly("p_center", &WavePacket::p_center);

  py::class_<OdeState>(m, "OdeState")
      .def(py::init([](double t, double q, double v) { return OdeState{t, q, v}; }), py::arg("t") = 0.0,
           py::arg("q") = 0.0, py::arg("v") = 0.0)
      .def_readwrite("t", &OdeState::t)
      .def_readwrite("q", &OdeState::q)
      .def_readwrite("v", &OdeState::v);

  // model
  m.def("validate_params", &validate_params, py::arg("params"));
  m.def("derived_omega", &derived_omega, py::arg("params"));
  m.def("validate_scenario", &validate_scenario, py::arg("scenario"));

  // forcing
  m.def("eval_force", py::vectorize([](ForceModel f, double t) { return eval_force(f, t); }),
        py::arg("model"), py::arg("t"));
  m.def("tmafm_force", py::vectorize(&tmafm_force), py::arg("F_ext"), py::arg("k"), py::arg("D0"),
        py::arg("a0"), py::arg("omega_d"), py::arg("m_eff"), py::arg("t"));
  m.def("sawtooth_series", py::vectorize(&sawtooth_series), py::arg("f0"), py::arg("m"),
        py::arg("omega_d"), py::arg("n_terms"), py::arg("t"));
  m.def("sawtooth_ramp_oracle", py::vectorize(&sawtooth_ramp_oracle), py::arg("f0"), py::arg("m"),
        py::arg("omega_d"), py::arg("t"));

  // numerics / classical
  m.def("rk4_integrate", &rk4_integrate, py::arg("params"), py::arg("force"), py::arg("init"),
        py::arg("grid"));
  m.def("homogeneous_solution",
        [](const OscillatorParams& p, const InitialState& init, double t) {
          const auto h = homogeneous_solution(p, init, t);
          return py::make_tuple(h.Q_h, h.Qdot_h);
        },
        py::arg("params"), py::arg("init"), py::arg("t"));
  m.def("trajectory", &trajectory, py::arg("scenario"));
  m.def("classical_energy", &classical_energy, py::arg("params"), py::arg("point"));

  // quantum
  m.def("zero_point_energy", &zero_point_energy, py::arg("params"), py::arg("t"));
  m.def("quantum_energy", &quantum_energy, py::arg("params"), py::arg("point"));
  m.def("quantum_energy_undriven", &quantum_energy_undriven, py::arg("params"), py::arg("init"),
        py::arg("t"));
  m.def("uncertainty_product", &uncertainty_product, py::arg("params"));
  m.def("wave_packet", &wave_packet, py::arg("params"), py::arg("init"), py::arg("point"),
        py::arg("chi") = std::numbers::pi / 2);
  m.def("density", py::vectorize([](WavePacket w, double q) { return density(w, q); }),
        py::arg("packet"), py::arg("q"));

  // scenarios, simulation, figures
  m.def("simulate", [](const Scenario& s) { return rows_to_columns(simulate(validate_scenario(s))); },
        py::arg("scenario"), "Run a scenario; returns a dict of numpy arrays keyed by CSV column.");
  m.def("parse_scenario", [](const std::string& text) { return parse_scenario(text).scenario; },
        py::arg("text"));
  m.def("figure_scenario", [](const std::string& id) { return figure_scenario(parse_figure_id(id)); },
        py::arg("id"));
  m.def("reproduce_fig",
        [](const std::string& id, const std::string& out_dir) {
          std::vector<std::string> paths;
          for (const auto& p : reproduce_fig(parse_figure_id(id), out_dir)) paths.push_back(p.string());
          return paths;
        },
        py::arg("id"), py::arg("out_dir"));
  m.def("validate",
        [](double omega_corruption) {
          py::list out;
          for (const auto& r : run_validation({.omega_corruption = omega_corruption})) {
            py::dict d;
            d["name"] = r.name;
            d["module"] = r.module;
            d["relation"] = r.relation;
            d["tolerance"] = r.tolerance;
            d["observed"] = r.observed;
            d["passed"] = r.passed;
            out.append(d);
          }
          return out;
        },
        py::arg("omega_corruption") = 1.0);
}
