#include "ckosc/figures.hpp"

#include <cmath>
#include <numbers>

#include "ckosc/classical.hpp"
#include "ckosc/output.hpp"
#include "ckosc/quantum.hpp"
#include "ckosc/scenario_file.hpp"

namespace ckosc {

FigureId parse_figure_id(std::string_view id) {
  if (id == "1a") return FigureId::Fig1a;
  if (id == "1b") return FigureId::Fig1b;
  if (id == "2") return FigureId::Fig2;
  if (id == "3a") return FigureId::Fig3a;
  if (id == "3b") return FigureId::Fig3b;
  throw Error(ErrorCode::UnknownFigure,
              "unknown figure '" + std::string(id) + "' (expected 1a, 1b, 2, 3a or 3b)");
}

std::string figure_name(FigureId id) {
  switch (id) {
    case FigureId::Fig1a: return "1a";
    case FigureId::Fig1b: return "1b";
    case FigureId::Fig2: return "2";
    case FigureId::Fig3a: return "3a";
    case FigureId::Fig3b: return "3b";
  }
  return "?";
}

Scenario figure_scenario(FigureId id) {
  Scenario s;
  s.params = {.m = 1.0, .omega0 = 1.0, .gamma = 0.1, .hbar = 1.0};
  s.init = {.Q0 = 3.0, .varphi = 0.0};
  s.grid = {.t_end = 20.0, .dt = 0.01};

  TmafmForce cantilever{.F_ext = 0.3, .k = 0.5, .D0 = 0.5, .a0 = 0.3, .omega_d = 0.3, .m_eff = 1.0};
  switch (id) {
    case FigureId::Fig1a:
      s.force = cantilever;
      break;
    case FigureId::Fig1b:
      s.params.omega0 = 1.5;
      cantilever.omega_d = 0.6;
      s.force = cantilever;
      break;
    case FigureId::Fig2:
      s.force = SawtoothForce{.f0 = 1.0, .m = 1.0, .omega_d = 2.0 * std::numbers::pi, .n_terms = 1000};
      break;
    case FigureId::Fig3a:
      s.force = SawtoothForce{.f0 = 1.0, .m = 1.0, .omega_d = 0.3, .n_terms = 1000};
      break;
    case FigureId::Fig3b:
      s.init.Q0 = 1.0;
      s.force = SawtoothForce{.f0 = 2.0, .m = 1.0, .omega_d = 1.2, .n_terms = 1000};
      break;
  }
  return validate_scenario(s);
}

const std::vector<double>& FigureData::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return columns[i];
  }
  throw Error(ErrorCode::ParseError, "figure data has no column '" + std::string(name) + "'");
}

FigureData figure_data(FigureId id) {
  FigureData d;
  if (id == FigureId::Fig2) {
    const auto saw = std::get<SawtoothForce>(figure_scenario(id).force);
    const double tau = 2.0 * std::numbers::pi / saw.omega_d;
    const int n = 3000;
    d.header = {"t", "f_n3", "f_n1000", "f_ramp"};
    d.columns.assign(4, {});
    for (int i = 0; i <= n; ++i) {
      const double t = tau * (-1.5 + static_cast<double>(i) / 1000.0);
      d.columns[0].push_back(t);
      d.columns[1].push_back(sawtooth_series(saw.f0, saw.m, saw.omega_d, 3, t));
      d.columns[2].push_back(sawtooth_series(saw.f0, saw.m, saw.omega_d, 1000, t));
      d.columns[3].push_back(sawtooth_ramp_oracle(saw.f0, saw.m, saw.omega_d, t));
    }
    return d;
  }

  const Scenario s = figure_scenario(id);
  OscillatorParams classical_limit = s.params;
  classical_limit.hbar = 0.0;

  d.header = {"t", "E_quantum", "E_quantum_hbar0", "E_classical", "zero_point", "Q", "Qdot", "f_of_t"};
  d.columns.assign(d.header.size(), {});
  for (const auto& pt : trajectory(s)) {
    const auto e = quantum_energy(s.params, pt);
    const auto e0 = quantum_energy(classical_limit, pt);
    const double row[] = {pt.t, e.e_quantum, e0.e_quantum, e.e_classical, e.zero_point,
                          pt.Q, pt.Qdot, eval_force(s.force, pt.t)};
    for (std::size_t c = 0; c < d.columns.size(); ++c) d.columns[c].push_back(row[c]);
  }
  return d;
}

PlotSpec figure_plot(FigureId id, const FigureData& data) {
  PlotSpec p;
  const auto& t = data.column("t");
  if (id == FigureId::Fig2) {
    p.title = "Sawtooth driving force (f0=1, m=1, tau=1)";
    p.x_label = "t";
    p.y_label = "f(t)";
    p.series.push_back({"n = 3", "blue", SeriesStyle::Dashed, t, data.column("f_n3")});
    p.series.push_back({"n = 1000", "red", SeriesStyle::Line, t, data.column("f_n1000")});
    return p;
  }
  const bool cantilever = id == FigureId::Fig1a || id == FigureId::Fig1b;
  p.title = std::string(cantilever ? "Cantilever (TMAFM)" : "Sawtooth-driven oscillator") +
            " energy, figure " + figure_name(id);
  p.x_label = "t";
  p.y_label = "E(t)";
  p.series.push_back({"quantum energy (hbar = 1)", cantilever ? "red" : "darkviolet", SeriesStyle::Line, t,
                      data.column("E_quantum")});
  p.series.push_back({"quantum energy (hbar -> 0)", cantilever ? "blue" : "green", SeriesStyle::Line, t,
                      data.column("E_quantum_hbar0")});
  p.series.push_back({"classical energy", "black",
                      cantilever ? SeriesStyle::Circles : SeriesStyle::Triangles, t,
                      data.column("E_classical"), 40});
  return p;
}

std::vector<std::filesystem::path> reproduce_fig(FigureId id, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create directory " + out_dir.string() + ": " + ec.message());

  const std::string stem = "fig" + figure_name(id);
  const FigureData data = figure_data(id);
  ScenarioFile file;
  file.scenario = figure_scenario(id);

  std::vector<std::filesystem::path> written = {out_dir / (stem + ".csv"), out_dir / (stem + ".svg"),
                                                out_dir / (stem + ".ini")};
  write_text_file(written[0], format_table(data.header, data.columns));
  write_text_file(written[1], render_svg(figure_plot(id, data)));
  write_text_file(written[2], format_scenario(file));
  return written;
}

}  // namespace ckosc
