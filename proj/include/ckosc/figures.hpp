#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ckosc/model.hpp"
#include "ckosc/svg_plot.hpp"

namespace ckosc {

enum class FigureId { Fig1a, Fig1b, Fig2, Fig3a, Fig3b };

inline constexpr std::array<FigureId, 5> kAllFigures = {FigureId::Fig1a, FigureId::Fig1b,
                                                       FigureId::Fig2, FigureId::Fig3a,
                                                       FigureId::Fig3b};

/// "1a", "1b", "2", "3a", "3b"; anything else throws Error(UnknownFigure).
FigureId parse_figure_id(std::string_view id);
std::string figure_name(FigureId id);

/// Built-in, validated scenario for a figure on t in [0, 20], dt = 0.01.
///
///  1a/1b: cantilever drive, F_ext=0.3, k=0.5, D0=0.5, a0=0.3, m_eff=1,
///         m=1, gamma=0.1, hbar=1, Q0=3, varphi=0; (omega0, omega_d) =
///         (1, 0.3) and (1.5, 0.6). k and omega0 are used independently.
///  2:     sawtooth f0=1, m=1, tau=1, n=1000 driving the oscillator
///         m=1, omega0=1, gamma=0.1, hbar=1, Q0=3, varphi=0.
///  3a/3b: sawtooth n=1000 on m=1, omega0=1, gamma=0.1, hbar=1, varphi=0
///         with (Q0, omega_d, f0) = (3, 0.3, 1) and (1, 1.2, 2).
Scenario figure_scenario(FigureId id);

/// Tabulated figure data: named columns of equal length.
struct FigureData {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  const std::vector<double>& column(std::string_view name) const;
};

/// Energy figures: t, E_quantum, E_quantum_hbar0, E_classical, zero_point,
/// Q, Qdot, f_of_t. Figure 2: t, f_n3, f_n1000, f_ramp over t in
/// [-1.5 tau, 1.5 tau] with step tau/1000.
FigureData figure_data(FigureId id);

PlotSpec figure_plot(FigureId id, const FigureData& data);

/// Writes fig<id>.csv, fig<id>.svg and the scenario file fig<id>.ini into
/// out_dir (created if needed). Returns the written paths.
std::vector<std::filesystem::path> reproduce_fig(FigureId id, const std::filesystem::path& out_dir);

}  // namespace ckosc
