#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ckosc/model.hpp"

namespace ckosc {

/// Column names of a run CSV, in their fixed order.
const std::vector<std::string>& output_columns();

/// A scenario plus the [output] section of a scenario file.
struct ScenarioFile {
  Scenario scenario;
  std::vector<std::string> columns = output_columns();
  std::string format = "csv";
};

/// Parses the INI-style scenario format:
///
///   [oscillator]  m, omega0, gamma, hbar (default 1)
///   [initial]     Q0, varphi (default 0), chi (default pi/2)
///   [force]       type = zero | constant | tmafm | sawtooth | tabulated, plus
///                 constant: f0
///                 tmafm: F_ext, k, D0, a0, omega_d, m_eff
///                 sawtooth: f0, omega_d, n_terms (default 1000),
///                           m (default: oscillator mass)
///                 tabulated: t, f (comma-separated lists)
///   [grid]        t_end, dt
///   [output]      columns (comma-separated subset, default all), format (csv)
///
/// '#' and ';' start comments. Unknown sections or keys, duplicates and
/// missing required keys raise Error(ParseError) naming the line and key.
/// Model-level invariants are re-checked (Error with the model's code).
ScenarioFile parse_scenario(std::string_view text);

ScenarioFile load_scenario(const std::filesystem::path& path);

/// Inverse of parse_scenario; numbers use shortest round-trip formatting.
std::string format_scenario(const ScenarioFile& file);

}  // namespace ckosc
