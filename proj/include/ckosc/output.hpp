#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ckosc/model.hpp"

namespace ckosc {

/// One CSV row of a run; field order matches output_columns().
struct OutputRow {
  double t = 0.0;
  double Q = 0.0;
  double Qdot = 0.0;
  double P = 0.0;
  double P_k = 0.0;
  double E_classical = 0.0;
  double E_quantum = 0.0;
  double zero_point = 0.0;
  double delta_q = 0.0;
  double delta_p = 0.0;
  double uncertainty_product = 0.0;
  double f_of_t = 0.0;

  /// Value of the named column; throws Error(ParseError) for unknown names.
  double column(const std::string& name) const;
};

/// Full simulation of a validated scenario on its grid.
std::vector<OutputRow> simulate(const Scenario& scenario);

/// Locale-independent scientific notation with 17 significant digits.
std::string format_value(double v);

/// Header line plus one line per row, '\n' terminated.
std::string format_csv(const std::vector<OutputRow>& rows, const std::vector<std::string>& columns);

/// Generic numeric table writer used for figure data.
std::string format_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<double>>& columns);

/// Writes the whole string or throws Error(IoError).
void write_text_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace ckosc
