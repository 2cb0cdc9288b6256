#include "ckosc/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "ckosc/classical.hpp"
#include "ckosc/quantum.hpp"

namespace ckosc {

double OutputRow::column(const std::string& name) const {
  if (name == "t") return t;
  if (name == "Q") return Q;
  if (name == "Qdot") return Qdot;
  if (name == "P") return P;
  if (name == "P_k") return P_k;
  if (name == "E_classical") return E_classical;
  if (name == "E_quantum") return E_quantum;
  if (name == "zero_point") return zero_point;
  if (name == "delta_q") return delta_q;
  if (name == "delta_p") return delta_p;
  if (name == "uncertainty_product") return uncertainty_product;
  if (name == "f_of_t") return f_of_t;
  throw Error(ErrorCode::ParseError, "unknown output column '" + name + "'");
}

std::vector<OutputRow> simulate(const Scenario& scenario) {
  const auto& params = scenario.params;
  const auto points = trajectory(scenario);
  const double product = uncertainty_product(params);

  std::vector<OutputRow> rows;
  rows.reserve(points.size());
  for (const auto& pt : points) {
    const auto energy = quantum_energy(params, pt);
    OutputRow row;
    row.t = pt.t;
    row.Q = pt.Q;
    row.Qdot = pt.Qdot;
    row.P = pt.P;
    row.P_k = pt.P_k;
    row.E_classical = energy.e_classical;
    row.E_quantum = energy.e_quantum;
    row.zero_point = energy.zero_point;
    row.delta_q = position_spread(params, pt.t);
    row.delta_p = momentum_spread(params, pt.t);
    row.uncertainty_product = product;
    row.f_of_t = eval_force(scenario.force, pt.t);
    rows.push_back(row);
  }
  return rows;
}

std::string format_value(double v) {
  char buf[40];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
  return std::string(buf, ptr);
}

std::string format_csv(const std::vector<OutputRow>& rows, const std::vector<std::string>& columns) {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += columns[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out += ',';
      out += format_value(row.column(columns[i]));
    }
    out += '\n';
  }
  return out;
}

std::string format_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<double>>& columns) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += header[i];
  }
  out += '\n';
  const std::size_t n = columns.empty() ? 0 : columns.front().size();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out += ',';
      out += format_value(columns[c][r]);
    }
    out += '\n';
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

}  // namespace ckosc
