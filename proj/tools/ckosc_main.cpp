#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ckosc/figures.hpp"
#include "ckosc/output.hpp"
#include "ckosc/scenario_file.hpp"
#include "ckosc/validation.hpp"

namespace {

enum ExitCode { kOk = 0, kCheckFailure = 1, kUsage = 2, kIo = 3 };

int exit_code_for(const ckosc::Error& e) {
  switch (e.code()) {
    case ckosc::ErrorCode::ParseError:
    case ckosc::ErrorCode::UnknownFigure:
      return kUsage;
    case ckosc::ErrorCode::IoError:
      return kIo;
    default:
      return kCheckFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Damped, driven Caldirola-Kanai oscillator: classical and quantum solutions"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string csv_path;
  auto* run = app.add_subcommand("run", "Simulate a scenario file and write a CSV");
  run->add_option("scenario", scenario_path, "Scenario file (.ini)")->required();
  run->add_option("-o,--output", csv_path, "Output CSV path")->required();

  std::string figure;
  std::string out_dir = ".";
  auto* fig = app.add_subcommand("reproduce-fig", "Regenerate a built-in figure (CSV, SVG, scenario)");
  fig->add_option("id", figure, "One of 1a, 1b, 2, 3a, 3b")->required();
  fig->add_option("-d,--dir", out_dir, "Output directory");

  bool json = false;
  double omega_corruption = 1.0;
  auto* validate = app.add_subcommand("validate", "Run the invariant suite");
  validate->add_flag("--json", json, "Machine-readable report");
  validate->add_option("--corrupt-omega", omega_corruption,
                       "Test hook: scale the derived frequency by this factor")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*run) {
      const auto file = ckosc::load_scenario(scenario_path);
      const auto rows = ckosc::simulate(file.scenario);
      ckosc::write_text_file(csv_path, ckosc::format_csv(rows, file.columns));
      return kOk;
    }
    if (*fig) {
      const auto id = ckosc::parse_figure_id(figure);
      for (const auto& path : ckosc::reproduce_fig(id, out_dir)) std::cout << path.string() << '\n';
      return kOk;
    }
    if (*validate) {
      const auto results = ckosc::run_validation({.omega_corruption = omega_corruption});
      std::cout << (json ? ckosc::format_report_json(results) : ckosc::format_report_table(results));
      return ckosc::all_passed(results) ? kOk : kCheckFailure;
    }
  } catch (const ckosc::Error& e) {
    std::cerr << "error (" << ckosc::to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kUsage;
}
