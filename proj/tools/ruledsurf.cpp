// ruledsurf: scenario-driven front end for the ruled surface library.
//
//   ruledsurf analyze    <scenario.json>
//   ruledsurf mesh       <scenario.json> [-o out.obj]
//   ruledsurf sweep      <scenario.json> [-o out.csv]
//   ruledsurf case-table <scenario.json>
//
// Exit codes: 0 success, 2 validation error, 3 numeric degeneracy.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ruled/errors.hpp"
#include "ruled/scenario.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;

struct GlobalFlags {
  std::optional<std::string> convention;
  std::optional<double> tol;
  std::optional<std::string> grid;
  bool serial = false;
};

ruled::scenario::Scenario load_with_overrides(const std::string& path, const GlobalFlags& g) {
  using namespace ruled::scenario;
  Scenario sc = load_scenario(path);
  if (g.convention) sc.convention = parse_convention(*g.convention);
  if (g.tol) {
    if (!(*g.tol > 0.0)) throw ruled::GeometryError(ruled::ErrorCode::ConfigInvalid, "--tol: must be positive");
    sc.verdict_tol = *g.tol;
  }
  if (g.grid) {
    const auto [ns, nv] = parse_grid_override(*g.grid);
    sc.grid.n_s = ns;
    sc.grid.n_v = nv;
  }
  return sc;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ruled::GeometryError(ruled::ErrorCode::ConfigInvalid, "-o: cannot open '" + out_path + "'");
  out << text;
  if (!out.flush()) throw ruled::GeometryError(ruled::ErrorCode::ConfigInvalid, "-o: write failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ruled surfaces over timelike curves in Minkowski 3-space"};
  app.require_subcommand(1);

  GlobalFlags g;
  app.add_option("--convention", g.convention, "Denominator convention: paper | lorentzian")
      ->check(CLI::IsMember({"paper", "lorentzian"}));
  app.add_option("--tol", g.tol, "Developability verdict tolerance");
  app.add_option("--grid", g.grid, "Grid override <n_s>x<n_v>");
  app.add_flag("--serial", g.serial, "Use the serial reference kernels");

  std::string scenario_path;
  std::string out_path;

  auto* analyze = app.add_subcommand("analyze", "Print the JSON analysis report");
  auto* mesh = app.add_subcommand("mesh", "Export the surface as an OBJ mesh");
  auto* sweep = app.add_subcommand("sweep", "Export the per-sample CSV sweep");
  auto* cases = app.add_subcommand("case-table", "Print the special-case catalogue as JSON");
  for (auto* sub : {analyze, mesh, sweep, cases}) {
    sub->fallthrough();
    sub->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  }
  mesh->add_option("-o,--output", out_path, "Output file (default stdout)");
  sweep->add_option("-o,--output", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  ruled::scenario::RunOptions opts;
  if (g.serial) opts.execution = ruled::kernels::Execution::Serial;

  try {
    const auto sc = load_with_overrides(scenario_path, g);
    if (analyze->parsed()) {
      emit(ruled::scenario::run_scenario(sc, opts), "");
    } else if (mesh->parsed()) {
      emit(ruled::scenario::export_mesh(sc, opts), out_path);
    } else if (sweep->parsed()) {
      emit(ruled::scenario::export_sweep(sc, opts), out_path);
    } else {
      emit(ruled::scenario::export_case_table(sc, opts), "");
    }
  } catch (const ruled::GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ruled::is_validation_error(e.code()) ? kExitValidation : kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return 0;
}
