#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ruled/analysis.hpp"
#include "ruled/companion.hpp"
#include "ruled/distribution.hpp"
#include "ruled/kernels.hpp"
#include "ruled/surface.hpp"

namespace ruled::scenario {

enum class CurveKind { CircularHelix, HyperbolicHelix, Line, PlanarFixture };
enum class Output { Report, Mesh, Sweep, Striction, CaseTable };

struct CurveSpec {
  CurveKind kind = CurveKind::CircularHelix;
  double a = 1.0;
  double b = 2.0;
};

struct DirectorSpec {
  double x1 = 0.0;
  double x2 = 1.0;
  double x3 = 0.0;
  int causal_sign = 1;
};

struct GridSpec {
  double s_min = -1.0;
  double s_max = 1.0;
  std::size_t n_s = 101;
  double v_min = -1.0;
  double v_max = 1.0;
  std::size_t n_v = 21;
};

/// Single JSON document:
///   {"curve": {"kind": ..., "a": ..., "b": ...},
///    "base": "alpha" | {"companion": [l1, l2, l3]},
///    "director": {"x1": ..., "x2": ..., "x3": ..., "causal_sign": +-1},
///    "grid": {"s_min", "s_max", "n_s", "v_min", "v_max", "n_v"},
///    "convention": "paper" | "lorentzian",
///    "outputs": ["report", "mesh", "sweep", "striction", "case_table"],
///    "tol": verdict tolerance}
/// Unknown keys are rejected.
struct Scenario {
  CurveSpec curve;
  std::optional<FrameVector> companion;
  DirectorSpec director;
  GridSpec grid;
  DenominatorConvention convention = DenominatorConvention::PaperExpanded;
  std::set<Output> outputs{Output::Report, Output::Mesh, Output::Sweep, Output::Striction, Output::CaseTable};
  double verdict_tol = kDefaultVerdictTol;
};

/// Throws GeometryError(ConfigInvalid) naming the offending field.
Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::string& path);

/// Parses "<n_s>x<n_v>".
std::pair<std::size_t, std::size_t> parse_grid_override(std::string_view text);
DenominatorConvention parse_convention(std::string_view text);

/// Curve, companion, surface and sample grids built from a validated scenario.
struct Model {
  CurvePtr alpha;
  CompanionPtr beta;
  std::optional<RuledSurface> surface;
  std::vector<double> s_grid;  // inset by 3 fd_step from the curve domain
  std::vector<double> v_grid;
};

/// Upstream validation failures (director, companion, curve parameters) are
/// rethrown as ConfigInvalid naming the scenario field.
Model build_model(const Scenario& sc, const Tolerance& tol = {});

struct RunOptions {
  Tolerance tol{};
  kernels::Execution execution = kernels::Execution::Parallel;
};

/// JSON analysis report.
std::string run_scenario(const Scenario& sc, const RunOptions& opts = {});

/// Wavefront OBJ: n_s * n_v vertices (s outer, v inner), two triangles per cell.
std::string export_mesh(const Scenario& sc, const RunOptions& opts = {});

/// CSV with header s,k1,k2,h,P_paper,P_lorentzian,numerator,striction_offset,flags.
std::string export_sweep(const Scenario& sc, const RunOptions& opts = {});

/// JSON case catalogue over the scenario's curve and grid.
std::string export_case_table(const Scenario& sc, const RunOptions& opts = {});

/// 17 significant digits; round-trips exactly.
std::string format_real(double x);

inline constexpr std::string_view kSweepHeader = "s,k1,k2,h,P_paper,P_lorentzian,numerator,striction_offset,flags";

}  // namespace ruled::scenario
