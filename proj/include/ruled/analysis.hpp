#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ruled/distribution.hpp"
#include "ruled/kernels.hpp"
#include "ruled/surface.hpp"

namespace ruled {

inline constexpr double kDefaultVerdictTol = 1e-7;
inline constexpr double kDefaultCylinderTol = 1e-9;

struct Witness {
  double s = 0.0;
  double P = 0.0;
};

struct DevelopabilityVerdict {
  bool developable = false;
  bool cylinder = false;
  DenominatorConvention convention = DenominatorConvention::PaperExpanded;
  double max_abs_P = 0.0;          // over samples where P is defined
  double max_abs_numerator = 0.0;  // over all samples
  std::vector<Witness> witnesses;  // extremes of |P|: largest first, then smallest
  std::size_t samples = 0;
  std::size_t undefined_count = 0;
};

struct VerdictOptions {
  DenominatorConvention convention = DenominatorConvention::PaperExpanded;
  double verdict_tol = kDefaultVerdictTol;
  double cylinder_tol = kDefaultCylinderTol;
  Tolerance tol{};
  kernels::Execution execution = kernels::Execution::Parallel;
};

/// Developable iff max |P| <= verdict_tol over the grid, or the surface is a
/// cylinder. Points with undefined P are counted and skipped.
DevelopabilityVerdict developability_verdict(const RuledSurface& surface, std::span<const double> grid,
                                             const VerdictOptions& opts = {});

/// Same verdict from precomputed sweep rows.
DevelopabilityVerdict verdict_from_rows(std::span<const kernels::SweepRow> rows, const VerdictOptions& opts = {});

/// True iff max over the grid of the Euclidean norm of X' is <= tol.
bool cylinder_check(const RuledSurface& surface, std::span<const double> grid, double tol = kDefaultCylinderTol,
                    const Tolerance& numeric = {});

struct MannheimResult {
  bool constant = false;
  double mean = 0.0;             // mean of k1 / (k1^2 + k2^2)
  double relative_spread = 0.0;  // (max - min) / |mean|
};

/// Constancy of k1 / (k1^2 + k2^2), i.e. of |P_N| for base' = B.
MannheimResult mannheim_constancy(const ProperTimeCurve& alpha, std::span<const double> grid, double tol = 1e-6,
                                  const Tolerance& numeric = {});

enum class ZeroPattern { Zero, Nonzero, Undefined };

std::string_view to_string(ZeroPattern p);

/// One (lambda, director class) row of the special-case catalogue.
struct CaseRow {
  FrameVector lambda;
  PlaneClass case_class = PlaneClass::General;
  FrameVector x;
  int causal_sign = 1;
  // numerator = a k1 + b k2
  double numerator_k1 = 0.0;
  double numerator_k2 = 0.0;
  // denominator (paper convention) = c11 k1^2 + c12 k1 k2 + c22 k2^2
  double denominator_k1k1 = 0.0;
  double denominator_k1k2 = 0.0;
  double denominator_k2k2 = 0.0;
  double p_min = 0.0;
  double p_max = 0.0;
  double max_oracle_deviation = 0.0;  // |closed form - oracle| over the grid
  std::size_t undefined_count = 0;
  ZeroPattern pattern = ZeroPattern::Undefined;
};

/// Director samples used by the catalogue, one per class.
FrameCoefficients case_sample(PlaneClass c);

/// The three axis companions base' = T, N, B.
inline constexpr FrameVector kAxisLambdas[3] = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};

inline constexpr PlaneClass kCatalogueClasses[6] = {PlaneClass::AxisT,       PlaneClass::AxisN,
                                                    PlaneClass::AxisB,       PlaneClass::NormalPlane,
                                                    PlaneClass::OsculatingPlane, PlaneClass::RectifyingPlane};

/// 18 rows: each axis lambda against each director class, evaluated in
/// closed form and by the oracle over the grid (paper convention).
std::vector<CaseRow> case_table(const CurvePtr& alpha, std::span<const double> grid,
                                double verdict_tol = kDefaultVerdictTol, const Tolerance& tol = {},
                                kernels::Execution exec = kernels::Execution::Parallel);

}  // namespace ruled
