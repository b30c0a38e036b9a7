#pragma once

// Grid kernels. Each has a serial reference implementation and an OpenMP
// implementation that writes every sample to its own slot, so both produce
// bit-identical output for the same input.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ruled/distribution.hpp"
#include "ruled/surface.hpp"

namespace ruled::kernels {

enum class Execution { Serial, Parallel };

enum SweepFlag : std::uint32_t {
  kHUndefined = 1u << 0,
  kPaperUndefined = 1u << 1,
  kLorentzianUndefined = 1u << 2,
  kCylinder = 1u << 3,
  kNullRulingDerivative = 1u << 4,
};

struct SweepRow {
  double s = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;
  std::optional<double> h;  // k1 / k2
  std::optional<double> p_paper;
  std::optional<double> p_lorentzian;
  double numerator = 0.0;
  double denominator_paper = 0.0;
  double denominator_lorentzian = 0.0;
  std::optional<double> striction_offset;
  bool striction_coincides = false;
  double director_derivative_norm = 0.0;  // Euclidean |X'|
  double base_director_inner = 0.0;       // <base', X>
  std::uint32_t flags = 0;
};

/// Closed-form distribution parameters (both conventions), curvatures and
/// striction offsets at every grid point.
std::vector<SweepRow> sweep_serial(const RuledSurface& surface, std::span<const double> grid, const Tolerance& tol = {});
std::vector<SweepRow> sweep_parallel(const RuledSurface& surface, std::span<const double> grid,
                                     const Tolerance& tol = {});
std::vector<SweepRow> sweep(const RuledSurface& surface, std::span<const double> grid, const Tolerance& tol,
                            Execution exec);

/// Phi on the tensor grid, row-major with s outer and v inner.
std::vector<Vec3> mesh_serial(const RuledSurface& surface, std::span<const double> s_grid,
                              std::span<const double> v_grid, const Tolerance& tol = {});
std::vector<Vec3> mesh_parallel(const RuledSurface& surface, std::span<const double> s_grid,
                                std::span<const double> v_grid, const Tolerance& tol = {});
std::vector<Vec3> mesh(const RuledSurface& surface, std::span<const double> s_grid, std::span<const double> v_grid,
                       const Tolerance& tol, Execution exec);

/// Finite-difference oracle at every grid point.
std::vector<DistributionReport> oracle_serial(const RuledSurface& surface, std::span<const double> grid,
                                              DenominatorConvention conv, const Tolerance& tol = {});
std::vector<DistributionReport> oracle_parallel(const RuledSurface& surface, std::span<const double> grid,
                                                DenominatorConvention conv, const Tolerance& tol = {});
std::vector<DistributionReport> oracle(const RuledSurface& surface, std::span<const double> grid,
                                       DenominatorConvention conv, const Tolerance& tol, Execution exec);

/// Number of OpenMP threads the parallel kernels would use (1 without OpenMP).
int max_threads();

}  // namespace ruled::kernels
