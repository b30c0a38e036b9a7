#include "ruled/kernels.hpp"

#include <cmath>
#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ruled::kernels {

namespace {

SweepRow sweep_row(const RuledSurface& surface, double s, const Tolerance& tol) {
  SweepRow row;
  row.s = s;
  const FrenetFrame f = surface.frame(s, tol);
  row.k1 = f.k1;
  row.k2 = f.k2;
  if (std::abs(f.k2) > tol.zero_tol * f.k1) {
    row.h = f.k1 / f.k2;
  } else {
    row.flags |= kHUndefined;
  }

  const FrameVector lambda = surface.base_lambda();
  const FrameVector& x = surface.director().vector();
  const DistributionReport paper =
      evaluate_closed_form(lambda, x, f.k1, f.k2, DenominatorConvention::PaperExpanded, tol.zero_tol);
  const DistributionReport lor =
      evaluate_closed_form(lambda, x, f.k1, f.k2, DenominatorConvention::Lorentzian, tol.zero_tol);
  row.numerator = paper.numerator;
  row.denominator_paper = paper.denominator;
  row.denominator_lorentzian = lor.denominator;
  row.p_paper = paper.value;
  row.p_lorentzian = lor.value;
  if (!row.p_paper) row.flags |= kPaperUndefined;
  if (!row.p_lorentzian) row.flags |= kLorentzianUndefined;

  const StrictionOffset st = striction_offset_at(surface, f, tol);
  row.striction_offset = st.offset;
  row.striction_coincides = st.coincides_with_base;
  if (st.failure == ErrorCode::CylinderStriction) row.flags |= kCylinder;
  if (st.failure == ErrorCode::NullRulingDerivative) row.flags |= kNullRulingDerivative;

  row.director_derivative_norm = euclid_norm(surface.director_derivative_at(f));
  row.base_director_inner = inner(surface.base_derivative(f), surface.director_at(f));
  return row;
}

void rethrow_first(const std::vector<std::exception_ptr>& errors) {
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

// Runs body(i) for i in [0, n) across OpenMP threads. Exceptions cannot cross
// the parallel region, so each one is parked in its slot and the lowest index
// is rethrown afterwards, matching what the serial loop would throw.
template <class Body>
void parallel_for(std::size_t n, const Body& body) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  rethrow_first(errors);
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<SweepRow> sweep_serial(const RuledSurface& surface, std::span<const double> grid, const Tolerance& tol) {
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double s : grid) rows.push_back(sweep_row(surface, s, tol));
  return rows;
}

std::vector<SweepRow> sweep_parallel(const RuledSurface& surface, std::span<const double> grid,
                                     const Tolerance& tol) {
  std::vector<SweepRow> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { rows[i] = sweep_row(surface, grid[i], tol); });
  return rows;
}

std::vector<SweepRow> sweep(const RuledSurface& surface, std::span<const double> grid, const Tolerance& tol,
                            Execution exec) {
  return exec == Execution::Serial ? sweep_serial(surface, grid, tol) : sweep_parallel(surface, grid, tol);
}

std::vector<Vec3> mesh_serial(const RuledSurface& surface, std::span<const double> s_grid,
                              std::span<const double> v_grid, const Tolerance& tol) {
  std::vector<Vec3> out;
  out.reserve(s_grid.size() * v_grid.size());
  for (double s : s_grid) {
    const Vec3 base = surface.base_point(s);
    const Vec3 X = surface.director_at(surface.frame(s, tol));
    for (double v : v_grid) out.push_back(base + v * X);
  }
  return out;
}

std::vector<Vec3> mesh_parallel(const RuledSurface& surface, std::span<const double> s_grid,
                                std::span<const double> v_grid, const Tolerance& tol) {
  std::vector<Vec3> out(s_grid.size() * v_grid.size());
  const std::size_t nv = v_grid.size();
  parallel_for(s_grid.size(), [&](std::size_t i) {
    const Vec3 base = surface.base_point(s_grid[i]);
    const Vec3 X = surface.director_at(surface.frame(s_grid[i], tol));
    for (std::size_t j = 0; j < nv; ++j) out[i * nv + j] = base + v_grid[j] * X;
  });
  return out;
}

std::vector<Vec3> mesh(const RuledSurface& surface, std::span<const double> s_grid, std::span<const double> v_grid,
                       const Tolerance& tol, Execution exec) {
  return exec == Execution::Serial ? mesh_serial(surface, s_grid, v_grid, tol)
                                   : mesh_parallel(surface, s_grid, v_grid, tol);
}

std::vector<DistributionReport> oracle_serial(const RuledSurface& surface, std::span<const double> grid,
                                              DenominatorConvention conv, const Tolerance& tol) {
  std::vector<DistributionReport> out;
  out.reserve(grid.size());
  for (double s : grid) out.push_back(evaluate_oracle(surface, s, conv, tol));
  return out;
}

std::vector<DistributionReport> oracle_parallel(const RuledSurface& surface, std::span<const double> grid,
                                                DenominatorConvention conv, const Tolerance& tol) {
  std::vector<DistributionReport> out(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { out[i] = evaluate_oracle(surface, grid[i], conv, tol); });
  return out;
}

std::vector<DistributionReport> oracle(const RuledSurface& surface, std::span<const double> grid,
                                       DenominatorConvention conv, const Tolerance& tol, Execution exec) {
  return exec == Execution::Serial ? oracle_serial(surface, grid, conv, tol)
                                   : oracle_parallel(surface, grid, conv, tol);
}

}  // namespace ruled::kernels
