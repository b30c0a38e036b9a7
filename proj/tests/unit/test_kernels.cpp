#include <doctest.h>

#include <cstring>
#include <random>

#include "../support.hpp"
#include "errors_util.hpp"
#include "ruled/analysis.hpp"
#include "ruled/companion.hpp"
#include "ruled/kernels.hpp"
#include "ruled/numerics.hpp"

using namespace ruled;
using namespace ruled::kernels;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool same_bits(const std::optional<double>& a, const std::optional<double>& b) {
  return a.has_value() == b.has_value() && (!a || same_bits(*a, *b));
}

bool same_row(const SweepRow& a, const SweepRow& b) {
  return same_bits(a.s, b.s) && same_bits(a.k1, b.k1) && same_bits(a.k2, b.k2) && same_bits(a.h, b.h) &&
         same_bits(a.p_paper, b.p_paper) && same_bits(a.p_lorentzian, b.p_lorentzian) &&
         same_bits(a.numerator, b.numerator) && same_bits(a.striction_offset, b.striction_offset) &&
         same_bits(a.director_derivative_norm, b.director_derivative_norm) &&
         same_bits(a.base_director_inner, b.base_director_inner) && a.flags == b.flags &&
         a.striction_coincides == b.striction_coincides;
}

}  // namespace

TEST_CASE("serial and parallel kernels are bit-identical") {
  const auto curve = testing::make_curve(testing::hyperbolic());
  const auto grid = numerics::uniform_grid(-2.9, 2.9, 257);
  const auto vgrid = numerics::uniform_grid(-1.0, 1.0, 9);
  auto beta = std::make_shared<const CompanionCurve>(integrate_companion(curve, CompanionSpec{{0.2, 1.0, 0.5}, {}}));
  for (const auto& surf : {RuledSurface::over_base(curve, validate_coefficients(1, 1, 1, 1)),
                           RuledSurface::over_companion(beta, validate_coefficients(0.75, 0, 1.25, 1))}) {
    const auto a = sweep_serial(surf, grid);
    const auto b = sweep_parallel(surf, grid);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(same_row(a[i], b[i]));

    const auto m1 = mesh_serial(surf, grid, vgrid);
    const auto m2 = mesh_parallel(surf, grid, vgrid);
    REQUIRE(m1.size() == grid.size() * vgrid.size());
    CHECK(std::memcmp(m1.data(), m2.data(), m1.size() * sizeof(Vec3)) == 0);

    for (auto conv : {DenominatorConvention::PaperExpanded, DenominatorConvention::Lorentzian}) {
      const auto o1 = oracle_serial(surf, grid, conv);
      const auto o2 = oracle_parallel(surf, grid, conv);
      for (std::size_t i = 0; i < o1.size(); ++i) {
        CHECK(same_bits(o1[i].numerator, o2[i].numerator));
        CHECK(same_bits(o1[i].value, o2[i].value));
      }
    }
  }
  CHECK(max_threads() >= 1);
}

TEST_CASE("parallel kernels rethrow the error of the lowest failing sample") {
  const auto curve = testing::make_curve(testing::circular());
  const auto surf = RuledSurface::over_base(curve, validate_coefficients(0, 1, 0, 1));
  std::vector<double> grid = numerics::uniform_grid(-2.0, 2.0, 40);
  grid[7] = 7.5;
  grid[31] = -9.0;
  std::string serial_msg, parallel_msg;
  try {
    sweep_serial(surf, grid);
  } catch (const GeometryError& e) {
    serial_msg = e.what();
  }
  try {
    sweep_parallel(surf, grid);
  } catch (const GeometryError& e) {
    parallel_msg = e.what();
  }
  CHECK_FALSE(serial_msg.empty());
  CHECK(serial_msg == parallel_msg);
}

TEST_CASE("mesh v = 0 row is the base curve") {
  const auto curve = testing::make_curve(testing::circular());
  const auto surf = RuledSurface::over_base(curve, validate_coefficients(0, 0.6, 0.8, 1));
  const auto grid = numerics::uniform_grid(-2.0, 2.0, 11);
  const std::vector<double> vgrid{-1.0, 0.0, 1.0};
  const auto m = mesh(surf, grid, vgrid, {}, Execution::Parallel);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(m[i * 3 + 1] == curve->position(grid[i]));
}

TEST_CASE("sweep rows are internally consistent") {
  const auto p = testing::circular();
  const auto curve = testing::make_curve(p);
  const auto surf = RuledSurface::over_base(curve, validate_coefficients(0, 1, 0, 1));
  for (const auto& r : sweep(surf, numerics::uniform_grid(-2.5, 2.5, 21), {}, Execution::Parallel)) {
    REQUIRE(r.p_paper);
    REQUIRE(r.p_lorentzian);
    CHECK(*r.p_paper == doctest::Approx(r.numerator / r.denominator_paper));
    CHECK(*r.p_lorentzian == doctest::Approx(r.numerator / r.denominator_lorentzian));
    CHECK(*r.h == doctest::Approx(r.k1 / r.k2));
    CHECK(r.flags == 0u);
  }
}

TEST_CASE("developability verdicts") {
  const auto grid = numerics::uniform_grid(-2.5, 2.5, 51);
  const auto circ = testing::make_curve(testing::circular());
  const auto hyp = testing::make_curve(testing::hyperbolic());

  const auto tangent = developability_verdict(RuledSurface::over_base(circ, validate_coefficients(1, 0, 0, -1)), grid);
  CHECK(tangent.developable);
  CHECK_FALSE(tangent.cylinder);
  CHECK(tangent.max_abs_P <= 1e-8);

  const auto normal = developability_verdict(RuledSurface::over_base(circ, validate_coefficients(0, 1, 0, 1)), grid);
  CHECK_FALSE(normal.developable);
  CHECK(normal.max_abs_P == doctest::Approx(1.2).epsilon(1e-12));
  REQUIRE(normal.witnesses.size() == 2);

  const auto cyl_surface =
      RuledSurface::over_base(hyp, validate_coefficients(1 / std::sqrt(3.0), 0, 2 / std::sqrt(3.0), 1));
  const auto cyl = developability_verdict(cyl_surface, grid);
  CHECK(cyl.cylinder);
  CHECK(cyl.developable);
  CHECK(cyl.undefined_count == grid.size());
  CHECK(cylinder_check(cyl_surface, grid));

  VerdictOptions serial;
  serial.execution = Execution::Serial;
  serial.convention = DenominatorConvention::Lorentzian;
  const auto gen = developability_verdict(RuledSurface::over_base(hyp, validate_coefficients(1, 1, 1, 1)), grid, serial);
  CHECK(gen.developable);
}

TEST_CASE("mannheim ratio is constant on helices and not on the variable-pitch curve") {
  const auto grid = numerics::uniform_grid(-2.5, 2.5, 31);
  const auto m = mannheim_constancy(*testing::make_curve(testing::circular()), grid);
  CHECK(m.constant);
  CHECK(m.mean == doctest::Approx(0.6).epsilon(1e-12));
  const ProperTimeCurve vp =
      reparametrize_proper_time(catalogue::variable_pitch_helix(1, 2, 0.3, {0.0, 3.0}), 0.0);
  const auto vg = numerics::uniform_grid(vp.domain().lo + 0.1, vp.domain().hi - 0.1, 31);
  CHECK_FALSE(mannheim_constancy(vp, vg).constant);
}

TEST_CASE("case table") {
  const auto grid = numerics::uniform_grid(-2.5, 2.5, 21);
  const auto rows = case_table(testing::make_curve(testing::circular()), grid);
  REQUIRE(rows.size() == 18);
  for (const auto& r : rows) CHECK(r.max_oracle_deviation < 1e-6);
  // lambda = T: tangent surface developable, N and B rulings not.
  CHECK(rows[0].pattern == ZeroPattern::Zero);
  CHECK(rows[1].pattern == ZeroPattern::Nonzero);
  CHECK(rows[1].p_min == doctest::Approx(1.2).epsilon(1e-9));
  CHECK(rows[2].p_min == doctest::Approx(1.5).epsilon(1e-9));
  // lambda = N: all three axis rulings give P = 0.
  for (int i = 6; i < 9; ++i) CHECK(rows[i].pattern == ZeroPattern::Zero);
  // lambda = B: P_T = 1 / k1, P_N = -0.6, P_B = 0.
  CHECK(rows[12].p_min == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(rows[13].p_min == doctest::Approx(-0.6).epsilon(1e-9));
  CHECK(rows[14].pattern == ZeroPattern::Zero);
}
