#include <doctest.h>

#include <cmath>
#include <random>

#include "../support.hpp"
#include "ruled/errors.hpp"
#include "ruled/minkowski.hpp"
#include "ruled/numerics.hpp"

using namespace ruled;

TEST_CASE("inner product has signature (+, +, -)") {
  CHECK(inner({1, 0, 0}, {1, 0, 0}) == 1.0);
  CHECK(inner({0, 1, 0}, {0, 1, 0}) == 1.0);
  CHECK(inner({0, 0, 1}, {0, 0, 1}) == -1.0);
  CHECK(inner({1, 2, 3}, {4, 5, 6}) == 4.0 + 10.0 - 18.0);
}

TEST_CASE("causal character") {
  CHECK(causal_character({1, 0, 0}) == CausalCharacter::Spacelike);
  CHECK(causal_character({0, 0, 1}) == CausalCharacter::Timelike);
  CHECK(causal_character({1, 0, 1}) == CausalCharacter::Null);
  CHECK(causal_character({0, 0, 0}) == CausalCharacter::Zero);
  CHECK(causal_character({1e6, 0, 1e6 * (1 + 1e-12)}) == CausalCharacter::Null);
}

TEST_CASE("normalize") {
  const auto [w, c] = normalize({0, 3, 5});
  CHECK(c == CausalCharacter::Timelike);
  CHECK(inner(w, w) == doctest::Approx(-1.0).epsilon(1e-15));
  const auto [w2, c2] = normalize({3, 4, 0});
  CHECK(c2 == CausalCharacter::Spacelike);
  CHECK(w2.c1 == doctest::Approx(0.6));
  CHECK_THROWS_AS(normalize({1, 0, 1}), GeometryError);
  CHECK_THROWS_AS(normalize({0, 0, 0}), GeometryError);
  try {
    normalize({2, 0, 2});
  } catch (const GeometryError& e) {
    CHECK(e.code() == ErrorCode::NullOrZeroVector);
  }
}

TEST_CASE("lorentz cross satisfies <u x v, w> = det(u, v, w)") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-3, 3);
  for (int i = 0; i < 200; ++i) {
    const Vec3 u{d(rng), d(rng), d(rng)}, v{d(rng), d(rng), d(rng)}, w{d(rng), d(rng), d(rng)};
    const Vec3 x = lorentz_cross(u, v);
    CHECK(inner(x, w) == doctest::Approx(testing::brute_det(u, v, w)).epsilon(1e-12));
    CHECK(inner(x, u) == doctest::Approx(0.0).scale(10.0));
    CHECK(inner(x, v) == doctest::Approx(0.0).scale(10.0));
    CHECK(det3(u, v, w) == doctest::Approx(testing::brute_det(u, v, w)).epsilon(1e-12));
  }
}

TEST_CASE("cross products of frame vectors") {
  // T = e3 (timelike), N = e1, B = e2 is positively oriented.
  const Vec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
  CHECK(lorentz_cross(e3, e1) == e2);
  CHECK(lorentz_cross(e1, e2) == -e3);
  CHECK(lorentz_cross(e2, e3) == e1);
}

TEST_CASE("tolerance validation") {
  Tolerance t;
  CHECK_NOTHROW(t.validate());
  t.fd_step = 0.0;
  CHECK_THROWS(t.validate());
  t = {};
  t.zero_tol = 1.0;
  CHECK_THROWS(t.validate());
}

TEST_CASE("adaptive simpson") {
  const double v = numerics::adaptive_simpson([](double x) { return std::exp(x); }, 0.0, 2.0, 1e-13);
  CHECK(v == doctest::Approx(std::exp(2.0) - 1.0).epsilon(1e-12));
  const double w = numerics::adaptive_simpson([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-10);
  CHECK(w == doctest::Approx(2.0 / 3.0).epsilon(1e-8));
}

TEST_CASE("richardson derivatives") {
  const auto f = [](double x) { return std::sin(x); };
  CHECK(numerics::richardson_derivative(f, 0.7, 1e-3, 1) == doctest::Approx(std::cos(0.7)).epsilon(1e-11));
  CHECK(numerics::richardson_derivative(f, 0.7, 1e-2, 2) == doctest::Approx(-std::sin(0.7)).epsilon(1e-9));
  CHECK(numerics::richardson_derivative(f, 0.7, 2e-2, 3) == doctest::Approx(-std::cos(0.7)).epsilon(1e-7));
}

TEST_CASE("bracketed newton") {
  const auto r = numerics::bracketed_newton([](double x) { return x * x * x - 2.0; },
                                            [](double x) { return 3.0 * x * x; }, 0.0, 2.0, 1.0, 1e-15, 100);
  CHECK(r.converged);
  CHECK(r.x == doctest::Approx(std::cbrt(2.0)).epsilon(1e-14));
}

TEST_CASE("uniform grid hits both ends exactly") {
  const auto g = numerics::uniform_grid(-1.0, 2.0, 7);
  REQUIRE(g.size() == 7);
  CHECK(g.front() == -1.0);
  CHECK(g.back() == 2.0);
}
