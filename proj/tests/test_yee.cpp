#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mimem/maxwell1d.hpp"
#include "mimem/operators.hpp"
#include "mimem/yee.hpp"
#include "test_util.hpp"

using namespace mimem;
using namespace mimem::test;

TEST_CASE("cfl_check") {
  const double dz = 0.01, c0 = 3e8;
  CHECK(cfl_check(dz / c0, dz, c0).courant == doctest::Approx(1.0));
  CHECK(cfl_check(dz / c0, dz, c0).pass);
  CHECK(cfl_check(0.5 * dz / c0, dz, c0).courant == doctest::Approx(0.5));
  CHECK(cfl_check(0.5 * dz / c0, dz, c0).pass);
  CHECK_FALSE(cfl_check(2.0 * dz / c0, dz, c0).pass);
  CHECK_THROWS_AS(cfl_check(-1.0, dz, c0), std::invalid_argument);
}

TEST_CASE("lossy_coefficients free space") {
  const auto c = lossy_coefficients({1.0}, {0.0}, 1e-11, 8.85419e-12);
  CHECK(c.ca[0] == 1.0);
  CHECK(c.cb[0] == 0.5);
}

TEST_CASE("lossy_coefficients slab values") {
  // Hand calculation: loss = dt*sigma/(2*eps0*eps_r)
  //   dt = 0.01/(2*3e8) = 1.66667e-11, sigma = 0.04, eps_r = 4
  //   loss = 6.66667e-13 / 7.083352e-11 = 9.411955e-3
  //   ca = (1-loss)/(1+loss) = 0.9813516..., cb = 0.125/(1+loss) = 0.1238343...
  const double dt = 0.01 / (2.0 * 3e8);
  const auto c = lossy_coefficients({4.0}, {0.04}, dt, 8.85419e-12);
  CHECK(c.ca[0] == doctest::Approx(0.98135).epsilon(1e-4));
  CHECK(c.cb[0] == doctest::Approx(0.12383).epsilon(1e-4));
}

TEST_CASE("lossy_coefficients rejects over-damped media") {
  // loss = 1 exactly at sigma = 2*eps0*eps_r/dt
  const double dt = 1e-9;
  const double sigma = 2.0 * 8.85419e-12 * 1.0 / dt;
  CHECK_THROWS_AS(lossy_coefficients({1.0}, {sigma}, dt, 8.85419e-12),
                  std::invalid_argument);
  CHECK_THROWS_AS(lossy_coefficients({0.5}, {0.0}, dt, 8.85419e-12),
                  std::invalid_argument);
}

namespace {

YeeCoefficients free_space(std::size_t nodes) {
  return lossy_coefficients(std::vector<double>(nodes, 1.0),
                            std::vector<double>(nodes, 0.0), 1e-11,
                            8.85419e-12);
}

}  // namespace

TEST_CASE("zero state stays zero") {
  YeeState s = make_yee_state(10);
  const auto c = free_space(11);
  for (int n = 0; n < 20; ++n) yee_step(s, c, std::nullopt);
  CHECK(max_abs(s.ex) == 0.0);
  CHECK(max_abs(s.hy) == 0.0);
}

TEST_CASE("single E spike produces an antisymmetric H pattern") {
  YeeState s = make_yee_state(20);
  s.ex[10] = 1.0;
  const auto c = free_space(21);
  yee_step(s, c, std::nullopt);
  yee_step(s, c, std::nullopt);
  for (std::size_t k = 0; k < 10; ++k) {
    CHECK(s.hy[10 - 1 - k] == doctest::Approx(-s.hy[10 + k]).epsilon(1e-13));
  }
  for (std::size_t k = 0; k <= 9; ++k) {
    CHECK(s.ex[10 - k] == doctest::Approx(s.ex[10 + k]).epsilon(1e-13));
  }
}

TEST_CASE("uniform E is unchanged by one free-space step") {
  YeeState s = make_yee_state(10);
  for (double& v : s.ex) v = 1.0;
  yee_step(s, free_space(11), std::nullopt);
  for (double v : s.ex) CHECK(v == 1.0);
  for (double v : s.hy) CHECK(v == 0.0);
}

TEST_CASE("free-space field stays bounded over 10000 steps") {
  const std::size_t cells = 200;
  YeeState s = make_yee_state(cells);
  const auto c = free_space(cells + 1);
  const double dt = 0.01 / (2.0 * 3e8);
  double peak = 0.0;
  for (long n = 1; n <= 10000; ++n) {
    const double v =
        std::sin(2.0 * std::numbers::pi * 7e8 * dt * static_cast<double>(n));
    yee_step(s, c, PointSource{100, v});
    peak = std::max(peak, max_abs(s.ex));
  }
  CHECK(peak <= 2.0);
}

TEST_CASE("yee and mimetic solvers agree in the interior") {
  // Same shapes: a Yee run with m+1 cells has ex of length m+2 and hy of
  // length m+1. Source at the center so nothing reaches the boundaries,
  // where the wide mimetic edge stencils differ from the two-point ones.
  Scenario1D sc;
  sc.m = 600;
  sc.steps = 200;
  sc.slab.reset();
  sc.source.index = 300;
  sc.validate();

  const SparseMatrix d = div1d(2, sc.m, 1.0);
  const SparseMatrix g = grad1d(2, sc.m, 1.0);
  const auto [ca, cb] = material_vectors(sc);
  MimeticState1D mim = make_state_1d(sc.m);

  YeeState yee = make_yee_state(sc.m + 1);
  YeeCoefficients yc{ca, cb};

  double worst = 0.0;
  for (long n = 1; n <= sc.steps; ++n) {
    step_1d(mim, ca, cb, d, g, sc, n);
    const double v = sc.source.amplitude *
                     std::sin(2.0 * std::numbers::pi * sc.source.frequency *
                              sc.dt * static_cast<double>(n));
    yee_step(yee, yc, PointSource{sc.source.index, v});
    for (std::size_t i = 1; i <= sc.m; ++i) {
      worst = std::max(worst, std::abs(mim.ex[i] - yee.ex[i]));
    }
  }
  CHECK(worst <= 1e-12);
}
