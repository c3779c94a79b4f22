#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "mimem/grid.hpp"
#include "mimem/sparse.hpp"

namespace mimem {

struct PmlSpec {
  std::size_t depth = 30;    // cells
  double sigma_max = 100.0;  // normalized conductivity
  double p = 4.0;            // polynomial grading exponent

  friend bool operator==(const PmlSpec&, const PmlSpec&) = default;
};

struct PulseSpec {
  double cx = 0.5;
  double cy = 0.5;
  double width = 400.0;  // exponent coefficient

  friend bool operator==(const PulseSpec&, const PulseSpec&) = default;
};

/// 2D TMz scenario in normalized units (c0 = mu0 = eps0 = 1): a centered
/// Gaussian E_z pulse radiating into a polynomial-graded UPML.
struct Scenario2D {
  std::size_t mx = 100, my = 100;
  double dx = 0.01, dy = 0.01;
  double dt = 0.005;
  long steps = 140;
  PulseSpec pulse;
  std::optional<PmlSpec> pml = PmlSpec{};
  std::vector<long> snapshot_steps = {0, 70, 140};

  StaggeredGrid2D grid() const { return StaggeredGrid2D(mx, dx, my, dy); }
  void validate() const;

  friend bool operator==(const Scenario2D&, const Scenario2D&) = default;
};

Scenario2D build_scenario_sullivan_2d_upml();

/// Graded conductivity over a 1D scalar layout of the given size:
/// zero in the interior, sigma_max*((depth-i)/depth)^p over the left
/// `depth` locations and the mirrored profile on the right.
std::vector<double> sigma_profile_1d(std::size_t size, std::size_t depth,
                                     double sigma_max, double p);

/// 0.8*(p+1)/(eta*dx).
double sigma_max_estimate(double p, double eta, double dx);

struct DampingVectors {
  std::vector<double> a_e;  // scalar layout
  std::vector<double> a_b;  // edge layout (x-edge block, then y-edge block)
};

/// aE = exp(-(sigma_x(i)+sigma_y(j))*dt) on the scalar layout; aB from the
/// staggered scalar-profile slices that match the two gradient blocks.
DampingVectors damping_vectors(const Scenario2D& sc);

/// E_z(x,y,0) = exp(-width*((x-cx)^2 + (y-cy)^2)) at all scalar locations.
std::vector<double> initial_pulse(const StaggeredGrid2D& grid,
                                  const PulseSpec& pulse);

struct MimeticState2D {
  std::vector<double> e;  // (mx+2)(my+2) scalar values
  std::vector<double> b;  // pseudo-flux in gradient-block layout
  long n = 0;
};

/// Physical flux components recovered from the pseudo-flux: Bx is the
/// y-edge block, By the negated x-edge block.
struct PhysicalB {
  std::vector<double> bx;  // mx*(my+1), y-edge layout
  std::vector<double> by;  // my*(mx+1), x-edge layout
};

PhysicalB physical_B(const StaggeredGrid2D& grid, const std::vector<double>& b);

using Observer2D = std::function<void(const MimeticState2D&)>;

/// Leapfrog with dt folded into the operators and a damped half-step B
/// initialization; the observer fires at the scenario's snapshot steps.
MimeticState2D run_2d(const Scenario2D& sc, const Observer2D& observer = {});

}  // namespace mimem
