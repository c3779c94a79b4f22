#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mimem/sparse.hpp"

namespace mimem {

struct SourceSpec {
  std::size_t index = 4;     // scalar-layout index (0-based)
  double frequency = 7e8;    // Hz
  double amplitude = 1.0;

  friend bool operator==(const SourceSpec&, const SourceSpec&) = default;
};

struct SlabSpec {
  std::size_t start = 99;    // first scalar-layout index inside the slab
  double eps_r = 4.0;
  double sigma = 0.04;       // S/m

  friend bool operator==(const SlabSpec&, const SlabSpec&) = default;
};

/// 1D scenario: sinusoidal source radiating into an optional lossy slab,
/// delayed-copy ABC at both ends.
struct Scenario1D {
  std::size_t m = 200;
  int order = 2;
  double dt = 0.01 / (2.0 * 3e8);  // s
  long steps = 500;
  SourceSpec source;
  std::optional<SlabSpec> slab = SlabSpec{};
  double eps0 = 8.85419e-12;       // F/m
  double dz = 0.01;                // m, physical spacing (diagnostics only)
  double c0 = 3e8;                 // m/s
  std::size_t snapshot_every = 50;

  double courant() const { return c0 * dt / dz; }
  void validate() const;

  friend bool operator==(const Scenario1D&, const Scenario1D&) = default;
};

/// Classic textbook demo defaults: m=200, 700 MHz source at scalar index 4,
/// slab (eps_r=4, sigma=0.04) from scalar index 99 onward, 500 steps.
Scenario1D build_scenario_sullivan_1d();

struct MimeticState1D {
  std::vector<double> ex;  // m+2 scalar-location values
  std::vector<double> hy;  // m+1 edge values
  long n = 0;
};

MimeticState1D make_state_1d(std::size_t cells);

/// Per-scalar (ca, cb): 1 and 0.5 left of the slab, lossy values from the
/// slab start through the last location inclusive.
std::pair<std::vector<double>, std::vector<double>> material_vectors(
    const Scenario1D& sc);

/// One leapfrog step, in the exact order: save boundary-adjacent values,
/// E update, source injection at step index n (1-based), ABC overwrite,
/// H update with the 0.5 factor.
void step_1d(MimeticState1D& state, const std::vector<double>& ca,
             const std::vector<double>& cb, const SparseMatrix& div_op,
             const SparseMatrix& grad_op, const Scenario1D& sc, long n);

using Observer1D = std::function<void(const MimeticState1D&)>;

/// Runs the scenario; the observer fires at step 0, every snapshot_every
/// steps, and at the final step. Returns the final state.
MimeticState1D run_1d(const Scenario1D& sc, const Observer1D& observer = {});

}  // namespace mimem
