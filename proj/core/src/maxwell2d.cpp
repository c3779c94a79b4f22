#include "mimem/maxwell2d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mimem/operators.hpp"

namespace mimem {

void Scenario2D::validate() const {
  if (mx < 3 || my < 3) throw std::invalid_argument("scenario2d: mx, my must be >= 3");
  if (!(dx > 0.0) || !(dy > 0.0)) {
    throw std::invalid_argument("scenario2d: spacings must be positive");
  }
  if (!(dt > 0.0) || dt > 0.5 * std::min(dx, dy)) {
    throw std::invalid_argument(
        "scenario2d: dt must satisfy 0 < dt <= 0.5*min(dx,dy)");
  }
  if (steps < 0) throw std::invalid_argument("scenario2d: steps must be >= 0");
  if (!(pulse.width > 0.0)) {
    throw std::invalid_argument("scenario2d: pulse width must be positive");
  }
  if (pml) {
    if (pml->depth < 1 || 2 * pml->depth >= std::min(mx, my)) {
      throw std::invalid_argument(
          "scenario2d: pml depth " + std::to_string(pml->depth) +
          " must lie in [1, min(mx,my)/2)");
    }
    if (!(pml->sigma_max > 0.0)) {
      throw std::invalid_argument("scenario2d: pml sigma_max must be positive");
    }
    if (pml->p < 1.0) throw std::invalid_argument("scenario2d: pml p must be >= 1");
  }
}

Scenario2D build_scenario_sullivan_2d_upml() {
  return Scenario2D{};  // defaults above are the demo constants
}

std::vector<double> sigma_profile_1d(std::size_t size, std::size_t depth,
                                     double sigma_max, double p) {
  if (depth < 1 || !(sigma_max > 0.0) || p < 1.0) {
    throw std::invalid_argument("pml: invalid profile parameters");
  }
  if (2 * depth >= size + 1) {
    throw std::invalid_argument("pml: left and right regions overlap (depth " +
                                std::to_string(depth) + ", size " +
                                std::to_string(size) + ")");
  }
  std::vector<double> sigma(size, 0.0);
  const double d = static_cast<double>(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    const double ramp = (d - static_cast<double>(i)) / d;
    sigma[i] = sigma_max * std::pow(ramp, p);
    sigma[size - 1 - i] = sigma[i];
  }
  return sigma;
}

double sigma_max_estimate(double p, double eta, double dx) {
  if (!(eta > 0.0) || !(dx > 0.0) || p < 0.0) {
    throw std::invalid_argument("pml: sigma_max_estimate needs positive inputs");
  }
  return 0.8 * (p + 1.0) / (eta * dx);
}

DampingVectors damping_vectors(const Scenario2D& sc) {
  sc.validate();
  const StaggeredGrid2D grid = sc.grid();
  DampingVectors out;
  out.a_e.assign(grid.num_scalars(), 1.0);
  out.a_b.assign(grid.num_edges(), 1.0);
  if (!sc.pml) return out;

  const std::vector<double> sx =
      sigma_profile_1d(sc.mx + 2, sc.pml->depth, sc.pml->sigma_max, sc.pml->p);
  const std::vector<double> sy =
      sigma_profile_1d(sc.my + 2, sc.pml->depth, sc.pml->sigma_max, sc.pml->p);

  for (std::size_t j = 0; j < sc.my + 2; ++j) {
    for (std::size_t i = 0; i < sc.mx + 2; ++i) {
      out.a_e[grid.scalar_index(i, j)] = std::exp(-(sx[i] + sy[j]) * sc.dt);
    }
  }

  // x-edge block: edges at the mx+1 leading scalar x-locations, crossed
  // with the my interior y-centers.
  std::size_t idx = 0;
  for (std::size_t j = 0; j < sc.my; ++j) {
    for (std::size_t i = 0; i <= sc.mx; ++i) {
      out.a_b[idx++] = std::exp(-(sx[i] + sy[j + 1]) * sc.dt);
    }
  }
  // y-edge block: mx interior x-centers crossed with the my+1 leading
  // scalar y-locations.
  for (std::size_t j = 0; j <= sc.my; ++j) {
    for (std::size_t i = 0; i < sc.mx; ++i) {
      out.a_b[idx++] = std::exp(-(sx[i + 1] + sy[j]) * sc.dt);
    }
  }
  return out;
}

std::vector<double> initial_pulse(const StaggeredGrid2D& grid,
                                  const PulseSpec& pulse) {
  const std::vector<double> xs = grid.x_axis().scalar_coords();
  const std::vector<double> ys = grid.y_axis().scalar_coords();
  std::vector<double> e(grid.num_scalars());
  for (std::size_t j = 0; j < ys.size(); ++j) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double rx = xs[i] - pulse.cx;
      const double ry = ys[j] - pulse.cy;
      e[grid.scalar_index(i, j)] =
          std::exp(-pulse.width * (rx * rx + ry * ry));
    }
  }
  return e;
}

PhysicalB physical_B(const StaggeredGrid2D& grid,
                     const std::vector<double>& b) {
  if (b.size() != grid.num_edges()) {
    throw std::invalid_argument("maxwell2d: pseudo-flux length mismatch");
  }
  PhysicalB out;
  const std::size_t nx = grid.num_edges_x();
  out.by.assign(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(nx));
  for (double& v : out.by) v = -v;
  out.bx.assign(b.begin() + static_cast<std::ptrdiff_t>(nx), b.end());
  return out;
}

MimeticState2D run_2d(const Scenario2D& sc, const Observer2D& observer) {
  sc.validate();
  const StaggeredGrid2D grid = sc.grid();
  const SparseMatrix g =
      grad2d(2, sc.mx, sc.dx, sc.my, sc.dy).scaled(sc.dt);
  const SparseMatrix d = div2d(2, sc.mx, sc.dx, sc.my, sc.dy).scaled(sc.dt);
  const DampingVectors a = damping_vectors(sc);

  MimeticState2D state;
  state.e = initial_pulse(grid, sc.pulse);
  state.b.assign(grid.num_edges(), 0.0);

  std::vector<double> tmp;

  // Damped half-step B initialization.
  g.apply_into(state.e, tmp);
  for (std::size_t i = 0; i < state.b.size(); ++i) {
    state.b[i] = a.a_b[i] * (state.b[i] - 0.5 * tmp[i]);
  }

  const auto capture = [&](long n) {
    return std::find(sc.snapshot_steps.begin(), sc.snapshot_steps.end(), n) !=
           sc.snapshot_steps.end();
  };
  if (observer && capture(0)) observer(state);

  for (long n = 1; n <= sc.steps; ++n) {
    g.apply_into(state.e, tmp);
    for (std::size_t i = 0; i < state.b.size(); ++i) {
      state.b[i] = a.a_b[i] * (state.b[i] - tmp[i]);
    }
    d.apply_into(state.b, tmp);
    for (std::size_t i = 0; i < state.e.size(); ++i) {
      state.e[i] = a.a_e[i] * (state.e[i] - tmp[i]);
    }
    state.n = n;
    if (observer && capture(n)) observer(state);
  }
  return state;
}

}  // namespace mimem
