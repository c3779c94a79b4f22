#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace mimem {

/// Classical 1D Yee grid state in normalized units. For m cells, ex holds
/// m+1 node values at time level n and hy holds m half-node values at
/// level n+1/2.
struct YeeState {
  std::vector<double> ex;
  std::vector<double> hy;
  long n = 0;
};

YeeState make_yee_state(std::size_t cells);

/// Per-node damping (ca) and update (cb) coefficients from the
/// semi-implicit treatment of the conduction current, in the normalized
/// Courant-0.5 form: free space gives ca = 1, cb = 0.5.
struct YeeCoefficients {
  std::vector<double> ca;
  std::vector<double> cb;
};

struct CourantCheck {
  double courant = 0.0;
  bool pass = false;
};

CourantCheck cfl_check(double dt, double dz, double c0);

/// ca = (1-l)/(1+l), cb = (0.5/eps_r)/(1+l) with l = sigma*dt/(2*eps0*eps_r).
/// Throws if any l >= 1 (ca would be non-positive).
YeeCoefficients lossy_coefficients(const std::vector<double>& eps_r,
                                   const std::vector<double>& sigma, double dt,
                                   double eps0);

struct PointSource {
  std::size_t index;
  double value;
};

/// One leapfrog step: lossy E update, additive source injection, delayed-copy
/// boundary overwrite, then the H update with the 0.5 factor baked in.
void yee_step(YeeState& state, const YeeCoefficients& coeffs,
              const std::optional<PointSource>& source);

}  // namespace mimem
