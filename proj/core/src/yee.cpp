#include "mimem/yee.hpp"

#include <stdexcept>
#include <string>

namespace mimem {

YeeState make_yee_state(std::size_t cells) {
  if (cells < 3) {
    throw std::invalid_argument("yee: need at least 3 cells");
  }
  YeeState s;
  s.ex.assign(cells + 1, 0.0);
  s.hy.assign(cells, 0.0);
  return s;
}

CourantCheck cfl_check(double dt, double dz, double c0) {
  if (!(dt > 0.0) || !(dz > 0.0) || !(c0 > 0.0)) {
    throw std::invalid_argument("yee: cfl_check needs positive inputs");
  }
  CourantCheck r;
  r.courant = c0 * dt / dz;
  r.pass = r.courant <= 1.0;
  return r;
}

YeeCoefficients lossy_coefficients(const std::vector<double>& eps_r,
                                   const std::vector<double>& sigma, double dt,
                                   double eps0) {
  if (eps_r.size() != sigma.size()) {
    throw std::invalid_argument("yee: eps_r and sigma length mismatch");
  }
  YeeCoefficients c;
  c.ca.resize(eps_r.size());
  c.cb.resize(eps_r.size());
  for (std::size_t i = 0; i < eps_r.size(); ++i) {
    if (eps_r[i] < 1.0) {
      throw std::invalid_argument("yee: eps_r must be >= 1 at node " +
                                  std::to_string(i));
    }
    if (sigma[i] < 0.0) {
      throw std::invalid_argument("yee: sigma must be >= 0 at node " +
                                  std::to_string(i));
    }
    const double loss = sigma[i] * dt / (2.0 * eps0 * eps_r[i]);
    if (loss >= 1.0) {
      throw std::invalid_argument(
          "yee: over-damped medium at node " + std::to_string(i) +
          " (loss term " + std::to_string(loss) + " >= 1)");
    }
    c.ca[i] = (1.0 - loss) / (1.0 + loss);
    c.cb[i] = (0.5 / eps_r[i]) / (1.0 + loss);
  }
  return c;
}

void yee_step(YeeState& state, const YeeCoefficients& coeffs,
              const std::optional<PointSource>& source) {
  std::vector<double>& ex = state.ex;
  std::vector<double>& hy = state.hy;
  const std::size_t last = ex.size() - 1;
  if (coeffs.ca.size() != ex.size() || coeffs.cb.size() != ex.size()) {
    throw std::invalid_argument("yee: coefficient length mismatch");
  }
  if (hy.size() + 1 != ex.size()) {
    throw std::invalid_argument("yee: state length mismatch");
  }

  const double el = ex[1];
  const double er = ex[last - 1];

  for (std::size_t i = 1; i < last; ++i) {
    ex[i] = coeffs.ca[i] * ex[i] + coeffs.cb[i] * (hy[i - 1] - hy[i]);
  }
  if (source) {
    ex.at(source->index) += source->value;
  }
  ex[0] = el;
  ex[last] = er;

  for (std::size_t i = 0; i < hy.size(); ++i) {
    hy[i] += 0.5 * (ex[i] - ex[i + 1]);
  }
  ++state.n;
}

}  // namespace mimem
