#include "mimem/maxwell1d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mimem/operators.hpp"
#include "mimem/yee.hpp"

namespace mimem {

void Scenario1D::validate() const {
  if (m < 3) throw std::invalid_argument("scenario1d: m must be >= 3");
  if (!(dt > 0.0)) throw std::invalid_argument("scenario1d: dt must be positive");
  if (steps < 0) throw std::invalid_argument("scenario1d: steps must be >= 0");
  if (source.index < 2 || source.index > m - 1) {
    throw std::invalid_argument(
        "scenario1d: source index " + std::to_string(source.index) +
        " must lie in [2, " + std::to_string(m - 1) + "]");
  }
  if (slab) {
    if (slab->start <= 1 || slab->start >= m + 1) {
      throw std::invalid_argument(
          "scenario1d: slab start " + std::to_string(slab->start) +
          " must lie in (1, " + std::to_string(m + 1) + ")");
    }
    if (slab->eps_r < 1.0) {
      throw std::invalid_argument("scenario1d: slab eps_r must be >= 1");
    }
    if (slab->sigma < 0.0) {
      throw std::invalid_argument("scenario1d: slab sigma must be >= 0");
    }
  }
  if (!(eps0 > 0.0)) throw std::invalid_argument("scenario1d: eps0 must be positive");
}

Scenario1D build_scenario_sullivan_1d() {
  return Scenario1D{};  // defaults above are the demo constants
}

MimeticState1D make_state_1d(std::size_t cells) {
  MimeticState1D s;
  s.ex.assign(cells + 2, 0.0);
  s.hy.assign(cells + 1, 0.0);
  return s;
}

std::pair<std::vector<double>, std::vector<double>> material_vectors(
    const Scenario1D& sc) {
  sc.validate();
  const std::size_t n = sc.m + 2;
  std::vector<double> eps_r(n, 1.0);
  std::vector<double> sigma(n, 0.0);
  if (sc.slab) {
    for (std::size_t i = sc.slab->start; i < n; ++i) {
      eps_r[i] = sc.slab->eps_r;
      sigma[i] = sc.slab->sigma;
    }
  }
  YeeCoefficients c = lossy_coefficients(eps_r, sigma, sc.dt, sc.eps0);
  return {std::move(c.ca), std::move(c.cb)};
}

void step_1d(MimeticState1D& state, const std::vector<double>& ca,
             const std::vector<double>& cb, const SparseMatrix& div_op,
             const SparseMatrix& grad_op, const Scenario1D& sc, long n) {
  std::vector<double>& ex = state.ex;
  std::vector<double>& hy = state.hy;
  const std::size_t last = ex.size() - 1;
  if (div_op.rows() != ex.size() || div_op.cols() != hy.size() ||
      grad_op.rows() != hy.size() || grad_op.cols() != ex.size()) {
    throw std::invalid_argument("maxwell1d: operator dimensions do not match state");
  }

  const double el = ex[1];
  const double er = ex[last - 1];

  const std::vector<double> dh = div_op.apply(hy);
  for (std::size_t i = 0; i < ex.size(); ++i) {
    ex[i] = ca[i] * ex[i] - cb[i] * dh[i];
  }
  ex[sc.source.index] +=
      sc.source.amplitude *
      std::sin(2.0 * std::numbers::pi * sc.source.frequency * sc.dt *
               static_cast<double>(n));
  ex[0] = el;
  ex[last] = er;

  const std::vector<double> ge = grad_op.apply(ex);
  for (std::size_t i = 0; i < hy.size(); ++i) {
    hy[i] -= 0.5 * ge[i];
  }
  state.n = n;
}

MimeticState1D run_1d(const Scenario1D& sc, const Observer1D& observer) {
  sc.validate();
  const SparseMatrix d = div1d(sc.order, sc.m, 1.0);
  const SparseMatrix g = grad1d(sc.order, sc.m, 1.0);
  const auto [ca, cb] = material_vectors(sc);

  MimeticState1D state = make_state_1d(sc.m);
  if (observer) observer(state);
  for (long n = 1; n <= sc.steps; ++n) {
    step_1d(state, ca, cb, d, g, sc, n);
    const bool capture =
        (sc.snapshot_every > 0 &&
         n % static_cast<long>(sc.snapshot_every) == 0) ||
        n == sc.steps;
    if (observer && capture) observer(state);
  }
  return state;
}

}  // namespace mimem
