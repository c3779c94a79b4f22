#include "mimem/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mimem {

namespace {

void check_order_and_size(int order, std::size_t cells) {
  if (order != 2) {
    throw std::invalid_argument(
        "operators: order " + std::to_string(order) +
        " not implemented; only the order-2 stencils are built in "
        "(higher orders need the Vandermonde coefficient construction)");
  }
  if (cells < 3) {
    throw std::invalid_argument(
        "operators: grid too small (" + std::to_string(cells) +
        " cells); need at least 3 so the boundary stencils do not overlap");
  }
}

double max_abs(const std::vector<double>& v) {
  double r = 0.0;
  for (double x : v) r = std::max(r, std::abs(x));
  return r;
}

}  // namespace

SparseMatrix grad1d(int order, std::size_t cells, double dx) {
  check_order_and_size(order, cells);
  if (!(dx > 0.0)) throw std::invalid_argument("operators: dx must be positive");
  const double s = 1.0 / dx;
  const std::size_t m = cells;
  std::vector<Triplet> t;
  t.reserve(3 + 2 * (m - 1) + 3);
  t.push_back({0, 0, -8.0 / 3.0 * s});
  t.push_back({0, 1, 3.0 * s});
  t.push_back({0, 2, -1.0 / 3.0 * s});
  for (std::size_t i = 1; i < m; ++i) {
    t.push_back({i, i, -s});
    t.push_back({i, i + 1, s});
  }
  t.push_back({m, m - 1, 1.0 / 3.0 * s});
  t.push_back({m, m, -3.0 * s});
  t.push_back({m, m + 1, 8.0 / 3.0 * s});
  return SparseMatrix::from_triplets(m + 1, m + 2, std::move(t));
}

SparseMatrix div1d(int order, std::size_t cells, double dx) {
  check_order_and_size(order, cells);
  if (!(dx > 0.0)) throw std::invalid_argument("operators: dx must be positive");
  const double s = 1.0 / dx;
  const std::size_t m = cells;
  std::vector<Triplet> t;
  t.reserve(2 * m);
  // Rows 0 and m+1 stay empty.
  for (std::size_t i = 1; i <= m; ++i) {
    t.push_back({i, i - 1, -s});
    t.push_back({i, i, s});
  }
  return SparseMatrix::from_triplets(m + 2, m + 1, std::move(t));
}

SparseMatrix augmented_identity(std::size_t cells) {
  if (cells < 1) throw std::invalid_argument("operators: need at least 1 cell");
  std::vector<Triplet> t;
  t.reserve(cells);
  for (std::size_t i = 0; i < cells; ++i) t.push_back({i + 1, i, 1.0});
  return SparseMatrix::from_triplets(cells + 2, cells, std::move(t));
}

namespace {

SparseMatrix transpose(const SparseMatrix& a) {
  std::vector<Triplet> t;
  t.reserve(a.nnz());
  a.for_each_entry([&](std::size_t i, std::size_t j, double v) {
    t.push_back({j, i, v});
  });
  return SparseMatrix::from_triplets(a.cols(), a.rows(), std::move(t));
}

}  // namespace

SparseMatrix grad2d(int order, std::size_t mx, double dx, std::size_t my,
                    double dy) {
  const SparseMatrix gx = grad1d(order, mx, dx);
  const SparseMatrix gy = grad1d(order, my, dy);
  const SparseMatrix ix_t = transpose(augmented_identity(mx));
  const SparseMatrix iy_t = transpose(augmented_identity(my));
  return vstack(kron(iy_t, gx), kron(gy, ix_t));
}

SparseMatrix div2d(int order, std::size_t mx, double dx, std::size_t my,
                   double dy) {
  const SparseMatrix dxo = div1d(order, mx, dx);
  const SparseMatrix dyo = div1d(order, my, dy);
  const SparseMatrix ix = augmented_identity(mx);
  const SparseMatrix iy = augmented_identity(my);
  return hstack(kron(iy, dxo), kron(dyo, ix));
}

SparseMatrix laplacian(int order, const StaggeredGrid1D& grid) {
  return matmul(div1d(order, grid.m, grid.dx), grad1d(order, grid.m, grid.dx));
}

SparseMatrix laplacian(int order, const StaggeredGrid2D& grid) {
  return matmul(div2d(order, grid.mx, grid.dx, grid.my, grid.dy),
                grad2d(order, grid.mx, grid.dx, grid.my, grid.dy));
}

double IdentityReport::max_residual() const {
  return std::max({grad_const_residual, div_const_residual,
                   laplacian_const_residual});
}

IdentityReport verify_identities(int order, const StaggeredGrid1D& grid) {
  const SparseMatrix g = grad1d(order, grid.m, grid.dx);
  const SparseMatrix d = div1d(order, grid.m, grid.dx);
  IdentityReport r;
  r.grad_const_residual = max_abs(g.apply(std::vector<double>(g.cols(), 1.0)));
  r.div_const_residual = max_abs(d.apply(std::vector<double>(d.cols(), 1.0)));
  r.laplacian_const_residual =
      max_abs(matmul(d, g).apply(std::vector<double>(g.cols(), 1.0)));
  return r;
}

IdentityReport verify_identities(int order, const StaggeredGrid2D& grid) {
  const SparseMatrix g = grad2d(order, grid.mx, grid.dx, grid.my, grid.dy);
  const SparseMatrix d = div2d(order, grid.mx, grid.dx, grid.my, grid.dy);
  IdentityReport r;
  r.grad_const_residual = max_abs(g.apply(std::vector<double>(g.cols(), 1.0)));
  r.div_const_residual = max_abs(d.apply(std::vector<double>(d.cols(), 1.0)));
  r.laplacian_const_residual =
      max_abs(matmul(d, g).apply(std::vector<double>(g.cols(), 1.0)));
  return r;
}

}  // namespace mimem
