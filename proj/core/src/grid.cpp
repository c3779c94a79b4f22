#include "mimem/grid.hpp"

#include <stdexcept>
#include <string>

namespace mimem {

StaggeredGrid1D::StaggeredGrid1D(std::size_t cells, double spacing)
    : m(cells), dx(spacing) {
  if (m < 3) {
    throw std::invalid_argument("grid: need at least 3 cells, got " +
                                std::to_string(m));
  }
  if (!(dx > 0.0)) {
    throw std::invalid_argument("grid: spacing must be positive");
  }
}

std::vector<double> StaggeredGrid1D::scalar_coords() const {
  std::vector<double> x(m + 2);
  x[0] = 0.0;
  for (std::size_t i = 1; i <= m; ++i) x[i] = (static_cast<double>(i) - 0.5) * dx;
  x[m + 1] = static_cast<double>(m) * dx;
  return x;
}

std::vector<double> StaggeredGrid1D::edge_coords() const {
  std::vector<double> x(m + 1);
  for (std::size_t i = 0; i <= m; ++i) x[i] = static_cast<double>(i) * dx;
  return x;
}

StaggeredGrid2D::StaggeredGrid2D(std::size_t cells_x, double spacing_x,
                                 std::size_t cells_y, double spacing_y)
    : mx(cells_x), my(cells_y), dx(spacing_x), dy(spacing_y) {
  // Reuse the 1D validation per axis.
  StaggeredGrid1D(mx, dx);
  StaggeredGrid1D(my, dy);
}

}  // namespace mimem
