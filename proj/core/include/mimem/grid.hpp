#pragma once

#include <cstddef>
#include <vector>

namespace mimem {

/// 1D staggered grid: scalars at cell centers plus the two boundary nodes
/// (m+2 locations), vector components at cell edges (m+1 locations).
/// Domain is [0, m*dx].
struct StaggeredGrid1D {
  StaggeredGrid1D(std::size_t cells, double spacing);

  std::size_t m;
  double dx;

  std::size_t num_scalars() const { return m + 2; }
  std::size_t num_edges() const { return m + 1; }

  /// [0, dx/2, 3dx/2, ..., L-dx/2, L]
  std::vector<double> scalar_coords() const;
  /// [0, dx, 2dx, ..., L]
  std::vector<double> edge_coords() const;
};

/// 2D tensor-product staggered grid over [0, mx*dx] x [0, my*dy].
/// Scalars flatten x-fastest; edge layout is the x-edge block
/// (my*(mx+1) entries) followed by the y-edge block (mx*(my+1)).
struct StaggeredGrid2D {
  StaggeredGrid2D(std::size_t cells_x, double spacing_x, std::size_t cells_y,
                  double spacing_y);

  std::size_t mx, my;
  double dx, dy;

  std::size_t num_scalars() const { return (mx + 2) * (my + 2); }
  std::size_t num_edges_x() const { return my * (mx + 1); }
  std::size_t num_edges_y() const { return mx * (my + 1); }
  std::size_t num_edges() const { return num_edges_x() + num_edges_y(); }

  std::size_t scalar_index(std::size_t i, std::size_t j) const {
    return j * (mx + 2) + i;
  }

  StaggeredGrid1D x_axis() const { return StaggeredGrid1D(mx, dx); }
  StaggeredGrid1D y_axis() const { return StaggeredGrid1D(my, dy); }
};

}  // namespace mimem
