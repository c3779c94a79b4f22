#pragma once

#include "mimem/grid.hpp"
#include "mimem/sparse.hpp"

namespace mimem {

/// Second-order mimetic gradient: (m+1) x (m+2). Wide one-sided stencils
/// in the first and last rows, centered two-point stencils elsewhere.
/// Only order 2 is implemented; other orders throw.
SparseMatrix grad1d(int order, std::size_t cells, double dx);

/// Second-order mimetic divergence: (m+2) x (m+1). First and last rows
/// are identically zero.
SparseMatrix div1d(int order, std::size_t cells, double dx);

/// (m+2) x m identity padded with zero first and last rows.
SparseMatrix augmented_identity(std::size_t cells);

/// 2D gradient assembled from 1D operators by Kronecker products:
/// [ kron(I_my^T, Gx) ; kron(Gy, I_mx^T) ] with I the augmented identity.
SparseMatrix grad2d(int order, std::size_t mx, double dx, std::size_t my,
                    double dy);

/// 2D divergence: [ kron(I_my, Dx) , kron(Dy, I_mx) ].
SparseMatrix div2d(int order, std::size_t mx, double dx, std::size_t my,
                   double dy);

/// Laplacian is exactly div * grad for the same grid; no independent stencil.
SparseMatrix laplacian(int order, const StaggeredGrid1D& grid);
SparseMatrix laplacian(int order, const StaggeredGrid2D& grid);

struct IdentityReport {
  double grad_const_residual = 0.0;
  double div_const_residual = 0.0;
  double laplacian_const_residual = 0.0;
  double tolerance = 1e-12;

  double max_residual() const;
  bool passed() const { return max_residual() <= tolerance; }
};

/// Max-abs residuals of G*const, D*const and L*const on the given grid.
IdentityReport verify_identities(int order, const StaggeredGrid1D& grid);
IdentityReport verify_identities(int order, const StaggeredGrid2D& grid);

}  // namespace mimem
