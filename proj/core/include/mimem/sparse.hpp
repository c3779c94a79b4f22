#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace mimem {

struct Triplet {
  std::size_t row;
  std::size_t col;
  double value;
};

/// Row-major compressed sparse matrix. Immutable after construction;
/// safe to share between threads.
class SparseMatrix {
public:
  SparseMatrix() = default;

  /// Builds from coordinate triplets. Duplicate coordinates are summed,
  /// exact zeros are dropped. Throws std::invalid_argument on an
  /// out-of-bounds triplet, naming the offending entry.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols,
                                    std::vector<Triplet> triplets);

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return values_.size(); }

  /// y = A x. Throws std::invalid_argument on length mismatch.
  std::vector<double> apply(const std::vector<double>& x) const;
  void apply_into(const std::vector<double>& x, std::vector<double>& y) const;

  /// Returns factor * A.
  SparseMatrix scaled(double factor) const;

  /// Visits stored entries in row-major order as f(row, col, value).
  template <typename F>
  void for_each_entry(F&& f) const {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
        f(i, col_idx_[k], values_[k]);
      }
    }
  }

  /// One "row col value" line per entry, row-major, 17 significant digits.
  void dump_triplets(std::ostream& os) const;

  friend SparseMatrix matmul(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix vstack(const SparseMatrix& top, const SparseMatrix& bottom);
  friend SparseMatrix hstack(const SparseMatrix& left, const SparseMatrix& right);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_ptr_ = {0};
  std::vector<std::size_t> col_idx_;
  std::vector<double> values_;
};

SparseMatrix matmul(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix vstack(const SparseMatrix& top, const SparseMatrix& bottom);
SparseMatrix hstack(const SparseMatrix& left, const SparseMatrix& right);

}  // namespace mimem
