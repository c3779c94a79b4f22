#include "mimem/sparse.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mimem {

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> triplets) {
  for (const Triplet& t : triplets) {
    if (t.row >= rows || t.col >= cols) {
      throw std::invalid_argument(
          "sparse: triplet (" + std::to_string(t.row) + ", " +
          std::to_string(t.col) + ", " + std::to_string(t.value) +
          ") out of bounds for " + std::to_string(rows) + "x" +
          std::to_string(cols) + " matrix");
    }
  }
  std::stable_sort(triplets.begin(), triplets.end(),
                   [](const Triplet& a, const Triplet& b) {
                     return a.row != b.row ? a.row < b.row : a.col < b.col;
                   });

  SparseMatrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.row_ptr_.assign(rows + 1, 0);
  m.col_idx_.reserve(triplets.size());
  m.values_.reserve(triplets.size());

  std::size_t i = 0;
  while (i < triplets.size()) {
    const std::size_t r = triplets[i].row;
    const std::size_t c = triplets[i].col;
    double v = 0.0;
    while (i < triplets.size() && triplets[i].row == r && triplets[i].col == c) {
      v += triplets[i].value;
      ++i;
    }
    if (v != 0.0) {
      m.col_idx_.push_back(c);
      m.values_.push_back(v);
      m.row_ptr_[r + 1] = m.col_idx_.size();
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    m.row_ptr_[r + 1] = std::max(m.row_ptr_[r + 1], m.row_ptr_[r]);
  }
  return m;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  std::vector<Triplet> t;
  t.reserve(n);
  for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, 1.0});
  return from_triplets(n, n, std::move(t));
}

SparseMatrix SparseMatrix::zero(std::size_t rows, std::size_t cols) {
  return from_triplets(rows, cols, {});
}

void SparseMatrix::apply_into(const std::vector<double>& x,
                              std::vector<double>& y) const {
  if (x.size() != cols_) {
    throw std::invalid_argument("sparse: matvec length mismatch: matrix has " +
                                std::to_string(cols_) + " cols, vector has " +
                                std::to_string(x.size()) + " entries");
  }
  y.assign(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double acc = 0.0;
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
      acc += values_[k] * x[col_idx_[k]];
    }
    y[i] = acc;
  }
}

std::vector<double> SparseMatrix::apply(const std::vector<double>& x) const {
  std::vector<double> y;
  apply_into(x, y);
  return y;
}

SparseMatrix SparseMatrix::scaled(double factor) const {
  std::vector<Triplet> t;
  t.reserve(nnz());
  for_each_entry([&](std::size_t i, std::size_t j, double v) {
    t.push_back({i, j, factor * v});
  });
  return from_triplets(rows_, cols_, std::move(t));
}

void SparseMatrix::dump_triplets(std::ostream& os) const {
  char buf[64];
  for_each_entry([&](std::size_t i, std::size_t j, double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << i << ' ' << j << ' ' << buf << '\n';
  });
}

SparseMatrix matmul(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("sparse: matmul dimension mismatch: " +
                                std::to_string(a.cols_) + " vs " +
                                std::to_string(b.rows_));
  }
  // Row-by-row with a dense accumulator over B's columns.
  std::vector<double> acc(b.cols_, 0.0);
  std::vector<std::size_t> touched;
  std::vector<Triplet> out;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    touched.clear();
    for (std::size_t ka = a.row_ptr_[i]; ka < a.row_ptr_[i + 1]; ++ka) {
      const std::size_t j = a.col_idx_[ka];
      const double av = a.values_[ka];
      for (std::size_t kb = b.row_ptr_[j]; kb < b.row_ptr_[j + 1]; ++kb) {
        const std::size_t c = b.col_idx_[kb];
        if (acc[c] == 0.0) touched.push_back(c);
        acc[c] += av * b.values_[kb];
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::size_t c : touched) {
      if (acc[c] != 0.0) out.push_back({i, c, acc[c]});
      acc[c] = 0.0;
    }
  }
  return SparseMatrix::from_triplets(a.rows_, b.cols_, std::move(out));
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  std::vector<Triplet> out;
  out.reserve(a.nnz() * b.nnz());
  a.for_each_entry([&](std::size_t ia, std::size_t ja, double va) {
    b.for_each_entry([&](std::size_t ib, std::size_t jb, double vb) {
      out.push_back({ia * b.rows_ + ib, ja * b.cols_ + jb, va * vb});
    });
  });
  return SparseMatrix::from_triplets(a.rows_ * b.rows_, a.cols_ * b.cols_,
                                     std::move(out));
}

SparseMatrix vstack(const SparseMatrix& top, const SparseMatrix& bottom) {
  if (top.cols_ != bottom.cols_) {
    throw std::invalid_argument("sparse: vstack column mismatch: " +
                                std::to_string(top.cols_) + " vs " +
                                std::to_string(bottom.cols_));
  }
  std::vector<Triplet> out;
  out.reserve(top.nnz() + bottom.nnz());
  top.for_each_entry([&](std::size_t i, std::size_t j, double v) {
    out.push_back({i, j, v});
  });
  bottom.for_each_entry([&](std::size_t i, std::size_t j, double v) {
    out.push_back({i + top.rows_, j, v});
  });
  return SparseMatrix::from_triplets(top.rows_ + bottom.rows_, top.cols_,
                                     std::move(out));
}

SparseMatrix hstack(const SparseMatrix& left, const SparseMatrix& right) {
  if (left.rows_ != right.rows_) {
    throw std::invalid_argument("sparse: hstack row mismatch: " +
                                std::to_string(left.rows_) + " vs " +
                                std::to_string(right.rows_));
  }
  std::vector<Triplet> out;
  out.reserve(left.nnz() + right.nnz());
  left.for_each_entry([&](std::size_t i, std::size_t j, double v) {
    out.push_back({i, j, v});
  });
  right.for_each_entry([&](std::size_t i, std::size_t j, double v) {
    out.push_back({i, j + left.cols_, v});
  });
  return SparseMatrix::from_triplets(left.rows_, left.cols_ + right.cols_,
                                     std::move(out));
}

}  // namespace mimem
