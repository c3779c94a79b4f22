#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "mimem/operators.hpp"
#include "mimem/sparse.hpp"
#include "test_util.hpp"

using namespace mimem;
using namespace mimem::test;

TEST_CASE("from_triplets coalesces duplicates") {
  const SparseMatrix m =
      SparseMatrix::from_triplets(2, 2, {{0, 0, 1.0}, {0, 0, 2.0}});
  CHECK(m.nnz() == 1);
  const auto d = to_dense(m);
  CHECK(d[0][0] == 3.0);
}

TEST_CASE("from_triplets empty gives zero matrix") {
  const SparseMatrix m = SparseMatrix::from_triplets(2, 2, {});
  CHECK(m.nnz() == 0);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 2);
}

TEST_CASE("from_triplets rejects out-of-bounds entries") {
  CHECK_THROWS_AS(SparseMatrix::from_triplets(1, 2, {{0, 5, 1.0}}),
                  std::invalid_argument);
}

TEST_CASE("from_triplets drops entries that cancel to zero") {
  const SparseMatrix m =
      SparseMatrix::from_triplets(2, 2, {{1, 1, 2.0}, {1, 1, -2.0}, {0, 1, 0.0}});
  CHECK(m.nnz() == 0);
}

TEST_CASE("matvec identity and zero") {
  CHECK(SparseMatrix::identity(3).apply({1.0, 2.0, 3.0}) ==
        std::vector<double>{1.0, 2.0, 3.0});
  CHECK(SparseMatrix::zero(2, 2).apply({5.0, 7.0}) ==
        std::vector<double>{0.0, 0.0});
}

TEST_CASE("matvec rejects length mismatch") {
  CHECK_THROWS_AS(SparseMatrix::identity(3).apply({1.0, 2.0}),
                  std::invalid_argument);
}

TEST_CASE("divergence annihilates constant vectors") {
  const auto y = div1d(2, 4, 1.0).apply(std::vector<double>(5, 1.0));
  CHECK(max_abs(y) == 0.0);
}

TEST_CASE("matmul of identities") {
  const SparseMatrix p = matmul(SparseMatrix::identity(3), SparseMatrix::identity(3));
  const auto d = to_dense(p);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(d[i][j] == (i == j ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("div*grad has the standard interior Laplacian stencil") {
  const SparseMatrix l = matmul(div1d(2, 4, 1.0), grad1d(2, 4, 1.0));
  CHECK(l.rows() == 6);
  CHECK(l.cols() == 6);
  const auto d = to_dense(l);
  // Rows 2 and 3 are fully interior for m = 4.
  for (std::size_t i : {2u, 3u}) {
    CHECK(d[i][i - 1] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d[i][i] == doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(d[i][i + 1] == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("matmul of zero matrix") {
  std::mt19937 rng(7);
  const SparseMatrix any = random_sparse(rng, 3, 4);
  const SparseMatrix p = matmul(SparseMatrix::zero(2, 3), any);
  CHECK(p.rows() == 2);
  CHECK(p.cols() == 4);
  CHECK(p.nnz() == 0);
}

TEST_CASE("matmul rejects dimension mismatch") {
  CHECK_THROWS_AS(matmul(SparseMatrix::zero(2, 3), SparseMatrix::zero(4, 2)),
                  std::invalid_argument);
}

TEST_CASE("matmul agrees with dense brute force on random matrices") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<std::size_t> dim(1, 10);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = dim(rng), k = dim(rng), c = dim(rng);
    const SparseMatrix a = random_sparse(rng, r, k);
    const SparseMatrix b = random_sparse(rng, k, c);
    const auto got = to_dense(matmul(a, b));
    const auto want = dense_matmul(to_dense(a), to_dense(b));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        CHECK(got[i][j] == doctest::Approx(want[i][j]).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("kron of identities is the identity") {
  const SparseMatrix k = kron(SparseMatrix::identity(2), SparseMatrix::identity(3));
  CHECK(k.rows() == 6);
  CHECK(k.cols() == 6);
  const auto d = to_dense(k);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      CHECK(d[i][j] == (i == j ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("kron with a 1x1 matrix scales") {
  std::mt19937 rng(3);
  const SparseMatrix b = random_sparse(rng, 3, 2);
  const SparseMatrix scalar = SparseMatrix::from_triplets(1, 1, {{0, 0, 2.0}});
  const auto got = to_dense(kron(scalar, b));
  const auto want = to_dense(b.scaled(2.0));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(got[i][j] == want[i][j]);
    }
  }
}

TEST_CASE("kron dimensions for an augmented-identity lift") {
  // I_3^T is 3x5, G(2,4,1) is 5x6.
  const SparseMatrix g = grad1d(2, 4, 1.0);
  std::vector<Triplet> t;
  augmented_identity(3).for_each_entry(
      [&](std::size_t i, std::size_t j, double v) { t.push_back({j, i, v}); });
  const SparseMatrix it = SparseMatrix::from_triplets(3, 5, std::move(t));
  const SparseMatrix k = kron(it, g);
  CHECK(k.rows() == 15);
  CHECK(k.cols() == 30);
}

TEST_CASE("kron mixed-product identity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const SparseMatrix a = random_sparse(rng, 3, 2);
    const SparseMatrix b = random_sparse(rng, 2, 3);
    const SparseMatrix c = random_sparse(rng, 2, 4);
    const SparseMatrix d = random_sparse(rng, 3, 2);
    const auto lhs = to_dense(matmul(kron(a, b), kron(c, d)));
    const auto rhs = to_dense(kron(matmul(a, c), matmul(b, d)));
    REQUIRE(lhs.size() == rhs.size());
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      for (std::size_t j = 0; j < lhs[0].size(); ++j) {
        CHECK(std::abs(lhs[i][j] - rhs[i][j]) <= 1e-12);
      }
    }
  }
}

TEST_CASE("vstack and hstack block placement") {
  const SparseMatrix v = vstack(SparseMatrix::zero(1, 2), SparseMatrix::zero(2, 2));
  CHECK(v.rows() == 3);
  CHECK(v.cols() == 2);
  CHECK(v.nnz() == 0);

  const SparseMatrix h = hstack(SparseMatrix::identity(2), SparseMatrix::zero(2, 3));
  CHECK(h.rows() == 2);
  CHECK(h.cols() == 5);
  const auto d = to_dense(h);
  CHECK(d[0][0] == 1.0);
  CHECK(d[1][1] == 1.0);
  CHECK(d[0][1] == 0.0);

  CHECK_THROWS_AS(vstack(SparseMatrix::zero(1, 2), SparseMatrix::zero(1, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(hstack(SparseMatrix::zero(1, 2), SparseMatrix::zero(2, 2)),
                  std::invalid_argument);
}

TEST_CASE("matvec is linear") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const SparseMatrix a = random_sparse(rng, 8, 6);
    const auto x = random_vector(rng, 6);
    const auto y = random_vector(rng, 6);
    const double alpha = 1.7, beta = -0.3;
    std::vector<double> combo(6);
    for (std::size_t i = 0; i < 6; ++i) combo[i] = alpha * x[i] + beta * y[i];
    const auto lhs = a.apply(combo);
    const auto ax = a.apply(x);
    const auto ay = a.apply(y);
    for (std::size_t i = 0; i < 8; ++i) {
      const double rhs = alpha * ax[i] + beta * ay[i];
      const double scale = std::max(1.0, std::abs(rhs));
      CHECK(std::abs(lhs[i] - rhs) / scale <= 1e-12);
    }
  }
}

TEST_CASE("triplet dump is row-major with full precision") {
  const SparseMatrix m = SparseMatrix::from_triplets(
      2, 3, {{1, 0, 0.1}, {0, 2, -2.0}, {0, 1, 1.0}});
  std::ostringstream os;
  m.dump_triplets(os);
  CHECK(os.str() ==
        "0 1 1\n"
        "0 2 -2\n"
        "1 0 0.10000000000000001\n");
}
