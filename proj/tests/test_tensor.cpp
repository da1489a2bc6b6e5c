#include "yangkit/tensor.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace yangkit;

namespace {

MatrixC random_matrix(long n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  MatrixC m(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) m(i, j) = cd(g(rng), g(rng));
  return m;
}

// Brute-force embedding oracle: apply a two-site op to sites (a, b) of an
// L-site basis state by digit manipulation, independent of Kronecker algebra.
MatrixC embed_by_digits(const MatrixC& op, int a, int b, int L) {
  const long dim = ipow(4, L);
  MatrixC out = MatrixC::Zero(dim, dim);
  auto digit = [&](long s, int site) { return int((s / ipow(4, L - site)) % 4); };
  auto with = [&](long s, int site, int v) { return s + (v - digit(s, site)) * ipow(4, L - site); };
  for (long col = 0; col < dim; ++col) {
    int x = digit(col, a), y = digit(col, b);
    for (int xp = 0; xp < 4; ++xp)
      for (int yp = 0; yp < 4; ++yp) {
        cd v = op(4 * xp + yp, 4 * x + y);
        if (v != 0.0) out(with(with(col, a, xp), b, yp), col) += v;
      }
  }
  return out;
}

}  // namespace

TEST(Tensor, PermutationSwapsFactors) {
  MatrixC p = permutation_operator(4);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      VectorC in = VectorC::Zero(16);
      in(4 * x + y) = 1.0;
      VectorC out = p * in;
      EXPECT_EQ(out(4 * y + x), cd(1.0));
    }
  EXPECT_TRUE(approx_equal(MatrixC(p * p), identity(16), 0.0));
  EXPECT_THROW(permutation_operator(0), DimensionError);
}

TEST(Tensor, KronAgreesWithIndexFormula) {
  std::mt19937_64 rng(7);
  MatrixC a = random_matrix(4, rng), b = random_matrix(4, rng);
  MatrixC k = kron(a, b);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) EXPECT_EQ(k(4 * i + r, 4 * j + c), a(i, j) * b(r, c));
}

TEST(Tensor, PermutationConjugationSwapsKron) {
  std::mt19937_64 rng(11);
  MatrixC a = random_matrix(4, rng), b = random_matrix(4, rng);
  MatrixC p = permutation_operator(4);
  EXPECT_LT(max_abs(MatrixC(p * kron(a, b) * p - kron(b, a))), 1e-14);
}

TEST(Tensor, EmbedLocalMatchesDigitOracle) {
  std::mt19937_64 rng(3);
  MatrixC op = random_matrix(16, rng);
  const int L = 4;
  for (int n = 1; n <= L; ++n) {
    Chain c = embed_local(op, n, L, true);
    int a = n, b = n % L + 1;
    EXPECT_LT(max_abs(MatrixC(c.dense() - embed_by_digits(op, a, b, L))), 1e-13) << "site " << n;
  }
}

TEST(Tensor, EmbedLocalErrors) {
  MatrixC op = identity(16);
  EXPECT_THROW(embed_local(op, 3, 3, false), SiteError);
  EXPECT_THROW(embed_local(op, 0, 3, true), SiteError);
  EXPECT_THROW(embed_local(MatrixC(identity(5)), 1, 3, true), DimensionError);
  EXPECT_THROW(embed_local(identity(64), 1, 2, true), SiteError);
}

TEST(Tensor, CyclicShiftIsAPermutationOfOrderL) {
  const int L = 3;
  auto s = cyclic_shift(L, 1);
  MatrixC m = MatrixC(s.toDenseMatrix().cast<cd>());
  MatrixC acc = identity(ipow(4, L));
  for (int k = 0; k < L; ++k) acc = m * acc;
  EXPECT_TRUE(approx_equal(acc, identity(ipow(4, L)), 0.0));
  // Translating the bond (1,2) lands on bond (2,3).
  std::mt19937_64 rng(5);
  MatrixC op = random_matrix(16, rng);
  MatrixC h12 = embed_local(op, 1, L, true).dense();
  MatrixC h23 = embed_local(op, 2, L, true).dense();
  EXPECT_LT(max_abs(MatrixC(m * h12 * m.transpose() - h23)), 1e-13);
}

TEST(Tensor, CommutatorOfCommutingOperatorsVanishes) {
  std::mt19937_64 rng(9);
  MatrixC a = random_matrix(4, rng);
  MatrixC x = kron(a, identity(4)), y = kron(identity(4), a);
  EXPECT_EQ(max_abs(commutator(x, y)), 0.0);
  EXPECT_THROW(commutator(identity(2), identity(3)), DimensionError);
}

TEST(Tensor, EigenSpectrumOfTriangularMatrix) {
  MatrixC t = MatrixC::Zero(3, 3);
  t << 1.0, 2.0, 3.0, 0.0, cd(0, 1), 4.0, 0.0, 0.0, -2.0;
  VectorC ev = eigen_spectrum(t);
  std::vector<cd> want{1.0, cd(0, 1), -2.0};
  for (cd w : want) {
    double best = 1e9;
    for (long i = 0; i < ev.size(); ++i) best = std::min(best, std::abs(ev(i) - w));
    EXPECT_LT(best, 1e-12);
  }
}

TEST(Tensor, EigenPairsSatisfyEigenEquation) {
  std::mt19937_64 rng(21);
  MatrixC a = random_matrix(12, rng);
  EigenPairs ep = eigen_pairs(a);
  for (long k = 0; k < ep.values.size(); ++k) {
    VectorC v = ep.vectors.col(k);
    EXPECT_LT((a * v - ep.values(k) * v).norm() / v.norm(), 1e-10);
  }
}

TEST(Tensor, NilpotentShiftSpectrumIsZero) {
  // A single Jordan block: eigenvalues scatter by eps^(1/6) but sum to the trace.
  MatrixC j = MatrixC::Zero(6, 6);
  for (int i = 0; i + 1 < 6; ++i) j(i, i + 1) = 1.0;
  VectorC ev = eigen_spectrum(j);
  EXPECT_LT(ev.cwiseAbs().maxCoeff(), 1e-2);
  EXPECT_LT(std::abs(ev.sum()), 1e-12);
}
