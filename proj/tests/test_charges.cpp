#include "yangkit/charges.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace yangkit;

namespace {

// Dense k-site embedding on the periodic chain by digit manipulation; site n
// (1-based) carries the most significant factor of the local operator.
MatrixC embed_by_digits(const MatrixC& op, int k, int n, int L) {
  const long dim = ipow(4, L);
  MatrixC out = MatrixC::Zero(dim, dim);
  std::vector<int> sites;
  for (int j = 0; j < k; ++j) sites.push_back((n - 1 + j) % L);
  auto pw = [&](int site) { return ipow(4, L - 1 - site); };
  for (long col = 0; col < dim; ++col) {
    long in = 0;
    for (int s : sites) in = 4 * in + (col / pw(s)) % 4;
    for (long outl = 0; outl < op.rows(); ++outl) {
      cd v = op(outl, in);
      if (v == 0.0) continue;
      long row = col;
      long rest = outl;
      for (int j = k - 1; j >= 0; --j) {
        int s = sites[j];
        row += (rest % 4 - (col / pw(s)) % 4) * pw(s);
        rest /= 4;
      }
      out(row, col) += v;
    }
  }
  return out;
}

MatrixC dense_charge(const MatrixC& op, int k, int L) {
  MatrixC q = MatrixC::Zero(ipow(4, L), ipow(4, L));
  for (int n = 1; n <= L; ++n) q += embed_by_digits(op, k, n, L);
  return q;
}

MatrixC random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  MatrixC m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cd(g(rng), g(rng));
  return (m + m.adjoint()) / 2.0;
}

}  // namespace

TEST(Charges, DensityRangeInference) {
  EXPECT_EQ(make_density(identity(16)).range, 2);
  EXPECT_EQ(make_density(identity(64)).range, 3);
  EXPECT_THROW(make_density(identity(8)), DimensionError);
  EXPECT_THROW(q3_density(make_density(identity(64))), DimensionError);
}

TEST(Charges, AssembledChargesMatchDigitOracle) {
  std::mt19937_64 rng(2);
  MatrixC h = random_hermitian(16, rng);
  const int L = 4;
  ChargeDensity d = make_density(h);
  EXPECT_LT(max_abs(MatrixC(assemble_charge(d, L).dense() - dense_charge(h, 2, L))), 1e-12);

  MatrixC h12 = kron(h, identity(4)), h23 = kron(identity(4), h);
  MatrixC q3 = h12 * h23 - h23 * h12;
  EXPECT_LT(max_abs(MatrixC(q3_density(d).matrix - q3)), 1e-12);
  EXPECT_LT(max_abs(MatrixC(assemble_charge(q3_density(d), L).dense() - dense_charge(q3, 3, L))), 1e-11);
}

TEST(Charges, OpenChainHasFewerTerms) {
  const int L = 3;
  Chain open = assemble_charge(make_density(identity(16)), L, false);
  EXPECT_LT(max_abs(MatrixC(open.dense() - (L - 1) * identity(ipow(4, L)))), 1e-14);
  EXPECT_THROW(assemble_charge(make_density(identity(64)), 2), SiteError);
}

TEST(Charges, PermutationChainIsIntegrable) {
  // The su(4) exchange chain and the identity commute with their Q3.
  EXPECT_LT(q2q3_commutator_norm(permutation_operator(4), 5), 1e-13);
  EXPECT_EQ(q2q3_commutator_norm(identity(16), 4), 0.0);
}

TEST(Charges, GenericDensityIsNotIntegrable) {
  std::mt19937_64 rng(13);
  MatrixC h = random_hermitian(16, rng);
  MatrixC q2 = dense_charge(h, 2, 4);
  MatrixC h12 = kron(h, identity(4)), h23 = kron(identity(4), h);
  MatrixC q3 = dense_charge(MatrixC(h12 * h23 - h23 * h12), 3, 4);
  double oracle = max_abs(MatrixC(q2 * q3 - q3 * q2));
  EXPECT_GT(oracle, 1e-2);
  EXPECT_NEAR(q2q3_commutator_norm(h, 4), oracle, 1e-10 * oracle);
}

TEST(Charges, CatalogModelsCommuteAtLengthSix) {
  std::mt19937_64 rng(99);
  for (int m = 1; m <= 17; ++m) {
    EXPECT_LT(q2q3_commutator_norm(default_spec(m), 6), 1e-12) << "model " << m;
    EXPECT_LT(q2q3_commutator_norm(random_spec(m, rng), 5), 1e-11) << "random model " << m;
  }
  for (Branch b : {Branch::BZero, Branch::ACZero})
    EXPECT_LT(q2q3_commutator_norm(default_spec(1, b), 5), 1e-12);
  EXPECT_LT(q2q3_commutator_norm(default_spec(2, Branch::BZero), 5), 1e-12);
}

TEST(Charges, PerturbedModelFails) {
  HamiltonianParams h = table_row(default_spec(9));
  h.G = 0.3;
  EXPECT_GT(q2q3_commutator_norm(hsu2_density(h), 5), 1e-3);
}
