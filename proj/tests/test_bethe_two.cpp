#include "yangkit/bethe_two.hpp"
#include "yangkit/spectrum.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace yangkit;

namespace {

ModelSpec unit(int model) { return ModelSpec{model, std::nullopt, {{"rho", 1.0}, {"phi", 0.0}}}; }

HamiltonianParams row(double A, double B, double C, double D, double E, double F) {
  HamiltonianParams h;
  h.A = A; h.B = B; h.C = C; h.D = D; h.E = E; h.F = F;
  return h;
}

}  // namespace

TEST(BetheTwo, VacuumAndOneExcitationAgainstChain) {
  for (int m : {8, 9, 10})
    for (int L : {3, 4, 5}) {
      HamiltonianParams h = table_row(unit(m));
      VectorC p0 = sector_spectrum(unit(m), L, 0).eigenvalues;
      ASSERT_EQ(p0.size(), 1);
      EXPECT_LT(std::abs(p0(0) - vacuum_energy(h, L)), 1e-12);
      auto [e1, mult] = one_excitation(h, L);
      VectorC p1 = sector_spectrum(unit(m), L, 1).eigenvalues;
      EXPECT_EQ(p1.size(), mult);
      EXPECT_LT((p1.array() - e1).abs().maxCoeff(), 1e-10) << "model " << m << " L " << L;
    }
}

TEST(BetheTwo, ReferenceValuesModel10) {
  HamiltonianParams h = table_row(unit(10));
  for (int L : {3, 4, 5}) EXPECT_LT(std::abs(vacuum_energy(h, L) - 0.75 * L), 1e-15);
  auto [e, mult] = one_excitation(h, 3);
  EXPECT_LT(std::abs(e - 0.75), 1e-15);
  EXPECT_EQ(mult, 6);
}

TEST(BetheTwo, CaseCountsFillTheSector) {
  for (int L = 3; L <= 6; ++L) {
    CaseCounts n = two_exc_counts(L);
    EXPECT_EQ(n.total(), 2L * L * L - L);
    EXPECT_EQ(n.total(), sector_basis(L, 2).dim());
    EXPECT_EQ(n.block, 3 * L);
    EXPECT_EQ(n.equal_adjacent, 2 * L);
  }
  EXPECT_EQ(two_exc_counts(3).separated, 0);
  EXPECT_FALSE(two_exc_separated(table_row(unit(9)), 3).valid);
  EXPECT_TRUE(two_exc_separated(table_row(unit(9)), 4).valid);
}

TEST(BetheTwo, DecoupledBlockIsCirculant) {
  const int L = 5;
  const double A = 0.4, B = -0.9, D = 1.3, E = 0.25;
  BetheTwoBlock b = two_exc_block(row(A, B, 0, D, E, 0), L);
  std::vector<cd> want;
  const double diag_c = (L - 2) * (A + B) + 2 * A;
  const double diag_h = (L - 3) * (A + B) + D;
  for (int k = 0; k < L; ++k) {
    want.push_back(diag_c + 2 * B * std::cos(2 * M_PI * k / L));
    want.push_back(diag_h + E);
    want.push_back(diag_h - E);
  }
  VectorC w = Eigen::Map<VectorC>(want.data(), long(want.size()));
  EXPECT_LT(multiset_distance(eigen_spectrum(b.block), w), 1e-12);
}

TEST(BetheTwo, BlockEigenvectorsAreChainEigenstates) {
  for (int m : {8, 9, 10}) {
    const int L = 4;
    HamiltonianParams h = table_row(unit(m));
    Chain H = chain_hamiltonian(unit(m), L);
    EigenPairs ep = eigen_pairs(two_exc_block(h, L).block);
    for (long k = 0; k < ep.values.size(); ++k) {
      VectorC v = reconstruct_state(ep.vectors.col(k), L);
      VectorC r = H.matrix * v - ep.values(k) * v;
      EXPECT_LT(r.norm() / v.norm(), 1e-9) << "model " << m << " k " << k;
    }
  }
}

TEST(BetheTwo, PredictionMatchesExactDiagonalization) {
  for (int m : {8, 9, 10})
    for (int L : {3, 4, 5}) {
      BetheTwoReport r = two_exc_compare(unit(m), L);
      EXPECT_EQ(r.sector.size(), 2 * L * L - L);
      EXPECT_EQ(r.predicted.size(), r.sector.size());
      EXPECT_LT(r.distance, 1e-8) << "model " << m << " L " << L;
      EXPECT_LT(r.max_eigen_residual, 1e-9);
    }
}

TEST(BetheTwo, Errors) {
  EXPECT_THROW(two_exc_compare(default_spec(7), 4), CatalogError);
  EXPECT_THROW(two_exc_compare(unit(9), 6), SiteError);
  EXPECT_THROW(two_exc_block(table_row(unit(9)), 2), SiteError);
  EXPECT_THROW(reconstruct_state(VectorC::Zero(5), 3), DimensionError);
}
