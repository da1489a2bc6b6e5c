#pragma once

#include "yangkit/catalog.hpp"

#include <array>

namespace yangkit {

struct GradingError : std::domain_error {
  using std::domain_error::domain_error;
};

// Parity of the local basis (phi1, phi2, psi1, psi2).
struct GradingConvention {
  std::array<int, 4> p{0, 0, 1, 1};
};

// Sum (-1)^{p(a) p(b)} E^a_b (x) E^b_a.
MatrixC graded_permutation(const GradingConvention& g = {});

// Sign dressing R -> R^f on two sites:
// R^f[(a,b),(c,d)] = (-1)^{p(c)(1 + p(a) + p(b))} R[(a,b),(c,d)].
MatrixC grade_matrix(const MatrixC& r, const GradingConvention& g = {});

// Largest entry whose four indices have odd total parity.
double compatibility_violation(const MatrixC& r, const GradingConvention& g = {});
bool compatibility_check(const RMatrixFn& r, const GradingConvention& g = {},
                         double tol = 1e-12);

// Throws GradingError when the compatibility condition fails.
RMatrixFn grade_r_matrix(const RMatrixFn& r, const GradingConvention& g = {});

// Graded Yang-Baxter residual with R^f_13 = P^f_12 R^f_23 P^f_12.
double graded_ybe_residual(const RMatrixFn& rf, cd u, cd v, const GradingConvention& g = {});

// d/du (P^f R^f(u)) at u = 0.
MatrixC graded_hamiltonian(const RMatrixFn& rf, const GradingConvention& g = {});

// Entrywise max of H^(6)(rho, a, phi) minus the P <-> P^f swap of model 4,
// (F (x) F) H^(4)(rho, 2 rho - a, -phi) (F (x) F) + rho (P - P^f), where F
// reverses the local basis.
double model4_model6_swap_residual(cd rho, cd a, cd phi);

// The free-Hubbard image of graded model 12:
// (U (x) U) D (-i V1 H^(12),f V1^-1) D (U^-1 (x) U^-1)
// with V1 = diag(1, -1, i, i) on site 1 and D = (-1)^{p(x)(1 - p(y))}.
MatrixC model12_hubbard_image(cd rho, cd phi);
double model12_free_hubbard_residual(cd rho, cd phi);

// Periodic graded chain: adjacent bonds are plain embeddings, the wrap bond
// (L, 1) carries the Jordan-Wigner signs of the fermionic tensor product.
Chain graded_chain_hamiltonian(const MatrixC& hf, int L, const GradingConvention& g = {});

}  // namespace yangkit
