#pragma once

#include "yangkit/catalog.hpp"

namespace yangkit {

// sum (-1)^{p(i)+p(j)} E^i_j (x) E^{3-i}_{3-j}
MatrixC sp4_invariant();
// R(u) = u 1 + P - u/(u+3) K'
RMatrixFn sp4_r_matrix();
// Density of the sp(4) chain, d/du (P R)|_0 = P (1 - K'/3).
MatrixC sp4_density();
MatrixC sp4_basis_map(cd phi);  // U
// (3 rho / 2) (1 - (U (x) U) H^sp(4) (U^-1 (x) U^-1))
MatrixC model11_from_sp4(cd rho, cd phi);

// A 1 + 2 sum_i [(B + C) tL_i (x) tL_i + (B - C) tR_i (x) tR_i] with rho_{2+2}.
MatrixC two_xxx_decomposition(cd A, cd B, cd C);

// Known reference points: model 5 at (rho, a, phi) = (-1, -1, i pi) equals
// -(1 - P); model 7 at (1, 1, i pi) equals 1 - P^f.
double model5_su4_residual();
double model7_su22_residual();

}  // namespace yangkit
