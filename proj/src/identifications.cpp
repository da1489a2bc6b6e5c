#include "yangkit/identifications.hpp"

#include "yangkit/grading.hpp"

#include <numbers>

namespace yangkit {

namespace {
constexpr std::array<int, 4> kParity{0, 0, 1, 1};
}

MatrixC sp4_invariant() {
  MatrixC k = MatrixC::Zero(16, 16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      k(4 * i + (3 - i), 4 * j + (3 - j)) = ((kParity[i] + kParity[j]) & 1) ? -1.0 : 1.0;
  return k;
}

RMatrixFn sp4_r_matrix() {
  MatrixC one = identity(16), p = permutation_operator(4), k = sp4_invariant();
  return RMatrixFn{[=](cd u) -> MatrixC { return u * one + p - u / (u + 3.0) * k; },
                   [](cd u) { return std::abs(u + 3.0); }, "u = -3"};
}

MatrixC sp4_density() {
  MatrixC p = permutation_operator(4);
  return p * (identity(16) - sp4_invariant() / 3.0);
}

MatrixC sp4_basis_map(cd phi) {
  MatrixC u = MatrixC::Zero(4, 4);
  u(0, 0) = 1.0;
  u(2, 2) = 1.0;
  u(1, 3) = std::exp(phi / 2.0);
  u(3, 1) = std::exp(-phi / 2.0);
  return u;
}

MatrixC model11_from_sp4(cd rho, cd phi) {
  MatrixC uu = kron(sp4_basis_map(phi), sp4_basis_map(phi));
  return 1.5 * rho * (identity(16) - uu * sp4_density() * uu.inverse());
}

MatrixC two_xxx_decomposition(cd A, cd B, cd C) {
  SymmetryRep rep = symmetry_rep(Rep::TwoTwo);
  MatrixC h = A * identity(16);
  for (int i = 0; i < 3; ++i)
    h += 2.0 * ((B + C) * kron(rep.tL[i], rep.tL[i]) + (B - C) * kron(rep.tR[i], rep.tR[i]));
  return h;
}

double model5_su4_residual() {
  const cd ipi(0, std::numbers::pi);
  ModelSpec s{5, std::nullopt, {{"rho", -1.0}, {"a", -1.0}, {"phi", ipi}}};
  MatrixC target = -(identity(16) - permutation_operator(4));
  return max_abs(MatrixC(build_hamiltonian_density(s) - target));
}

double model7_su22_residual() {
  const cd ipi(0, std::numbers::pi);
  ModelSpec s{7, std::nullopt, {{"rho", 1.0}, {"a", 1.0}, {"phi", ipi}}};
  MatrixC target = identity(16) - graded_permutation();
  return max_abs(MatrixC(build_hamiltonian_density(s) - target));
}

}  // namespace yangkit
