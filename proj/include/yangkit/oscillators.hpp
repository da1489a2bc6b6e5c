#pragma once

#include "yangkit/tensor.hpp"

#include <array>

namespace yangkit {

enum Spin : int { Up = 0, Down = 1 };

// Two-site fermionic oscillators as 16x16 matrices.  Local states:
// phi1 = |0>, phi2 = c_up^+ c_dn^+ |0>, psi1 = c_up^+ |0>, psi2 = c_dn^+ |0>.
// The parity string of a site-1 operator sits on site 2, i.e. the ordering of
// the graded e-operators with trailing strings.
struct TwoSiteFermions {
  std::array<std::array<MatrixC, 2>, 2> c;     // c[spin][site]
  std::array<std::array<MatrixC, 2>, 2> cdag;
  std::array<std::array<MatrixC, 2>, 2> n;
};

MatrixC local_annihilator(Spin s);  // 4x4
MatrixC local_parity();             // diag(1, 1, -1, -1)
const TwoSiteFermions& fermions();

MatrixC k_hub();
MatrixC k_pair(cd a1, cd a2);
MatrixC k_flip(cd a3, cd a4, cd a5, cd a6);
// B1 .. B16 in the order of the general number-operator potential.
MatrixC potential(const std::array<cd, 16>& b);

MatrixC h15(cd a1, cd a2, cd a3, cd a4);
MatrixC h16(cd a1, cd a2, cd a3, cd a4);
MatrixC h17(cd a1, cd a2, cd a3, cd a4);
MatrixC h18(cd a, cd b);

// Spin-resolved pieces of models 15-17; each acts as identity on the other
// species, and h = up + down.
struct SpinSplit {
  MatrixC up, down;
};
SpinSplit split_by_spin(int model, cd a1, cd a2, cd a3, cd a4);

}  // namespace yangkit
