#include "yangkit/oscillators.hpp"

#include "yangkit/catalog.hpp"

namespace yangkit {

MatrixC local_annihilator(Spin s) {
  MatrixC c = MatrixC::Zero(4, 4);
  if (s == Up) {
    c(Phi1, Psi1) = 1.0;   // c_up |psi1> = |phi1>
    c(Psi2, Phi2) = 1.0;   // c_up c_up^+ c_dn^+ |0> = c_dn^+ |0>
  } else {
    c(Phi1, Psi2) = 1.0;
    c(Psi1, Phi2) = -1.0;  // c_dn c_up^+ c_dn^+ |0> = -c_up^+ |0>
  }
  return c;
}

MatrixC local_parity() {
  MatrixC z = MatrixC::Zero(4, 4);
  z.diagonal() << 1.0, 1.0, -1.0, -1.0;
  return z;
}

namespace {

TwoSiteFermions make_fermions() {
  TwoSiteFermions f;
  MatrixC I = identity(4), Z = local_parity();
  for (int s = 0; s < 2; ++s) {
    MatrixC c = local_annihilator(static_cast<Spin>(s));
    f.c[s][0] = kron(c, Z);
    f.c[s][1] = kron(I, c);
    for (int j = 0; j < 2; ++j) {
      f.cdag[s][j] = f.c[s][j].adjoint();
      f.n[s][j] = f.cdag[s][j] * f.c[s][j];
    }
  }
  return f;
}

}  // namespace

const TwoSiteFermions& fermions() {
  static const TwoSiteFermions f = make_fermions();
  return f;
}

MatrixC k_hub() {
  const auto& f = fermions();
  MatrixC k = MatrixC::Zero(16, 16);
  for (int s = 0; s < 2; ++s)
    k += f.cdag[s][0] * f.c[s][1] + f.cdag[s][1] * f.c[s][0];
  return k;
}

MatrixC k_pair(cd a1, cd a2) {
  const auto& f = fermions();
  return a1 * f.cdag[Up][0] * f.cdag[Down][0] * f.c[Up][1] * f.c[Down][1] +
         a2 * f.cdag[Up][1] * f.cdag[Down][1] * f.c[Up][0] * f.c[Down][0];
}

MatrixC k_flip(cd a3, cd a4, cd a5, cd a6) {
  const auto& f = fermions();
  return a3 * f.cdag[Up][0] * f.cdag[Down][1] * f.c[Down][0] * f.c[Up][1] +
         a4 * f.cdag[Down][0] * f.cdag[Up][1] * f.c[Up][0] * f.c[Down][1] +
         a5 * f.cdag[Up][0] * f.cdag[Up][1] * f.c[Down][0] * f.c[Down][1] +
         a6 * f.cdag[Down][0] * f.cdag[Down][1] * f.c[Up][0] * f.c[Up][1];
}

MatrixC potential(const std::array<cd, 16>& b) {
  const auto& f = fermions();
  const MatrixC& u1 = f.n[Up][0];
  const MatrixC& d1 = f.n[Down][0];
  const MatrixC& u2 = f.n[Up][1];
  const MatrixC& d2 = f.n[Down][1];
  MatrixC I = identity(16);
  // Bit k of the index selects (u1, d1, u2, d2); B_{i+1} multiplies monomial i.
  const std::array<const MatrixC*, 4> ops{&u1, &d1, &u2, &d2};
  MatrixC v = MatrixC::Zero(16, 16);
  for (int i = 0; i < 16; ++i) {
    MatrixC m = I;
    for (int k = 0; k < 4; ++k)
      if (i & (1 << k)) m = m * *ops[k];
    v += b[i] * m;
  }
  return v;
}

MatrixC h15(cd a1, cd a2, cd a3, cd a4) {
  const auto& f = fermions();
  MatrixC du = f.n[Up][0] - f.n[Up][1];
  MatrixC dd = f.n[Down][0] - f.n[Down][1];
  return k_hub() + a1 * du * du + a2 * du + a3 * dd * dd + a4 * dd;
}

MatrixC h16(cd a1, cd a2, cd a3, cd a4) {
  const auto& f = fermions();
  MatrixC du = f.n[Up][0] - f.n[Up][1];
  MatrixC sd = f.n[Down][0] + f.n[Down][1];
  MatrixC dd = f.n[Down][0] - f.n[Down][1];
  return k_hub() + a1 * du * du + a2 * du + a3 * sd + a4 * dd;
}

MatrixC h17(cd a1, cd a2, cd a3, cd a4) {
  const auto& f = fermions();
  MatrixC su = f.n[Up][0] + f.n[Up][1];
  MatrixC du = f.n[Up][0] - f.n[Up][1];
  MatrixC sd = f.n[Down][0] + f.n[Down][1];
  MatrixC dd = f.n[Down][0] - f.n[Down][1];
  return k_hub() + a1 * su + a2 * du + a3 * sd + a4 * dd;
}

MatrixC h18(cd a, cd b) {
  const auto& f = fermions();
  MatrixC N1 = f.n[Up][0] + f.n[Down][0];
  MatrixC N2 = f.n[Up][1] + f.n[Down][1];
  return k_hub() + k_flip(a, a, a, a) + (2.0 * a - b) * N1 + b * N2 - a * N1 * N2;
}

SpinSplit split_by_spin(int model, cd a1, cd a2, cd a3, cd a4) {
  const auto& f = fermions();
  auto hop = [&](int s) {
    return MatrixC(f.cdag[s][0] * f.c[s][1] + f.cdag[s][1] * f.c[s][0]);
  };
  auto diff = [&](int s) { return MatrixC(f.n[s][0] - f.n[s][1]); };
  auto sum = [&](int s) { return MatrixC(f.n[s][0] + f.n[s][1]); };
  SpinSplit out;
  switch (model) {
    case 15:
      out.up = hop(Up) + a1 * diff(Up) * diff(Up) + a2 * diff(Up);
      out.down = hop(Down) + a3 * diff(Down) * diff(Down) + a4 * diff(Down);
      break;
    case 16:
      out.up = hop(Up) + a1 * diff(Up) * diff(Up) + a2 * diff(Up);
      out.down = hop(Down) + a3 * sum(Down) + a4 * diff(Down);
      break;
    case 17:
      out.up = hop(Up) + a1 * sum(Up) + a2 * diff(Up);
      out.down = hop(Down) + a3 * sum(Down) + a4 * diff(Down);
      break;
    default:
      throw CatalogError("split_by_spin: only models 15-17 separate");
  }
  return out;
}

}  // namespace yangkit
