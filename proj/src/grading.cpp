#include "yangkit/grading.hpp"

#include "yangkit/oscillators.hpp"
#include "yangkit/verifier.hpp"

namespace yangkit {

namespace {

int sgn(int parity) { return (parity & 1) ? -1 : 1; }

}  // namespace

MatrixC graded_permutation(const GradingConvention& g) {
  MatrixC p = MatrixC::Zero(16, 16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) p(4 * b + a, 4 * a + b) = double(sgn(g.p[a] * g.p[b]));
  return p;
}

MatrixC grade_matrix(const MatrixC& r, const GradingConvention& g) {
  if (r.rows() != 16 || r.cols() != 16) throw DimensionError("grade_matrix: expected 16x16");
  MatrixC out = r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          out(4 * a + b, 4 * c + d) *= double(sgn(g.p[c] * (1 + g.p[a] + g.p[b])));
  return out;
}

double compatibility_violation(const MatrixC& r, const GradingConvention& g) {
  double worst = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          if ((g.p[a] + g.p[b] + g.p[c] + g.p[d]) & 1)
            worst = std::max(worst, std::abs(r(4 * a + b, 4 * c + d)));
  return worst;
}

bool compatibility_check(const RMatrixFn& r, const GradingConvention& g, double tol) {
  for (double u : {0.0, 0.137, -0.291, 0.413})
    if (!r.near_pole(u, 0.05) && compatibility_violation(r(u), g) > tol) return false;
  return true;
}

RMatrixFn grade_r_matrix(const RMatrixFn& r, const GradingConvention& g) {
  if (!compatibility_check(r, g))
    throw GradingError("grade_r_matrix: R mixes even and odd total parity");
  return RMatrixFn{[r, g](cd u) { return grade_matrix(r.eval(u), g); }, r.pole_distance,
                   r.poles};
}

double graded_ybe_residual(const RMatrixFn& rf, cd u, cd v, const GradingConvention& g) {
  MatrixC p12 = kron(graded_permutation(g), identity(4));
  MatrixC a = leg12(rf(u - v));
  MatrixC b = p12 * leg23(rf(u)) * p12;
  MatrixC c = leg23(rf(v));
  return max_abs(MatrixC(a * b * c - c * b * a));
}

MatrixC graded_hamiltonian(const RMatrixFn& rf, const GradingConvention& g) {
  return derivative_at_zero(rf, graded_permutation(g)).h;
}

double model4_model6_swap_residual(cd rho, cd a, cd phi) {
  ModelSpec s4{4, std::nullopt, {{"rho", rho}, {"a", 2.0 * rho - a}, {"phi", -phi}}};
  ModelSpec s6{6, std::nullopt, {{"rho", rho}, {"a", a}, {"phi", phi}}};
  MatrixC f = MatrixC::Zero(4, 4);
  for (int i = 0; i < 4; ++i) f(i, 3 - i) = 1.0;
  MatrixC ff = kron(f, f);
  MatrixC swapped = ff * build_hamiltonian_density(s4) * ff +
                    rho * (permutation_operator(4) - graded_permutation());
  return max_abs(MatrixC(build_hamiltonian_density(s6) - swapped));
}

MatrixC model12_hubbard_image(cd rho, cd phi) {
  ModelSpec s{12, std::nullopt, {{"rho", rho}, {"phi", phi}}};
  MatrixC hf = graded_hamiltonian(grade_r_matrix(build_r_matrix(s)));
  const cd i(0, 1);
  MatrixC v = MatrixC::Zero(4, 4);
  v.diagonal() << 1.0, -1.0, i, i;
  MatrixC v1 = kron(v, identity(4));
  MatrixC twisted = -i * v1 * hf * v1.inverse();
  MatrixC u = MatrixC::Zero(4, 4);
  u(0, 1) = u(1, 0) = std::exp(-phi / 2.0);
  u(2, 2) = u(3, 3) = i;
  MatrixC uu = kron(u, u);
  GradingConvention g;
  MatrixC d = MatrixC::Identity(16, 16);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      if (g.p[x] == 1 && g.p[y] == 0) d(4 * x + y, 4 * x + y) = -1.0;
  return uu * d * twisted * d * uu.inverse();
}

double model12_free_hubbard_residual(cd rho, cd phi) {
  return max_abs(MatrixC(model12_hubbard_image(rho, phi) - rho * k_hub()));
}

Chain graded_chain_hamiltonian(const MatrixC& hf, int L, const GradingConvention& g) {
  if (hf.rows() != 16) throw DimensionError("graded_chain_hamiltonian: expected 16x16");
  if (L < 2) throw SiteError("graded_chain_hamiltonian: need L >= 2");
  SparseC m(ipow(4, L), ipow(4, L));
  for (int n = 1; n < L; ++n) m += embed_local(hf, n, L, false).matrix;
  // wrap bond: site L carries the first tensor factor, site 1 the second
  SparseC id4(4, 4), z(4, 4);
  id4.setIdentity();
  for (int k = 0; k < 4; ++k) z.insert(k, k) = double(sgn(g.p[k]));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          cd h = hf(4 * a + b, 4 * c + d);
          if (h == 0.0) continue;
          const int s2 = g.p[b] + g.p[d];
          h *= double(sgn((g.p[a] + g.p[c]) * g.p[b] + g.p[c] * s2));
          SparseC site1(4, 4), siteL(4, 4);
          site1.insert(b, d) = 1.0;
          siteL.insert(a, c) = 1.0;
          SparseC term = site1;
          for (int j = 2; j < L; ++j) term = kron(term, (s2 & 1) ? z : id4);
          term = kron(term, siteL);
          m += h * term;
        }
  m.prune(cd(0));
  return make_chain(L, 4, std::move(m));
}

}  // namespace yangkit
