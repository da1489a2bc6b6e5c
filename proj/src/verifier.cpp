#include "yangkit/verifier.hpp"

#include <cmath>
#include <random>

namespace yangkit {

MatrixC leg12(const MatrixC& r) { return kron(r, identity(4)); }
MatrixC leg23(const MatrixC& r) { return kron(identity(4), r); }
MatrixC leg13(const MatrixC& r) {
  MatrixC p23 = kron(identity(4), permutation_operator(4));
  return p23 * leg12(r) * p23;
}

double ybe_residual(const RMatrixFn& r, cd u, cd v) {
  MatrixC a = leg12(r(u - v)), b = leg13(r(u)), c = leg23(r(v));
  return max_abs(MatrixC(a * b * c - c * b * a));
}

double regularity_residual(const RMatrixFn& r) {
  return max_abs(MatrixC(r(0.0) - permutation_operator(4)));
}

UnitarityFit braiding_unitarity(const RMatrixFn& r, cd u) {
  MatrixC p = permutation_operator(4);
  MatrixC m = r(u) * p * r(-u) * p;
  cd c = m.trace() / double(m.rows());
  return {c, max_abs(MatrixC(m - c * identity(m.rows())))};
}

Extraction derivative_at_zero(const RMatrixFn& r, const MatrixC& left, double step) {
  auto central = [&](double h) -> MatrixC { return (r(cd(h)) - r(cd(-h))) / (2.0 * h); };
  MatrixC d1 = central(step), d2 = central(step / 2), d4 = central(step / 4);
  MatrixC r1 = (4.0 * d2 - d1) / 3.0;
  MatrixC r2 = (4.0 * d4 - d2) / 3.0;
  MatrixC best = (16.0 * r2 - r1) / 15.0;
  return {left * best, max_abs(MatrixC(best - r2))};
}

Extraction hamiltonian_from_r(const RMatrixFn& r, double step) {
  return derivative_at_zero(r, permutation_operator(4), step);
}

Fit fit_scale_shift(const MatrixC& x, const MatrixC& target) {
  const long n = x.size();
  Eigen::MatrixXcd a(n, 2);
  a.col(0) = target.reshaped();
  a.col(1) = identity(x.rows()).reshaped();
  Eigen::VectorXcd b = x.reshaped();
  Eigen::VectorXcd sol = a.colPivHouseholderQr().solve(b);
  return {sol(0), sol(1), max_abs(Eigen::VectorXcd(a * sol - b))};
}

SeriesReport series_consistency(const RMatrixFn& r) {
  MatrixC p = permutation_operator(4);
  MatrixC h = hamiltonian_from_r(r).h;
  MatrixC ph = p * h, ph2 = p * h * h;
  const double e = 1e-3;
  MatrixC second = p * (r(cd(e)) + r(cd(-e)) - 2.0 * r(cd(0.0))) / (2.0 * e * e);
  cd gamma = (second - h * h / 2.0).trace() / 16.0;
  auto resid = [&](double u) {
    MatrixC ru = std::exp(-gamma * u * u) * r(cd(u));
    return max_abs(MatrixC(ru - (p + ph * u + ph2 * (u * u / 2.0))));
  };
  double big = std::max(resid(1e-2), resid(-1e-2));
  double small = std::max(resid(5e-3), resid(-5e-3));
  double ratio = small > 1e-14 ? big / small : 8.0;
  return {std::max(big, small), ratio, gamma};
}

double symmetry_residual(const MatrixC& hd, const SymmetryRep& rep) {
  double worst = 0.0;
  MatrixC id = identity(4);
  for (const auto* triple : {&rep.tL, &rep.tR})
    for (const MatrixC& t : *triple) {
      MatrixC g = kron(t, id) + kron(id, t);
      worst = std::max(worst, max_abs(commutator(hd, g)));
    }
  return worst;
}

std::vector<std::pair<cd, cd>> verification_grid(const RMatrixFn& r, int count,
                                                 std::uint64_t seed, double margin) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-0.5, 0.5);
  auto clear = [&](cd x) { return !r.pole_distance || r.pole_distance(x) >= margin; };
  std::vector<std::pair<cd, cd>> out;
  int attempts = 0;
  while (int(out.size()) < count) {
    if (++attempts > 100000)
      throw PoleError("verification_grid: no pole-free points in |u|, |v| <= 0.5");
    cd u = dist(rng), v = dist(rng);
    if (clear(u) && clear(v) && clear(u - v) && clear(-u) && clear(-v) && clear(v - u))
      out.emplace_back(u, v);
  }
  return out;
}

}  // namespace yangkit
