#include "yangkit/tensor.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <random>

#include <sstream>
#include <vector>

namespace yangkit {

Eigen::PermutationMatrix<Eigen::Dynamic, Eigen::Dynamic, int>
cyclic_shift(int L, int shift, int d) {
  const long dim = ipow(d, L);
  shift = ((shift % L) + L) % L;
  Eigen::PermutationMatrix<Eigen::Dynamic, Eigen::Dynamic, int> perm(dim);
  std::vector<int> digits(L), moved(L);
  for (long s = 0; s < dim; ++s) {
    long r = s;
    for (int j = L - 1; j >= 0; --j) {
      digits[j] = static_cast<int>(r % d);
      r /= d;
    }
    for (int j = 0; j < L; ++j) moved[(j + shift) % L] = digits[j];
    long t = 0;
    for (int j = 0; j < L; ++j) t = t * d + moved[j];
    perm.indices()[s] = static_cast<int>(t);
  }
  return perm;
}

namespace {

void check_square(const MatrixC& a) {
  if (a.rows() != a.cols()) throw DimensionError("eigen_spectrum: matrix not square");
}

struct Solved {
  VectorC values;
  MatrixC vectors;
};

// Schur shifts can stall on highly structured matrices; retry after a
// deterministic random unitary similarity, which leaves the spectrum unchanged.
Solved solve(const MatrixC& a, bool vectors) {
  check_square(a);
  const long n = a.rows();
  Eigen::ComplexEigenSolver<MatrixC> es;
  es.setMaxIterations(60 * std::max<long>(n, 1));
  es.compute(a, vectors);
  if (es.info() == Eigen::Success) return {es.eigenvalues(), vectors ? es.eigenvectors() : MatrixC()};
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> g;
  for (int attempt = 0; attempt < 3; ++attempt) {
    MatrixC z(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) z(i, j) = cd(g(rng), g(rng));
    MatrixC q = Eigen::HouseholderQR<MatrixC>(z).householderQ();
    es.setMaxIterations(200 * n);
    es.compute(q.adjoint() * a * q, vectors);
    if (es.info() == Eigen::Success)
      return {es.eigenvalues(), vectors ? MatrixC(q * es.eigenvectors()) : MatrixC()};
  }
  std::ostringstream msg;
  msg << "complex Schur iteration did not converge (n=" << n << ", iterations=" << 200 * n
      << " after 3 restarts)";
  throw ConvergenceError(msg.str());
}

}  // namespace

VectorC eigen_spectrum(const MatrixC& a) {
  if (a.rows() == 0) return VectorC();
  return solve(a, false).values;
}

EigenPairs eigen_pairs(const MatrixC& a) {
  if (a.rows() == 0) return {};
  Solved s = solve(a, true);
  return {s.values, s.vectors};
}

}  // namespace yangkit
