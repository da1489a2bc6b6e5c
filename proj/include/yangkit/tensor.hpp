#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <unsupported/Eigen/KroneckerProduct>

#include <complex>
#include <stdexcept>
#include <string>

namespace yangkit {

using cd = std::complex<double>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using SpMat = Eigen::SparseMatrix<Scalar>;

using MatrixC = Mat<cd>;
using VectorC = Eigen::VectorXcd;
using SparseC = SpMat<cd>;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct SiteError : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultTol = 1e-10;

// Integer power for small bases, used for 4^L.
constexpr long ipow(long base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

template <typename A, typename B>
Mat<typename A::Scalar> kron(const Eigen::MatrixBase<A>& a,
                             const Eigen::MatrixBase<B>& b) {
  return Eigen::kroneckerProduct(a.derived().eval(), b.derived().eval()).eval();
}

template <typename Scalar>
SpMat<Scalar> kron(const SpMat<Scalar>& a, const SpMat<Scalar>& b) {
  SpMat<Scalar> out = Eigen::kroneckerProduct(a, b);
  return out;
}

template <typename Scalar = cd>
Mat<Scalar> identity(long n) {
  return Mat<Scalar>::Identity(n, n);
}

// E^i_j: the d x d matrix unit with a single 1 at (i, j).
template <typename Scalar = cd>
Mat<Scalar> matrix_unit(int d, int i, int j) {
  Mat<Scalar> e = Mat<Scalar>::Zero(d, d);
  e(i, j) = Scalar(1);
  return e;
}

// P(x ⊗ y) = y ⊗ x on C^d ⊗ C^d.
template <typename Scalar = cd>
Mat<Scalar> permutation_operator(int d) {
  if (d < 1) throw DimensionError("permutation_operator: d must be >= 1");
  Mat<Scalar> p = Mat<Scalar>::Zero(d * d, d * d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) p(y * d + x, x * d + y) = Scalar(1);
  return p;
}

template <typename D>
double max_abs(const Eigen::MatrixBase<D>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

template <typename Scalar>
double max_abs(const SpMat<Scalar>& m) {
  double r = 0.0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (typename SpMat<Scalar>::InnerIterator it(m, k); it; ++it)
      r = std::max(r, std::abs(it.value()));
  return r;
}

template <typename A, typename B>
bool approx_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b,
                  double tol = kDefaultTol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= tol;
}

template <typename A, typename B>
Mat<typename A::Scalar> commutator(const Eigen::MatrixBase<A>& a,
                                   const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw DimensionError("commutator: dimension mismatch");
  return a * b - b * a;
}

// Operator on L sites of local dimension d, stored sparse.
template <typename Scalar = cd>
struct ChainOperator {
  int length = 0;
  int local_dim = 4;
  SpMat<Scalar> matrix;

  long dim() const { return ipow(local_dim, length); }
  Mat<Scalar> dense() const { return Mat<Scalar>(matrix); }
};

using Chain = ChainOperator<cd>;

template <typename Scalar>
ChainOperator<Scalar> make_chain(int L, int d, SpMat<Scalar> m) {
  if (m.rows() != ipow(d, L) || m.cols() != ipow(d, L))
    throw DimensionError("chain operator must be d^L square");
  return ChainOperator<Scalar>{L, d, std::move(m)};
}

template <typename Scalar>
ChainOperator<Scalar> operator+(const ChainOperator<Scalar>& a,
                                const ChainOperator<Scalar>& b) {
  if (a.length != b.length || a.local_dim != b.local_dim)
    throw DimensionError("chain sum: dimension mismatch");
  return {a.length, a.local_dim, SpMat<Scalar>(a.matrix + b.matrix)};
}

template <typename Scalar>
ChainOperator<Scalar> operator*(const ChainOperator<Scalar>& a,
                                const ChainOperator<Scalar>& b) {
  if (a.length != b.length || a.local_dim != b.local_dim)
    throw DimensionError("chain product: dimension mismatch");
  return {a.length, a.local_dim, SpMat<Scalar>(a.matrix * b.matrix)};
}

template <typename Scalar>
ChainOperator<Scalar> commutator(const ChainOperator<Scalar>& a,
                                 const ChainOperator<Scalar>& b) {
  if (a.length != b.length || a.local_dim != b.local_dim)
    throw DimensionError("commutator: dimension mismatch");
  SpMat<Scalar> ab = a.matrix * b.matrix;
  SpMat<Scalar> ba = b.matrix * a.matrix;
  SpMat<Scalar> c = ab - ba;
  c.prune(Scalar(0));
  return {a.length, a.local_dim, std::move(c)};
}

template <typename Scalar = cd>
ChainOperator<Scalar> chain_identity(int L, int d = 4) {
  SpMat<Scalar> m(ipow(d, L), ipow(d, L));
  m.setIdentity();
  return {L, d, std::move(m)};
}

// Basis permutation for the cyclic relabelling site j -> j + shift (mod L).
// Sites are 1-based; site 1 is the most significant tensor factor.
Eigen::PermutationMatrix<Eigen::Dynamic, Eigen::Dynamic, int>
cyclic_shift(int L, int shift, int d = 4);

// Place a k-site operator on sites n, n+1, ..., n+k-1 (1-based).  Blocks that
// run past site L wrap around and need `periodic`; they are built by
// conjugating the n = 1 placement with a cyclic shift.
template <typename D>
ChainOperator<typename D::Scalar> embed_local(const Eigen::MatrixBase<D>& op,
                                              int n, int L, bool periodic,
                                              int d = 4) {
  using Scalar = typename D::Scalar;
  if (op.rows() != op.cols()) throw DimensionError("embed_local: op not square");
  int k = 0;
  for (long s = 1; s < op.rows(); s *= d) ++k;
  if (ipow(d, k) != op.rows()) throw DimensionError("embed_local: op size is not d^k");
  if (L < 1 || k > L) throw SiteError("embed_local: operator longer than chain");
  if (n < 1 || n > L) throw SiteError("embed_local: site out of range");
  bool wraps = n + k - 1 > L;
  if (wraps && !periodic)
    throw SiteError("embed_local: wraparound requires a periodic chain");

  SpMat<Scalar> local = op.derived().eval().sparseView();
  int start = wraps ? 1 : n;
  SpMat<Scalar> left(ipow(d, start - 1), ipow(d, start - 1));
  left.setIdentity();
  SpMat<Scalar> right(ipow(d, L - start - k + 1), ipow(d, L - start - k + 1));
  right.setIdentity();
  SpMat<Scalar> m = kron(kron(left, local), right);
  if (wraps) {
    auto perm = cyclic_shift(L, n - 1, d);
    SpMat<Scalar> t = perm * m * perm.transpose();
    m = t;
  }
  return {L, d, std::move(m)};
}

// Full multiset of eigenvalues of a general complex matrix.
VectorC eigen_spectrum(const MatrixC& a);

struct EigenPairs {
  VectorC values;
  MatrixC vectors;
};
EigenPairs eigen_pairs(const MatrixC& a);

}  // namespace yangkit
