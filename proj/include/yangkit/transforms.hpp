#pragma once

#include "yangkit/catalog.hpp"

namespace yangkit {

struct TwistError : std::domain_error {
  using std::domain_error::domain_error;
};

enum class TransformKind { Normalization, Reparametrization, BasisChange, PRP, Transpose, Twist };
std::string to_string(TransformKind k);

struct Transform {
  TransformKind kind = TransformKind::Normalization;
  std::function<cd(cd)> scalar;  // normalization f(u), f(0) = 1 keeps regularity
  cd rescale = 1.0;              // reparametrization u -> rescale * u
  MatrixC V, W;

  static Transform normalization(std::function<cd(cd)> f);
  static Transform reparametrization(cd rescale);
  static Transform basis_change(const MatrixC& v);
  static Transform prp();
  static Transform transpose();
  static Transform twist(const MatrixC& v, const MatrixC& w);
};

// Largest of max|[R(u), V (x) V]| and max|[R(u), W (x) W]| over sample points.
double twist_precondition(const RMatrixFn& r, const MatrixC& v, const MatrixC& w);

// R-matrix transforms stay lazy; twists are checked first (tolerance 1e-9).
RMatrixFn apply_transform(const Transform& t, const RMatrixFn& r);
// The induced map on Hamiltonian densities d/du (P R)|_0.
MatrixC apply_transform(const Transform& t, const MatrixC& density);

}  // namespace yangkit
