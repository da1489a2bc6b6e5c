#include "yangkit/transforms.hpp"

namespace yangkit {

std::string to_string(TransformKind k) {
  switch (k) {
    case TransformKind::Normalization: return "normalization";
    case TransformKind::Reparametrization: return "reparametrization";
    case TransformKind::BasisChange: return "basis_change";
    case TransformKind::PRP: return "prp";
    case TransformKind::Transpose: return "transpose";
    case TransformKind::Twist: return "twist";
  }
  return "unknown";
}

Transform Transform::normalization(std::function<cd(cd)> f) {
  Transform t;
  t.kind = TransformKind::Normalization;
  t.scalar = std::move(f);
  return t;
}

Transform Transform::reparametrization(cd rescale) {
  if (rescale == 0.0) throw std::invalid_argument("reparametrization: zero rescale");
  Transform t;
  t.kind = TransformKind::Reparametrization;
  t.rescale = rescale;
  return t;
}

Transform Transform::basis_change(const MatrixC& v) {
  if (v.rows() != 4 || v.cols() != 4) throw DimensionError("basis_change: V must be 4x4");
  if (std::abs(v.determinant()) < 1e-12)
    throw std::invalid_argument("basis_change: V is not invertible");
  Transform t;
  t.kind = TransformKind::BasisChange;
  t.V = v;
  return t;
}

Transform Transform::prp() {
  Transform t;
  t.kind = TransformKind::PRP;
  return t;
}

Transform Transform::transpose() {
  Transform t;
  t.kind = TransformKind::Transpose;
  return t;
}

Transform Transform::twist(const MatrixC& v, const MatrixC& w) {
  if (v.rows() != 4 || w.rows() != 4 || v.cols() != 4 || w.cols() != 4)
    throw DimensionError("twist: V and W must be 4x4");
  Transform t;
  t.kind = TransformKind::Twist;
  t.V = v;
  t.W = w;
  return t;
}

double twist_precondition(const RMatrixFn& r, const MatrixC& v, const MatrixC& w) {
  MatrixC vv = kron(v, v), ww = kron(w, w);
  double worst = 0.0;
  for (double u : {0.0, 0.11, -0.23, 0.37}) {
    if (r.near_pole(u, 0.05)) continue;
    MatrixC m = r(u);
    worst = std::max({worst, max_abs(commutator(m, vv)), max_abs(commutator(m, ww))});
  }
  return worst;
}

RMatrixFn apply_transform(const Transform& t, const RMatrixFn& r) {
  RMatrixFn out = r;
  switch (t.kind) {
    case TransformKind::Normalization: {
      auto f = t.scalar;
      out.eval = [r, f](cd u) -> MatrixC { return f(u) * r.eval(u); };
      break;
    }
    case TransformKind::Reparametrization: {
      cd s = t.rescale;
      out.eval = [r, s](cd u) { return r.eval(s * u); };
      if (r.pole_distance)
        out.pole_distance = [r, s](cd u) { return r.pole_distance(s * u) / std::abs(s); };
      break;
    }
    case TransformKind::BasisChange: {
      MatrixC vv = kron(t.V, t.V);
      MatrixC vvi = vv.inverse();
      out.eval = [r, vv, vvi](cd u) -> MatrixC { return vv * r.eval(u) * vvi; };
      break;
    }
    case TransformKind::PRP: {
      MatrixC p = permutation_operator(4);
      out.eval = [r, p](cd u) -> MatrixC { return p * r.eval(u) * p; };
      break;
    }
    case TransformKind::Transpose:
      out.eval = [r](cd u) -> MatrixC { return r.eval(u).transpose(); };
      break;
    case TransformKind::Twist: {
      double viol = twist_precondition(r, t.V, t.W);
      if (viol > 1e-9)
        throw TwistError("twist precondition violated: max |[R, V(x)V]|, |[R, W(x)W]| = " +
                         std::to_string(viol));
      MatrixC left = kron(t.V, t.W);
      MatrixC right = kron(MatrixC(t.W.inverse()), MatrixC(t.V.inverse()));
      out.eval = [r, left, right](cd u) -> MatrixC { return left * r.eval(u) * right; };
      break;
    }
  }
  return out;
}

MatrixC apply_transform(const Transform& t, const MatrixC& h) {
  if (h.rows() != 16 || h.cols() != 16) throw DimensionError("density must be 16x16");
  MatrixC p = permutation_operator(4);
  switch (t.kind) {
    case TransformKind::Normalization: {
      // f(u) R(u) shifts the density by f'(0) when f(0) = 1
      const double e = 1e-5;
      cd f0 = t.scalar(0.0);
      cd df = (t.scalar(e) - t.scalar(-e)) / (2 * e);
      return h + (df / f0) * identity(16);
    }
    case TransformKind::Reparametrization:
      return t.rescale * h;
    case TransformKind::BasisChange: {
      MatrixC vv = kron(t.V, t.V);
      return vv * h * vv.inverse();
    }
    case TransformKind::PRP:
      return p * h * p;
    case TransformKind::Transpose:
      return p * h.transpose() * p;
    case TransformKind::Twist: {
      MatrixC wv = kron(t.W, t.V);
      return wv * h * wv.inverse();
    }
  }
  return h;
}

}  // namespace yangkit
