#pragma once

#include "yangkit/catalog.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace yangkit {

// Legs of a two-site operator placed on (1,2), (1,3) or (2,3) of three sites.
MatrixC leg12(const MatrixC& r);
MatrixC leg23(const MatrixC& r);
MatrixC leg13(const MatrixC& r);

double ybe_residual(const RMatrixFn& r, cd u, cd v);
double regularity_residual(const RMatrixFn& r);

struct UnitarityFit {
  cd c;
  double residual;
};
// Best scalar c with R(u) P R(-u) P = c 1.
UnitarityFit braiding_unitarity(const RMatrixFn& r, cd u);

struct Extraction {
  MatrixC h;
  double error_estimate;
};
// d/du (P R(u)) at 0 by central differences with two-level Richardson.
Extraction hamiltonian_from_r(const RMatrixFn& r, double step = 1e-4);
// The same derivative with a caller-chosen left factor (P or P^f).
Extraction derivative_at_zero(const RMatrixFn& r, const MatrixC& left, double step = 1e-4);

struct Fit {
  cd scale, shift;
  double residual;
};
// Least squares x ~ scale * target + shift * 1.
Fit fit_scale_shift(const MatrixC& x, const MatrixC& target);

struct SeriesReport {
  double residual;  // max over u in {+-1e-2, +-5e-3}
  double ratio;     // residual(u) / residual(u/2), expected near 8
  cd gamma;         // R was divided by exp(gamma u^2) before comparing
};
// A scalar factor 1 + gamma u^2 is invisible to H but shifts the u^2 term by
// gamma * P; it is estimated from the trace and divided out first.
SeriesReport series_consistency(const RMatrixFn& r);

double symmetry_residual(const MatrixC& hd, const SymmetryRep& rep);

// Default verification grid: seeded points with |u|, |v| <= 0.5 whose u, v,
// u - v and -u, -v stay at least `margin` away from every declared pole.
std::vector<std::pair<cd, cd>> verification_grid(const RMatrixFn& r, int count,
                                                 std::uint64_t seed, double margin = 0.05);

}  // namespace yangkit
