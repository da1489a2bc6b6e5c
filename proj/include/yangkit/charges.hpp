#pragma once

#include "yangkit/catalog.hpp"

namespace yangkit {

struct ChargeDensity {
  int range = 2;
  MatrixC matrix;
};

// Wraps a 16x16 or 64x64 matrix, inferring its range.
ChargeDensity make_density(const MatrixC& m);

// [H_12, H_23] on three sites.
ChargeDensity q3_density(const ChargeDensity& h);

// Periodic (or open) sum of translates of the density.
Chain assemble_charge(const ChargeDensity& d, int L, bool periodic = true);

// max |[Q2, Q3]| on the periodic chain of length L.
double q2q3_commutator_norm(const MatrixC& h, int L = 6);
double q2q3_commutator_norm(const ModelSpec& spec, int L = 6);

}  // namespace yangkit
