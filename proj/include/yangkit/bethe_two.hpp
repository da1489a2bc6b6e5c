#pragma once

#include "yangkit/catalog.hpp"

#include <string>
#include <utility>
#include <vector>

namespace yangkit {

cd vacuum_energy(const HamiltonianParams& h, int L);
std::pair<cd, int> one_excitation(const HamiltonianParams& h, int L);

struct SeparatedCase {
  cd energy;
  bool valid;  // no separated configuration fits on L = 3
};
SeparatedCase two_exc_separated(const HamiltonianParams& h, int L);
cd two_exc_equal_adjacent(const HamiltonianParams& h, int L);

// Coordinates (c_1..c_L, h12_1..h12_L, h21_1..h21_L): c_j puts phi2 on site
// j, h_ab,j puts psi_a on site j and psi_b on site j+1 (cyclically).
struct BetheTwoBlock {
  int L = 0;
  HamiltonianParams params;
  MatrixC block;
};
BetheTwoBlock two_exc_block(const HamiltonianParams& h, int L);

// Independent state counts of the three cases, from enumeration.
struct CaseCounts {
  long separated = 0, equal_adjacent = 0, block = 0;
  long total() const { return separated + equal_adjacent + block; }
};
CaseCounts two_exc_counts(int L);

// The chain state sum_j c_j |..phi2_j..> + sum h_ab,j |..psi_a,j psi_b,j+1..>.
VectorC reconstruct_state(const VectorC& coords, int L);

struct BetheTwoReport {
  int model = 0;
  int L = 0;
  struct Case {
    std::string name;
    cd energy;
    long multiplicity;
  };
  std::vector<Case> cases;         // separated and equal-adjacent cases
  VectorC block_eigenvalues;
  VectorC predicted;               // union of all cases with multiplicities
  VectorC sector;                  // exact diagonalization, p = 2
  double distance = 0.0;           // multiset distance predicted vs sector
  double max_eigen_residual = 0.0; // relative, over reconstructed block states
};

// Throws CatalogError unless model is 8, 9 or 10, SiteError unless 3 <= L <= 5;
// std::logic_error when the case counts do not add up to 2L^2 - L.
BetheTwoReport two_exc_compare(const ModelSpec& spec, int L);

}  // namespace yangkit
