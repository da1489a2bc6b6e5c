#pragma once

#include "yangkit/catalog.hpp"

#include <map>
#include <string>
#include <vector>

namespace yangkit {

struct LeakageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResourceError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxLength = 6;

// Excitation number of a local state: phi1 -> 0, psi1, psi2 -> 1, phi2 -> 2.
int excitation(int local_state);

struct SectorBasis {
  int L = 0;
  int p = 0;
  std::vector<long> states;  // tensor-basis indices, increasing (lexicographic labels)

  long dim() const { return long(states.size()); }
  std::vector<int> labels(long k) const;  // site labels of state k, site 1 first
  SparseC isometry() const;               // 4^L x dim
};

SectorBasis sector_basis(int L, int p);

// Periodic chain sum of the model's density.
Chain chain_hamiltonian(const ModelSpec& spec, int L);
Chain chain_hamiltonian(const MatrixC& density, int L);

// v^T H v on the sector; throws LeakageError when H maps the sector outside
// itself by more than leak_tol.
MatrixC reduced_hamiltonian(const Chain& h, const SectorBasis& basis, double leak_tol = 1e-12);
double sector_leakage(const Chain& h, const SectorBasis& basis);

struct Cluster {
  cd value;
  int mult = 0;
};

// Single-linkage clustering in the complex plane, sorted by (re, im).
std::vector<Cluster> cluster_eigenvalues(const VectorC& values, double tol = 1e-8);

struct SpectrumReport {
  ModelSpec spec;
  int L = 0;
  int p = 0;
  double tol = 1e-8;
  VectorC eigenvalues;
  std::vector<Cluster> clusters;
};

SpectrumReport sector_spectrum(const ModelSpec& spec, int L, int p, double cluster_tol = 1e-8);
SpectrumReport sector_spectrum(const Chain& h, const ModelSpec& spec, int p,
                               double cluster_tol = 1e-8);
std::vector<SpectrumReport> full_spectrum(const ModelSpec& spec, int L, double cluster_tol = 1e-8);

// Defective eigenvalues come back as a ring of radius ~eps^(1/k); groups
// tighter than kDefectRadius and isolated by kDefectIsolation are replaced
// by their centroid, which is accurate to rounding.
inline constexpr double kDefectRadius = 1e-6;
inline constexpr double kDefectIsolation = 1e-3;
VectorC merge_defective(const VectorC& values);

// Greedy nearest matching of two multisets; infinity when sizes differ.
double multiset_distance(const VectorC& a, const VectorC& b);
VectorC expand(const std::vector<Cluster>& clusters);

// Max distance between sectors p and 2L - p.
double check_p_reflection(const std::vector<SpectrumReport>& reports);

struct GoldenCluster {
  std::string expr;
  cd value;
  int mult = 0;
  bool exact = true;
};

struct GoldenTable {
  int model = 0;
  int L = 0;
  ModelSpec spec;
  std::map<int, std::vector<GoldenCluster>> sectors;
};

inline constexpr double kExactTol = 1e-8;
inline constexpr double kDecimalTol = 5e-5;

std::string golden_path(int model, int L);
GoldenTable load_golden(const std::string& path);

struct GoldenComparison {
  bool pass = true;
  std::vector<std::string> mismatches;
};

// Each golden cluster must claim exactly `mult` computed eigenvalues within
// its tolerance, and no computed eigenvalue may be left unclaimed.
GoldenComparison compare_golden(const GoldenTable& golden, const std::vector<SpectrumReport>& reports);

}  // namespace yangkit
