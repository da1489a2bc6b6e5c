#pragma once

#include "yangkit/tensor.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace yangkit {

// Local basis order on C^4 is (phi1, phi2, psi1, psi2); two-site index 4x + y.
enum Basis : int { Phi1 = 0, Phi2 = 1, Psi1 = 2, Psi2 = 3 };

struct CatalogError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

enum class Branch { Generic, BZero, ACZero };

std::string to_string(Branch b);
Branch parse_branch(const std::string& s);

struct ModelSpec {
  int model = 0;
  std::optional<Branch> branch;
  std::map<std::string, cd> params;

  cd param(const std::string& name) const;
  bool has(const std::string& name) const { return params.count(name) != 0; }
};

// Throws CatalogError on unknown model, missing or unexpected parameters.
void validate(const ModelSpec& spec);
std::vector<std::string> parameter_names(const ModelSpec& spec);
std::vector<int> catalog_models();

// Representative parameter points, and random draws for property sweeps.
ModelSpec default_spec(int model, std::optional<Branch> branch = std::nullopt);
ModelSpec random_spec(int model, std::mt19937_64& rng,
                      std::optional<Branch> branch = std::nullopt);
// Every (model, branch) pair that has an R-matrix.
std::vector<ModelSpec> r_matrix_specs();

struct HamiltonianParams {
  cd A = 0, B = 0, C = 0, D = 0, E = 0, F = 0, G = 0, H = 0, K = 0, L = 0;

  static const std::array<const char*, 10>& names();
  cd get(const std::string& name) const;
  std::map<std::string, cd> as_map() const;
};

// The general spin and charge su(2) x su(2) invariant density.
MatrixC hsu2_density(const HamiltonianParams& h);
// Table row for models 1-12.
HamiltonianParams table_row(const ModelSpec& spec);

struct OscillatorCoeffs {
  std::array<cd, 10> C{};
};
OscillatorCoeffs oscillator_coeffs(const HamiltonianParams& h);

MatrixC build_hamiltonian_density(const ModelSpec& spec);

struct RMatrixFn {
  std::function<MatrixC(cd)> eval;
  // Distance from u to the closest declared pole (infinity when none).
  std::function<double(cd)> pole_distance;
  std::string poles;

  MatrixC operator()(cd u) const;
  bool near_pole(cd u, double guard = 1e-9) const {
    return pole_distance && pole_distance(u) < guard;
  }
};

inline constexpr double kPoleGuard = 1e-9;

RMatrixFn constant_r(const MatrixC& r);
RMatrixFn build_r_matrix(const ModelSpec& spec);

// r1..r10 placed in the common layout of models 1-12.
MatrixC r_template(const std::array<cd, 10>& r);
struct R18Functions {
  cd r1, r2, r3, r4, r5, r6, r7, r8, r9, r10, r11, r12, s7, f;
};
R18Functions r18_functions(cd theta, cd a2, cd u);
MatrixC r18_layout(const R18Functions& r);

// su(2) x su(2) representations with rho_2(t_i) = (i/2) sigma_i.
enum class Rep { TwoOneOne, TwoTwo };
std::string to_string(Rep r);

struct SymmetryRep {
  Rep id;
  std::array<MatrixC, 3> tL;
  std::array<MatrixC, 3> tR;
};
MatrixC rho2(int i);
MatrixC representation(Rep rep, bool left, int i);
SymmetryRep symmetry_rep(Rep rep);

// Invariant tensors used by models 13 and 14, written in the basis in which
// rho_{2+2} is real antisymmetric.
MatrixC trace_operator();     // sum E^i_j (x) E^i_j
MatrixC epsilon_operator();   // sum eps_{ijkl} E^i_k (x) E^j_l
MatrixC so4_basis();          // columns of the magic basis
MatrixC trace_operator_so4();
MatrixC epsilon_operator_so4();

// Model 18 parameter map found by extraction: the (theta, a2) R-matrix
// generates V (x) V H18(a, b) V^-1 (x) V^-1 + shift.
struct Model18Map {
  cd a, b, shift;
  MatrixC V;
};
Model18Map model18_map(cd theta, cd a2);

}  // namespace yangkit
