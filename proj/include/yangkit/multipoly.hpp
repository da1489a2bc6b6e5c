#pragma once

#include "yangkit/catalog.hpp"

#include <boost/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace yangkit {

using Rational = boost::rational<long long>;

// Multivariate polynomial with exact rational coefficients.  Zero terms are
// never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
  static MultiPoly constant(std::vector<std::string> vars, Rational c);
  static MultiPoly variable(std::vector<std::string> vars, int index);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void add_term(const Exponents& e, Rational c);
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial

  // Largest term under graded lexicographic order.
  std::pair<Exponents, Rational> leading_term() const;
  // Divided by the leading coefficient.
  MultiPoly normalized() const;

  cd evaluate(const std::map<std::string, cd>& assignment) const;
  std::string to_string() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(Rational c) const;
  bool operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }

 private:
  void check_compatible(const MultiPoly& o) const;
  std::vector<std::string> vars_;
  std::map<Exponents, Rational> terms_;
};

bool grlex_less(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b);

// A density written as constant + sum_k x_k basis_k with integer matrices.
struct SymbolicAnsatz {
  std::string name;
  std::vector<std::string> variables;
  Eigen::MatrixXd constant;
  std::vector<Eigen::MatrixXd> basis;

  MatrixC density(const std::map<std::string, cd>& assignment) const;
};

SymbolicAnsatz su2xsu2_ansatz();    // the ten symbols A..L
SymbolicAnsatz hubbard22_ansatz();  // K_hub + pair/flip terms + number potential
SymbolicAnsatz ansatz_by_name(const std::string& name);

struct CoordinateFit {
  std::map<std::string, cd> assignment;
  double residual;
};
// Least-squares coordinates of a density in the ansatz.
CoordinateFit ansatz_coordinates(const SymbolicAnsatz& a, const MatrixC& h);

struct EquationSystem {
  std::string ansatz;
  int chain_length = 6;
  std::vector<std::string> variables;
  std::vector<MultiPoly> equations;
};

// Every entry of [Q2, Q3] on the periodic chain as an exact polynomial;
// zero and duplicate (up to scale) polynomials are dropped.  Of each family
// of proportional entries the one with the largest scale is kept, so that
// check_solution reproduces the max-entry norm.
EquationSystem emit_integrability_equations(const SymbolicAnsatz& a, int L = 6);

// max |p(assignment)|; throws CatalogError on a missing variable.
double check_solution(const std::vector<MultiPoly>& eqs,
                      const std::map<std::string, cd>& assignment);

}  // namespace yangkit
