#include "yangkit/multipoly.hpp"

#include "yangkit/oscillators.hpp"
#include "yangkit/workers.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace yangkit {

MultiPoly MultiPoly::constant(std::vector<std::string> vars, Rational c) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, int index) {
  MultiPoly p(std::move(vars));
  if (index < 0 || index >= int(p.vars_.size()))
    throw std::out_of_range("MultiPoly::variable: index out of range");
  Exponents e(p.vars_.size(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

void MultiPoly::add_term(const Exponents& e, Rational c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("MultiPoly: exponent length");
  if (c.numerator() == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.numerator() == 0) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool grlex_less(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

std::pair<MultiPoly::Exponents, Rational> MultiPoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading_term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it)
    if (grlex_less(best->first, it->first)) best = it;
  return *best;
}

MultiPoly MultiPoly::normalized() const {
  if (is_zero()) return *this;
  Rational lead = leading_term().second;
  return *this * (Rational(1) / lead);
}

cd MultiPoly::evaluate(const std::map<std::string, cd>& assignment) const {
  std::vector<cd> x(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = assignment.find(vars_[i]);
    if (it == assignment.end()) throw CatalogError("check_solution: missing variable " + vars_[i]);
    x[i] = it->second;
  }
  cd sum = 0.0;
  for (const auto& [e, c] : terms_) {
    cd term = double(c.numerator()) / double(c.denominator());
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= x[i];
    sum += term;
  }
  return sum;
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.numerator() < 0 ? -c : c;
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = mag == 1;
    bool any = false;
    if (!unit) os << mag.numerator() << (mag.denominator() != 1 ? "/" + std::to_string(mag.denominator()) : "");
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (any || !unit) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      any = true;
    }
    if (unit && !any) os << "1";
    first = false;
  }
  return os.str();
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("MultiPoly: variable lists differ");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + o * Rational(-1); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r(vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::operator*(Rational c) const {
  MultiPoly r(vars_);
  if (c.numerator() == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

MatrixC SymbolicAnsatz::density(const std::map<std::string, cd>& assignment) const {
  MatrixC h = constant.cast<cd>();
  for (std::size_t k = 0; k < variables.size(); ++k) {
    auto it = assignment.find(variables[k]);
    if (it == assignment.end()) throw CatalogError("ansatz: missing variable " + variables[k]);
    h += it->second * basis[k].cast<cd>();
  }
  return h;
}

namespace {

Eigen::MatrixXd integer_matrix(const MatrixC& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j) {
      cd v = m(i, j);
      if (std::abs(v.imag()) > 1e-12 || std::abs(v.real() - std::round(v.real())) > 1e-12)
        throw std::logic_error("ansatz basis matrix is not integral");
      out(i, j) = std::round(v.real());
    }
  return out;
}

}  // namespace

SymbolicAnsatz su2xsu2_ansatz() {
  SymbolicAnsatz a;
  a.name = "su2xsu2";
  a.constant = Eigen::MatrixXd::Zero(16, 16);
  for (const char* n : HamiltonianParams::names()) {
    a.variables.emplace_back(n);
    HamiltonianParams h;
    if (std::string(n) == "A") h.A = 1;
    else if (std::string(n) == "B") h.B = 1;
    else if (std::string(n) == "C") h.C = 1;
    else if (std::string(n) == "D") h.D = 1;
    else if (std::string(n) == "E") h.E = 1;
    else if (std::string(n) == "F") h.F = 1;
    else if (std::string(n) == "G") h.G = 1;
    else if (std::string(n) == "H") h.H = 1;
    else if (std::string(n) == "K") h.K = 1;
    else h.L = 1;
    a.basis.push_back(integer_matrix(hsu2_density(h)));
  }
  return a;
}

SymbolicAnsatz hubbard22_ansatz() {
  SymbolicAnsatz a;
  a.name = "hubbard22";
  a.constant = integer_matrix(k_hub());
  for (int k = 0; k < 6; ++k) {
    a.variables.push_back("A" + std::to_string(k + 1));
    std::array<cd, 6> c{};
    c[k] = 1.0;
    MatrixC m = k < 2 ? k_pair(c[0], c[1]) : k_flip(c[2], c[3], c[4], c[5]);
    a.basis.push_back(integer_matrix(m));
  }
  for (int k = 0; k < 16; ++k) {
    a.variables.push_back("B" + std::to_string(k + 1));
    std::array<cd, 16> b{};
    b[k] = 1.0;
    a.basis.push_back(integer_matrix(potential(b)));
  }
  return a;
}

SymbolicAnsatz ansatz_by_name(const std::string& name) {
  if (name == "su2xsu2") return su2xsu2_ansatz();
  if (name == "hubbard22") return hubbard22_ansatz();
  throw CatalogError("unknown ansatz '" + name + "' (expected su2xsu2 or hubbard22)");
}

CoordinateFit ansatz_coordinates(const SymbolicAnsatz& a, const MatrixC& h) {
  const long n = long(a.basis.size());
  Eigen::MatrixXcd m(256, n);
  for (long k = 0; k < n; ++k) m.col(k) = a.basis[k].cast<cd>().reshaped();
  Eigen::VectorXcd rhs = (h - a.constant.cast<cd>()).reshaped();
  Eigen::VectorXcd x = m.colPivHouseholderQr().solve(rhs);
  CoordinateFit fit;
  for (long k = 0; k < n; ++k) fit.assignment[a.variables[k]] = x(k);
  fit.residual = max_abs(Eigen::VectorXcd(m * x - rhs));
  return fit;
}

namespace {

using RowSparse = Eigen::SparseMatrix<double, Eigen::RowMajor, long>;

RowSparse assemble_real(const Eigen::MatrixXd& density, int L) {
  RowSparse m(ipow(4, L), ipow(4, L));
  for (int n = 1; n <= L; ++n) {
    Chain c = embed_local(density.cast<cd>(), n, L, true);
    RowSparse part = SpMat<double>(c.matrix.real());
    m += part;
  }
  m.prune(0.0);
  return m;
}

RowSparse select_rows(const RowSparse& m, const std::vector<long>& rows) {
  std::vector<Eigen::Triplet<double, long>> t;
  for (long r = 0; r < long(rows.size()); ++r)
    for (RowSparse::InnerIterator it(m, rows[r]); it; ++it) t.emplace_back(r, it.col(), it.value());
  RowSparse out(long(rows.size()), m.cols());
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

// Row indices that are the smallest in their orbit under cyclic site shifts.
std::vector<long> canonical_rows(int L) {
  const long dim = ipow(4, L);
  std::vector<long> out;
  for (long r = 0; r < dim; ++r) {
    bool canon = true;
    long s = r;
    for (int k = 1; k < L && canon; ++k) {
      s = (s % ipow(4, L - 1)) * 4 + s / ipow(4, L - 1);
      if (s < r) canon = false;
    }
    if (canon) out.push_back(r);
  }
  return out;
}

std::string poly_key(const MultiPoly& p) {
  std::string k;
  for (const auto& [e, c] : p.terms()) {
    for (int x : e) k += std::to_string(x) + ",";
    k += ":" + std::to_string(c.numerator()) + "/" + std::to_string(c.denominator()) + ";";
  }
  return k;
}

}  // namespace

EquationSystem emit_integrability_equations(const SymbolicAnsatz& a, int L) {
  if (L < 4) throw SiteError("emit_integrability_equations: need L >= 4");
  const int nv = int(a.variables.size());
  const bool has_const = a.constant.cwiseAbs().maxCoeff() > 0;
  // slot 0 is the constant part (coefficient 1), slots 1..nv the variables
  std::vector<Eigen::MatrixXd> ops;
  std::vector<int> slot_var;
  if (has_const) {
    ops.push_back(a.constant);
    slot_var.push_back(-1);
  }
  for (int k = 0; k < nv; ++k) {
    ops.push_back(a.basis[k]);
    slot_var.push_back(k);
  }
  const int ns = int(ops.size());

  std::vector<RowSparse> q2(ns);
  for (int i = 0; i < ns; ++i) q2[i] = assemble_real(ops[i], L);
  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j < ns; ++j)
    for (int k = j; k < ns; ++k) pairs.emplace_back(j, k);
  std::vector<RowSparse> q3(pairs.size());
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(4, 4);
  parallel_for(pairs.size(), [&](std::size_t p) {
    auto [j, k] = pairs[p];
    Eigen::MatrixXd hj = Eigen::kroneckerProduct(ops[j], id), hk = Eigen::kroneckerProduct(id, ops[k]);
    Eigen::MatrixXd dens = hj * hk - hk * hj;
    if (j != k) {
      Eigen::MatrixXd hj2 = Eigen::kroneckerProduct(id, ops[j]), hk2 = Eigen::kroneckerProduct(ops[k], id);
      dens += hk2 * hj2 - hj2 * hk2;
    }
    q3[p] = assemble_real(dens, L);
  });

  const std::vector<long> rows = canonical_rows(L);
  const std::size_t block = 64;
  const std::size_t nblocks = (rows.size() + block - 1) / block;

  struct Kept {
    MultiPoly poly;
    double scale;
  };
  std::unordered_map<std::string, Kept> kept;
  std::mutex kept_mutex;

  parallel_for(nblocks, [&](std::size_t b) {
    std::vector<long> sel(rows.begin() + b * block,
                          rows.begin() + std::min(rows.size(), (b + 1) * block));
    // entry -> (sorted slot triple -> integer coefficient)
    std::map<std::pair<long, long>, std::map<std::array<int, 3>, long long>> acc;
    std::vector<RowSparse> q2sel(ns);
    for (int i = 0; i < ns; ++i) q2sel[i] = select_rows(q2[i], sel);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      RowSparse q3sel = select_rows(q3[p], sel);
      for (int i = 0; i < ns; ++i) {
        RowSparse c = RowSparse(q2sel[i] * q3[p]) - RowSparse(q3sel * q2[i]);
        std::array<int, 3> mono{i, pairs[p].first, pairs[p].second};
        std::sort(mono.begin(), mono.end());
        for (long r = 0; r < c.outerSize(); ++r)
          for (RowSparse::InnerIterator it(c, r); it; ++it) {
            long long v = std::llround(it.value());
            if (v != 0) acc[{sel[r], it.col()}][mono] += v;
          }
      }
    }
    std::vector<std::pair<MultiPoly, double>> local;
    for (const auto& [entry, terms] : acc) {
      MultiPoly poly(a.variables);
      for (const auto& [mono, coef] : terms) {
        if (coef == 0) continue;
        MultiPoly::Exponents e(nv, 0);
        for (int s : mono)
          if (slot_var[s] >= 0) ++e[slot_var[s]];
        poly.add_term(e, Rational(coef));
      }
      if (poly.is_zero()) continue;
      Rational lead = poly.leading_term().second;
      double scale = std::abs(double(lead.numerator()) / double(lead.denominator()));
      local.emplace_back(poly, scale);
    }
    std::lock_guard<std::mutex> lock(kept_mutex);
    for (auto& [poly, scale] : local) {
      std::string key = poly_key(poly.normalized());
      auto it = kept.find(key);
      if (it == kept.end()) kept.emplace(key, Kept{poly, scale});
      else if (scale > it->second.scale) it->second = Kept{poly, scale};
    }
  });

  EquationSystem sys;
  sys.ansatz = a.name;
  sys.chain_length = L;
  sys.variables = a.variables;
  std::vector<std::pair<std::string, MultiPoly>> sorted;
  for (auto& [k, v] : kept) sorted.emplace_back(k, v.poly);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [k, p] : sorted) sys.equations.push_back(std::move(p));
  return sys;
}

double check_solution(const std::vector<MultiPoly>& eqs,
                      const std::map<std::string, cd>& assignment) {
  double worst = 0.0;
  for (const auto& p : eqs) worst = std::max(worst, std::abs(p.evaluate(assignment)));
  return worst;
}

}  // namespace yangkit
