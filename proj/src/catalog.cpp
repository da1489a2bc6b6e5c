#include "yangkit/catalog.hpp"

#include "yangkit/oscillators.hpp"

#include <algorithm>
#include <set>

namespace yangkit {

std::string to_string(Branch b) {
  switch (b) {
    case Branch::Generic: return "generic";
    case Branch::BZero: return "b=0";
    case Branch::ACZero: return "a+c=0";
  }
  return "generic";
}

Branch parse_branch(const std::string& s) {
  if (s == "generic") return Branch::Generic;
  if (s == "b=0" || s == "b0") return Branch::BZero;
  if (s == "a+c=0" || s == "ac0") return Branch::ACZero;
  throw CatalogError("unknown branch '" + s + "'");
}

cd ModelSpec::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end())
    throw CatalogError("model " + std::to_string(model) + ": missing parameter '" + name + "'");
  return it->second;
}

std::vector<int> catalog_models() {
  std::vector<int> m(18);
  for (int i = 0; i < 18; ++i) m[i] = i + 1;
  return m;
}

std::vector<std::string> parameter_names(const ModelSpec& spec) {
  const int m = spec.model;
  const Branch br = spec.branch.value_or(Branch::Generic);
  if (m == 1 || m == 2) {
    if (br == Branch::BZero) return {"a", "c", "d"};
    if (br == Branch::ACZero) {
      if (m == 2) throw CatalogError("model 2 has no a+c=0 branch");
      return {"a", "b", "d"};
    }
    return {"a", "b", "c", "d"};
  }
  if (spec.branch && *spec.branch != Branch::Generic)
    throw CatalogError("model " + std::to_string(m) + " has no degenerate branches");
  if (m == 3) return {"a", "b", "c"};
  if (m >= 4 && m <= 7) return {"rho", "a", "phi"};
  if (m >= 8 && m <= 12) return {"rho", "phi"};
  if (m == 13) return {"A", "B", "C"};
  if (m == 14) return {"A", "B"};
  if (m >= 15 && m <= 17) return {"a1", "a2", "a3", "a4"};
  if (m == 18) {
    if (spec.has("theta") || spec.has("a2")) return {"theta", "a2"};
    return {"a", "b"};
  }
  throw CatalogError("unknown model id " + std::to_string(m));
}

void validate(const ModelSpec& spec) {
  auto names = parameter_names(spec);
  std::set<std::string> want(names.begin(), names.end());
  for (const auto& n : names)
    if (!spec.has(n))
      throw CatalogError("model " + std::to_string(spec.model) + ": missing parameter '" + n + "'");
  for (const auto& [k, v] : spec.params)
    if (!want.count(k))
      throw CatalogError("model " + std::to_string(spec.model) + ": unexpected parameter '" + k + "'");
}

ModelSpec default_spec(int model, std::optional<Branch> branch) {
  ModelSpec s;
  s.model = model;
  const Branch br = branch.value_or(Branch::Generic);
  if (model == 1 || model == 2) {
    s.branch = br;
    if (br == Branch::BZero) s.params = {{"a", 0.3}, {"c", 0.4}, {"d", 0.7}};
    else if (br == Branch::ACZero) s.params = {{"a", 0.3}, {"b", 0.5}, {"d", 0.7}};
    else s.params = {{"a", 0.3}, {"b", 0.5}, {"c", 0.4}, {"d", 0.7}};
  } else if (model == 3) {
    s.params = {{"a", 0.3}, {"b", -0.5}, {"c", 0.8}};
  } else if (model >= 4 && model <= 7) {
    s.params = {{"rho", 0.7}, {"a", 0.3}, {"phi", 0.4}};
  } else if (model >= 8 && model <= 12) {
    s.params = {{"rho", 1.0}, {"phi", 0.0}};
  } else if (model == 13) {
    s.params = {{"A", 0.3}, {"B", 0.5}, {"C", 0.2}};
  } else if (model == 14) {
    s.params = {{"A", 0.3}, {"B", 0.5}};
  } else if (model >= 15 && model <= 17) {
    s.params = {{"a1", 0.3}, {"a2", -0.2}, {"a3", 0.5}, {"a4", 0.1}};
  } else if (model == 18) {
    s.params = {{"theta", 0.4}, {"a2", 0.2}};
  } else {
    throw CatalogError("unknown model id " + std::to_string(model));
  }
  validate(s);
  return s;
}

ModelSpec random_spec(int model, std::mt19937_64& rng, std::optional<Branch> branch) {
  std::uniform_real_distribution<double> mag(0.25, 1.0), uni(-1.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  auto signed_mag = [&] { return coin(rng) ? mag(rng) : -mag(rng); };
  ModelSpec s = default_spec(model, branch);
  for (auto& [k, v] : s.params) {
    if (k == "rho") v = signed_mag();
    else if (k == "phi") v = uni(rng);
    else if (k == "theta") v = 0.1 + 0.9 * std::abs(uni(rng));
    else if (k == "a2" && model == 18) v = 0.5 * uni(rng);
    else v = signed_mag();
  }
  if ((model == 1 || model == 2) && s.branch == Branch::Generic) {
    // keep away from the degenerate loci b = 0 and a + c = 0
    while (std::abs(s.params["a"] + s.params["c"]) < 0.2) s.params["c"] = signed_mag();
  }
  return s;
}

std::vector<ModelSpec> r_matrix_specs() {
  std::vector<ModelSpec> out;
  out.push_back(default_spec(1, Branch::Generic));
  out.push_back(default_spec(1, Branch::BZero));
  out.push_back(default_spec(1, Branch::ACZero));
  out.push_back(default_spec(2, Branch::Generic));
  out.push_back(default_spec(2, Branch::BZero));
  for (int m = 3; m <= 14; ++m) out.push_back(default_spec(m));
  out.push_back(default_spec(18));
  return out;
}

const std::array<const char*, 10>& HamiltonianParams::names() {
  static const std::array<const char*, 10> n{"A", "B", "C", "D", "E",
                                             "F", "G", "H", "K", "L"};
  return n;
}

cd HamiltonianParams::get(const std::string& name) const {
  const std::array<cd, 10> v{A, B, C, D, E, F, G, H, K, L};
  const auto& n = names();
  for (int i = 0; i < 10; ++i)
    if (name == n[i]) return v[i];
  throw CatalogError("unknown Hamiltonian coefficient '" + name + "'");
}

std::map<std::string, cd> HamiltonianParams::as_map() const {
  std::map<std::string, cd> m;
  for (const char* n : names()) m[n] = get(n);
  return m;
}

MatrixC hsu2_density(const HamiltonianParams& h) {
  MatrixC m = MatrixC::Zero(16, 16);
  auto set = [&](int r, int c, cd v) { m(r, c) = v; };
  // phi phi block and its coupling to psi psi
  set(0, 0, h.A + h.B);
  set(5, 5, h.A + h.B);
  set(1, 1, h.A); set(1, 4, h.B); set(1, 11, h.F); set(1, 14, -h.F);
  set(4, 1, h.B); set(4, 4, h.A); set(4, 11, -h.F); set(4, 14, h.F);
  // phi psi and psi phi
  set(2, 2, h.G); set(2, 8, h.L);
  set(3, 3, h.G); set(3, 12, h.L);
  set(6, 6, h.G); set(6, 9, h.L);
  set(7, 7, h.G); set(7, 13, h.L);
  set(8, 2, h.H); set(8, 8, h.K);
  set(9, 6, h.H); set(9, 9, h.K);
  set(12, 3, h.H); set(12, 12, h.K);
  set(13, 7, h.H); set(13, 13, h.K);
  // psi psi
  set(10, 10, h.D + h.E);
  set(15, 15, h.D + h.E);
  set(11, 1, h.C); set(11, 4, -h.C); set(11, 11, h.D); set(11, 14, h.E);
  set(14, 1, -h.C); set(14, 4, h.C); set(14, 11, h.E); set(14, 14, h.D);
  return m;
}

HamiltonianParams table_row(const ModelSpec& spec) {
  validate(spec);
  const int m = spec.model;
  HamiltonianParams h;
  if (m == 1 || m == 2) {
    const Branch br = spec.branch.value_or(Branch::Generic);
    cd a = spec.param("a"), d = spec.param("d");
    cd b = br == Branch::BZero ? cd(0) : spec.param("b");
    cd c = br == Branch::ACZero ? -a : spec.param("c");
    h.G = a; h.H = b; h.K = c; h.L = d;
    if (m == 2) h.D = a + c;
    return h;
  }
  if (m == 3) {
    h.D = spec.param("a"); h.G = spec.param("b"); h.K = spec.param("c");
    return h;
  }
  if (m >= 4 && m <= 7) {
    cd rho = spec.param("rho"), a = spec.param("a"), phi = spec.param("phi");
    h.G = a; h.H = rho * std::exp(-phi); h.K = 2.0 * rho - a; h.L = rho * std::exp(phi);
    if (m == 4) { h.A = rho; h.B = -rho; }
    if (m == 5) { h.A = rho; h.B = -rho; h.D = rho; h.E = -rho; }
    if (m == 6) { h.D = rho; h.E = rho; }
    if (m == 7) { h.A = rho; h.B = -rho; h.D = rho; h.E = rho; }
    return h;
  }
  if (m >= 8 && m <= 12) {
    cd rho = spec.param("rho"), phi = spec.param("phi");
    cd ep = std::exp(phi), em = std::exp(-phi);
    switch (m) {
      case 8:
        h.A = rho; h.B = -rho; h.C = rho * em; h.D = -rho; h.E = rho; h.F = -rho * ep;
        break;
      case 9:
        h.A = rho; h.B = -rho; h.C = rho * em; h.D = rho; h.E = -rho; h.F = rho * ep;
        break;
      case 10:
        h.A = 1.75 * rho; h.B = -rho; h.C = 0.5 * rho * em;
        h.D = 1.75 * rho; h.E = -rho; h.F = 0.5 * rho * ep;
        break;
      case 11:
        h.A = rho; h.B = -rho; h.C = 0.5 * rho * em; h.D = rho; h.E = -rho; h.F = 0.5 * rho * ep;
        h.G = 1.5 * rho; h.H = -1.5 * rho; h.K = 1.5 * rho; h.L = -1.5 * rho;
        break;
      case 12:
        h.C = -rho * em; h.F = rho * ep; h.H = rho; h.L = -rho;
        break;
    }
    return h;
  }
  throw CatalogError("model " + std::to_string(m) + " is not a table row");
}

OscillatorCoeffs oscillator_coeffs(const HamiltonianParams& h) {
  OscillatorCoeffs o;
  auto& C = o.C;
  C[0] = 0.5 * (h.B + h.G + h.K);
  C[1] = 0.5 * (h.L - h.H);
  C[2] = 0.5 * (h.C - h.F + h.H - h.L);
  C[3] = 0.5 * (h.H + h.L - h.C - h.F);
  C[4] = 0.5 * (h.C + h.F + h.H + h.L);
  C[5] = -h.B;
  C[6] = h.E;
  C[7] = 2.0 * h.A + h.B - 2.0 * h.K;
  C[8] = 2.0 * h.A + h.B - 2.0 * h.G;
  C[9] = h.A + h.B + h.D + h.E - h.G - h.K;
  return o;
}

MatrixC rho2(int i) {
  const cd I(0, 1);
  MatrixC s(2, 2);
  switch (i) {
    case 0: s << 0, 1, 1, 0; break;
    case 1: s << 0, -I, I, 0; break;
    case 2: s << 1, 0, 0, -1; break;
    default: throw std::out_of_range("rho2: generator index must be 0..2");
  }
  return 0.5 * I * s;
}

std::string to_string(Rep r) { return r == Rep::TwoOneOne ? "2+1+1" : "2+2"; }

MatrixC representation(Rep rep, bool left, int i) {
  MatrixC t = MatrixC::Zero(4, 4);
  if (rep == Rep::TwoOneOne) {
    if (left) t.topLeftCorner(2, 2) = rho2(i);
    else t.bottomRightCorner(2, 2) = rho2(i);
    return t;
  }
  MatrixC I2 = identity(2);
  return left ? kron(I2, rho2(i)) : kron(rho2(i), I2);
}

SymmetryRep symmetry_rep(Rep rep) {
  SymmetryRep s{rep, {}, {}};
  for (int i = 0; i < 3; ++i) {
    s.tL[i] = representation(rep, true, i);
    s.tR[i] = representation(rep, false, i);
  }
  return s;
}

MatrixC trace_operator() {
  MatrixC k = MatrixC::Zero(16, 16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) k(4 * i + i, 4 * j + j) = 1.0;
  return k;
}

MatrixC epsilon_operator() {
  MatrixC e = MatrixC::Zero(16, 16);
  std::array<int, 4> p{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y)
        if (p[x] > p[y]) ++inversions;
    const double sign = inversions % 2 ? -1.0 : 1.0;
    // eps_{ijkl} E^i_k (x) E^j_l with (i, j, k, l) = p
    e(4 * p[0] + p[1], 4 * p[2] + p[3]) = sign;
  } while (std::next_permutation(p.begin(), p.end()));
  return e;
}

MatrixC so4_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  const cd I(0, 1);
  MatrixC M = MatrixC::Zero(4, 4);
  M(0, 0) = s; M(3, 0) = s;
  M(0, 1) = I * s; M(3, 1) = -I * s;
  M(1, 2) = I * s; M(2, 2) = I * s;
  M(2, 3) = s; M(1, 3) = -s;
  return M;
}

namespace {
MatrixC to_so4(const MatrixC& op) {
  MatrixC MM = kron(so4_basis(), so4_basis());
  return MM * op * MM.inverse();
}
}  // namespace

MatrixC trace_operator_so4() { return to_so4(trace_operator()); }
MatrixC epsilon_operator_so4() { return to_so4(epsilon_operator()); }

Model18Map model18_map(cd theta, cd a2) {
  Model18Map m;
  m.a = std::sin(theta);
  m.b = -a2;
  m.shift = 2.0 * a2;
  m.V = MatrixC::Zero(4, 4);
  m.V.diagonal() << 1.0, cd(0, 1), 1.0, cd(0, 1);
  return m;
}

MatrixC build_hamiltonian_density(const ModelSpec& spec) {
  validate(spec);
  const int m = spec.model;
  if (m <= 12) return hsu2_density(table_row(spec));
  if (m == 13) {
    cd A = spec.param("A"), B = spec.param("B"), C = spec.param("C");
    return A * identity(16) - B * permutation_operator(4) + B * trace_operator_so4() +
           C * epsilon_operator_so4();
  }
  if (m == 14) return spec.param("A") * trace_operator_so4();
  if (m >= 15 && m <= 17) {
    cd a1 = spec.param("a1"), a2 = spec.param("a2"), a3 = spec.param("a3"), a4 = spec.param("a4");
    if (m == 15) return h15(a1, a2, a3, a4);
    if (m == 16) return h16(a1, a2, a3, a4);
    return h17(a1, a2, a3, a4);
  }
  if (spec.has("theta")) {
    Model18Map map = model18_map(spec.param("theta"), spec.param("a2"));
    MatrixC VV = kron(map.V, map.V);
    return VV * h18(map.a, map.b) * VV.inverse();
  }
  return h18(spec.param("a"), spec.param("b"));
}

}  // namespace yangkit
