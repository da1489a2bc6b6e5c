#include "yangkit/spectrum.hpp"

#include "yangkit/workers.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

namespace yangkit {

int excitation(int s) {
  static constexpr int table[4] = {0, 2, 1, 1};
  if (s < 0 || s > 3) throw std::out_of_range("excitation: local state must be 0..3");
  return table[s];
}

std::vector<int> SectorBasis::labels(long k) const {
  std::vector<int> out(L);
  long s = states.at(k);
  for (int j = L - 1; j >= 0; --j) {
    out[j] = int(s % 4);
    s /= 4;
  }
  return out;
}

SparseC SectorBasis::isometry() const {
  SparseC v(ipow(4, L), dim());
  v.reserve(Eigen::VectorXi::Constant(dim(), 1));
  for (long k = 0; k < dim(); ++k) v.insert(states[k], k) = 1.0;
  v.makeCompressed();
  return v;
}

SectorBasis sector_basis(int L, int p) {
  if (L < 1 || L > kMaxLength) throw ResourceError("sector_basis: need 1 <= L <= 6");
  if (p < 0 || p > 2 * L) throw std::out_of_range("sector_basis: need 0 <= p <= 2L");
  SectorBasis b{L, p, {}};
  const long dim = ipow(4, L);
  for (long s = 0; s < dim; ++s) {
    int count = 0;
    for (long t = s; t; t /= 4) count += excitation(int(t % 4));
    if (count == p) b.states.push_back(s);
  }
  return b;
}

Chain chain_hamiltonian(const MatrixC& density, int L) {
  if (L < 2 || L > kMaxLength) throw ResourceError("chain_hamiltonian: need 2 <= L <= 6");
  SparseC m(ipow(4, L), ipow(4, L));
  for (int n = 1; n <= L; ++n) m += embed_local(density, n, L, true).matrix;
  m.prune(cd(0));
  return make_chain(L, 4, std::move(m));
}

Chain chain_hamiltonian(const ModelSpec& spec, int L) {
  return chain_hamiltonian(build_hamiltonian_density(spec), L);
}

double sector_leakage(const Chain& h, const SectorBasis& basis) {
  std::vector<char> inside(h.dim(), 0);
  for (long s : basis.states) inside[s] = 1;
  double leak = 0.0;
  for (long s : basis.states)
    for (SparseC::InnerIterator it(h.matrix, s); it; ++it)
      if (!inside[it.row()]) leak = std::max(leak, std::abs(it.value()));
  return leak;
}

MatrixC reduced_hamiltonian(const Chain& h, const SectorBasis& basis, double leak_tol) {
  if (h.length != basis.L) throw DimensionError("reduced_hamiltonian: length mismatch");
  double leak = sector_leakage(h, basis);
  if (leak > leak_tol) {
    std::ostringstream os;
    os << "reduced_hamiltonian: sector p=" << basis.p << " leaks, max entry " << leak;
    throw LeakageError(os.str());
  }
  std::vector<long> pos(h.dim(), -1);
  for (long k = 0; k < basis.dim(); ++k) pos[basis.states[k]] = k;
  MatrixC red = MatrixC::Zero(basis.dim(), basis.dim());
  for (long k = 0; k < basis.dim(); ++k)
    for (SparseC::InnerIterator it(h.matrix, basis.states[k]); it; ++it)
      if (pos[it.row()] >= 0) red(pos[it.row()], k) += it.value();
  return red;
}

std::vector<Cluster> cluster_eigenvalues(const VectorC& values, double tol) {
  const long n = values.size();
  std::vector<long> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](long x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<long> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](long a, long b) { return values(a).real() < values(b).real(); });
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) {
      if (values(order[j]).real() - values(order[i]).real() > tol) break;
      if (std::abs(values(order[j]) - values(order[i])) < tol)
        parent[find(order[j])] = find(order[i]);
    }
  std::map<long, std::pair<cd, int>> groups;
  for (long i = 0; i < n; ++i) {
    auto& g = groups[find(i)];
    g.first += values(i);
    g.second += 1;
  }
  std::vector<Cluster> out;
  for (auto& [root, g] : groups) out.push_back({g.first / double(g.second), g.second});
  std::sort(out.begin(), out.end(), [](const Cluster& a, const Cluster& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

VectorC merge_defective(const VectorC& v) {
  std::vector<Cluster> groups = cluster_eigenvalues(v, kDefectRadius);
  VectorC out = v;
  for (long k = 0; k < v.size(); ++k) {
    std::size_t best = 0;
    for (std::size_t g = 1; g < groups.size(); ++g)
      if (std::abs(v(k) - groups[g].value) < std::abs(v(k) - groups[best].value)) best = g;
    if (groups[best].mult < 2) continue;
    bool isolated = true;
    for (std::size_t g = 0; g < groups.size(); ++g)
      if (g != best && std::abs(groups[g].value - groups[best].value) < kDefectIsolation)
        isolated = false;
    if (isolated) out(k) = groups[best].value;
  }
  return out;
}

namespace {

VectorC sector_eigenvalues(const MatrixC& red) {
  if (red.rows() == 0) return VectorC();
  if (max_abs(MatrixC(red - red.adjoint())) < 1e-12) {
    Eigen::SelfAdjointEigenSolver<MatrixC> es(red, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw ConvergenceError("Hermitian sector solver failed");
    return es.eigenvalues().cast<cd>();
  }
  return merge_defective(eigen_spectrum(red));
}

}  // namespace

SpectrumReport sector_spectrum(const Chain& h, const ModelSpec& spec, int p, double cluster_tol) {
  SpectrumReport r;
  r.spec = spec;
  r.L = h.length;
  r.p = p;
  r.tol = cluster_tol;
  r.eigenvalues = sector_eigenvalues(reduced_hamiltonian(h, sector_basis(h.length, p)));
  r.clusters = cluster_eigenvalues(r.eigenvalues, cluster_tol);
  return r;
}

SpectrumReport sector_spectrum(const ModelSpec& spec, int L, int p, double cluster_tol) {
  return sector_spectrum(chain_hamiltonian(spec, L), spec, p, cluster_tol);
}

std::vector<SpectrumReport> full_spectrum(const ModelSpec& spec, int L, double cluster_tol) {
  if (L < 2 || L > kMaxLength) throw ResourceError("full_spectrum: need 2 <= L <= 6");
  Chain h = chain_hamiltonian(spec, L);
  std::vector<SpectrumReport> out(2 * L + 1);
  parallel_for(out.size(), [&](std::size_t p) {
    out[p] = sector_spectrum(h, spec, int(p), cluster_tol);
  });
  return out;
}

VectorC expand(const std::vector<Cluster>& clusters) {
  long n = 0;
  for (const auto& c : clusters) n += c.mult;
  VectorC v(n);
  long k = 0;
  for (const auto& c : clusters)
    for (int i = 0; i < c.mult; ++i) v(k++) = c.value;
  return v;
}

double multiset_distance(const VectorC& a, const VectorC& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<char> used(b.size(), 0);
  double worst = 0.0;
  for (long i = 0; i < a.size(); ++i) {
    long best = -1;
    double bd = std::numeric_limits<double>::infinity();
    for (long j = 0; j < b.size(); ++j)
      if (!used[j] && std::abs(a(i) - b(j)) < bd) {
        bd = std::abs(a(i) - b(j));
        best = j;
      }
    used[best] = 1;
    worst = std::max(worst, bd);
  }
  return worst;
}

double check_p_reflection(const std::vector<SpectrumReport>& reports) {
  std::map<int, const SpectrumReport*> by_p;
  int L = 0;
  for (const auto& r : reports) {
    by_p[r.p] = &r;
    L = r.L;
  }
  double worst = 0.0;
  for (const auto& [p, r] : by_p) {
    auto it = by_p.find(2 * L - p);
    if (it == by_p.end()) continue;
    worst = std::max(worst, multiset_distance(r->eigenvalues, it->second->eigenvalues));
  }
  return worst;
}

std::string golden_path(int model, int L) {
  return std::string(YANGKIT_DATA_DIR) + "/golden/model" + std::to_string(model) + "_L" +
         std::to_string(L) + ".json";
}

GoldenTable load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  GoldenTable g;
  g.model = j.at("model").get<int>();
  g.L = j.at("length").get<int>();
  g.spec.model = g.model;
  for (auto& [k, v] : j.at("params").items()) g.spec.params[k] = v.get<double>();
  for (const auto& s : j.at("sectors")) {
    auto& list = g.sectors[s.at("p").get<int>()];
    for (const auto& c : s.at("clusters"))
      list.push_back({c.at("expr").get<std::string>(), cd(c.at("re").get<double>(), c.at("im").get<double>()),
                      c.at("mult").get<int>(), c.at("kind").get<std::string>() == "exact"});
  }
  return g;
}

GoldenComparison compare_golden(const GoldenTable& golden,
                                const std::vector<SpectrumReport>& reports) {
  GoldenComparison out;
  auto fail = [&](std::string msg) {
    out.pass = false;
    out.mismatches.push_back(std::move(msg));
  };
  for (const auto& [p, clusters] : golden.sectors) {
    const SpectrumReport* rep = nullptr;
    for (const auto& r : reports)
      if (r.p == p) rep = &r;
    if (!rep) {
      fail("sector p=" + std::to_string(p) + " was not computed");
      continue;
    }
    const VectorC& ev = rep->eigenvalues;
    std::vector<char> claimed(ev.size(), 0);
    // exact values claim first; decimals use the wider printed tolerance
    std::vector<const GoldenCluster*> order;
    for (const auto& c : clusters) order.push_back(&c);
    std::stable_sort(order.begin(), order.end(),
                     [](auto a, auto b) { return a->exact && !b->exact; });
    for (const GoldenCluster* c : order) {
      const double tol = c->exact ? kExactTol : kDecimalTol;
      int count = 0;
      for (long k = 0; k < ev.size(); ++k)
        if (!claimed[k] && std::abs(ev(k) - c->value) < tol) {
          claimed[k] = 1;
          ++count;
        }
      if (count != c->mult) {
        std::ostringstream os;
        os << "p=" << p << " value " << c->expr << ": expected multiplicity " << c->mult
           << ", found " << count;
        fail(os.str());
      }
    }
    long left = std::count(claimed.begin(), claimed.end(), 0);
    if (left) fail("p=" + std::to_string(p) + ": " + std::to_string(left) +
                   " computed eigenvalues match no table entry");
  }
  return out;
}

}  // namespace yangkit
