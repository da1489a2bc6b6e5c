#include "yangkit/bethe_two.hpp"

#include "yangkit/spectrum.hpp"

namespace yangkit {

cd vacuum_energy(const HamiltonianParams& h, int L) { return double(L) * (h.A + h.B); }

std::pair<cd, int> one_excitation(const HamiltonianParams& h, int L) {
  return {double(L - 2) * (h.A + h.B), 2 * L};
}

SeparatedCase two_exc_separated(const HamiltonianParams& h, int L) {
  return {double(L - 4) * (h.A + h.B), L > 3};
}

cd two_exc_equal_adjacent(const HamiltonianParams& h, int L) {
  return double(L - 3) * (h.A + h.B) + h.D + h.E;
}

BetheTwoBlock two_exc_block(const HamiltonianParams& h, int L) {
  if (L < 3) throw SiteError("two_exc_block: need L >= 3");
  MatrixC m = MatrixC::Zero(3 * L, 3 * L);
  auto c = [&](int j) { return ((j % L) + L) % L; };
  auto h12 = [&](int j) { return L + c(j); };
  auto h21 = [&](int j) { return 2 * L + c(j); };
  const cd diag_c = double(L - 2) * (h.A + h.B) + 2.0 * h.A;
  const cd diag_h = double(L - 3) * (h.A + h.B) + h.D;
  for (int j = 0; j < L; ++j) {
    m(c(j), c(j)) += diag_c;
    m(c(j), c(j + 1)) += h.B;
    m(c(j), c(j - 1)) += h.B;
    m(c(j), h12(j - 1)) += h.F;
    m(c(j), h21(j - 1)) -= h.F;
    m(c(j), h12(j)) -= h.F;
    m(c(j), h21(j)) += h.F;
    // eps^{12} = +1, eps^{21} = -1
    m(h12(j), h12(j)) += diag_h;
    m(h12(j), h21(j)) += h.E;
    m(h12(j), c(j + 1)) += h.C;
    m(h12(j), c(j)) -= h.C;
    m(h21(j), h21(j)) += diag_h;
    m(h21(j), h12(j)) += h.E;
    m(h21(j), c(j + 1)) -= h.C;
    m(h21(j), c(j)) += h.C;
  }
  return {L, h, m};
}

CaseCounts two_exc_counts(int L) {
  if (L < 3) throw SiteError("two_exc_counts: need L >= 3");
  SectorBasis b = sector_basis(L, 2);
  CaseCounts n;
  for (long k = 0; k < b.dim(); ++k) {
    std::vector<int> lab = b.labels(k);
    std::vector<int> psi;
    for (int j = 0; j < L; ++j)
      if (lab[j] >= Psi1) psi.push_back(j);
    if (psi.empty()) {
      ++n.block;
      continue;
    }
    int gap = psi[1] - psi[0];
    bool adjacent = gap == 1 || gap == L - 1;
    if (!adjacent) ++n.separated;
    else if (lab[psi[0]] == lab[psi[1]]) ++n.equal_adjacent;
    else ++n.block;
  }
  return n;
}

VectorC reconstruct_state(const VectorC& x, int L) {
  if (x.size() != 3 * L) throw DimensionError("reconstruct_state: expected 3L coordinates");
  VectorC v = VectorC::Zero(ipow(4, L));
  auto weight = [&](int site) { return ipow(4, L - 1 - site); };
  for (int j = 0; j < L; ++j) {
    const int next = (j + 1) % L;
    v(Phi2 * weight(j)) += x(j);
    v(Psi1 * weight(j) + Psi2 * weight(next)) += x(L + j);
    v(Psi2 * weight(j) + Psi1 * weight(next)) += x(2 * L + j);
  }
  return v;
}

BetheTwoReport two_exc_compare(const ModelSpec& spec, int L) {
  if (spec.model < 8 || spec.model > 10)
    throw CatalogError("two_exc_compare: only models 8, 9 and 10");
  if (L < 3 || L > 5) throw SiteError("two_exc_compare: need 3 <= L <= 5");
  HamiltonianParams h = table_row(spec);
  CaseCounts counts = two_exc_counts(L);
  if (counts.total() != 2L * L * L - L || counts.block != 3 * L)
    throw std::logic_error("two_exc_compare: case counts do not add up to 2L^2 - L");

  BetheTwoReport r;
  r.model = spec.model;
  r.L = L;
  SeparatedCase sep = two_exc_separated(h, L);
  if (sep.valid) r.cases.push_back({"separated", sep.energy, counts.separated});
  else if (counts.separated != 0)
    throw std::logic_error("two_exc_compare: separated states on a chain too short for them");
  r.cases.push_back({"equal_adjacent", two_exc_equal_adjacent(h, L), counts.equal_adjacent});

  BetheTwoBlock blk = two_exc_block(h, L);
  EigenPairs ep = eigen_pairs(blk.block);
  r.block_eigenvalues = merge_defective(ep.values);

  std::vector<cd> all;
  for (const auto& c : r.cases)
    for (long i = 0; i < c.multiplicity; ++i) all.push_back(c.energy);
  for (long i = 0; i < r.block_eigenvalues.size(); ++i) all.push_back(r.block_eigenvalues(i));
  r.predicted = Eigen::Map<VectorC>(all.data(), long(all.size()));

  Chain hc = chain_hamiltonian(spec, L);
  r.sector = sector_spectrum(hc, spec, 2).eigenvalues;
  r.distance = multiset_distance(r.predicted, r.sector);

  for (long k = 0; k < ep.values.size(); ++k) {
    VectorC v = reconstruct_state(ep.vectors.col(k), L);
    VectorC res = hc.matrix * v - ep.values(k) * v;
    r.max_eigen_residual = std::max(r.max_eigen_residual, res.norm() / v.norm());
  }
  return r;
}

}  // namespace yangkit
