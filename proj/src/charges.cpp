#include "yangkit/charges.hpp"

namespace yangkit {

ChargeDensity make_density(const MatrixC& m) {
  if (m.rows() == 16 && m.cols() == 16) return {2, m};
  if (m.rows() == 64 && m.cols() == 64) return {3, m};
  throw DimensionError("charge density must be 16x16 or 64x64");
}

ChargeDensity q3_density(const ChargeDensity& h) {
  if (h.range != 2 || h.matrix.rows() != 16)
    throw DimensionError("q3_density: expected a range-2 density");
  MatrixC id = identity(4);
  MatrixC h12 = kron(h.matrix, id), h23 = kron(id, h.matrix);
  return {3, commutator(h12, h23)};
}

Chain assemble_charge(const ChargeDensity& d, int L, bool periodic) {
  if (L < d.range) throw SiteError("assemble_charge: chain shorter than the density range");
  SparseC m(ipow(4, L), ipow(4, L));
  const int last = periodic ? L : L - d.range + 1;
  for (int n = 1; n <= last; ++n) m += embed_local(d.matrix, n, L, periodic).matrix;
  m.prune(cd(0));
  return make_chain(L, 4, std::move(m));
}

double q2q3_commutator_norm(const MatrixC& h, int L) {
  ChargeDensity d = make_density(h);
  Chain q2 = assemble_charge(d, L);
  Chain q3 = assemble_charge(q3_density(d), L);
  return max_abs(commutator(q2, q3).matrix);
}

double q2q3_commutator_norm(const ModelSpec& spec, int L) {
  return q2q3_commutator_norm(build_hamiltonian_density(spec), L);
}

}  // namespace yangkit
