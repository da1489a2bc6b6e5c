#include "yangkit/catalog.hpp"
#include "yangkit/identifications.hpp"
#include "yangkit/oscillators.hpp"
#include "yangkit/report.hpp"
#include "yangkit/transforms.hpp"
#include "yangkit/verifier.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace yangkit;

namespace {

const cd I(0.0, 1.0);

// The common R layout, transcribed entry by entry: (row, col, which r, sign).
// Index 0 means r1 + r2 and 11 means r5 + r6 on the diagonal corners.
struct Slot {
  int row, col, r;
  double sign;
};
const std::vector<Slot>& r_layout() {
  static const std::vector<Slot> s{
      {0, 0, 0, 1},    {1, 1, 1, 1},    {1, 4, 2, 1},   {1, 11, 8, -1}, {1, 14, 8, 1},
      {2, 2, 4, 1},    {2, 8, 10, 1},   {3, 3, 4, 1},   {3, 12, 10, 1}, {4, 1, 2, 1},
      {4, 4, 1, 1},    {4, 11, 8, 1},   {4, 14, 8, -1}, {5, 5, 0, 1},   {6, 6, 4, 1},
      {6, 9, 10, 1},   {7, 7, 4, 1},    {7, 13, 10, 1}, {8, 2, 7, 1},   {8, 8, 3, 1},
      {9, 6, 7, 1},    {9, 9, 3, 1},    {10, 10, 11, 1}, {11, 1, 9, -1}, {11, 4, 9, 1},
      {11, 11, 5, 1},  {11, 14, 6, 1},  {12, 3, 7, 1},  {12, 12, 3, 1}, {13, 7, 7, 1},
      {13, 13, 3, 1},  {14, 1, 9, 1},   {14, 4, 9, -1}, {14, 11, 6, 1}, {14, 14, 5, 1},
      {15, 15, 11, 1}};
  return s;
}

MatrixC layout_oracle(const std::array<cd, 11>& r) {  // r[1..10]
  MatrixC m = MatrixC::Zero(16, 16);
  for (const Slot& s : r_layout()) {
    cd v = s.r == 0 ? r[1] + r[2] : s.r == 11 ? r[5] + r[6] : r[s.r];
    m(s.row, s.col) = s.sign * v;
  }
  return m;
}

HamiltonianParams row(cd A, cd B, cd C, cd D, cd E, cd F, cd G, cd H, cd K, cd L) {
  HamiltonianParams h;
  h.A = A; h.B = B; h.C = C; h.D = D; h.E = E;
  h.F = F; h.G = G; h.H = H; h.K = K; h.L = L;
  return h;
}

void expect_row(const HamiltonianParams& got, const HamiltonianParams& want, const std::string& what) {
  for (const char* n : HamiltonianParams::names())
    EXPECT_LT(std::abs(got.get(n) - want.get(n)), 1e-14) << what << " entry " << n;
}

}  // namespace

TEST(Catalog, TableRowsMatchTranscribedTable) {
  const double r = 0.7, a = 0.3, ph = 0.4;
  const cd ep = std::exp(ph), em = std::exp(-ph);
  ModelSpec s;
  s.params = {{"rho", r}, {"a", a}, {"phi", ph}};
  for (int m = 4; m <= 7; ++m) {
    s.model = m;
    cd D = m == 4 ? 0.0 : r, E = m == 5 ? -r : m == 4 ? 0.0 : r;
    cd A = m == 6 ? 0.0 : r, B = m == 6 ? 0.0 : -r;
    expect_row(table_row(s), row(A, B, 0, D, E, 0, a, r * em, 2 * r - a, r * ep), "model " + std::to_string(m));
  }
  s.params = {{"rho", r}, {"phi", ph}};
  s.model = 8;
  expect_row(table_row(s), row(r, -r, r * em, -r, r, -r * ep, 0, 0, 0, 0), "model 8");
  s.model = 9;
  expect_row(table_row(s), row(r, -r, r * em, r, -r, r * ep, 0, 0, 0, 0), "model 9");
  s.model = 10;
  expect_row(table_row(s), row(1.75 * r, -r, 0.5 * r * em, 1.75 * r, -r, 0.5 * r * ep, 0, 0, 0, 0), "model 10");
  s.model = 11;
  expect_row(table_row(s), row(r, -r, 0.5 * r * em, r, -r, 0.5 * r * ep, 1.5 * r, -1.5 * r, 1.5 * r, -1.5 * r),
             "model 11");
  s.model = 12;
  expect_row(table_row(s), row(0, 0, -r * em, 0, 0, r * ep, 0, r, 0, -r), "model 12");

  ModelSpec m3{3, std::nullopt, {{"a", 0.2}, {"b", 0.5}, {"c", -0.4}}};
  expect_row(table_row(m3), row(0, 0, 0, 0.2, 0, 0, 0.5, 0, -0.4, 0), "model 3");
  ModelSpec m2{2, Branch::Generic, {{"a", 0.2}, {"b", 0.5}, {"c", -0.4}, {"d", 0.9}}};
  expect_row(table_row(m2), row(0, 0, 0, 0.2 - 0.4, 0, 0, 0.2, 0.5, -0.4, 0.9), "model 2");
}

TEST(Catalog, Model9DensityAtUnitRho) {
  MatrixC h = build_hamiltonian_density(default_spec(9));
  EXPECT_LT(max_abs(MatrixC(h - hsu2_density(row(1, -1, 1, 1, -1, 1, 0, 0, 0, 0)))), 1e-15);
}

// The ten-parameter oscillator form built from explicit two-site fermions is
// an independent route to the matrix density.  In this realization the
// hopping coefficients C1..C4 enter with the opposite overall sign.
TEST(Catalog, DensityMatchesOscillatorForm) {
  const auto& f = fermions();
  const MatrixC id = identity(16);
  auto n = [&](int s, int site) { return f.n[s][site]; };
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 3; ++trial) {
    HamiltonianParams h = row(g(rng), g(rng), g(rng), g(rng), g(rng), g(rng), g(rng), g(rng), g(rng), g(rng));
    auto C = oscillator_coeffs(h).C;
    for (int k = 1; k <= 4; ++k) C[k] = -C[k];
    MatrixC out = C[0] * id;
    for (int a = 0; a < 2; ++a) {
      int b = 1 - a;
      MatrixC t1 = f.cdag[a][0] * f.c[a][1] + f.c[a][0] * f.cdag[a][1];
      MatrixC t2 = f.cdag[a][0] * f.c[a][1] - f.c[a][0] * f.cdag[a][1];
      MatrixC db = n(b, 0) - n(b, 1);
      out += t1 * (C[1] * id + C[2] * db * db);
      out += t2 * (C[3] * (n(b, 0) - 0.5 * id) + C[4] * (n(b, 1) - 0.5 * id));
    }
    out += C[5] * (f.cdag[Up][0] * f.cdag[Down][0] * f.c[Up][1] * f.c[Down][1] +
                   f.c[Up][0] * f.c[Down][0] * f.cdag[Up][1] * f.cdag[Down][1]);
    out += C[6] * (f.cdag[Up][0] * f.c[Down][0] * f.cdag[Down][1] * f.c[Up][1] +
                   f.cdag[Down][0] * f.c[Up][0] * f.cdag[Up][1] * f.c[Down][1]);
    out += C[7] * (n(Up, 0) - 0.5 * id) * (n(Down, 0) - 0.5 * id);
    out += C[8] * (n(Up, 1) - 0.5 * id) * (n(Down, 1) - 0.5 * id);
    MatrixC s1 = n(Up, 0) - n(Down, 0), s2 = n(Up, 1) - n(Down, 1);
    out += C[9] * s1 * s1 * s2 * s2;
    out += (C[5] - C[6]) * (n(Up, 0) * n(Down, 0) + n(Up, 1) * n(Down, 1) - id) * (n(Up, 0) - n(Up, 1)) *
           (n(Down, 0) - n(Down, 1));
    MatrixC x = n(Up, 0) - n(Down, 1), y = n(Down, 0) - n(Up, 1);
    out += 0.5 * C[5] * (x * x + y * y);
    EXPECT_LT(max_abs(MatrixC(out - hsu2_density(h))), 1e-12);
  }
}

TEST(Catalog, OscillatorCoefficients) {
  auto zero = oscillator_coeffs(HamiltonianParams{}).C;
  for (cd c : zero) EXPECT_EQ(c, cd(0.0));
  HamiltonianParams h;
  h.B = -1.0;
  auto C = oscillator_coeffs(h).C;
  EXPECT_EQ(C[5], cd(1.0));
  EXPECT_EQ(C[7], cd(-1.0));
  EXPECT_EQ(C[8], cd(-1.0));
  EXPECT_EQ(C[9], cd(-1.0));
  EXPECT_EQ(C[0], cd(-0.5));
  EXPECT_EQ(C[1], cd(0.0));
  EXPECT_EQ(oscillator_coeffs(table_row(default_spec(9))).C[6], cd(-1.0));
}

TEST(Catalog, Model3IsDiagonal) {
  ModelSpec s{3, std::nullopt, {{"a", 0.2}, {"b", 0.5}, {"c", -0.4}}};
  MatrixC h = build_hamiltonian_density(s);
  MatrixC off = h;
  off.diagonal().setZero();
  EXPECT_EQ(max_abs(off), 0.0);
  for (long i = 0; i < 16; ++i) {
    cd v = h(i, i);
    EXPECT_TRUE(v == 0.0 || v == 0.2 || v == 0.5 || v == -0.4) << v;
  }
}

TEST(Catalog, Model13AndModel14Shapes) {
  ModelSpec s13{13, std::nullopt, {{"A", 0.8}, {"B", 0.0}, {"C", 0.0}}};
  EXPECT_LT(max_abs(MatrixC(build_hamiltonian_density(s13) - 0.8 * identity(16))), 1e-15);
  // two commuting XXX couplings, assembled here from the 2x2 generators
  ModelSpec g13 = default_spec(13);
  cd A = g13.param("A"), B = g13.param("B"), C = g13.param("C");
  MatrixC oracle = A * identity(16);
  for (int i = 0; i < 3; ++i) {
    MatrixC tl = kron(identity(2), rho2(i)), tr = kron(rho2(i), identity(2));
    oracle += 2.0 * ((B + C) * kron(tl, tl) + (B - C) * kron(tr, tr));
  }
  EXPECT_LT(max_abs(MatrixC(two_xxx_decomposition(A, B, C) - oracle)), 1e-14);
  EXPECT_LT(max_abs(MatrixC(build_hamiltonian_density(g13) - oracle)), 1e-12);
}

TEST(Catalog, RepresentationsAndSymmetry) {
  for (int i = 0; i < 3; ++i) {
    MatrixC l = representation(Rep::TwoOneOne, true, i);
    EXPECT_EQ(max_abs(MatrixC(l.bottomRightCorner(2, 2))), 0.0);
    EXPECT_LT(max_abs(MatrixC(representation(Rep::TwoTwo, true, i) - kron(identity(2), rho2(i)))), 1e-15);
    for (int j = 0; j < 3; ++j)
      for (Rep r : {Rep::TwoOneOne, Rep::TwoTwo})
        EXPECT_LT(max_abs(commutator(representation(r, true, i), representation(r, false, j))), 1e-15);
  }
  // [t1, t2] = -t3 for t_i = (i/2) sigma_i
  EXPECT_LT(max_abs(MatrixC(commutator(rho2(0), rho2(1)) + rho2(2))), 1e-15);

  std::mt19937_64 rng(5);
  for (int m = 1; m <= 12; ++m) {
    MatrixC h = build_hamiltonian_density(random_spec(m, rng));
    for (bool left : {true, false})
      for (int i = 0; i < 3; ++i) {
        MatrixC t = representation(Rep::TwoOneOne, left, i);
        MatrixC g = kron(t, identity(4)) + kron(identity(4), t);
        EXPECT_LT(max_abs(commutator(h, g)), 1e-11) << "model " << m;
      }
  }
}

TEST(Catalog, SymmetryBrokenForModel18) {
  MatrixC h = build_hamiltonian_density(default_spec(18));
  EXPECT_GT(symmetry_residual(h, symmetry_rep(Rep::TwoOneOne)), 1e-3);
}

TEST(Catalog, Models15To17SeparateBySpin) {
  const auto& f = fermions();
  for (int m = 15; m <= 17; ++m) {
    SpinSplit sp = split_by_spin(m, 0.3, -0.2, 0.5, 0.1);
    MatrixC h = build_hamiltonian_density(default_spec(m));
    EXPECT_LT(max_abs(MatrixC(h - sp.up - sp.down)), 1e-14);
    for (int site = 0; site < 2; ++site) {
      EXPECT_LT(max_abs(commutator(sp.up, f.n[Down][site])), 1e-14);
      EXPECT_LT(max_abs(commutator(sp.down, f.n[Up][site])), 1e-14);
      // parity-even species pieces commute with the other species' bilinears
      MatrixC dn_hop = f.cdag[Down][0] * f.c[Down][1];
      MatrixC up_hop = f.cdag[Up][0] * f.c[Up][1];
      EXPECT_LT(max_abs(commutator(sp.up, dn_hop)), 1e-14);
      EXPECT_LT(max_abs(commutator(sp.down, up_hop)), 1e-14);
    }
  }
}

TEST(Catalog, RMatrixLayoutModels3And8) {
  const double a = 0.2, b = 0.5, c = -0.4;
  RMatrixFn r3 = build_r_matrix(ModelSpec{3, std::nullopt, {{"a", a}, {"b", b}, {"c", c}}});
  const double rho = 0.8, phi = 0.3;
  RMatrixFn r8 = build_r_matrix(ModelSpec{8, std::nullopt, {{"rho", rho}, {"phi", phi}}});
  for (double u : {0.0, 0.13, -0.37}) {
    std::array<cd, 11> f{};
    f[2] = 1.0;
    f[6] = std::exp(a * u);
    f[7] = std::exp(b * u);
    f[10] = std::exp(c * u);
    EXPECT_LT(max_abs(MatrixC(r3(u) - layout_oracle(f))), 1e-14);

    std::array<cd, 11> g{};
    g[1] = -std::tan(u * rho);
    g[5] = -g[1];
    g[2] = 1.0 - g[1];
    g[6] = 1.0 + g[1];
    g[7] = g[10] = 1.0;
    g[8] = std::exp(phi) * g[1];
    g[9] = -std::exp(-phi) * g[1];
    EXPECT_LT(max_abs(MatrixC(r8(u) - layout_oracle(g))), 1e-14);
  }
}

TEST(Catalog, EveryRMatrixIsRegular) {
  MatrixC p = permutation_operator(4);
  for (const ModelSpec& s : r_matrix_specs())
    EXPECT_LT(max_abs(MatrixC(build_r_matrix(s)(0.0) - p)), 1e-12) << "model " << s.model;
}

TEST(Catalog, Model18BraidedUnitarity) {
  RMatrixFn r = build_r_matrix(ModelSpec{18, std::nullopt, {{"theta", 0.4}, {"a2", 0.2}}});
  MatrixC p = permutation_operator(4);
  const double u = 0.3;
  MatrixC prod = r(u) * p * r(-u) * p;
  EXPECT_LT(max_abs(MatrixC(prod - 0.9856 * identity(16))), 1e-10);
}

TEST(Catalog, Model1BranchContinuity) {
  ModelSpec b0 = default_spec(1, Branch::BZero);
  ModelSpec near = default_spec(1, Branch::Generic);
  near.params = b0.params;
  RMatrixFn rb = build_r_matrix(b0);
  double prev = 1e9;
  for (double eps : {1e-3, 1e-5}) {
    near.params["b"] = eps;
    RMatrixFn rg = build_r_matrix(near);
    double d = max_abs(MatrixC(rg(0.21) - rb(0.21)));
    EXPECT_LT(d, prev);
    prev = d;
  }
  EXPECT_LT(prev, 1e-3);
}

TEST(Catalog, PoleIsReported) {
  RMatrixFn r8 = build_r_matrix(ModelSpec{8, std::nullopt, {{"rho", 1.0}, {"phi", 0.0}}});
  EXPECT_THROW(r8(M_PI / 2), PoleError);
}

TEST(Catalog, ValidationErrors) {
  EXPECT_THROW(validate(ModelSpec{99, std::nullopt, {}}), CatalogError);
  EXPECT_THROW(validate(ModelSpec{9, std::nullopt, {{"rho", 1.0}}}), CatalogError);
  EXPECT_THROW(validate(ModelSpec{9, std::nullopt, {{"rho", 1.0}, {"phi", 0.0}, {"x", 1.0}}}), CatalogError);
  EXPECT_THROW(default_spec(0), CatalogError);
  EXPECT_THROW(parse_branch("sideways"), CatalogError);
}

TEST(Catalog, SpecJsonRoundTrip) {
  Json j = Json::parse(R"({"model": 9, "branch": null, "params": {"rho": 1.0, "phi": 0.0}})");
  ModelSpec s = spec_from_json(j);
  EXPECT_EQ(s.model, 9);
  EXPECT_FALSE(s.branch.has_value());
  EXPECT_EQ(s.param("rho"), cd(1.0));
  EXPECT_EQ(spec_to_json(s).dump(), j.dump());
  Json c = Json::parse(R"({"model": 4, "branch": null, "params": {"rho": 0.5, "a": {"re": 0.1, "im": 0.2}, "phi": 0.0}})");
  EXPECT_EQ(spec_from_json(c).param("a"), cd(0.1, 0.2));
  EXPECT_THROW(spec_from_json(Json::parse(R"({"branch": null})")), CatalogError);
}

TEST(Catalog, TransformsKeepYbe) {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> g;
  RMatrixFn r = build_r_matrix(default_spec(6));
  MatrixC v(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) v(i, j) = cd(g(rng), g(rng));
  for (const Transform& t : {Transform::basis_change(v), Transform::prp(), Transform::transpose(),
                             Transform::reparametrization(1.7),
                             Transform::normalization([](cd u) { return std::exp(0.3 * u); })}) {
    RMatrixFn rt = apply_transform(t, r);
    EXPECT_LT(ybe_residual(rt, 0.23, -0.11), 1e-9) << to_string(t.kind);
  }
  EXPECT_TRUE(approx_equal(apply_transform(Transform::basis_change(identity(4)), r)(0.3), r(0.3), 1e-13));
  EXPECT_THROW(Transform::basis_change(MatrixC::Zero(4, 4)), std::invalid_argument);
}

TEST(Catalog, TwistPreconditionAndDensityMap) {
  // Models 8-12 commute with the phase twist diag(1, 1, e^{i t}, e^{-i t}) (x) itself.
  RMatrixFn r = build_r_matrix(default_spec(9));
  MatrixC v = MatrixC::Identity(4, 4);
  v(2, 2) = std::exp(I * 0.4);
  v(3, 3) = std::exp(-I * 0.4);
  Transform t = Transform::twist(v, identity(4));
  RMatrixFn rt = apply_transform(t, r);
  EXPECT_LT(ybe_residual(rt, 0.2, -0.1), 1e-9);

  MatrixC bad = MatrixC::Identity(4, 4);
  bad(0, 2) = 1.0;  // mixes a boson with a fermion
  EXPECT_THROW(apply_transform(Transform::twist(bad, identity(4)), r), TwistError);

  // The density map reproduces the extracted density of the twisted R.
  MatrixC h = hamiltonian_from_r(r).h;
  MatrixC ht = hamiltonian_from_r(rt).h;
  EXPECT_LT(max_abs(MatrixC(apply_transform(t, h) - ht)), 1e-7);
}

TEST(Catalog, Model11FromSp4) {
  for (double phi : {0.0, 0.35})
    for (double rho : {1.0, -0.6}) {
      ModelSpec s{11, std::nullopt, {{"rho", rho}, {"phi", phi}}};
      EXPECT_LT(max_abs(MatrixC(model11_from_sp4(rho, phi) - build_hamiltonian_density(s))), 1e-10);
    }
}
