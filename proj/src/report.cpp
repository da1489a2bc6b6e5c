#include "yangkit/report.hpp"

#include "yangkit/grading.hpp"
#include "yangkit/verifier.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace yangkit {

double round_sig(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return std::stod(os.str());
}

Json complex_to_json(cd z) {
  if (z.imag() == 0.0) return round_sig(z.real());
  return Json{{"re", round_sig(z.real())}, {"im", round_sig(z.imag())}};
}

cd complex_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_object()) return {j.at("re").get<double>(), j.value("im", 0.0)};
  throw CatalogError("expected a number or {\"re\", \"im\"} object");
}

Json spec_to_json(const ModelSpec& s) {
  Json j;
  j["model"] = s.model;
  j["branch"] = s.branch ? Json(to_string(*s.branch)) : Json(nullptr);
  Json p = Json::object();
  std::vector<std::string> order;
  try {
    order = parameter_names(s);
  } catch (const CatalogError&) {
  }
  for (const auto& k : order)
    if (s.has(k)) p[k] = complex_to_json(s.param(k));
  for (const auto& [k, v] : s.params)
    if (!p.contains(k)) p[k] = complex_to_json(v);
  j["params"] = p;
  return j;
}

ModelSpec spec_from_json(const Json& j) {
  ModelSpec s;
  if (!j.is_object() || !j.contains("model")) throw CatalogError("model spec needs a \"model\" field");
  s.model = j.at("model").get<int>();
  if (j.contains("branch") && !j.at("branch").is_null())
    s.branch = parse_branch(j.at("branch").get<std::string>());
  if ((s.model == 1 || s.model == 2) && !s.branch) s.branch = Branch::Generic;
  if (j.contains("params"))
    for (const auto& [k, v] : j.at("params").items()) s.params[k] = complex_from_json(v);
  validate(s);
  return s;
}

namespace {

constexpr double kRegularityTol = 1e-12;
constexpr double kYbeTol = 1e-9;
constexpr double kUnitarityTol = 1e-9;
constexpr double kExtractionTol = 1e-7;
constexpr double kSymmetryTol = 1e-11;

bool has_r_matrix(const ModelSpec& s) {
  return (s.model >= 1 && s.model <= 14) || (s.model == 18 && s.has("theta"));
}

}  // namespace

ModelVerification verify_model(const ModelSpec& spec, const VerifyOptions& opt) {
  validate(spec);
  ModelVerification mv;
  mv.spec = spec;
  auto tol = [&](double def) { return opt.tol.value_or(def); };
  auto add = [&](std::string name, double value, double t, bool gating = true) {
    CheckResult c{std::move(name), value, t, gating, !(value > t)};
    if (gating && !c.pass) mv.pass = false;
    mv.checks.push_back(c);
  };

  MatrixC density = build_hamiltonian_density(spec);
  if (spec.model <= 12)
    add("symmetry", symmetry_residual(density, symmetry_rep(Rep::TwoOneOne)), tol(kSymmetryTol));
  else if (spec.model <= 14)
    add("symmetry", symmetry_residual(density, symmetry_rep(Rep::TwoTwo)), tol(kSymmetryTol));
  else
    add("symmetry", symmetry_residual(density, symmetry_rep(Rep::TwoOneOne)), tol(kSymmetryTol),
        false);

  if (!has_r_matrix(spec)) return mv;

  RMatrixFn r = build_r_matrix(spec);
  add("regularity", regularity_residual(r), tol(kRegularityTol));

  auto grid = verification_grid(r, opt.grid_points, opt.seed);
  double ybe = 0.0;
  for (auto [u, v] : grid) ybe = std::max(ybe, ybe_residual(r, u, v));
  add("ybe", ybe, tol(kYbeTol));

  double unit_dev = 0.0, unit_fit = 0.0;
  const bool unitary_claim = spec.model <= 12 || spec.model == 18;
  for (std::size_t k = 0; k < std::min<std::size_t>(10, grid.size()); ++k) {
    cd u = grid[k].first;
    UnitarityFit f = braiding_unitarity(r, u);
    cd expected = 1.0;
    if (spec.model == 18) {
      cd a2 = spec.param("a2");
      expected = 1.0 - 4.0 * a2 * a2 * u * u;
    }
    mv.unitarity_samples.emplace_back(u, f.c);
    unit_dev = std::max(unit_dev, std::abs(f.c - expected));
    unit_fit = std::max(unit_fit, f.residual);
  }
  add("unitarity_scalar", unit_dev, tol(kUnitarityTol), unitary_claim);
  add("unitarity_fit", unit_fit, tol(kUnitarityTol));

  Extraction ex = hamiltonian_from_r(r);
  Fit fit = fit_scale_shift(ex.h, density);
  mv.fit_scale = fit.scale;
  mv.fit_shift = fit.shift;
  add("extraction", fit.residual, tol(kExtractionTol));

  SeriesReport ser = series_consistency(r);
  mv.series_gamma = ser.gamma;
  add("series_ratio_deviation", ser.residual < 1e-13 ? 0.0 : std::abs(ser.ratio - 8.0), 1.0);

  if (spec.model <= 12) {
    add("graded_compatibility", compatibility_check(r) ? 0.0 : 1.0, 0.5);
    RMatrixFn rf = grade_r_matrix(r);
    add("graded_regularity", max_abs(MatrixC(rf(0.0) - graded_permutation())), tol(kRegularityTol));
    double gybe = 0.0;
    for (auto [u, v] : grid) gybe = std::max(gybe, graded_ybe_residual(rf, u, v));
    add("graded_ybe", gybe, tol(kYbeTol));
  }
  return mv;
}

Json ModelVerification::to_json() const {
  Json j;
  j["spec"] = spec_to_json(spec);
  Json checks_j = Json::object();
  for (const auto& c : checks)
    checks_j[c.name] = Json{{"value", c.value}, {"tol", c.tol}, {"gating", c.gating}, {"pass", c.pass}};
  j["checks"] = checks_j;
  Json samples = Json::array();
  for (auto [u, c] : unitarity_samples)
    samples.push_back(Json{{"u", complex_to_json(u)}, {"c", complex_to_json(c)}});
  j["unitarity_c_samples"] = samples;
  j["series_normalization_gamma"] = complex_to_json(series_gamma);
  j["extraction_fit"] = Json{{"scale", complex_to_json(fit_scale)}, {"shift", complex_to_json(fit_shift)}};
  j["pass"] = pass;
  return j;
}

Json spectrum_to_json(const std::vector<SpectrumReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) {
    Json cl = Json::array();
    for (const auto& c : r.clusters)
      cl.push_back(Json{{"re", round_sig(c.value.real())},
                        {"im", round_sig(std::abs(c.value.imag()) < 1e-12 ? 0.0 : c.value.imag())},
                        {"mult", c.mult}});
    out.push_back(Json{{"model", r.spec.model}, {"L", r.L}, {"p", r.p}, {"tol", r.tol},
                       {"dim", r.eigenvalues.size()}, {"clusters", cl}});
  }
  return out;
}

std::string spectrum_to_csv(const std::vector<SpectrumReport>& reports) {
  std::ostringstream os;
  os << "model,L,p,re(eig),im(eig),mult\n";
  os << std::setprecision(kReportDigits);
  for (const auto& r : reports)
    for (const auto& c : r.clusters) {
      double im = std::abs(c.value.imag()) < 1e-12 ? 0.0 : c.value.imag();
      double re = std::abs(c.value.real()) < 1e-12 ? 0.0 : c.value.real();
      os << r.spec.model << "," << r.L << "," << r.p << "," << re << "," << im << "," << c.mult << "\n";
    }
  return os.str();
}

Json equations_to_json(const EquationSystem& sys) {
  Json j;
  j["ansatz"] = sys.ansatz;
  j["chain_length"] = sys.chain_length;
  j["variables"] = sys.variables;
  Json eqs = Json::array();
  for (const auto& p : sys.equations) {
    Json monos = Json::array();
    for (const auto& [e, c] : p.terms())
      monos.push_back(Json{{"exps", e}, {"num", c.numerator()}, {"den", c.denominator()}});
    eqs.push_back(Json{{"monomials", monos}});
  }
  j["equations"] = eqs;
  return j;
}

Json bethe_to_json(const BetheTwoReport& r) {
  Json j;
  j["model"] = r.model;
  j["L"] = r.L;
  Json cases = Json::array();
  for (const auto& c : r.cases)
    cases.push_back(Json{{"case", c.name}, {"energy", complex_to_json(c.energy)}, {"multiplicity", c.multiplicity}});
  Json block = Json::array();
  for (const auto& c : cluster_eigenvalues(r.block_eigenvalues))
    block.push_back(Json{{"eigenvalue", complex_to_json(c.value)}, {"multiplicity", c.mult}});
  cases.push_back(Json{{"case", "block"}, {"eigenvalues", block}});
  j["cases"] = cases;
  Json predicted = Json::array();
  for (const auto& c : cluster_eigenvalues(r.predicted))
    predicted.push_back(Json{{"eigenvalue", complex_to_json(c.value)}, {"multiplicity", c.mult}});
  j["predicted"] = predicted;
  j["distance"] = r.distance;
  j["max_eigen_residual"] = r.max_eigen_residual;
  return j;
}

}  // namespace yangkit
