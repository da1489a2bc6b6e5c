#pragma once

#include "yangkit/bethe_two.hpp"
#include "yangkit/catalog.hpp"
#include "yangkit/multipoly.hpp"
#include "yangkit/spectrum.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace yangkit {

using Json = nlohmann::ordered_json;

inline constexpr int kReportDigits = 12;
inline constexpr std::uint64_t kDefaultSeed = 20190417;

// Real numbers stay plain; complex values become {"re": .., "im": ..}.
Json complex_to_json(cd z);
cd complex_from_json(const Json& j);
double round_sig(double x, int digits = kReportDigits);

Json spec_to_json(const ModelSpec& s);
// {"model": 9, "branch": null, "params": {"rho": 1.0, "phi": 0.0}}; validated.
ModelSpec spec_from_json(const Json& j);

struct VerifyOptions {
  int grid_points = 20;
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> tol;  // overrides every residual tolerance
};

struct CheckResult {
  std::string name;
  double value = 0.0;
  double tol = 0.0;
  bool gating = true;  // informational checks never fail the run
  bool pass = true;
};

struct ModelVerification {
  ModelSpec spec;
  std::vector<CheckResult> checks;
  std::vector<std::pair<cd, cd>> unitarity_samples;  // (u, c)
  cd fit_scale = 0.0, fit_shift = 0.0;
  cd series_gamma = 0.0;
  bool pass = true;
  Json to_json() const;
};

ModelVerification verify_model(const ModelSpec& spec, const VerifyOptions& opt = {});

Json spectrum_to_json(const std::vector<SpectrumReport>& reports);
// Columns model,L,p,re(eig),im(eig),mult.
std::string spectrum_to_csv(const std::vector<SpectrumReport>& reports);

Json equations_to_json(const EquationSystem& sys);
Json bethe_to_json(const BetheTwoReport& r);

}  // namespace yangkit
