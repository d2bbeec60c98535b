#pragma once

// The verification suite: every point-wise identity the library promises,
// evaluated over a scene's sample points, plus the report it produces.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinlie/scene.hpp"

namespace spinlie {

inline constexpr const char* kToolVersion = "0.1.0";

struct CheckRecord {
  std::string name;     // property
  std::string subject;  // "xi=boost field=psi", empty for geometry checks
  int point_index = 0;
  Point point{};
  double residual = 0.0;  // NaN when `error` is set
  double tolerance = 0.0;
  bool pass = false;
  std::string error;  // "SingularMetric: ..." when the check raised
};

struct PropertySummary {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  int checks = 0;
  int failures = 0;
};

struct KillingCount {
  std::string xi;
  int killing_points = 0;
  int points = 0;
};

struct Report {
  std::string tool_version = kToolVersion;
  std::string scene;
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<CheckRecord> records;
  std::vector<PropertySummary> summary;  // in order of first appearance
  std::vector<KillingCount> killing;
  bool pass() const;
};

struct VerifyOptions {
  std::optional<std::uint64_t> seed;  // default: the scene's
  std::optional<int> samples;         // default: the scene's count
  std::optional<double> tol;          // replaces every default tolerance
  unsigned threads = 0;               // 0: hardware concurrency
  double margin = 0.02;               // sample from the box shrunk by this fraction per side
};

Report verify_scene(const Scene& scene, const VerifyOptions& opt = {});

// "%.17g" throughout; byte-identical for identical inputs.
std::string report_json(const Report& r);
std::string report_text(const Report& r, bool verbose = false);

// Exception class name and message, e.g. "FlowEscape: flow left ...".
std::string describe_error(const std::exception& e);

}  // namespace spinlie
