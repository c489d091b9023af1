#pragma once

#include <optional>
#include <string>

#include "wpoly/numeric.hpp"
#include "wpoly/params.hpp"

namespace wpoly {

struct RunConfig {
  Params params = default_params();
  int degree = 6;
  int lambda_sum = 3;
  QuadratureSpec quad;
  double tol_scale = 1.0;  // scales the numeric-suite tolerances only
  std::string output;      // empty: stdout

  // Positivity needed by the numeric suites; exact suites only need the
  // genericity checks that run at suite start.
  void require_numeric() const;
};

// Flat key/value file: one "key = value" per line, '#' comments, rationals as
// "p/q" strings. Unknown keys are rejected by name.
RunConfig load_config(const std::string& path);
// Apply one key/value pair (shared by file loading and flag overrides).
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);

}  // namespace wpoly
