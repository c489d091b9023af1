#pragma once

#include <string>
#include <vector>

#include "wpoly/config.hpp"
#include "wpoly/relations.hpp"
#include "wpoly/wilson.hpp"

namespace wpoly {

// One pass/fail line of a suite run; detail carries a counterexample or a
// measured residual.
struct CheckLine {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct RunReport {
  std::string suite;
  std::vector<CheckLine> lines;
  bool ok() const {
    for (const auto& l : lines)
      if (!l.ok) return false;
    return true;
  }
};

// suite in {relations, gdaha, eigen, duality, evaluation, norms, fourier,
// symmetric}; throws ConfigError on anything else.
RunReport run_verify_suite(const std::string& suite, const RunConfig& cfg,
                           Exec exec = Exec::Parallel);

// suite in {constant, orthogonality, norms, selfadjoint}.
RunReport run_quadrature_suite(const std::string& suite, const RunConfig& cfg);

// Deterministic JSON renderings (stable schema, sorted keys, no floats in
// the exact layer).
std::string report_to_json(const RunReport& report, const RunConfig& cfg);
std::string compute_record_json(const Weight& lam, const RunConfig& cfg);
std::string compute_symmetric_json(const Weight& lam, const RunConfig& cfg);
std::string spectrum_json(int range, const RunConfig& cfg);

// Dominant weights used by the symmetric acceptance checks.
std::vector<Weight> symmetric_check_weights(int n);

}  // namespace wpoly
