// Acceptance suite: runs every contracted criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit status is nonzero if any
// criterion fails.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "wpoly/runner.hpp"

using namespace wpoly;

namespace {

int failures = 0;

void verdict(int k, const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", k, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string first_failure(const RunReport& r) {
  for (const auto& line : r.lines)
    if (!line.ok) return line.name + (line.detail.empty() ? "" : " (" + line.detail + ")");
  return "";
}

std::string first_failure(const SuiteReport& r) {
  for (const auto& res : r.results)
    if (!res.ok) return res.name;
  return "";
}

}  // namespace

int main() {
  // Criterion 1: the full exact relation suite (including the GDAHA
  // presentation) at n=2/D=6 and n=3/D=4, two generic parameter sets,
  // exact equality.
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (int n : {2, 3}) {
      int degree = n == 2 ? 6 : 4;
      for (Params base : {default_params(), alternate_params()}) {
        Params P = base;
        P.n = n;
        WilsonContext ctx(P);
        ctx.validate_genericity(1);
        auto rel = run_suite(relation_suite(P), degree, P);
        auto gd = run_suite(gdaha_suite(P), degree, P);
        if (!(rel.all_ok && gd.all_ok)) {
          ok = false;
          detail = "n=" + std::to_string(n) + " " + P.str() + ": " +
                   (rel.all_ok ? first_failure(gd) : first_failure(rel));
        }
      }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f s", seconds_since(t0));
    verdict(1, "exact relation suite, n=2/D=6 and n=3/D=4, two parameter sets", ok,
            ok ? std::string(buf) : detail);
  }

  RunConfig cfg;  // desk defaults: P*, degree 6, lambda_sum 3, 8x32 quadrature

  // Criterion 2: eigenvalue equations, exact linear independence and spanning,
  // nonzero leading coefficients for |lambda| <= 3 at n=2.
  {
    auto report = run_verify_suite("eigen", cfg);
    verdict(2, "eigen/basis suite, sum|lambda| <= 3", report.ok(), first_failure(report));
  }

  // Criterion 3: evaluation product formula equals direct evaluation, exactly.
  {
    auto report = run_verify_suite("evaluation", cfg);
    verdict(3, "evaluation formula, sum|lambda| <= 3", report.ok(), first_failure(report));
  }

  // Criterion 4: duality and symmetric duality, exactly.
  {
    auto report = run_verify_suite("duality", cfg);
    verdict(4, "duality, pairs <= 2, symmetric pairs <= (1,1)", report.ok(),
            first_failure(report));
  }

  // Criterion 5: norm stepwise/product consistency plus the Fourier pair at
  // c = 1, exactly, on filtration <= 3.
  {
    auto norms = run_verify_suite("norms", cfg);
    auto fourier = run_verify_suite("fourier", cfg);
    bool ok = norms.ok() && fourier.ok();
    verdict(5, "norm path independence and Fourier inversion/Plancherel", ok,
            ok ? "" : (norms.ok() ? first_failure(fourier) : first_failure(norms)));
  }

  // Criterion 6: the symmetric suite (two routes, K-sum, difference equation).
  {
    auto report = run_verify_suite("symmetric", cfg);
    verdict(6, "symmetric polynomials: routes, K-sum, L eigen-equation", report.ok(),
            first_failure(report));
  }

  // Criterion 7: quadrature cross-checks at P*, stated tolerances.
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (const char* suite : {"constant", "orthogonality", "norms", "selfadjoint"}) {
      auto report = run_quadrature_suite(suite, cfg);
      if (!report.ok() && ok) {
        ok = false;
        detail = std::string(suite) + ": " + first_failure(report);
      }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f s", seconds_since(t0));
    verdict(7, "numeric quadrature suite (constant, Gram, norms, self-adjointness)", ok,
            ok ? std::string(buf) : detail);
  }

  // Criterion 8: determinism -- byte-identical JSON across repeated runs.
  {
    RunConfig small = cfg;
    small.lambda_sum = 2;
    bool ok = report_to_json(run_verify_suite("eigen", small), small) ==
              report_to_json(run_verify_suite("eigen", small), small);
    ok = ok && compute_record_json({-1, 0}, small) == compute_record_json({-1, 0}, small);
    ok = ok && spectrum_json(2, small) == spectrum_json(2, small);
    ok = ok && report_to_json(run_quadrature_suite("constant", small), small) ==
                   report_to_json(run_quadrature_suite("constant", small), small);
    verdict(8, "determinism: repeated runs produce byte-identical JSON", ok);
  }

  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED");
  return failures == 0 ? 0 : 1;
}
