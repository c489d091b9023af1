// Times the serial reference paths against the OpenMP ones: the operator
// identity verifier over monomials, and the tensor quadrature.
#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wpoly/numeric.hpp"
#include "wpoly/relations.hpp"

using namespace wpoly;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double time_suite(const std::vector<IdentityCheck>& checks, int degree, const Params& P,
                  Exec exec) {
  auto start = std::chrono::steady_clock::now();
  auto report = run_suite(checks, degree, P, exec);
  double dt = seconds_since(start);
  if (!report.all_ok) {
    std::cerr << "suite failed during benchmark\n";
    std::exit(1);
  }
  return dt;
}

}  // namespace

int main(int argc, char** argv) {
  int degree = argc > 1 ? std::atoi(argv[1]) : 6;
  Params P = default_params();
#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (compiled without OpenMP)\n";
#endif

  auto checks = relation_suite(P);
  std::cout << "relation suite, n=2, degree " << degree << ", " << checks.size()
            << " identities\n";
  double ts = time_suite(checks, degree, P, Exec::Serial);
  std::cout << "  serial:   " << ts << " s\n";
  double tp = time_suite(checks, degree, P, Exec::Parallel);
  std::cout << "  parallel: " << tp << " s  (speedup " << ts / tp << "x)\n";

  QuadratureSpec spec;
  SparsePoly x1 = SparsePoly::variable(2, 0), x2 = SparsePoly::variable(2, 1);
  auto start = std::chrono::steady_clock::now();
  QuadratureGrid grid(spec, P);
  std::cout << "quadrature grid build (" << spec.panels * spec.nodes_per_panel
            << " nodes/axis): " << seconds_since(start) << " s\n";
  start = std::chrono::steady_clock::now();
  auto v = grid.inner(x1 * x1, x2, WeightKind::Full);
  std::cout << "one inner product: " << seconds_since(start) << " s (value " << v.real()
            << ")\n";
  return 0;
}
