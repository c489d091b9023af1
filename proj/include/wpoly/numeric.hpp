#pragma once

#include <complex>
#include <vector>

#include "wpoly/params.hpp"
#include "wpoly/poly.hpp"

namespace wpoly {

using Cplx = std::complex<double>;

// Lanczos approximation with reflection for Re z < 1/2; relative error below
// 1e-12 on the working domain. Throws PoleError at non-positive integers.
Cplx complex_gamma(Cplx z);
// log Gamma up to multiples of 2*pi*i (only ever exponentiated after
// summation, so the branch does not matter). Real part is +inf at poles.
Cplx complex_lgamma(Cplx z);

enum class WeightKind { Plus, Full };

// Gamma-weight on (iR)^n, computed in log space; Full multiplies by c_plus.
Cplx weight_eval(const std::vector<Cplx>& x, WeightKind kind, const Params& P);

struct QuadratureSpec {
  double truncation = 40.0;  // integrate y in [-T, T] per axis, x = i y
  int panels = 8;
  int nodes_per_panel = 32;
};

struct QuadResult {
  Cplx value{};
  double error_estimate = 0.0;       // node-doubling difference
  bool converged = true;             // estimate <= 1e-4 * (|value| + 1)
};

// Tensor Gauss-Legendre with measure (2 pi)^{-n} dy; n = 2 only. Node
// evaluations run in parallel; partial sums are reduced in index order so
// the result does not depend on the thread count.
class QuadratureGrid {
 public:
  QuadratureGrid(const QuadratureSpec& spec, const Params& P);
  Cplx inner(const SparsePoly& f, const SparsePoly& g, WeightKind kind) const;

 private:
  int n_;
  std::vector<double> nodes_, weights_;
  std::vector<Cplx> wplus_, wfull_;  // cached weight values per tensor node
};

QuadResult quad_inner(const SparsePoly& f, const SparsePoly& g, WeightKind kind,
                      const QuadratureSpec& spec, const Params& P);

// Closed-form constant term of the symmetric weight.
double gustafson_constant(const Params& P);
// <1,1> for the full weight: c_plus(-x0)/|W0| times the constant term.
double constant_term_full(const Params& P);

// |<T_i f, g> - <f, T_i g>| relative to scale; i in [0,n]; i = -1 checks the
// multiplication operator X_1 instead.
double numeric_selfadjointness(int i, const SparsePoly& f, const SparsePoly& g,
                               const QuadratureSpec& spec, const Params& P);

// Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int count, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace wpoly
