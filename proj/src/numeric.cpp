#include "wpoly/numeric.hpp"

#include <cmath>
#include <limits>

#include "wpoly/operators.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wpoly {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Lanczos g = 7, 9 coefficients.
const double kLanczos[9] = {0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
                            771.32342877765313,   -176.61502916214059, 12.507343278686905,
                            -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

Cplx lanczos_sum(Cplx z) {
  Cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
  return x;
}

bool is_nonpositive_integer(Cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace

Cplx complex_gamma(Cplx z) {
  if (is_nonpositive_integer(z)) throw PoleError("gamma pole at a non-positive integer");
  if (z.real() < 0.5) return kPi / (std::sin(kPi * z) * complex_gamma(1.0 - z));
  z -= 1.0;
  Cplx t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * lanczos_sum(z);
}

Cplx complex_lgamma(Cplx z) {
  if (is_nonpositive_integer(z))
    return {std::numeric_limits<double>::infinity(), 0.0};
  if (z.real() < 0.5) {
    // log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z), up to 2 pi i k.
    Cplx s = std::sin(kPi * z);
    if (s == Cplx(0.0, 0.0)) return {std::numeric_limits<double>::infinity(), 0.0};
    return std::log(kPi) - std::log(s) - complex_lgamma(1.0 - z);
  }
  z -= 1.0;
  Cplx t = z + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(z));
}

namespace {

double rat_d(const Rat& q) { return q.get_d(); }

// c_plus evaluated with complex arithmetic.
Cplx c_plus_complex(const std::vector<Cplx>& x, const Params& P) {
  auto [a, b, c, d] = P.wilson_abcd();
  double ad = rat_d(a), bd = rat_d(b), td = rat_d(P.t);
  Cplx acc = 1.0;
  int n = P.n;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      acc *= (td - x[j] + x[k]) * (td - x[j] - x[k]) / ((x[k] + x[j]) * (x[k] - x[j]));
  for (int j = 0; j < n; ++j) acc *= (ad - x[j]) * (bd - x[j]) / (-2.0 * x[j]);
  return acc;
}

}  // namespace

Cplx weight_eval(const std::vector<Cplx>& x, WeightKind kind, const Params& P) {
  if (!P.numeric_positive())
    throw PreconditionError("weight needs a,b,c,d,t > 0");
  int n = P.n;
  if (static_cast<int>(x.size()) != n) throw DimensionError("point rank mismatch");
  auto abcd = P.wilson_abcd();
  double vs[4] = {rat_d(abcd[0]), rat_d(abcd[1]), rat_d(abcd[2]), rat_d(abcd[3])};
  double td = rat_d(P.t);
  Cplx logw = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      for (double sj : {1.0, -1.0})
        for (double sk : {1.0, -1.0}) {
          logw += complex_lgamma(td + sj * x[j] + sk * x[k]);
          Cplx den = complex_lgamma(sj * x[j] + sk * x[k]);
          if (std::isinf(den.real())) return 0.0;
          logw -= den;
        }
  for (int j = 0; j < n; ++j) {
    for (double s : {1.0, -1.0}) {
      for (double v : vs) logw += complex_lgamma(v + s * x[j]);
      Cplx den = complex_lgamma(s * 2.0 * x[j]);
      if (std::isinf(den.real())) return 0.0;
      logw -= den;
    }
  }
  Cplx w = std::exp(logw);
  if (kind == WeightKind::Full) w *= c_plus_complex(x, P);
  return w;
}

void gauss_legendre(int count, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(count, 0.0);
  weights.assign(count, 0.0);
  for (int i = 0; i < (count + 1) / 2; ++i) {
    // Chebyshev initial guess, Newton refinement on P_count.
    double x = std::cos(kPi * (i + 0.75) / (count + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < count; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
      }
      pp = count * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[count - 1 - i] = x;
    weights[i] = weights[count - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
}

QuadratureGrid::QuadratureGrid(const QuadratureSpec& spec, const Params& P) : n_(P.n) {
  if (P.n != 2) throw PreconditionError("quadrature supports n = 2 only");
  if (!P.numeric_positive()) throw PreconditionError("quadrature needs a,b,c,d,t > 0");
  std::vector<double> gl_nodes, gl_weights;
  gauss_legendre(spec.nodes_per_panel, gl_nodes, gl_weights);
  double width = 2.0 * spec.truncation / spec.panels;
  for (int p = 0; p < spec.panels; ++p) {
    double lo = -spec.truncation + p * width;
    for (int k = 0; k < spec.nodes_per_panel; ++k) {
      nodes_.push_back(lo + 0.5 * width * (gl_nodes[k] + 1.0));
      weights_.push_back(0.5 * width * gl_weights[k]);
    }
  }
  int m = static_cast<int>(nodes_.size());
  wplus_.assign(static_cast<std::size_t>(m) * m, Cplx(0.0));
  wfull_.assign(static_cast<std::size_t>(m) * m, Cplx(0.0));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < m; ++i) {
    std::vector<Cplx> x(2);
    for (int j = 0; j < m; ++j) {
      x[0] = Cplx(0.0, nodes_[i]);
      x[1] = Cplx(0.0, nodes_[j]);
      Cplx wp = weight_eval(x, WeightKind::Plus, P);
      double scale = weights_[i] * weights_[j];
      wplus_[static_cast<std::size_t>(i) * m + j] = wp * scale;
      wfull_[static_cast<std::size_t>(i) * m + j] =
          (wp == Cplx(0.0) ? Cplx(0.0) : wp * c_plus_complex(x, P)) * scale;
    }
  }
}

namespace {

// Compact double-precision view of an exact polynomial.
struct PolyD {
  int nvars;
  std::vector<std::pair<std::vector<int>, double>> terms;
  explicit PolyD(const SparsePoly& p) : nvars(p.nvars()) {
    for (const auto& [k, c] : p.terms())
      terms.emplace_back(SparsePoly::unpack(k, p.nvars()), rat_d(c));
  }
  Cplx eval(const std::vector<Cplx>& x) const {
    Cplx acc = 0.0;
    for (const auto& [e, c] : terms) {
      Cplx t = c;
      for (int v = 0; v < nvars; ++v)
        for (int k = 0; k < e[v]; ++k) t *= x[v];
      acc += t;
    }
    return acc;
  }
};

}  // namespace

Cplx QuadratureGrid::inner(const SparsePoly& f, const SparsePoly& g, WeightKind kind) const {
  PolyD fd(f), gd(g);
  const auto& w = kind == WeightKind::Plus ? wplus_ : wfull_;
  int m = static_cast<int>(nodes_.size());
  std::vector<Cplx> partial(m, Cplx(0.0));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (int i = 0; i < m; ++i) {
    std::vector<Cplx> x(2);
    Cplx row = 0.0;
    for (int j = 0; j < m; ++j) {
      x[0] = Cplx(0.0, nodes_[i]);
      x[1] = Cplx(0.0, nodes_[j]);
      Cplx ww = w[static_cast<std::size_t>(i) * m + j];
      if (ww != Cplx(0.0)) row += fd.eval(x) * gd.eval(x) * ww;
    }
    partial[i] = row;
  }
  Cplx acc = 0.0;
  for (int i = 0; i < m; ++i) acc += partial[i];  // fixed reduction order
  return acc / std::pow(2.0 * kPi, n_);
}

QuadResult quad_inner(const SparsePoly& f, const SparsePoly& g, WeightKind kind,
                      const QuadratureSpec& spec, const Params& P) {
  QuadratureGrid coarse(spec, P);
  QuadratureSpec fine_spec = spec;
  fine_spec.nodes_per_panel *= 2;
  QuadratureGrid fine(fine_spec, P);
  QuadResult res;
  Cplx v1 = coarse.inner(f, g, kind);
  res.value = fine.inner(f, g, kind);
  res.error_estimate = std::abs(res.value - v1);
  double scale = std::abs(res.value) + 1.0;
  res.converged = res.error_estimate <= 1e-4 * scale;
  return res;
}

double gustafson_constant(const Params& P) {
  if (!P.numeric_positive()) throw PreconditionError("constant term needs a,b,c,d,t > 0");
  auto abcd = P.wilson_abcd();
  double v[4] = {rat_d(abcd[0]), rat_d(abcd[1]), rat_d(abcd[2]), rat_d(abcd[3])};
  double td = rat_d(P.t);
  double vsum = v[0] + v[1] + v[2] + v[3];
  int n = P.n;
  double log_acc = n * std::log(2.0);
  for (int j = 1; j <= n; ++j) log_acc += std::log(static_cast<double>(j));
  for (int j = 1; j <= n; ++j) {
    log_acc += std::lgamma(td * j) - std::lgamma(td);
    for (int k = 0; k < 4; ++k)
      for (int l = k + 1; l < 4; ++l) log_acc += std::lgamma(v[k] + v[l] + (j - 1) * td);
    log_acc -= std::lgamma(vsum + (n + j - 2) * td);
  }
  return std::exp(log_acc);
}

double constant_term_full(const Params& P) {
  // -x0 with x0_i = a + (n-i)t.
  Rat a = P.tn + P.un;
  std::vector<Rat> mx0(P.n);
  for (int i = 1; i <= P.n; ++i) mx0[i - 1] = -(a + (P.n - i) * P.t);
  return rat_d(c_plus(mx0, P)) / static_cast<double>(w0_order(P.n)) * gustafson_constant(P);
}

double numeric_selfadjointness(int i, const SparsePoly& f, const SparsePoly& g,
                               const QuadratureSpec& spec, const Params& P) {
  QuadratureGrid grid(spec, P);
  SparsePoly fi = i < 0 ? SparsePoly::variable(P.n, 0) * f
                        : apply_generator(Gen::T, i, f, P);
  SparsePoly gi = i < 0 ? SparsePoly::variable(P.n, 0) * g
                        : apply_generator(Gen::T, i, g, P);
  Cplx lhs = grid.inner(fi, g, WeightKind::Full);
  Cplx rhs = grid.inner(f, gi, WeightKind::Full);
  double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
  return std::abs(lhs - rhs) / scale;
}

}  // namespace wpoly
