#include "wpoly/runner.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wpoly {

using json = nlohmann::json;

namespace {

std::string weight_str(const Weight& lam) {
  std::string s = "(";
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(lam[i]);
  }
  return s + ")";
}

void add_line(RunReport& r, std::string name, bool ok, std::string detail = "") {
  r.lines.push_back({std::move(name), ok, std::move(detail)});
}

RunReport report_from_suite(const std::string& suite, const SuiteReport& sr) {
  RunReport r;
  r.suite = suite;
  for (const auto& res : sr.results) {
    std::string detail;
    if (!res.ok && res.counterexample) {
      detail = "counterexample monomial exponent (";
      for (std::size_t i = 0; i < res.counterexample->size(); ++i) {
        if (i) detail += ",";
        detail += std::to_string((*res.counterexample)[i]);
      }
      detail += ")";
    }
    r.lines.push_back({res.name, res.ok, detail});
  }
  return r;
}

RunReport run_eigen_suite(const RunConfig& cfg) {
  RunReport r;
  r.suite = "eigen";
  WilsonContext ctx(cfg.params);
  ctx.validate_genericity(cfg.lambda_sum);
  int n = cfg.params.n;
  for (const auto& lam : weights_up_to(n, cfg.lambda_sum)) {
    const auto& rec = ctx.record(lam);
    bool eig_ok = true;
    for (int i = 1; i <= n && eig_ok; ++i)
      eig_ok = apply_Y(i, rec.p, cfg.params) == rec.gamma[i - 1] * rec.p;
    add_line(r, "Y p = gamma p at lambda=" + weight_str(lam), eig_ok);
    bool lead_ok = !is_zero(rec.p.coeff(phi_map(lam)));
    add_line(r, "leading coefficient nonzero at lambda=" + weight_str(lam), lead_ok);
  }
  for (int m = 0; m <= cfg.lambda_sum; ++m) {
    bool solve_ok = true;
    std::string detail;
    for (const auto& lam : weights_up_to(n, m)) {
      SparsePoly mono = SparsePoly::monomial(n, phi_map(lam), rat(1));
      std::map<Weight, Rat> coeffs;
      try {
        coeffs = ctx.expand_in_E(mono);
      } catch (const DegenerateParameterError& e) {
        solve_ok = false;
        detail = e.what();
        break;
      }
      SparsePoly back(n);
      for (const auto& [mu, c] : coeffs) back += c * ctx.record(mu).E;
      if (!(back == mono)) {
        solve_ok = false;
        detail = "reconstruction failed at " + weight_str(lam);
        break;
      }
    }
    add_line(r, "E-basis spans filtration level " + std::to_string(m), solve_ok, detail);
  }
  return r;
}

RunReport run_duality_suite(const RunConfig& cfg) {
  RunReport r;
  r.suite = "duality";
  WilsonContext ctx(cfg.params);
  ctx.validate_genericity(2);
  ctx.sigma_context().validate_genericity(2);
  int n = cfg.params.n;
  auto range = weights_up_to(n, 2);
  for (const auto& lam : range)
    for (const auto& mu : range)
      add_line(r, "duality lambda=" + weight_str(lam) + " mu=" + weight_str(mu),
               ctx.duality_check(lam, mu));
  std::vector<Weight> doms;
  for (const auto& lam : range)
    if (is_dominant(lam) && *std::max_element(lam.begin(), lam.end()) <= 1)
      doms.push_back(lam);
  for (const auto& lam : doms)
    for (const auto& mu : doms)
      add_line(r, "symmetric duality lambda=" + weight_str(lam) + " mu=" + weight_str(mu),
               ctx.symmetric_duality_check(lam, mu));
  return r;
}

RunReport run_evaluation_suite(const RunConfig& cfg) {
  RunReport r;
  r.suite = "evaluation";
  WilsonContext ctx(cfg.params);
  ctx.validate_genericity(cfg.lambda_sum);
  for (const auto& lam : weights_up_to(cfg.params.n, cfg.lambda_sum)) {
    Rat product = ctx.evaluation_value(lam);
    Rat direct = ctx.record(lam).eval_at_minus_x0;
    add_line(r, "evaluation product = direct at lambda=" + weight_str(lam),
             product == direct,
             product == direct ? "" : rat_str(product) + " vs " + rat_str(direct));
  }
  return r;
}

RunReport run_norms_suite(const RunConfig& cfg) {
  RunReport r;
  r.suite = "norms";
  WilsonContext ctx(cfg.params);
  ctx.validate_genericity(cfg.lambda_sum);
  Params S = cfg.params.sigma();
  int n = cfg.params.n;
  for (const auto& lam : weights_up_to(n, cfg.lambda_sum)) {
    auto xi = gamma_point(lam, cfg.params);
    for (auto& v : xi) v = -v;
    for (int i = 0; i <= n; ++i) {
      Weight flip = dot_simple_weight(i, lam);
      if (flip == lam || abs_sum(flip) > cfg.lambda_sum) continue;
      AffineRoot a = simple_root(i, n);
      // <E_lam, E_lam> / <E_flip, E_flip> = nu_flip / nu_lam
      //   = c^sigma_{a_i}(-gamma_lam) / c^sigma_{-a_i}(-gamma_lam).
      bool ok = ctx.record(flip).rel_norm * c_alpha(negate_root(a), xi, S) ==
                ctx.record(lam).rel_norm * c_alpha(a, xi, S);
      add_line(r, "stepwise norm ratio lambda=" + weight_str(lam) + " i=" + std::to_string(i),
               ok);
    }
  }
  return r;
}

RunReport run_fourier_suite(const RunConfig& cfg) {
  RunReport r;
  r.suite = "fourier";
  WilsonContext ctx(cfg.params);
  int level = std::min(cfg.lambda_sum, 3);
  ctx.validate_genericity(level);
  int n = cfg.params.n;
  for (const auto& lam : weights_up_to(n, level)) {
    SparsePoly mono = SparsePoly::monomial(n, phi_map(lam), rat(1));
    add_line(r, "G(F(f)) = f at f = x^phi" + weight_str(lam),
             ctx.fourier_G(ctx.fourier_F(mono)) == mono);
  }
  for (const auto& lam : weights_up_to(n, 1)) {
    FiniteSpectralFunction delta;
    delta.values[lam] = rat(1);
    add_line(r, "F(G(delta)) = delta at lambda=" + weight_str(lam),
             ctx.fourier_F(ctx.fourier_G(delta)) == delta);
  }
  // Plancherel at c = 1 on a polynomial pair basis.
  auto lams = weights_up_to(n, std::min(level, 2));
  for (std::size_t a = 0; a < lams.size(); ++a)
    for (std::size_t b = a; b < lams.size(); ++b) {
      SparsePoly f = SparsePoly::monomial(n, phi_map(lams[a]), rat(1));
      SparsePoly g = SparsePoly::monomial(n, phi_map(lams[b]), rat(1));
      auto Ff = ctx.fourier_F(f), Fg = ctx.fourier_F(g);
      Rat bracket(0);
      for (const auto& [lam, fv] : Ff.values) {
        auto it = Fg.values.find(lam);
        if (it == Fg.values.end()) continue;
        bracket += fv * it->second * ctx.record(lam).rel_norm;
      }
      add_line(r,
               "Plancherel at f=x^phi" + weight_str(lams[a]) + " g=x^phi" + weight_str(lams[b]),
               bracket == ctx.alg_inner(f, g));
    }
  return r;
}

RunReport run_symmetric_suite(const RunConfig& cfg) {
  RunReport r;
  r.suite = "symmetric";
  WilsonContext ctx(cfg.params);
  int n = cfg.params.n;
  Params P = cfg.params;
  Params S = P.sigma();
  for (const auto& lam : symmetric_check_weights(n)) {
    ctx.validate_genericity(abs_sum(lam));
    SparsePoly ep(n);
    bool routes_ok = true;
    std::string detail;
    try {
      ep = ctx.symmetric_Eplus(lam);  // throws if the two routes disagree
    } catch (const InternalError& e) {
      routes_ok = false;
      detail = e.what();
    }
    add_line(r, "two routes agree at lambda=" + weight_str(lam), routes_ok, detail);
    if (!routes_ok) continue;
    add_line(r, "E+(x0) = 1 at lambda=" + weight_str(lam),
             ep.eval(x_point(Weight(n, 0), P)) == Rat(1));
    bool invariant = true;
    for (int i = 1; i <= n; ++i) invariant = invariant && apply_reflection(i, ep) == ep;
    add_line(r, "E+ is W0-invariant at lambda=" + weight_str(lam), invariant);
    // Constant-sum lemma transported to sigma parameters.
    Rat ksum(0);
    for (const auto& mu : w0_orbit(lam)) {
      auto g = gamma_point(mu, P);
      for (auto& v : g) v = -v;
      ksum += c_plus(g, S);
    }
    auto g0 = gamma0(P);
    for (auto& v : g0) v = -v;
    add_line(r, "K-sum constant at lambda=" + weight_str(lam), ksum == c_plus(g0, S));
    SparsePoly Lep = apply_L_sym(ep, P);
    add_line(r, "L E+ = eigenvalue E+ at lambda=" + weight_str(lam),
             Lep == L_eigenvalue(lam, P) * ep);
    add_line(r, "symmetric norm bridge at lambda=" + weight_str(lam),
             ctx.alg_inner(ep, ep) * ctx.relative_norm_plus(lam) == Rat(1));
  }
  return r;
}

double imag_residual(Cplx v) { return std::abs(v.imag()) / (std::abs(v) + 1.0); }

RunReport run_quad_constant(const RunConfig& cfg) {
  RunReport r;
  r.suite = "quadrature-constant";
  SparsePoly one = SparsePoly::constant(cfg.params.n, rat(1));
  auto qr = quad_inner(one, one, WeightKind::Plus, cfg.quad, cfg.params);
  double closed = gustafson_constant(cfg.params);
  double rel = std::abs(qr.value.real() - closed) / std::abs(closed);
  std::ostringstream os;
  os << "quadrature " << qr.value.real() << " vs closed form " << closed
     << ", rel err " << rel;
  add_line(r, "<1,1>+ matches closed form (1e-4)", rel <= 1e-4 * cfg.tol_scale, os.str());
  add_line(r, "imaginary residual small", imag_residual(qr.value) <= 1e-8);
  add_line(r, "node doubling self-consistent", qr.converged,
           "estimate " + std::to_string(qr.error_estimate));
  return r;
}

RunReport run_quad_orthogonality(const RunConfig& cfg) {
  RunReport r;
  r.suite = "quadrature-orthogonality";
  WilsonContext ctx(cfg.params);
  ctx.validate_genericity(2);
  QuadratureGrid grid(cfg.quad, cfg.params);
  auto lams = weights_up_to(cfg.params.n, 2);
  std::vector<double> diag(lams.size());
  for (std::size_t a = 0; a < lams.size(); ++a) {
    Cplx v = grid.inner(ctx.record(lams[a]).E, ctx.record(lams[a]).E, WeightKind::Full);
    diag[a] = std::abs(v);
    std::ostringstream os;
    os << "value " << v.real() << ", imag residual " << imag_residual(v);
    add_line(r, "gram diag " + weight_str(lams[a]), imag_residual(v) <= 1e-8, os.str());
  }
  double max_ratio = 0.0;
  for (std::size_t a = 0; a < lams.size(); ++a)
    for (std::size_t b = a + 1; b < lams.size(); ++b) {
      Cplx off = grid.inner(ctx.record(lams[a]).E, ctx.record(lams[b]).E, WeightKind::Full);
      double ratio = std::abs(off) / std::sqrt(diag[a] * diag[b]);
      max_ratio = std::max(max_ratio, ratio);
      std::ostringstream os;
      os << "value " << off.real() << ", off/diag " << ratio;
      add_line(r, "gram " + weight_str(lams[a]) + " x " + weight_str(lams[b]),
               ratio <= 1e-3 * cfg.tol_scale, os.str());
    }
  std::ostringstream os;
  os << "max off/diag ratio " << max_ratio;
  add_line(r, "Gram matrix diagonal (off/diag <= 1e-3)",
           max_ratio <= 1e-3 * cfg.tol_scale, os.str());
  return r;
}

RunReport run_quad_norms(const RunConfig& cfg) {
  RunReport r;
  r.suite = "quadrature-norms";
  WilsonContext ctx(cfg.params);
  ctx.validate_genericity(2);
  QuadratureGrid grid(cfg.quad, cfg.params);
  double c_full = constant_term_full(cfg.params);
  for (const auto& lam : weights_up_to(cfg.params.n, 2)) {
    Cplx v = grid.inner(ctx.record(lam).E, ctx.record(lam).E, WeightKind::Full);
    double predicted = c_full / ctx.record(lam).rel_norm.get_d();
    double rel = std::abs(v.real() - predicted) / std::abs(predicted);
    std::ostringstream os;
    os << v.real() << " vs " << predicted << ", rel err " << rel;
    add_line(r, "<E,E> matches <1,1>/nu at lambda=" + weight_str(lam),
             rel <= 1e-3 * cfg.tol_scale, os.str());
    add_line(r, "imaginary residual at lambda=" + weight_str(lam), imag_residual(v) <= 1e-8);
  }
  double cplus = gustafson_constant(cfg.params);
  for (const auto& lam : symmetric_check_weights(cfg.params.n)) {
    SparsePoly ep = ctx.symmetric_Eplus(lam);
    Cplx v = grid.inner(ep, ep, WeightKind::Plus);
    double predicted = cplus / ctx.relative_norm_plus(lam).get_d();
    double rel = std::abs(v.real() - predicted) / std::abs(predicted);
    std::ostringstream os;
    os << v.real() << " vs " << predicted << ", rel err " << rel;
    add_line(r, "<E+,E+>+ matches 1/N+ at lambda=" + weight_str(lam),
             rel <= 1e-3 * cfg.tol_scale, os.str());
  }
  return r;
}

RunReport run_quad_selfadjoint(const RunConfig& cfg) {
  RunReport r;
  r.suite = "quadrature-selfadjoint";
  int n = cfg.params.n;
  SparsePoly x1 = SparsePoly::variable(n, 0), x2 = SparsePoly::variable(n, 1);
  struct Case {
    int i;
    double tol;
    const char* name;
  };
  std::vector<Case> cases = {{1, 1e-4, "T1"}, {n, 1e-4, "Tn"}, {0, 1e-3, "T0 (contour shift)"},
                             {-1, 1e-10, "X1 (exactly symmetric)"}};
  for (const auto& cs : cases) {
    double res = numeric_selfadjointness(cs.i, x1, x2, cfg.quad, cfg.params);
    std::ostringstream os;
    os << "residual " << res;
    add_line(r, std::string("self-adjointness ") + cs.name,
             res <= cs.tol * cfg.tol_scale, os.str());
  }
  return r;
}

}  // namespace

std::vector<Weight> symmetric_check_weights(int n) {
  std::vector<Weight> out;
  Weight a(n, 0);
  a[0] = 1;
  out.push_back(a);  // (1,0,...)
  Weight b(n, 0);
  b[0] = b[1] = 1;
  out.push_back(b);  // (1,1,0,...)
  Weight c(n, 0);
  c[0] = 2;
  out.push_back(c);  // (2,0,...)
  return out;
}

RunReport run_verify_suite(const std::string& suite, const RunConfig& cfg, Exec exec) {
  if (suite == "relations") {
    WilsonContext ctx(cfg.params);
    ctx.validate_genericity(1);
    return report_from_suite(suite, run_suite(relation_suite(cfg.params), cfg.degree,
                                              cfg.params, exec));
  }
  if (suite == "gdaha")
    return report_from_suite(suite,
                             run_suite(gdaha_suite(cfg.params), cfg.degree, cfg.params, exec));
  if (suite == "eigen") return run_eigen_suite(cfg);
  if (suite == "duality") return run_duality_suite(cfg);
  if (suite == "evaluation") return run_evaluation_suite(cfg);
  if (suite == "norms") return run_norms_suite(cfg);
  if (suite == "fourier") return run_fourier_suite(cfg);
  if (suite == "symmetric") return run_symmetric_suite(cfg);
  throw ConfigError("unknown verify suite: " + suite);
}

RunReport run_quadrature_suite(const std::string& suite, const RunConfig& cfg) {
  cfg.require_numeric();
  if (cfg.params.n != 2) throw ConfigError("quadrature suites support n = 2 only");
  if (suite == "constant") return run_quad_constant(cfg);
  if (suite == "orthogonality") return run_quad_orthogonality(cfg);
  if (suite == "norms") return run_quad_norms(cfg);
  if (suite == "selfadjoint") return run_quad_selfadjoint(cfg);
  throw ConfigError("unknown quadrature suite: " + suite);
}

namespace {

json params_json(const Params& P) {
  json j;
  j["n"] = P.n;
  j["t0"] = rat_str(P.t0);
  j["u0"] = rat_str(P.u0);
  j["t"] = rat_str(P.t);
  j["tn"] = rat_str(P.tn);
  j["un"] = rat_str(P.un);
  return j;
}

json rat_vec_json(const std::vector<Rat>& v) {
  json j = json::array();
  for (const auto& q : v) j.push_back(rat_str(q));
  return j;
}

}  // namespace

std::string report_to_json(const RunReport& report, const RunConfig& cfg) {
  json j;
  j["suite"] = report.suite;
  j["params"] = params_json(cfg.params);
  j["ok"] = report.ok();
  json checks = json::array();
  for (const auto& line : report.lines) {
    json c;
    c["name"] = line.name;
    c["ok"] = line.ok;
    if (!line.detail.empty()) c["detail"] = line.detail;
    checks.push_back(c);
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

std::string compute_record_json(const Weight& lam, const RunConfig& cfg) {
  WilsonContext ctx(cfg.params);
  const auto& rec = ctx.record(lam);
  // Cross-check the two evaluation routes before emitting.
  if (ctx.evaluation_value(lam) != rec.eval_at_minus_x0)
    throw InternalError("evaluation product formula disagrees with direct evaluation");
  json j;
  j["lambda"] = rec.lambda;
  j["gamma"] = rat_vec_json(rec.gamma);
  j["eval"] = rat_str(rec.eval_at_minus_x0);
  j["rel_norm"] = rat_str(rec.rel_norm);
  j["poly"] = json::parse(poly_to_json(rec.p));
  j["E"] = json::parse(poly_to_json(rec.E));
  return j.dump(2) + "\n";
}

std::string compute_symmetric_json(const Weight& lam, const RunConfig& cfg) {
  WilsonContext ctx(cfg.params);
  SparsePoly ep = ctx.symmetric_Eplus(lam);
  json j;
  j["lambda"] = lam;
  j["Eplus"] = json::parse(poly_to_json(ep));
  j["eigenvalue"] = rat_str(L_eigenvalue(lam, cfg.params));
  j["rel_norm_plus"] = rat_str(ctx.relative_norm_plus(lam));
  return j.dump(2) + "\n";
}

std::string spectrum_json(int range, const RunConfig& cfg) {
  json points = json::array();
  for (const auto& lam : weights_up_to(cfg.params.n, range)) {
    json p;
    p["lambda"] = lam;
    p["gamma"] = rat_vec_json(gamma_point(lam, cfg.params));
    p["x"] = rat_vec_json(x_point(lam, cfg.params));
    points.push_back(p);
  }
  json j;
  j["params"] = params_json(cfg.params);
  j["points"] = points;
  return j.dump(2) + "\n";
}

}  // namespace wpoly
