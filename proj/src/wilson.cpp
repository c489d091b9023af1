#include "wpoly/wilson.hpp"

#include <algorithm>

namespace wpoly {

std::vector<Rat> gamma0(const Params& P) {
  std::vector<Rat> g(P.n);
  for (int i = 1; i <= P.n; ++i) g[i - 1] = P.t0 + P.tn + (P.n - i) * P.t;
  return g;
}

std::vector<Rat> gamma_point(const Weight& lam, const Params& P) {
  return dot_apply(u_lambda_word(lam), gamma0(P));
}

std::vector<Rat> x_point(const Weight& lam, const Params& P) {
  return gamma_point(lam, P.sigma());
}

WilsonContext::WilsonContext(Params P) : P_(std::move(P)) {
  auto x0 = x_point(Weight(P_.n, 0), P_);
  minus_x0_.resize(x0.size());
  for (std::size_t i = 0; i < x0.size(); ++i) minus_x0_[i] = -x0[i];
}

WilsonContext& WilsonContext::sigma_context() {
  std::lock_guard<std::mutex> lock(mu_);
  if (!sigma_) sigma_ = std::make_unique<WilsonContext>(P_.sigma());
  return *sigma_;
}

const WilsonRecord& WilsonContext::record(const Weight& lam) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(lam);
  if (it == cache_.end()) it = cache_.emplace(lam, build_record(lam)).first;
  return it->second;
}

WilsonRecord WilsonContext::build_record(const Weight& lam) {
  int n = P_.n;
  if (static_cast<int>(lam.size()) != n) throw DimensionError("weight rank mismatch");
  ReducedWord word = u_lambda_word(lam);
  SparsePoly p = SparsePoly::constant(n, rat(1));
  std::vector<Rat> gamma = gamma0(P_);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    p = apply_S_eigen(*it, p, gamma, P_);
    apply_simple_dot(*it, gamma);
    if (p.is_zero())
      throw DegenerateParameterError("intertwiner chain vanished at " + rat_vec_str(gamma) +
                                     "; choose different parameters");
  }
  Rat eval = p.eval(minus_x0_);
  if (is_zero(eval))
    throw DegenerateParameterError("p_lambda(-x0) = 0 at lambda with " + P_.str() +
                                   "; choose different parameters");
  SparsePoly E = p * (Rat(1) / eval);
  return WilsonRecord{lam, std::move(p), std::move(gamma), std::move(eval), std::move(E),
                      relative_norm(lam)};
}

std::map<Weight, Rat> WilsonContext::expand_in_E(const SparsePoly& f) {
  int n = P_.n;
  if (f.nvars() != n) throw DimensionError("polynomial rank mismatch");
  std::map<Weight, Rat> out;
  if (f.is_zero()) return out;
  int level = 0;
  for (const auto& [key, c] : f.terms())
    level = std::max(level, filtration_level(SparsePoly::unpack(key, n)));
  auto lams = weights_up_to(n, level);
  // Square exact system in the monomial basis of the filtration level.
  std::vector<SparsePoly::Key> rows;
  for (const auto& lam : lams) rows.push_back(SparsePoly::pack(phi_map(lam)));
  std::sort(rows.begin(), rows.end());
  std::size_t dim = lams.size();
  std::vector<std::vector<Rat>> A(dim, std::vector<Rat>(dim + 1, Rat(0)));
  for (std::size_t col = 0; col < dim; ++col) {
    const auto& E = record(lams[col]).E;
    for (const auto& [key, c] : E.terms()) {
      auto it = std::lower_bound(rows.begin(), rows.end(), key);
      if (it == rows.end() || *it != key)
        throw InternalError("E escaped its filtration level");
      A[it - rows.begin()][col] = c;
    }
  }
  for (const auto& [key, c] : f.terms()) {
    auto it = std::lower_bound(rows.begin(), rows.end(), key);
    A[it - rows.begin()][dim] = c;
  }
  // Exact Gaussian elimination with partial pivot-by-first-nonzero.
  std::vector<std::size_t> where(dim, SIZE_MAX);
  std::size_t row = 0;
  for (std::size_t col = 0; col < dim && row < dim; ++col) {
    std::size_t piv = row;
    while (piv < dim && is_zero(A[piv][col])) ++piv;
    if (piv == dim) continue;
    std::swap(A[piv], A[row]);
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == row || is_zero(A[r][col])) continue;
      Rat factor = A[r][col] / A[row][col];
      for (std::size_t cc = col; cc <= dim; ++cc) A[r][cc] -= factor * A[row][cc];
    }
    where[col] = row++;
  }
  for (std::size_t col = 0; col < dim; ++col)
    if (where[col] == SIZE_MAX)
      throw DegenerateParameterError("E-basis system singular; parameters not generic");
  for (std::size_t col = 0; col < dim; ++col) {
    Rat val = A[where[col]][dim] / A[where[col]][col];
    if (!is_zero(val)) out[lams[col]] = val;
  }
  return out;
}

Rat WilsonContext::evaluation_value(const Weight& lam) {
  ReducedWord word = u_lambda_word(lam);
  std::reverse(word.begin(), word.end());
  Rat acc(1);
  std::vector<Rat> mg = gamma0(P_);
  for (auto& g : mg) g = -g;
  for (const auto& alpha : inversion_set(word, P_.n)) acc *= K_alpha(alpha, mg, P_);
  return acc;
}

Rat WilsonContext::relative_norm(const Weight& lam) {
  // Telescoped over the intertwiner chain: the c-ratios live at the spectral
  // point -gamma_lambda.
  auto xi = gamma_point(lam, P_);
  for (auto& v : xi) v = -v;
  Params S = P_.sigma();
  Rat acc(1);
  for (const auto& alpha : inversion_set(u_lambda_word(lam), P_.n))
    acc *= c_alpha(negate_root(alpha), xi, S) / c_alpha(alpha, xi, S);
  return acc;
}

Rat WilsonContext::alg_inner(const SparsePoly& f, const SparsePoly& g, const Rat& c) {
  auto fh = expand_in_E(f), gh = expand_in_E(g);
  Rat acc(0);
  for (const auto& [lam, fc] : fh) {
    auto it = gh.find(lam);
    if (it == gh.end()) continue;
    acc += fc * it->second * c / record(lam).rel_norm;
  }
  return acc;
}

SparsePoly WilsonContext::symmetric_Eplus(const Weight& lam) {
  if (!is_dominant(lam)) throw PreconditionError("symmetric polynomial needs a dominant weight");
  int n = P_.n;
  Params S = P_.sigma();
  auto csig = [&](const Weight& mu) {
    auto g = gamma_point(mu, P_);
    for (auto& v : g) v = -v;
    return c_plus(g, S);
  };
  Rat denom = csig(Weight(n, 0));
  SparsePoly routeA(n);
  for (const auto& mu : w0_orbit(lam)) routeA += csig(mu) * record(mu).E;
  routeA *= Rat(1) / denom;

  SparsePoly routeB = symmetrize_Cplus(record(lam).E, P_);
  Rat scaleB = Rat(w0_order(n)) / c_plus(minus_x0_, P_);
  routeB *= scaleB;

  if (!(routeA == routeB))
    throw InternalError("symmetric polynomial routes disagree at " + P_.str());
  return routeA;
}

Rat WilsonContext::relative_norm_plus(const Weight& lam) {
  if (!is_dominant(lam)) throw PreconditionError("symmetric norm needs a dominant weight");
  Params S = P_.sigma();
  auto gamma = gamma_point(lam, P_);
  std::vector<Rat> mg(gamma.size()), mg0(gamma.size());
  auto g0 = gamma0(P_);
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    mg[i] = -gamma[i];
    mg0[i] = -g0[i];
  }
  // N+ <1,1>+ = nu_lambda / d_{lambda,lambda}: the tau-set product evaluated
  // at -gamma_lambda reproduces nu_lambda, and the c_plus ratio divides.
  Rat acc = c_plus(mg0, S) / c_plus(mg, S);
  for (const auto& alpha : tau_inversion_set(lam))
    acc *= c_alpha(negate_root(alpha), mg, S) / c_alpha(alpha, mg, S);
  return acc;
}

bool WilsonContext::duality_check(const Weight& lam, const Weight& mu) {
  auto& sig = sigma_context();
  std::vector<Rat> mx = x_point(mu, P_);
  for (auto& v : mx) v = -v;
  std::vector<Rat> mg = gamma_point(lam, P_);
  for (auto& v : mg) v = -v;
  return record(lam).E.eval(mx) == sig.record(mu).E.eval(mg);
}

bool WilsonContext::symmetric_duality_check(const Weight& lam, const Weight& mu) {
  auto& sig = sigma_context();
  return symmetric_Eplus(lam).eval(x_point(mu, P_)) ==
         sig.symmetric_Eplus(mu).eval(gamma_point(lam, P_));
}

bool WilsonContext::verify_spectral_action(const Weight& lam, int i) {
  const auto& rec = record(lam);
  SparsePoly lhs = i == 0 ? apply_Un(rec.E, P_) : apply_generator(Gen::T, i, rec.E, P_);
  std::vector<Rat> mg(rec.gamma.size());
  for (std::size_t k = 0; k < mg.size(); ++k) mg[k] = -rec.gamma[k];
  Params S = P_.sigma();
  Rat c = c_coeff(i, mg, S), d = d_coeff(i, mg, S);
  const auto& flip = record(dot_simple_weight(i, lam));
  SparsePoly rhs = c * flip.E - d * rec.E;
  return lhs == rhs;
}

FiniteSpectralFunction WilsonContext::fourier_F(const SparsePoly& f, const Rat& c) {
  FiniteSpectralFunction out;
  for (const auto& [lam, coeff] : expand_in_E(f))
    out.values[lam] = coeff * c / record(lam).rel_norm;
  return out;
}

SparsePoly WilsonContext::fourier_G(const FiniteSpectralFunction& g, const Rat& c) {
  SparsePoly acc(P_.n);
  for (const auto& [lam, val] : g.values)
    acc += val * record(lam).rel_norm / c * record(lam).E;
  return acc;
}

void WilsonContext::validate_genericity(int max_level) {
  std::map<std::vector<Rat>, Weight> seen;
  for (const auto& lam : weights_up_to(P_.n, max_level)) {
    auto gamma = gamma_point(lam, P_);
    auto [it, inserted] = seen.emplace(gamma, lam);
    if (!inserted)
      throw DegenerateParameterError(
          "spectral points collide at " + rat_vec_str(gamma) + " with " + P_.str() +
          "; choose different parameters");
    record(lam);  // throws on vanishing evaluation or intertwiner degeneration
  }
}

}  // namespace wpoly
