#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "wpoly/operators.hpp"
#include "wpoly/params.hpp"
#include "wpoly/weyl.hpp"

namespace wpoly {

// Joint eigenvalue data attached to a weight.
struct WilsonRecord {
  Weight lambda;
  SparsePoly p;              // unnormalized, built by the intertwiner chain
  std::vector<Rat> gamma;    // spectral point
  Rat eval_at_minus_x0;      // p(-x_0), nonzero under genericity
  SparsePoly E;              // p / eval_at_minus_x0
  Rat rel_norm;              // nu_lambda, the rational part of the quadratic norm
};

// Finitely supported function on the spectrum, stored by weight label
// (lambda stands for the spectral point -gamma_lambda).
struct FiniteSpectralFunction {
  std::map<Weight, Rat> values;
  bool operator==(const FiniteSpectralFunction&) const = default;
};

std::vector<Rat> gamma0(const Params& P);               // (t0+tn+(n-i)t)_i
std::vector<Rat> gamma_point(const Weight& lam, const Params& P);
std::vector<Rat> x_point(const Weight& lam, const Params& P);  // gamma at sigma

// Construction, caches and derived formulas for one parameter set. All
// methods are exact; record construction is memoized behind a mutex with
// deterministic contents.
class WilsonContext {
 public:
  explicit WilsonContext(Params P);

  const Params& params() const { return P_; }
  WilsonContext& sigma_context();  // lazily built companion at t^sigma

  const WilsonRecord& record(const Weight& lam);

  // Exact coefficients of f in the E-basis of its filtration level.
  std::map<Weight, Rat> expand_in_E(const SparsePoly& f);

  // Product over the inversion set of the reversed word; must match
  // record(lam).eval_at_minus_x0.
  Rat evaluation_value(const Weight& lam);

  // nu_lambda: product over the inversion set of u_lambda's word.
  Rat relative_norm(const Weight& lam);

  // sum_lambda fhat ghat c / nu_lambda.
  Rat alg_inner(const SparsePoly& f, const SparsePoly& g, const Rat& c = Rat(1));

  // Both construction routes (orbit sum of E's, symmetrizer applied to one
  // E) are computed and must agree exactly.
  SparsePoly symmetric_Eplus(const Weight& dominant_lam);

  // Rational part of the symmetric quadratic norm.
  Rat relative_norm_plus(const Weight& dominant_lam);

  bool duality_check(const Weight& lam, const Weight& mu);
  bool symmetric_duality_check(const Weight& lam, const Weight& mu);

  // Difference-reflection action moved to the spectral side:
  // T~_i E(.,gamma_lam) = c_i^sigma(-gamma) E(.,gamma') - d_i^sigma(-gamma) E(.,gamma).
  bool verify_spectral_action(const Weight& lam, int i);

  FiniteSpectralFunction fourier_F(const SparsePoly& f, const Rat& c = Rat(1));
  SparsePoly fourier_G(const FiniteSpectralFunction& g, const Rat& c = Rat(1));

  // Pairwise-distinct spectral points, nonzero evaluations and denominators
  // over the working range; throws DegenerateParameterError naming the
  // offending pair.
  void validate_genericity(int max_level);

 private:
  WilsonRecord build_record(const Weight& lam);

  Params P_;
  std::vector<Rat> minus_x0_;
  std::map<Weight, WilsonRecord> cache_;
  std::unique_ptr<WilsonContext> sigma_;
  std::mutex mu_;
};

}  // namespace wpoly
