#pragma once

#include <compare>
#include <span>
#include <vector>

#include "wpoly/poly.hpp"
#include "wpoly/rational.hpp"

namespace wpoly {

// Lattice weights, entries lambda_1..lambda_n.
using Weight = std::vector<int>;
// Word in the simple reflections s_0..s_n; the rightmost letter acts first.
using ReducedWord = std::vector<int>;

bool is_dominant(const Weight& lam);
Weight dominant_rep(const Weight& lam);  // the unique dominant orbit member
int abs_sum(const Weight& lam);

// phi: Z -> Z_{>=0}, m -> 2m (m >= 0), -2m-1 (m < 0); applied componentwise
// it labels the monomial basis by weights.
int phi_int(int m);
int phi_inv_int(int e);
std::vector<int> phi_map(const Weight& lam);
Weight phi_inv(std::span<const int> exps);
// Smallest m with the exponent vector inside the span of {phi(mu): |mu|<=m}.
int filtration_level(std::span<const int> exps);

// Affine root v + c*delta; v is +-e_i +- e_j (short) or +-2e_i (long).
struct AffineRoot {
  std::vector<int> v;
  int c = 0;
  auto operator<=>(const AffineRoot& o) const = default;
};

enum class RootOrbit { A0, Mid, An };

bool root_is_long(const AffineRoot& a);   // throws ShapeError if malformed
bool root_is_positive(const AffineRoot& a);
RootOrbit classify_orbit(const AffineRoot& a);
AffineRoot simple_root(int i, int n);
AffineRoot negate_root(const AffineRoot& a);
// s_i acting on affine roots.
AffineRoot reflect_root(int i, const AffineRoot& a);
Rat root_eval(const AffineRoot& a, std::span<const Rat> x);  // <v,x> + c

// Linear action of s_i on points (s_0 is the affine reflection x_1 -> 1-x_1).
void apply_simple_point(int i, std::vector<Rat>& x);
// Dot action: s_0 . x = (-x_1 - 1, x_2, ...), s_i . x = s_i x otherwise.
void apply_simple_dot(int i, std::vector<Rat>& x);
std::vector<Rat> dot_apply(const ReducedWord& word, std::vector<Rat> x);
Weight dot_apply_weight(const ReducedWord& word, Weight lam);
Weight dot_simple_weight(int i, Weight lam);

// Shortest word w (breadth-first over the dot action, letters expanded in
// increasing index so ties resolve deterministically) with w . 0 = lambda.
ReducedWord u_lambda_word(const Weight& lam);
int u_lambda_length(const Weight& lam);

// {a_{i1}, s_{i1} a_{i2}, ...} for word = [i1,...,ir]; equals the positive
// roots sent negative by w^{-1}, where w = s_{i1}...s_{ir}. Throws
// ReducednessError if a repeated or non-positive root shows up.
std::vector<AffineRoot> inversion_set(const ReducedWord& word, int n);

// Positive affine roots sent negative by tau(lambda)^{-1}, enumerated by a
// direct scan; lambda must be dominant.
std::vector<AffineRoot> tau_inversion_set(const Weight& lam);

// Orbit of lambda under the finite Weyl group (signed permutations), sorted.
std::vector<Weight> w0_orbit(const Weight& lam);
long w0_order(int n);  // 2^n n!

// All weights with abs_sum <= level, sorted; the index set of P_(level).
std::vector<Weight> weights_up_to(int n, int level);

}  // namespace wpoly
