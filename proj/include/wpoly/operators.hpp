#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wpoly/params.hpp"
#include "wpoly/poly.hpp"
#include "wpoly/weyl.hpp"

namespace wpoly {

// ---------------------------------------------------------------------------
// Coefficient functions.

// c_alpha(x; t): long roots (t(a)+t(a^vee)+a^vee(x))(t(a)-t(a^vee)+a^vee(x))/a(x),
// short roots (t+a(x))/a(x). Throws PoleError when a(x)=0.
Rat c_alpha(const AffineRoot& a, std::span<const Rat> x, const Params& P);
// d_i / c_i = c_{a_i} for the simple roots, as rational values at x.
Rat d_coeff(int i, std::span<const Rat> x, const Params& P);
Rat c_coeff(int i, std::span<const Rat> x, const Params& P);
// Quadratic coefficient of the intertwiners, S_i^2 = q_i(Y).
Rat q_coeff(int i, std::span<const Rat> x, const Params& P);
SparsePoly q_poly(int i, const Params& P);  // q_i as a polynomial in x
// K_alpha(x) = 2 alpha(-x) c_alpha(x; t^sigma).
Rat K_alpha(const AffineRoot& a, std::span<const Rat> x, const Params& P);
// c_plus and the antisymmetric polynomial m, explicit products.
Rat c_plus(std::span<const Rat> x, const Params& P);
SparsePoly m_antisym(int n);
SparsePoly c_plus_numer(const Params& P);  // c_plus * m, a polynomial

// ---------------------------------------------------------------------------
// Generator actions on polynomials (the faithful representation).

enum class Gen { T, Tvee, X };

// s_i acting on polynomials: s_0 substitutes x_1 -> 1 - x_1, middle letters
// swap adjacent variables, s_n negates the last one.
SparsePoly apply_reflection(int i, const SparsePoly& p);

// T_i p = chi_i s_i p + N_i * (s_i p - p)/a_i with the division exact;
// T_0^vee = X_1 - 1/2 - T_0, T_n^vee = -X_n - T_n; X_i multiplies by x_i.
// Generator indices: i in [0,n] for T/Tvee, i in [1,n] for X.
SparsePoly apply_generator(Gen kind, int i, const SparsePoly& p, const Params& P);

// T_{i_1}...T_{i_r} p, rightmost letter applied first.
SparsePoly apply_word_T(const ReducedWord& word, SparsePoly p, const Params& P);

// Y_i = Xi_{i,n} + Xi_{0,i} + t sum_{j>i} T_{i,j}.
SparsePoly apply_Y(int i, const SparsePoly& p, const Params& P);
// U_n = Xi_{1,n}^vee = T_1...T_{n-1} T_n^vee T_{n-1}...T_1.
SparsePoly apply_Un(const SparsePoly& p, const Params& P);
// a_i(Y) p (a_0(Y) = 1 - 2Y_1, middle Y_i - Y_{i+1}, a_n(Y) = 2Y_n).
SparsePoly apply_a_of_Y(int i, const SparsePoly& p, const Params& P);
// Intertwiner S_i = [T~_i, a_i(Y)] with T~_0 = U_n, T~_i = T_i; the full
// commutator.
SparsePoly apply_S(int i, const SparsePoly& p, const Params& P);
// Same, for p a known Y-eigenfunction with eigenvalue gamma:
// a_i(gamma) T~_i p - a_i(Y)(T~_i p).
SparsePoly apply_S_eigen(int i, const SparsePoly& p, std::span<const Rat> gamma,
                         const Params& P);

// C+ p = (sum_{w in W0} (-1)^{l(w)} w(N p)) / (|W0| m): pole-free symmetrizer.
SparsePoly symmetrize_Cplus(const SparsePoly& p, const Params& P);

// Second order difference operator on W0-invariants; the result is recovered
// by exact interpolation and the residual is grid-certified.
SparsePoly apply_L_sym(const SparsePoly& p, const Params& P);
// A_i(x) coefficient of L, exact evaluation.
Rat L_coeff_A(int i, std::span<const Rat> x, const Params& P);
// Eigenvalue sum lambda_i (lambda_i + a+b+c+d-1 + 2(n-i)t) for dominant lambda.
Rat L_eigenvalue(const Weight& lam, const Params& P);

// ---------------------------------------------------------------------------
// Composable operators.

class Op {
 public:
  static Op identity();
  static Op scalar(const Rat& c);
  static Op gen(Gen kind, int index);
  // compose({A,B,C}) applies C first: (A.B.C)(p) = A(B(C(p))).
  static Op compose(std::vector<Op> factors);
  static Op lincomb(std::vector<std::pair<Rat, Op>> terms);
  static Op mul(SparsePoly q);  // multiplication operator

  SparsePoly apply(const SparsePoly& p, const Params& P) const;
  friend Op operator*(const Op& a, const Op& b) { return Op::compose({a, b}); }
  friend Op operator+(const Op& a, const Op& b) {
    return Op::lincomb({{Rat(1), a}, {Rat(1), b}});
  }
  friend Op operator-(const Op& a, const Op& b) {
    return Op::lincomb({{Rat(1), a}, {Rat(-1), b}});
  }

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

Op op_T(int i);
Op op_Tvee(int i);
Op op_X(int i);
Op op_word_T(const ReducedWord& word);
Op op_Tij(int i, int j);          // T_i ... T_{j-1} ... T_i, 1 <= i < j <= n
Op op_Xi_in(int i, int n);        // T_i...T_{n-1} T_n T_{n-1}...T_i
Op op_Xi_in_vee(int i, int n);
Op op_Xi_0i(int i);               // T_{i-1}...T_1 T_0 T_1...T_{i-1}
Op op_Xi_0i_vee(int i);
Op op_Y(int i, const Params& P);
Op op_Un(const Params& P);
Op op_a_of_Y(int i, const Params& P);
Op op_S(int i, const Params& P);
Op op_poly_of_Y(const SparsePoly& q, const Params& P);
Op op_commutator(const Op& a, const Op& b);

// ---------------------------------------------------------------------------
// Exact identity verification.

enum class Exec { Serial, Parallel };

struct VerifyResult {
  std::string name;
  bool ok = false;
  // First failing monomial exponent vector, when any.
  std::optional<std::vector<int>> counterexample;
};

// All monomial exponent vectors of total degree <= degree, in lexicographic
// order: the probe basis of the verifier.
std::vector<std::vector<int>> verify_basis(int n, int degree);

// Applies both sides to every monomial of total degree <= degree and compares
// exactly. Parallel execution fans monomials out across threads; the reported
// counterexample is the first failure in monomial order either way.
VerifyResult verify_operator_identity(const Op& lhs, const Op& rhs, int degree,
                                      const Params& P, Exec exec = Exec::Parallel,
                                      std::string name = "");

}  // namespace wpoly
