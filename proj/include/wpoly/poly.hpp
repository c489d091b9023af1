#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wpoly/errors.hpp"
#include "wpoly/rational.hpp"

namespace wpoly {

// Sparse polynomial over Q in a fixed number of variables. Exponent vectors
// are packed eight bits per variable with variable 0 in the highest used
// byte, so the natural integer order on keys is lexicographic order on
// exponents; the term map therefore iterates deterministically.
class SparsePoly {
 public:
  using Key = std::uint64_t;
  static constexpr int kMaxVars = 8;
  static constexpr int kMaxExp = 255;

  explicit SparsePoly(int nvars);

  static SparsePoly constant(int nvars, const Rat& c);
  static SparsePoly monomial(int nvars, std::span<const int> exps, const Rat& c);
  static SparsePoly variable(int nvars, int var);  // x_var, 0-based

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  int total_degree() const;    // -1 for the zero polynomial
  int degree_in(int var) const;
  const std::map<Key, Rat>& terms() const { return terms_; }

  Rat coeff(std::span<const int> exps) const;
  Rat coeff_key(Key k) const;
  void set_coeff(std::span<const int> exps, const Rat& c);
  void add_term(Key k, const Rat& c);  // accumulate, dropping zeros

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Rat& c);
  SparsePoly operator-() const;
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Rat& c) { return a *= c; }
  friend SparsePoly operator*(const Rat& c, SparsePoly a) { return a *= c; }
  bool operator==(const SparsePoly& o) const;

  Rat eval(std::span<const Rat> point) const;
  // p(x + delta), one rational shift per variable.
  SparsePoly shifted(std::span<const Rat> delta) const;

  static Key pack(std::span<const int> exps);
  static std::vector<int> unpack(Key k, int nvars);
  std::string str() const;  // human-readable, for diagnostics

 private:
  void check_same(const SparsePoly& o) const;
  int nvars_;
  std::map<Key, Rat> terms_;
};

// ell(x) = sum_i coeffs[i] x_i + constant. Must not be identically zero.
struct LinearForm {
  std::vector<Rat> coeffs;
  Rat constant;

  int nvars() const { return static_cast<int>(coeffs.size()); }
  Rat eval(std::span<const Rat> point) const;
  SparsePoly to_poly() const;
  bool is_identically_zero() const;

  static LinearForm zero(int nvars);
};

// Exact non-divisibility report; carries the offending remainder.
struct DivisibilityError : Error {
  DivisibilityError(std::string msg, SparsePoly rem)
      : Error(std::move(msg)), remainder(std::move(rem)) {}
  SparsePoly remainder;
};

// p composed with the affine map x_i -> map[i](x). Degree is preserved when
// the map is invertible affine.
SparsePoly affine_substitute(const SparsePoly& p, std::span<const LinearForm> map);

// Exact division: returns q with q * ell == p; throws DivisibilityError with
// the remainder witness otherwise.
SparsePoly divide_linear(const SparsePoly& p, const LinearForm& ell);

// Evaluable rational expression; implementations throw PoleError when a
// denominator vanishes at the requested point.
using RationalFn = std::function<Rat(std::span<const Rat>)>;

// Deterministic pole-avoiding offsets 1/3, 1/5, 1/7, ... (reciprocal odd
// primes), so x_i, x_i +- x_j and 2x_i +- 1 never vanish on the grid.
std::vector<Rat> default_grid_offsets(int nvars);

// Evaluates expr on the tensor grid {k + offsets[i] : k = 0..degree_bound-1}
// per variable and returns true iff every value is exactly zero. When the
// cleared-denominator polynomial of expr has per-variable degree strictly
// below degree_bound, a true result certifies it is identically zero.
bool grid_verify_zero(const RationalFn& expr, int nvars, int degree_bound,
                      std::span<const Rat> offsets);

// Exact tensor-grid interpolation: recovers the polynomial of per-variable
// degree <= degree_per_var agreeing with values on the offset grid.
SparsePoly interpolate_on_grid(const RationalFn& values, int nvars,
                               int degree_per_var, std::span<const Rat> offsets);

// JSON term list [{"exp":[...],"num":"...","den":"..."}], sorted
// lexicographically by exponent. Emitted as a string to keep the byte format
// pinned down in one place.
std::string poly_to_json(const SparsePoly& p);

}  // namespace wpoly
