#include <doctest.h>

#include <random>

#include "wpoly/poly.hpp"

using namespace wpoly;

namespace {

SparsePoly x(int n, int v) { return SparsePoly::variable(n, v); }
SparsePoly c(int n, long num, long den = 1) { return SparsePoly::constant(n, rat(num, den)); }

// Deterministic random polynomials for the property checks.
SparsePoly random_poly(std::mt19937& rng, int n, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> deg(0, max_deg), coef(-9, 9), terms(1, max_terms);
  SparsePoly p(n);
  int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    std::vector<int> e(n);
    for (int v = 0; v < n; ++v) e[v] = deg(rng);
    int num = coef(rng);
    if (num) p += SparsePoly::monomial(n, e, rat(num, 1 + std::abs(coef(rng))));
  }
  return p;
}

LinearForm random_form(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> coef(-4, 4);
  for (;;) {
    LinearForm f = LinearForm::zero(n);
    for (int v = 0; v < n; ++v) f.coeffs[v] = rat(coef(rng));
    f.constant = rat(coef(rng));
    bool nonconst = false;
    for (const auto& cc : f.coeffs) nonconst = nonconst || !is_zero(cc);
    if (nonconst) return f;
  }
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  Rat q = parse_rat("6/4");
  CHECK(q.get_num() == 3);
  CHECK(q.get_den() == 2);
  CHECK(rat_str(q) == "3/2");
  CHECK(rat_str(parse_rat("-7")) == "-7");
  CHECK(parse_rat("-6/4") == rat(-3, 2));
  CHECK(parse_rat("-6/4").get_den() == 2);  // denominator stays positive
  CHECK_THROWS_AS(parse_rat("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_rat("a/b"), ConfigError);
  CHECK_THROWS_AS(parse_rat(""), ConfigError);
  CHECK_THROWS_AS(parse_rat("1.5"), ConfigError);
}

TEST_CASE("polynomial arithmetic basics") {
  int n = 2;
  CHECK((x(n, 0) + c(n, 1)) * (x(n, 0) - c(n, 1)) == x(n, 0) * x(n, 0) - c(n, 1));
  std::mt19937 rng(7);
  SparsePoly p = random_poly(rng, n, 3, 6);
  CHECK(p + SparsePoly(n) == p);
  SparsePoly xy = x(n, 0) * x(n, 1);
  std::vector<int> e{2, 2};
  CHECK(xy * xy == SparsePoly::monomial(n, e, rat(1)));
  CHECK_THROWS_AS(x(2, 0) + x(3, 0), DimensionError);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 2;
    SparsePoly a = random_poly(rng, n, 3, 5);
    SparsePoly b = random_poly(rng, n, 3, 5);
    SparsePoly d = random_poly(rng, n, 3, 5);
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("degree is additive on products") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    SparsePoly a = random_poly(rng, 2, 4, 4);
    SparsePoly b = random_poly(rng, 2, 4, 4);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).total_degree() == a.total_degree() + b.total_degree());
  }
}

TEST_CASE("affine substitution") {
  int n = 2;
  std::vector<LinearForm> s0map{LinearForm{{rat(-1), rat(0)}, rat(1)},
                                LinearForm{{rat(0), rat(1)}, rat(0)}};
  CHECK(affine_substitute(x(n, 0) * x(n, 0), s0map) ==
        c(n, 1) - c(n, 2) * x(n, 0) + x(n, 0) * x(n, 0));
  std::vector<LinearForm> swap{LinearForm{{rat(0), rat(1)}, rat(0)},
                               LinearForm{{rat(1), rat(0)}, rat(0)}};
  CHECK(affine_substitute(x(n, 0) * x(n, 1), swap) == x(n, 0) * x(n, 1));
  std::vector<LinearForm> negate2{LinearForm{{rat(1), rat(0)}, rat(0)},
                                  LinearForm{{rat(0), rat(-1)}, rat(0)}};
  SparsePoly x2cubed = x(n, 1) * x(n, 1) * x(n, 1);
  CHECK(affine_substitute(x2cubed, negate2) == -x2cubed);
}

TEST_CASE("reflection substitutions are involutions") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + trial % 2;
    SparsePoly p = random_poly(rng, n, 4, 6);
    // maps for s_0, a swap, and the sign flip
    std::vector<std::vector<LinearForm>> maps;
    {
      std::vector<LinearForm> m;
      for (int v = 0; v < n; ++v) {
        LinearForm f = LinearForm::zero(n);
        f.coeffs[v] = 1;
        m.push_back(f);
      }
      auto s0 = m;
      s0[0].coeffs[0] = -1;
      s0[0].constant = 1;
      maps.push_back(s0);
      auto sw = m;
      std::swap(sw[0], sw[1]);
      maps.push_back(sw);
      auto neg = m;
      neg[n - 1].coeffs[n - 1] = -1;
      maps.push_back(neg);
    }
    for (const auto& m : maps)
      CHECK(affine_substitute(affine_substitute(p, m), m) == p);
  }
}

TEST_CASE("divide_linear exact cases") {
  int n = 2;
  LinearForm diff{{rat(1), rat(-1)}, rat(0)};  // x1 - x2
  CHECK(divide_linear(x(n, 0) * x(n, 0) - x(n, 1) * x(n, 1), diff) == x(n, 0) + x(n, 1));
  CHECK(divide_linear(SparsePoly(n), diff) == SparsePoly(n));
  LinearForm a0{{rat(-2), rat(0)}, rat(1)};  // 1 - 2x1
  SparsePoly prod = a0.to_poly() * (x(n, 1) + c(n, 3));
  CHECK(divide_linear(prod, a0) == x(n, 1) + c(n, 3));
}

TEST_CASE("divide_linear reports the remainder witness") {
  int n = 2;
  LinearForm diff{{rat(1), rat(-1)}, rat(0)};
  try {
    divide_linear(x(n, 0), diff);
    FAIL("expected DivisibilityError");
  } catch (const DivisibilityError& e) {
    CHECK_FALSE(e.remainder.is_zero());
  }
}

TEST_CASE("divide_linear inverts multiplication") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 2;
    SparsePoly p = random_poly(rng, n, 3, 5);
    LinearForm ell = random_form(rng, n);
    CHECK(divide_linear(p * ell.to_poly(), ell) == p);
  }
}

TEST_CASE("grid_verify_zero certifies identities") {
  int n = 2;
  auto offsets = default_grid_offsets(n);
  RationalFn diff_of_squares = [&](std::span<const Rat> pt) {
    return Rat((pt[0] - pt[1]) * (pt[0] + pt[1]) - (pt[0] * pt[0] - pt[1] * pt[1]));
  };
  CHECK(grid_verify_zero(diff_of_squares, n, 3, offsets));
  RationalFn not_zero = [&](std::span<const Rat> pt) { return Rat(pt[0] - pt[1]); };
  CHECK_FALSE(grid_verify_zero(not_zero, n, 2, offsets));
}

TEST_CASE("grid_verify_zero is sound against expansion") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2;
    SparsePoly p = random_poly(rng, n, 3, 4);
    auto offsets = default_grid_offsets(n);
    RationalFn fn = [&](std::span<const Rat> pt) { return p.eval(pt); };
    CHECK(grid_verify_zero(fn, n, 4, offsets) == p.is_zero());
  }
}

TEST_CASE("grid configuration error on a denominator hit") {
  int n = 2;
  std::vector<Rat> offsets{rat(1), rat(2)};  // integer grid: x1 - 1 vanishes at k=0
  RationalFn fn = [&](std::span<const Rat> pt) {
    Rat den = pt[0] - 1;
    if (is_zero(den)) throw PoleError("den");
    return Rat(Rat(1) / den - Rat(1) / den);
  };
  CHECK_THROWS_AS(grid_verify_zero(fn, n, 2, offsets), GridConfigError);
}

TEST_CASE("tensor interpolation recovers polynomials") {
  std::mt19937 rng(314);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + trial % 2;
    SparsePoly p = random_poly(rng, n, 3, 6);
    auto offsets = default_grid_offsets(n);
    RationalFn fn = [&](std::span<const Rat> pt) { return p.eval(pt); };
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, p.degree_in(v));
    CHECK(interpolate_on_grid(fn, n, d, offsets) == p);
  }
}

TEST_CASE("shifted evaluation") {
  int n = 2;
  SparsePoly p = x(n, 0) * x(n, 0) + x(n, 1);
  std::vector<Rat> delta{rat(1), rat(-1, 2)};
  std::vector<Rat> pt{rat(2), rat(3)};
  std::vector<Rat> moved{rat(3), rat(5, 2)};
  CHECK(p.shifted(delta).eval(pt) == p.eval(moved));
}

TEST_CASE("JSON term list is sorted and exact") {
  int n = 2;
  SparsePoly p = rat(-3, 2) * x(n, 1) + x(n, 0) * x(n, 1) + c(n, 5);
  CHECK(poly_to_json(p) ==
        "[{\"exp\":[0,0],\"num\":\"5\",\"den\":\"1\"},"
        "{\"exp\":[0,1],\"num\":\"-3\",\"den\":\"2\"},"
        "{\"exp\":[1,1],\"num\":\"1\",\"den\":\"1\"}]");
}
