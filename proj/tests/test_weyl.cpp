#include <doctest.h>

#include <map>
#include <queue>
#include <random>
#include <set>

#include "wpoly/weyl.hpp"

using namespace wpoly;

namespace {

// Independent oracle: breadth-first search over words themselves (not over
// states), first arrival at lambda wins.
int word_bfs_distance(const Weight& lam, int max_depth) {
  int n = static_cast<int>(lam.size());
  std::set<Weight> seen;
  std::queue<std::pair<Weight, int>> q;
  q.push({Weight(n, 0), 0});
  seen.insert(Weight(n, 0));
  while (!q.empty()) {
    auto [w, d] = q.front();
    q.pop();
    if (w == lam) return d;
    if (d == max_depth) continue;
    for (int i = 0; i <= n; ++i) {
      Weight img = dot_simple_weight(i, w);
      if (seen.insert(img).second) q.push({img, d + 1});
    }
  }
  return -1;
}

std::vector<Rat> rvec(std::initializer_list<Rat> xs) { return {xs}; }

}  // namespace

TEST_CASE("phi labeling") {
  CHECK(phi_map({0, 0}) == std::vector<int>{0, 0});
  CHECK(phi_map({-1, 2}) == std::vector<int>{1, 4});
  std::vector<int> e{3, 1};
  CHECK(phi_inv(e) == Weight{-2, -1});
  for (int m = -6; m <= 6; ++m) CHECK(phi_inv_int(phi_int(m)) == m);
  for (int e1 = 0; e1 <= 12; ++e1) CHECK(phi_int(phi_inv_int(e1)) == e1);
}

TEST_CASE("dot action") {
  CHECK(dot_apply({0}, rvec({rat(2), rat(3, 2)})) == rvec({rat(-3), rat(3, 2)}));
  CHECK(dot_apply({2}, rvec({rat(5), rat(7)})) == rvec({rat(5), rat(-7)}));
  std::vector<Rat> x = rvec({rat(1, 3), rat(-4)});
  CHECK(dot_apply({1, 1}, x) == x);
  CHECK(dot_apply({0, 0}, x) == x);
}

TEST_CASE("u_lambda words, pinned examples") {
  CHECK(u_lambda_word({0, 0}) == ReducedWord{});
  CHECK(u_lambda_word({-1, 0}) == ReducedWord{0});
  CHECK(u_lambda_word({1, 0}) == ReducedWord{1, 2, 1, 0});
}

TEST_CASE("u_lambda words reach lambda and are shortest") {
  for (int n : {2, 3}) {
    int radius = 5;
    for (const auto& lam : weights_up_to(n, radius)) {
      auto word = u_lambda_word(lam);
      Weight zero(n, 0);
      CHECK(dot_apply_weight(word, zero) == lam);
      if (abs_sum(lam) <= 2) {
        int oracle = word_bfs_distance(lam, 16);
        REQUIRE(oracle >= 0);
        CHECK(static_cast<int>(word.size()) == oracle);
      }
    }
  }
}

TEST_CASE("adjacent weights differ by one in length") {
  for (int n : {2, 3}) {
    for (const auto& lam : weights_up_to(n, 3)) {
      for (int i = 0; i <= n; ++i) {
        Weight flip = dot_simple_weight(i, lam);
        if (flip == lam) continue;
        int diff = u_lambda_length(flip) - u_lambda_length(lam);
        CHECK(std::abs(diff) == 1);
      }
    }
  }
}

TEST_CASE("letter-zero count equals sum of absolute entries") {
  for (int n : {2, 3}) {
    for (const auto& lam : weights_up_to(n, n == 2 ? 4 : 3)) {
      int zeros = 0;
      for (int letter : u_lambda_word(lam)) zeros += letter == 0;
      CHECK(zeros == abs_sum(lam));
    }
  }
}

TEST_CASE("sign rule matching BFS raising/lowering") {
  // Documented convention: length goes up from lambda to s_i.lambda exactly
  // when a_i(-lambda) > 0, and s_i.lambda = lambda exactly when a_i(-lambda) = 0.
  for (int n : {2, 3}) {
    for (const auto& lam : weights_up_to(n, 3)) {
      std::vector<Rat> neg(n);
      for (int v = 0; v < n; ++v) neg[v] = -lam[v];
      for (int i = 0; i <= n; ++i) {
        Rat val = root_eval(simple_root(i, n), neg);
        Weight flip = dot_simple_weight(i, lam);
        if (flip == lam) {
          CHECK(is_zero(val));
          continue;
        }
        bool raises = u_lambda_length(flip) > u_lambda_length(lam);
        CHECK(raises == (sgn(val) > 0));
      }
    }
  }
}

TEST_CASE("inversion sets, pinned examples") {
  int n = 2;
  AffineRoot a0{{-2, 0}, 1};
  CHECK(inversion_set({0}, n) == std::vector<AffineRoot>{a0});
  CHECK(inversion_set({}, n).empty());
  AffineRoot a0_plus_a1{{-1, -1}, 1};
  CHECK(inversion_set({0, 1}, n) == std::vector<AffineRoot>{a0, a0_plus_a1});
}

TEST_CASE("inversion set size equals word length") {
  for (int n : {2, 3}) {
    for (const auto& lam : weights_up_to(n, 3)) {
      auto word = u_lambda_word(lam);
      auto inv = inversion_set(word, n);
      CHECK(inv.size() == word.size());
      std::set<AffineRoot> dedup(inv.begin(), inv.end());
      CHECK(dedup.size() == inv.size());
      for (const auto& alpha : inv) CHECK(root_is_positive(alpha));
    }
  }
}

TEST_CASE("non-reduced words are rejected") {
  CHECK_THROWS_AS(inversion_set({1, 1}, 2), ReducednessError);
  CHECK_THROWS_AS(inversion_set({0, 0}, 2), ReducednessError);
  CHECK_THROWS_AS(inversion_set({2, 1, 2, 1, 2, 1}, 2), ReducednessError);
}

TEST_CASE("tau inversion set") {
  CHECK(tau_inversion_set({0, 0}).empty());
  auto inv = tau_inversion_set({1, 0});
  CHECK(inv.size() == 4);  // l(tau(e_1)) = 4
  // Oracle: a reduced word for tau(-e_1) is the reverse of s1 s2 s1 s0; map
  // its inversion set beta -> -tau(e_1) beta and compare.
  auto from_word = inversion_set({0, 1, 2, 1}, 2);
  std::set<AffineRoot> mapped;
  for (const auto& beta : from_word) {
    AffineRoot img = negate_root(beta);
    img.c -= beta.v[0];  // <e_1, beta> = beta.v[0]
    mapped.insert(img);
  }
  CHECK(std::set<AffineRoot>(inv.begin(), inv.end()) == mapped);
  CHECK_THROWS_AS(tau_inversion_set({0, 1}), PreconditionError);
}

TEST_CASE("tau inversion set satisfies its defining property") {
  for (Weight lam : {Weight{2, 1}, Weight{1, 1}, Weight{2, 0}}) {
    auto inv = tau_inversion_set(lam);
    std::set<AffineRoot> got(inv.begin(), inv.end());
    CHECK(got.size() == inv.size());
    for (const auto& alpha : inv) {
      CHECK(root_is_positive(alpha));
      long pair = 0;
      for (std::size_t i = 0; i < lam.size(); ++i) pair += lam[i] * alpha.v[i];
      AffineRoot image{alpha.v, alpha.c - static_cast<int>(pair)};
      CHECK_FALSE(root_is_positive(image));
    }
  }
}

TEST_CASE("orbit classification") {
  CHECK(classify_orbit(AffineRoot{{-2, 0}, 1}) == RootOrbit::A0);
  CHECK(classify_orbit(AffineRoot{{1, -1}, 0}) == RootOrbit::Mid);
  CHECK(classify_orbit(AffineRoot{{0, 2}, 0}) == RootOrbit::An);
  CHECK_THROWS_AS(classify_orbit(AffineRoot{{1, 0}, 0}), ShapeError);
  CHECK_THROWS_AS(classify_orbit(AffineRoot{{3, 0}, 0}), ShapeError);
}

TEST_CASE("orbit tags are reflection invariant") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> letter(0, 2);
  std::vector<AffineRoot> roots{{{-2, 0}, 1}, {{1, -1}, 0}, {{0, 2}, 0}, {{1, 1}, 3},
                                {{2, 0}, -2}};
  for (const auto& alpha : roots) {
    for (int trial = 0; trial < 20; ++trial) {
      AffineRoot img = alpha;
      for (int k = 0; k < 6; ++k) img = reflect_root(letter(rng), img);
      CHECK(classify_orbit(img) == classify_orbit(alpha));
    }
  }
}

TEST_CASE("finite orbit enumeration") {
  CHECK(w0_orbit({0, 0}).size() == 1);
  CHECK(w0_orbit({1, 0}).size() == 4);
  CHECK(w0_orbit({1, 1}).size() == 4);
  CHECK(w0_orbit({2, 1}).size() == 8);
  CHECK(w0_order(2) == 8);
  CHECK(w0_order(3) == 48);
}

TEST_CASE("weights_up_to counts") {
  CHECK(weights_up_to(2, 0).size() == 1);
  CHECK(weights_up_to(2, 1).size() == 5);
  CHECK(weights_up_to(2, 2).size() == 13);
  CHECK(weights_up_to(2, 3).size() == 25);
}
