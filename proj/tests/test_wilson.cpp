#include <doctest.h>

#include <algorithm>
#include <array>

#include "wpoly/wilson.hpp"

using namespace wpoly;

namespace {

const Params P = default_params();

SparsePoly one(int n = 2) { return SparsePoly::constant(n, rat(1)); }
SparsePoly x(int v, int n = 2) { return SparsePoly::variable(n, v); }

// Independent oracle for p_{-e1}: the joint eigenvector of Y_1, Y_2 restricted
// to span{1, x1, x2} for the eigenvalue pair gamma_{-e1}, found by exact
// kernel computation.
SparsePoly joint_eigenvector_level1(const std::vector<Rat>& gamma) {
  std::array<std::vector<int>, 3> basis = {std::vector<int>{0, 0}, {1, 0}, {0, 1}};
  // rows: 6 equations (two operators, three coordinates); columns: 3.
  std::vector<std::vector<Rat>> M(6, std::vector<Rat>(3, Rat(0)));
  for (int col = 0; col < 3; ++col) {
    SparsePoly b = SparsePoly::monomial(2, basis[col], rat(1));
    for (int opi = 0; opi < 2; ++opi) {
      SparsePoly img = apply_Y(opi + 1, b, P);
      img -= gamma[opi] * b;
      for (const auto& [key, c] : img.terms()) {
        auto e = SparsePoly::unpack(key, 2);
        int row = -1;
        for (int k = 0; k < 3; ++k)
          if (basis[k] == e) row = k;
        REQUIRE(row >= 0);  // Y preserves the filtration level
        M[3 * opi + row][col] = c;
      }
    }
  }
  // Kernel by elimination.
  int rank = 0;
  for (int col = 0; col < 3; ++col) {
    int piv = -1;
    for (int r = rank; r < 6; ++r)
      if (!is_zero(M[r][col])) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[piv], M[rank]);
    for (int r = 0; r < 6; ++r) {
      if (r == rank || is_zero(M[r][col])) continue;
      Rat f = M[r][col] / M[rank][col];
      for (int cc = 0; cc < 3; ++cc) M[r][cc] -= f * M[rank][cc];
    }
    ++rank;
  }
  REQUIRE(rank == 2);  // one-dimensional kernel
  std::vector<Rat> v(3, Rat(0));
  std::vector<int> pivot_col(rank, -1);
  {
    int r = 0;
    for (int col = 0; col < 3 && r < rank; ++col)
      if (!is_zero(M[r][col])) pivot_col[r++] = col;
  }
  int free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end())
    ++free_col;
  v[free_col] = 1;
  for (int r = rank - 1; r >= 0; --r) {
    Rat acc(0);
    for (int col = pivot_col[r] + 1; col < 3; ++col) acc += M[r][col] * v[col];
    v[pivot_col[r]] = -acc / M[r][pivot_col[r]];
  }
  SparsePoly out(2);
  for (int k = 0; k < 3; ++k)
    if (!is_zero(v[k])) out += SparsePoly::monomial(2, basis[k], v[k]);
  return out;
}

}  // namespace

TEST_CASE("spectral points, pinned") {
  CHECK(gamma0(P) == std::vector<Rat>{rat(2), rat(3, 2)});
  CHECK(gamma_point({-1, 0}, P) == std::vector<Rat>{rat(-3), rat(3, 2)});
  CHECK(gamma_point({1, 0}, P) == std::vector<Rat>{rat(3), rat(3, 2)});
  CHECK(x_point({0, 0}, P) == std::vector<Rat>{rat(17, 10), rat(6, 5)});
}

TEST_CASE("spectral points agree with the finite-part formula") {
  // gamma_lambda = lambda + v^{-1} gamma_0 with v the shortest finite-group
  // element taking lambda to its dominant representative (found by
  // breadth-first search over words in s_1..s_n).
  for (const auto& lam : weights_up_to(2, 3)) {
    Weight target = dominant_rep(lam);
    std::map<Weight, ReducedWord> word{{lam, {}}};
    std::vector<Weight> frontier{lam};
    while (!word.count(target)) {
      std::vector<Weight> next;
      for (const auto& w0 : frontier)
        for (int i = 1; i <= 2; ++i) {
          Weight img = dot_simple_weight(i, w0);
          if (word.count(img)) continue;
          ReducedWord ww{i};
          ww.insert(ww.end(), word[w0].begin(), word[w0].end());
          word[img] = ww;
          next.push_back(img);
        }
      frontier = std::move(next);
    }
    ReducedWord v = word[target];       // v . lam = lam^+
    ReducedWord vinv(v.rbegin(), v.rend());
    auto expected = dot_apply(vinv, gamma0(P));
    for (int i = 0; i < 2; ++i) expected[i] += lam[i];
    CHECK(gamma_point(lam, P) == expected);
  }
}

TEST_CASE("trivial record") {
  WilsonContext ctx(P);
  const auto& rec = ctx.record({0, 0});
  CHECK(rec.p == one());
  CHECK(rec.gamma == gamma0(P));
  CHECK(rec.eval_at_minus_x0 == Rat(1));
  CHECK(rec.rel_norm == Rat(1));
}

TEST_CASE("p_{-e1} against the joint eigenproblem oracle") {
  WilsonContext ctx(P);
  const auto& rec = ctx.record({-1, 0});
  CHECK(rec.p.total_degree() == 1);
  CHECK_FALSE(is_zero(rec.p.coeff(std::vector<int>{1, 0})));
  SparsePoly oracle = joint_eigenvector_level1(rec.gamma);
  // Proportionality: cross-multiply by the leading coefficients.
  Rat a = rec.p.coeff(std::vector<int>{1, 0});
  Rat b = oracle.coeff(std::vector<int>{1, 0});
  REQUIRE_FALSE(is_zero(b));
  CHECK(b * rec.p == a * oracle);
}

TEST_CASE("eigen property over the working range") {
  WilsonContext ctx(P);
  for (const auto& lam : weights_up_to(2, 2)) {
    const auto& rec = ctx.record(lam);
    for (int i = 1; i <= 2; ++i) {
      INFO("lambda entry ", lam[0], ",", lam[1], " i=", i);
      CHECK(apply_Y(i, rec.p, P) == rec.gamma[i - 1] * rec.p);
    }
  }
}

TEST_CASE("eigen property at rank three") {
  Params P3 = default_params(3);
  WilsonContext ctx(P3);
  for (const auto& lam : weights_up_to(3, 2)) {
    const auto& rec = ctx.record(lam);
    for (int i = 1; i <= 3; ++i) {
      INFO("lambda ", lam[0], ",", lam[1], ",", lam[2], " i=", i);
      CHECK(apply_Y(i, rec.p, P3) == rec.gamma[i - 1] * rec.p);
    }
    CHECK_FALSE(is_zero(rec.p.coeff(phi_map(lam))));
  }
}

TEST_CASE("expansion in the E basis") {
  WilsonContext ctx(P);
  auto d = ctx.expand_in_E(ctx.record({-1, 0}).E);
  CHECK(d.size() == 1);
  CHECK(d.at({-1, 0}) == Rat(1));
  // Direct linear solve at filtration level 1: p_{-e1} = 10 x1 + 9/25 has no
  // x2 component, so x1 expands over {0, -e1} alone.
  auto supp = ctx.expand_in_E(x(0));
  CHECK(supp.size() == 2);
  CHECK(supp.count({0, 0}) == 1);
  CHECK(supp.count({-1, 0}) == 1);
  SparsePoly back(2);
  for (const auto& [mu, c] : supp) back += c * ctx.record(mu).E;
  CHECK(back == x(0));
  // x2, by contrast, needs all three basis members.
  CHECK(ctx.expand_in_E(x(1)).size() == 3);
}

TEST_CASE("evaluation formula, frozen value and product = direct") {
  WilsonContext ctx(P);
  CHECK(ctx.evaluation_value({0, 0}) == Rat(1));
  // Hand expansion of the operator chain: S_0 1 = 10 x1 + 9/25, so
  // p_{-e1}(-x0) = 10(-17/10) + 9/25 = -416/25; the K-factor product
  // -2 a0(-gamma_0) c^sigma_{a0}(-gamma_0) must reproduce it.
  CHECK(ctx.record({-1, 0}).p == rat(10) * x(0) + SparsePoly::constant(2, rat(9, 25)));
  CHECK(ctx.evaluation_value({-1, 0}) == rat(-416, 25));
  CHECK(ctx.record({-1, 0}).eval_at_minus_x0 == rat(-416, 25));
  for (const auto& lam : weights_up_to(2, 3))
    CHECK(ctx.evaluation_value(lam) == ctx.record(lam).eval_at_minus_x0);
}

TEST_CASE("relative norm, frozen value and stepwise ratios") {
  WilsonContext ctx(P);
  CHECK(ctx.relative_norm({0, 0}) == Rat(1));
  // Oracle: <E_0,E_0>/<E_{-e1},E_{-e1}> = -b^2/q0(gamma_0) with b the
  // measured coefficient of S_0 E_0 = b E_{-e1}; b = -416/25 and
  // q0(gamma_0) = 89856/625 give nu_{-e1} = -52/27.
  CHECK(ctx.relative_norm({-1, 0}) == rat(-52, 27));
  {
    Rat b = rat(-416, 25);
    Rat q = q_coeff(0, gamma0(P), P);
    CHECK(ctx.relative_norm({-1, 0}) == Rat(-b * b / q));
  }
  Params S = P.sigma();
  for (const auto& lam : weights_up_to(2, 2)) {
    auto xi = gamma_point(lam, P);
    for (auto& v : xi) v = -v;
    for (int i = 0; i <= 2; ++i) {
      Weight flip = dot_simple_weight(i, lam);
      if (flip == lam) continue;
      AffineRoot a = simple_root(i, 2);
      // nu_flip / nu_lam = c^sigma_{a_i}(-gamma_lam) / c^sigma_{-a_i}(-gamma_lam)
      CHECK(Rat(ctx.relative_norm(flip) * c_alpha(negate_root(a), xi, S)) ==
            Rat(ctx.relative_norm(lam) * c_alpha(a, xi, S)));
    }
  }
}

TEST_CASE("raising, lowering and vanishing of the intertwiners") {
  WilsonContext ctx(P);
  for (const auto& lam : weights_up_to(2, 2)) {
    const auto& rec = ctx.record(lam);
    for (int i = 0; i <= 2; ++i) {
      Weight flip = dot_simple_weight(i, lam);
      SparsePoly img = apply_S_eigen(i, rec.p, rec.gamma, P);
      if (flip == lam) {
        CHECK(img.is_zero());
        continue;
      }
      const auto& frec = ctx.record(flip);
      if (u_lambda_length(flip) > u_lambda_length(lam)) {
        CHECK(img == frec.p);
      } else {
        CHECK(img == q_coeff(i, frec.gamma, P) * frec.p);
      }
    }
  }
}

TEST_CASE("T action on eigenfunctions") {
  WilsonContext ctx(P);
  Params S = P.sigma();
  for (const auto& lam : weights_up_to(2, 2)) {
    const auto& rec = ctx.record(lam);
    for (int i = 1; i <= 2; ++i) {
      Weight flip = dot_simple_weight(i, lam);
      SparsePoly img = apply_generator(Gen::T, i, rec.p, P);
      if (flip == lam) {
        CHECK(img == P.chi(i) * rec.p);
        continue;
      }
      Rat A = d_coeff(i, rec.gamma, S);
      Rat ag = root_eval(simple_root(i, 2), rec.gamma);
      Rat B = u_lambda_length(flip) > u_lambda_length(lam)
                  ? Rat(Rat(1) / (2 * ag))
                  : Rat(q_coeff(i, ctx.record(flip).gamma, P) / (2 * ag));
      CHECK(img == A * rec.p + B * ctx.record(flip).p);
    }
  }
}

TEST_CASE("spectral action and its corollary") {
  WilsonContext ctx(P);
  for (const auto& lam : weights_up_to(2, 2)) {
    for (int i = 0; i <= 2; ++i) {
      INFO("lambda ", lam[0], ",", lam[1], " i=", i);
      CHECK(ctx.verify_spectral_action(lam, i));
    }
  }
  // S_i E(., gamma_lam) = -2 a_i(-gamma_lam) c_i^sigma(-gamma_lam) E(., gamma_flip)
  // (for finite i this is the familiar 2 a_i(gamma) c_i^sigma(-gamma)).
  Params S = P.sigma();
  for (const auto& lam : weights_up_to(2, 2)) {
    const auto& rec = ctx.record(lam);
    for (int i = 0; i <= 2; ++i) {
      Weight flip = dot_simple_weight(i, lam);
      if (flip == lam) continue;
      std::vector<Rat> mg(2);
      for (int k = 0; k < 2; ++k) mg[k] = -rec.gamma[k];
      Rat coeff = -2 * root_eval(simple_root(i, 2), mg) * c_coeff(i, mg, S);
      CHECK(apply_S_eigen(i, rec.E, rec.gamma, P) == coeff * ctx.record(flip).E);
      if (i >= 1)
        CHECK(coeff == Rat(2 * root_eval(simple_root(i, 2), rec.gamma) * c_coeff(i, mg, S)));
    }
  }
}

TEST_CASE("duality") {
  WilsonContext ctx(P);
  CHECK(ctx.duality_check({0, 0}, {0, 0}));
  for (const auto& lam : weights_up_to(2, 2))
    for (const auto& mu : weights_up_to(2, 2)) CHECK(ctx.duality_check(lam, mu));
}

TEST_CASE("algebraic inner product") {
  WilsonContext ctx(P);
  CHECK(ctx.alg_inner(one(), one()) == Rat(1));
  CHECK(ctx.alg_inner(one(), one(), rat(5, 3)) == rat(5, 3));
  CHECK(ctx.alg_inner(ctx.record({-1, 0}).E, ctx.record({0, -1}).E) == Rat(0));
  CHECK(ctx.alg_inner(ctx.record({1, 0}).E, one()) == Rat(0));
  CHECK(ctx.alg_inner(ctx.record({-1, 0}).E, ctx.record({-1, 0}).E) ==
        Rat(Rat(1) / ctx.relative_norm({-1, 0})));
}

TEST_CASE("Fourier pair") {
  WilsonContext ctx(P);
  const auto& rec = ctx.record({-1, 0});
  auto F = ctx.fourier_F(rec.E);
  CHECK(F.values.size() == 1);
  CHECK(F.values.at({-1, 0}) == Rat(Rat(1) / rec.rel_norm));
  FiniteSpectralFunction delta;
  delta.values[{-1, 0}] = rat(1);
  CHECK(ctx.fourier_G(delta) == rec.rel_norm * rec.E);
  SparsePoly f = x(0) * x(1) + SparsePoly::constant(2, rat(3));
  CHECK(ctx.fourier_G(ctx.fourier_F(f)) == f);
  // Fourier transforms invert with a nonstandard mass constant too.
  Rat c = rat(7, 2);
  CHECK(ctx.fourier_G(ctx.fourier_F(f, c), c) == f);
}

TEST_CASE("genericity validation") {
  WilsonContext ok(P);
  ok.validate_genericity(2);
  WilsonContext ok2(alternate_params());
  ok2.validate_genericity(2);
  // t0 + tn + t = -1/2 collides gamma_0 with gamma_{-e1}.
  Params bad{2, rat(-1, 4), rat(1, 4), rat(0), rat(-1, 4), rat(1, 4)};
  WilsonContext bctx(bad);
  CHECK_THROWS_AS(bctx.validate_genericity(1), DegenerateParameterError);
}
