#include "wpoly/relations.hpp"

namespace wpoly {

namespace {

std::string idx(const std::string& base, int i) { return base + std::to_string(i); }

SparsePoly x_poly(int n, int j) { return SparsePoly::variable(n, j - 1); }

// s_i x_j as a polynomial.
SparsePoly reflected_x(int n, int i, int j) {
  return apply_reflection(i, x_poly(n, j));
}

// e_k(x_1^2, ..., x_n^2): the W0-invariants of type C are symmetric in the
// squares.
SparsePoly elementary_symmetric_squares(int n, int k) {
  SparsePoly acc(n);
  std::vector<int> choose(k);
  for (int i = 0; i < k; ++i) choose[i] = i;
  for (;;) {
    SparsePoly term = SparsePoly::constant(n, rat(1));
    for (int i : choose) {
      SparsePoly xi = SparsePoly::variable(n, i);
      term = term * xi * xi;
    }
    acc += term;
    int pos = k - 1;
    while (pos >= 0 && choose[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++choose[pos];
    for (int q = pos + 1; q < k; ++q) choose[q] = choose[q - 1] + 1;
  }
  return acc;
}

void add_braid_family(std::vector<IdentityCheck>& out, const Params& P, bool vee,
                      const std::string& tag) {
  int n = P.n;
  auto G = [&](int i) { return vee ? op_Tvee(i) : op_T(i); };
  // Deformed braid at the two ends (i = 0 and i = n-1 are distinct pairs
  // for every n >= 2).
  for (int i : {0, n - 1}) {
    Op a = G(i), b = G(i + 1);
    Op lhs = Op::lincomb({{Rat(1), a * b * a * b}, {P.t, a * b}});
    Op rhs = Op::lincomb({{Rat(1), b * a * b * a}, {P.t, b * a}});
    out.push_back({tag + " deformed braid (" + std::to_string(i) + "," +
                       std::to_string(i + 1) + ")",
                   lhs, rhs});
  }
  for (int i = 1; i <= n - 2; ++i) {
    Op a = G(i), b = G(i + 1);
    out.push_back({tag + " braid (" + std::to_string(i) + "," + std::to_string(i + 1) + ")",
                   a * b * a, b * a * b});
  }
  for (int i = 0; i <= P.n; ++i)
    for (int j = i + 2; j <= P.n; ++j)
      out.push_back({tag + " commute (" + std::to_string(i) + "," + std::to_string(j) + ")",
                     G(i) * G(j), G(j) * G(i)});
}

}  // namespace

std::vector<IdentityCheck> relation_suite(const Params& P) {
  int n = P.n;
  std::vector<IdentityCheck> out;

  // Quadratic relations.
  out.push_back({"T0^2 = t0^2", op_T(0) * op_T(0), Op::scalar(P.t0 * P.t0)});
  out.push_back({"Tn^2 = tn^2", op_T(n) * op_T(n), Op::scalar(P.tn * P.tn)});
  for (int i = 1; i <= n - 1; ++i)
    out.push_back({idx("T^2 = 1, i=", i), op_T(i) * op_T(i), Op::identity()});
  out.push_back({"(T0v)^2 = u0^2", op_Tvee(0) * op_Tvee(0), Op::scalar(P.u0 * P.u0)});
  out.push_back({"(Tnv)^2 = un^2", op_Tvee(n) * op_Tvee(n), Op::scalar(P.un * P.un)});

  add_braid_family(out, P, false, "T");
  add_braid_family(out, P, true, "Tv");

  // Cross relations with p(X) = X_j.
  for (int i = 0; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      SparsePoly sx = reflected_x(n, i, j);
      SparsePoly rhs_poly(n);
      if (i == 0 && j == 1) {
        SparsePoly h = SparsePoly::constant(n, rat(1, 2)) - x_poly(n, 1);
        rhs_poly = SparsePoly::constant(n, P.t0 * P.t0 - P.u0 * P.u0) + h * h;
      } else if (i >= 1 && i <= n - 1 && j == i) {
        rhs_poly = SparsePoly::constant(n, -P.t);
      } else if (i >= 1 && i <= n - 1 && j == i + 1) {
        rhs_poly = SparsePoly::constant(n, P.t);
      } else if (i == n && j == n) {
        SparsePoly xn = x_poly(n, n);
        rhs_poly = -(SparsePoly::constant(n, P.tn * P.tn - P.un * P.un) + xn * xn);
      }
      Op lhs = op_T(i) * op_X(j) - Op::mul(sx) * op_T(i);
      out.push_back({"cross T" + std::to_string(i) + " X" + std::to_string(j), lhs,
                     Op::mul(rhs_poly)});
    }

  // The explicit combination lemma.
  Op T0v_raw = Op::lincomb({{Rat(1), op_X(1)}, {rat(-1, 2), Op::identity()}, {Rat(-1), op_T(0)}});
  out.push_back({"(X1 - 1/2 - T0)^2 = u0^2", T0v_raw * T0v_raw, Op::scalar(P.u0 * P.u0)});
  Op Tnv_raw = Op::lincomb({{Rat(1), op_X(n)}, {Rat(1), op_T(n)}});
  out.push_back({"(Xn + Tn)^2 = un^2", Tnv_raw * Tnv_raw, Op::scalar(P.un * P.un)});
  for (int i = 1; i <= n - 1; ++i)
    out.push_back({idx("T X T = X' - tT, i=", i), op_T(i) * op_X(i) * op_T(i),
                   op_X(i + 1) - Op::lincomb({{P.t, op_T(i)}})});
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (std::abs(i - j) >= 2)
        out.push_back({"X" + std::to_string(i) + " T" + std::to_string(j) + " commute",
                       op_X(i) * op_T(j), op_T(j) * op_X(i)});
  for (int i = 1; i <= n - 1; ++i)
    out.push_back({idx("X_i T_{i+1} commute, i=", i), op_X(i) * op_T(i + 1),
                   op_T(i + 1) * op_X(i)});

  // Mixed T / Tvee relations.
  out.push_back({"T0 T1 T0v T1 = T1 T0v T1 T0", op_T(0) * op_T(1) * op_Tvee(0) * op_T(1),
                 op_T(1) * op_Tvee(0) * op_T(1) * op_T(0)});
  out.push_back({"Tn Tn-1 Tnv Tn-1 = Tn-1 Tnv Tn-1 Tn",
                 op_T(n) * op_T(n - 1) * op_Tvee(n) * op_T(n - 1),
                 op_T(n - 1) * op_Tvee(n) * op_T(n - 1) * op_T(n)});
  for (int i = 2; i <= n; ++i)
    out.push_back({idx("[T0v, X] = 0, i=", i), op_Tvee(0) * op_X(i), op_X(i) * op_Tvee(0)});
  for (int i = 1; i <= n - 1; ++i)
    out.push_back({idx("[Tnv, X] = 0, i=", i), op_Tvee(n) * op_X(i), op_X(i) * op_Tvee(n)});
  out.push_back({"[T0, Tnv] = 0", op_T(0) * op_Tvee(n), op_Tvee(n) * op_T(0)});
  out.push_back({"[T0v, Tn] = 0", op_Tvee(0) * op_T(n), op_T(n) * op_Tvee(0)});
  out.push_back({"[T0v, Tnv] = 0", op_Tvee(0) * op_Tvee(n), op_Tvee(n) * op_Tvee(0)});
  {
    std::vector<std::pair<Rat, Op>> sum;
    sum.emplace_back(rat(1, 2), Op::identity());
    sum.emplace_back(Rat(1), op_T(0));
    sum.emplace_back(Rat(1), op_Tvee(0));
    sum.emplace_back(Rat(1), op_Xi_in(1, n));
    sum.emplace_back(Rat(1), op_Xi_in_vee(1, n));
    for (int j = 2; j <= n; ++j) sum.emplace_back(P.t, op_Tij(1, j));
    out.push_back({"compatibility sum = 0", Op::lincomb(std::move(sum)), Op::lincomb({})});
  }

  // Braid-type relations between U and T_{1,j}.
  {
    std::vector<std::pair<std::string, Op>> us = {{"T0", op_T(0)},
                                                  {"T0v", op_Tvee(0)},
                                                  {"Xi1n", op_Xi_in(1, n)},
                                                  {"Xi1nv", op_Xi_in_vee(1, n)}};
    for (const auto& [uname, U] : us)
      for (int j = 2; j <= n; ++j) {
        Op R = op_Tij(1, j);
        Op lhs = Op::lincomb({{Rat(1), U * R * U * R}, {P.t, U * R}});
        Op rhs = Op::lincomb({{Rat(1), R * U * R * U}, {P.t, R * U}});
        out.push_back({"U braid " + uname + ", j=" + std::to_string(j), lhs, rhs});
      }
  }

  // Intertwiner braid relations and quadratic relations.
  for (int i : {0, n - 1}) {
    Op a = op_S(i, P), b = op_S(i + 1, P);
    out.push_back({"S braid (" + std::to_string(i) + "," + std::to_string(i + 1) + ")",
                   a * b * a * b, b * a * b * a});
  }
  for (int i = 1; i <= n - 2; ++i) {
    Op a = op_S(i, P), b = op_S(i + 1, P);
    out.push_back({"S braid (" + std::to_string(i) + "," + std::to_string(i + 1) + ")",
                   a * b * a, b * a * b});
  }
  for (int i = 0; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      out.push_back({"S commute (" + std::to_string(i) + "," + std::to_string(j) + ")",
                     op_S(i, P) * op_S(j, P), op_S(j, P) * op_S(i, P)});
  for (int i = 0; i <= n; ++i)
    out.push_back({idx("S^2 = q(Y), i=", i), op_S(i, P) * op_S(i, P),
                   op_poly_of_Y(q_poly(i, P), P)});

  // Y relations.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      out.push_back({"[Y" + std::to_string(i) + ", Y" + std::to_string(j) + "] = 0",
                     op_Y(i, P) * op_Y(j, P), op_Y(j, P) * op_Y(i, P)});
  for (int i = 1; i <= n - 1; ++i)
    out.push_back({idx("Y recursion, i=", i),
                   Op::lincomb({{Rat(1), op_T(i) * op_Y(i, P) * op_T(i)}, {-P.t, op_T(i)}}),
                   op_Y(i + 1, P)});

  // Y-side cross relations with p = x_j (dual parameters in d_i).
  Params S = P.sigma();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Op pY = op_Y(j, P);
      Op spY;  // (s_i p)(Y)
      Op rhs;
      if (i <= n - 1) {
        if (j == i) {
          spY = op_Y(i + 1, P);
          rhs = Op::scalar(S.t);
        } else if (j == i + 1) {
          spY = op_Y(i, P);
          rhs = Op::scalar(-S.t);
        } else {
          spY = pY;
          rhs = Op::lincomb({});
        }
      } else {  // i == n
        if (j == n) {
          spY = Op::lincomb({{Rat(-1), op_Y(n, P)}});
          SparsePoly num = SparsePoly::constant(n, S.tn * S.tn - S.un * S.un);
          SparsePoly xn = SparsePoly::variable(n, n - 1);
          rhs = op_poly_of_Y(num + xn * xn, P);
        } else {
          spY = pY;
          rhs = Op::lincomb({});
        }
      }
      out.push_back({"Y-side cross T" + std::to_string(i) + " Y" + std::to_string(j),
                     op_T(i) * pY - spY * op_T(i), rhs});
    }

  // Center spot checks.
  for (int k = 1; k <= n; ++k) {
    Op ek = op_poly_of_Y(elementary_symmetric_squares(n, k), P);
    for (int i = 1; i <= n; ++i)
      out.push_back({"[e" + std::to_string(k) + "(Y^2), T" + std::to_string(i) + "] = 0",
                     ek * op_T(i), op_T(i) * ek});
  }

  return out;
}

std::vector<IdentityCheck> gdaha_suite(const Params& P) {
  int n = P.n;
  std::vector<IdentityCheck> out;
  Rat mu0 = rat(1, 2) - P.t0 - P.u0 - P.tn - P.un;
  Rat gamma_k = mu0 / 4;  // gauge choice; sum over k is mu0
  Rat nu = -P.t;
  std::array<Rat, 4> mu = {2 * P.t0, 2 * P.u0, 2 * P.tn, 2 * P.un};
  std::array<Rat, 4> shift = {gamma_k + P.t0, gamma_k + P.u0, gamma_k + P.tn,
                              gamma_k + P.un};
  std::array<Op, 4> V = {
      Op::lincomb({{Rat(1), op_T(0)}, {shift[0], Op::identity()}}),
      Op::lincomb({{Rat(1), op_Tvee(0)}, {shift[1], Op::identity()}}),
      Op::lincomb({{Rat(1), op_Xi_in(1, n)}, {shift[2], Op::identity()}}),
      Op::lincomb({{Rat(1), op_Xi_in_vee(1, n)}, {shift[3], Op::identity()}})};
  auto s1j = [&](int j) { return op_Tij(1, j); };

  for (int i = 1; i <= n - 1; ++i)
    out.push_back({idx("s^2 = 1, i=", i), op_T(i) * op_T(i), Op::identity()});
  for (int i = 1; i <= n - 2; ++i)
    out.push_back({idx("s braid, i=", i), op_T(i) * op_T(i + 1) * op_T(i),
                   op_T(i + 1) * op_T(i) * op_T(i + 1)});
  for (int l = 0; l < 4; ++l)
    for (int i = 2; i <= n - 1; ++i)
      out.push_back({"s_i V" + std::to_string(l + 1) + " commute, i=" + std::to_string(i),
                     op_T(i) * V[l], V[l] * op_T(i)});
  for (int l = 0; l < 4; ++l) {
    Op a = Op::lincomb({{Rat(1), V[l]}, {-gamma_k, Op::identity()}});
    Op b = Op::lincomb({{Rat(1), V[l]}, {-gamma_k - mu[l], Op::identity()}});
    out.push_back({"quadratic (V" + std::to_string(l + 1) + " - g)(V - g - mu) = 0", a * b,
                   Op::lincomb({})});
  }
  {
    std::vector<std::pair<Rat, Op>> lhs;
    for (int l = 0; l < 4; ++l) lhs.emplace_back(Rat(1), V[l]);
    std::vector<std::pair<Rat, Op>> rhs;
    for (int k = 2; k <= n; ++k) rhs.emplace_back(nu, s1j(k));
    out.push_back({"sum relation, upper limit n", Op::lincomb(std::move(lhs)),
                   Op::lincomb(std::move(rhs))});
  }
  for (int l = 0; l < 4; ++l)
    for (int j = 2; j <= n; ++j) {
      Op conj = s1j(j) * V[l] * s1j(j);
      out.push_back({"[V" + std::to_string(l + 1) + ", s1" + std::to_string(j) + " V s1" +
                         std::to_string(j) + "] = nu [V, s1j]",
                     op_commutator(V[l], conj),
                     Op::lincomb({{nu, op_commutator(V[l], s1j(j))}})});
    }
  for (int l = 0; l < 4; ++l)
    for (int m = 0; m < 4; ++m) {
      if (l == m) continue;
      for (int j = 2; j <= n; ++j) {
        Op conj = s1j(j) * V[m] * s1j(j);
        out.push_back({"[V" + std::to_string(l + 1) + ", s1" + std::to_string(j) + " V" +
                           std::to_string(m + 1) + " s1" + std::to_string(j) + "] = 0",
                       op_commutator(V[l], conj), Op::lincomb({})});
      }
    }
  return out;
}

SuiteReport run_suite(const std::vector<IdentityCheck>& checks, int degree,
                      const Params& P, Exec exec) {
  SuiteReport report;
  if (exec == Exec::Serial) {
    for (const auto& check : checks) {
      auto res = verify_operator_identity(check.lhs, check.rhs, degree, P, exec, check.name);
      report.all_ok = report.all_ok && res.ok;
      report.results.push_back(std::move(res));
    }
    return report;
  }
  // One flat parallel region over (relation, monomial) pairs: balances the
  // wildly uneven per-monomial costs much better than per-relation fan-out.
  auto monos = verify_basis(P.n, degree);
  long m = static_cast<long>(monos.size());
  long total = static_cast<long>(checks.size()) * m;
  std::vector<char> failed(total, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long idx = 0; idx < total; ++idx) {
    const auto& check = checks[idx / m];
    SparsePoly probe = SparsePoly::monomial(P.n, monos[idx % m], Rat(1));
    failed[idx] = !(check.lhs.apply(probe, P) == check.rhs.apply(probe, P));
  }
  for (std::size_t k = 0; k < checks.size(); ++k) {
    VerifyResult res;
    res.name = checks[k].name;
    res.ok = true;
    for (long j = 0; j < m; ++j)
      if (failed[k * m + j]) {
        res.ok = false;
        res.counterexample = monos[j];
        break;
      }
    report.all_ok = report.all_ok && res.ok;
    report.results.push_back(std::move(res));
  }
  return report;
}

}  // namespace wpoly
