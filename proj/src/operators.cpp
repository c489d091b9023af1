#include "wpoly/operators.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wpoly {

// ---------------------------------------------------------------------------
// Coefficient functions.

Rat c_alpha(const AffineRoot& a, std::span<const Rat> x, const Params& P) {
  Rat ax = root_eval(a, x);
  if (is_zero(ax)) throw PoleError("c_alpha pole: root vanishes at the point");
  RootOrbit orbit = classify_orbit(a);
  if (root_is_long(a)) {
    Rat av = ax / 2;
    Rat ta = P.orbit_t(orbit), tv = P.orbit_u(orbit);
    return (ta + tv + av) * (ta - tv + av) / ax;
  }
  return (P.t + ax) / ax;
}

Rat d_coeff(int i, std::span<const Rat> x, const Params& P) {
  AffineRoot a = simple_root(i, P.n);
  Rat ax = root_eval(a, x);
  if (is_zero(ax)) throw PoleError("d_i pole");
  if (i == 0) return (P.t0 * P.t0 - P.u0 * P.u0 + (ax / 2) * (ax / 2)) / ax;
  if (i == P.n) return (P.tn * P.tn - P.un * P.un + (ax / 2) * (ax / 2)) / ax;
  return P.t / ax;
}

Rat c_coeff(int i, std::span<const Rat> x, const Params& P) {
  return d_coeff(i, x, P) + P.chi(i);
}

Rat q_coeff(int i, std::span<const Rat> x, const Params& P) {
  std::vector<Rat> pt(x.begin(), x.end());
  return q_poly(i, P).eval(pt);
}

SparsePoly q_poly(int i, const Params& P) {
  int n = P.n;
  auto sq = [&](const SparsePoly& p) { return p * p; };
  auto cpoly = [&](const Rat& c) { return SparsePoly::constant(n, c); };
  if (i == 0) {
    SparsePoly h = cpoly(rat(1, 2)) + SparsePoly::variable(n, 0);  // 1/2 + x_1
    return Rat(4) * (cpoly((P.un + P.u0) * (P.un + P.u0)) - sq(h)) *
           (cpoly((P.un - P.u0) * (P.un - P.u0)) - sq(h));
  }
  if (i == n) {
    SparsePoly xn = SparsePoly::variable(n, n - 1);
    return Rat(4) * (cpoly((P.tn + P.t0) * (P.tn + P.t0)) - sq(xn)) *
           (cpoly((P.tn - P.t0) * (P.tn - P.t0)) - sq(xn));
  }
  SparsePoly ai = SparsePoly::variable(n, i - 1) - SparsePoly::variable(n, i);
  return Rat(4) * (cpoly(P.t * P.t) - sq(ai));
}

Rat K_alpha(const AffineRoot& a, std::span<const Rat> x, const Params& P) {
  // -2 alpha(x) c^sigma_alpha(x): "alpha(-x)" with the delta part negated as
  // well, which is what the evaluation telescoping actually produces.
  return -2 * root_eval(a, x) * c_alpha(a, x, P.sigma());
}

Rat c_plus(std::span<const Rat> x, const Params& P) {
  auto [a, b, c, d] = P.wilson_abcd();
  Rat acc(1);
  int n = P.n;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Rat den = (x[k] + x[j]) * (x[k] - x[j]);
      if (is_zero(den)) throw PoleError("c_plus pole: x_j = +-x_k");
      acc *= (P.t - x[j] + x[k]) * (P.t - x[j] - x[k]) / den;
    }
  for (int j = 0; j < n; ++j) {
    if (is_zero(x[j])) throw PoleError("c_plus pole: x_j = 0");
    acc *= (a - x[j]) * (b - x[j]) / (-2 * x[j]);
  }
  return acc;
}

SparsePoly m_antisym(int n) {
  SparsePoly m = SparsePoly::constant(n, rat(1));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      SparsePoly xj = SparsePoly::variable(n, j), xk = SparsePoly::variable(n, k);
      m = m * (xk * xk - xj * xj);
    }
  for (int j = 0; j < n; ++j) m = m * SparsePoly::variable(n, j);
  Rat scale(1);
  for (int j = 0; j < n; ++j) scale *= -2;
  return scale * m;
}

SparsePoly c_plus_numer(const Params& P) {
  auto [a, b, c, d] = P.wilson_abcd();
  int n = P.n;
  SparsePoly num = SparsePoly::constant(n, rat(1));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      SparsePoly xj = SparsePoly::variable(n, j), xk = SparsePoly::variable(n, k);
      SparsePoly tt = SparsePoly::constant(n, P.t);
      num = num * (tt - xj + xk) * (tt - xj - xk);
    }
  for (int j = 0; j < n; ++j) {
    SparsePoly xj = SparsePoly::variable(n, j);
    num = num * (SparsePoly::constant(n, a) - xj) * (SparsePoly::constant(n, b) - xj);
  }
  return num;
}

// ---------------------------------------------------------------------------
// Generator actions.

SparsePoly apply_reflection(int i, const SparsePoly& p) {
  int n = p.nvars();
  if (i < 0 || i > n) throw PreconditionError("reflection index out of range");
  std::vector<LinearForm> map;
  for (int v = 0; v < n; ++v) {
    LinearForm f = LinearForm::zero(n);
    f.coeffs[v] = 1;
    map.push_back(std::move(f));
  }
  if (i == 0) {
    map[0].coeffs[0] = -1;
    map[0].constant = 1;
  } else if (i < n) {
    std::swap(map[i - 1], map[i]);
  } else {
    map[n - 1].coeffs[n - 1] = -1;
  }
  return affine_substitute(p, map);
}

namespace {

LinearForm simple_denominator(int i, int n) {
  LinearForm f = LinearForm::zero(n);
  if (i == 0) {
    f.constant = 1;
    f.coeffs[0] = -2;  // 1 - 2x_1
  } else if (i < n) {
    f.coeffs[i - 1] = 1;
    f.coeffs[i] = -1;  // x_i - x_{i+1}
  } else {
    f.coeffs[n - 1] = 2;  // 2x_n
  }
  return f;
}

SparsePoly apply_T(int i, const SparsePoly& p, const Params& P) {
  int n = P.n;
  SparsePoly sp = apply_reflection(i, p);
  SparsePoly diff = sp - p;
  SparsePoly quot(n);
  if (!diff.is_zero()) {
    try {
      quot = divide_linear(diff, simple_denominator(i, n));
    } catch (const DivisibilityError& e) {
      throw InternalError(std::string("generator action divisibility failed: ") + e.what());
    }
  }
  if (i == 0) {
    SparsePoly half_minus_x1 =
        SparsePoly::constant(n, rat(1, 2)) - SparsePoly::variable(n, 0);
    SparsePoly N0 = SparsePoly::constant(n, P.t0 * P.t0 - P.u0 * P.u0) +
                    half_minus_x1 * half_minus_x1;
    return P.t0 * sp + N0 * quot;
  }
  if (i == n) {
    SparsePoly xn = SparsePoly::variable(n, n - 1);
    SparsePoly Nn = SparsePoly::constant(n, P.tn * P.tn - P.un * P.un) + xn * xn;
    return P.tn * sp + Nn * quot;
  }
  return sp + P.t * quot;
}

}  // namespace

SparsePoly apply_generator(Gen kind, int i, const SparsePoly& p, const Params& P) {
  int n = P.n;
  if (p.nvars() != n) throw DimensionError("polynomial rank mismatch");
  switch (kind) {
    case Gen::T:
      if (i < 0 || i > n) throw PreconditionError("T index out of range");
      return apply_T(i, p, P);
    case Gen::Tvee: {
      if (i < 0 || i > n) throw PreconditionError("Tvee index out of range");
      if (i == 0)
        return SparsePoly::variable(n, 0) * p - rat(1, 2) * p - apply_T(0, p, P);
      if (i == n) return -(SparsePoly::variable(n, n - 1) * p) - apply_T(n, p, P);
      return apply_T(i, p, P);
    }
    case Gen::X:
      if (i < 1 || i > n) throw PreconditionError("X index out of range");
      return SparsePoly::variable(n, i - 1) * p;
  }
  throw PreconditionError("bad generator kind");
}

SparsePoly apply_word_T(const ReducedWord& word, SparsePoly p, const Params& P) {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    p = apply_generator(Gen::T, *it, p, P);
  return p;
}

namespace {

ReducedWord xi_in_word(int i, int n) {
  ReducedWord w;
  for (int k = i; k <= n; ++k) w.push_back(k);
  for (int k = n - 1; k >= i; --k) w.push_back(k);
  return w;
}

ReducedWord xi_0i_word(int i) {
  ReducedWord w;
  for (int k = i - 1; k >= 0; --k) w.push_back(k);
  for (int k = 1; k <= i - 1; ++k) w.push_back(k);
  return w;
}

ReducedWord tij_word(int i, int j) {
  ReducedWord w;
  for (int k = i; k <= j - 1; ++k) w.push_back(k);
  for (int k = j - 2; k >= i; --k) w.push_back(k);
  return w;
}

}  // namespace

SparsePoly apply_Y(int i, const SparsePoly& p, const Params& P) {
  int n = P.n;
  if (i < 1 || i > n) throw PreconditionError("Y index out of range");
  SparsePoly acc = apply_word_T(xi_in_word(i, n), p, P);
  acc += apply_word_T(xi_0i_word(i), p, P);
  for (int j = i + 1; j <= n; ++j) acc += P.t * apply_word_T(tij_word(i, j), p, P);
  return acc;
}

SparsePoly apply_Un(const SparsePoly& p, const Params& P) {
  int n = P.n;
  SparsePoly q = p;
  for (int k = 1; k <= n - 1; ++k) q = apply_generator(Gen::T, k, q, P);
  q = apply_generator(Gen::Tvee, n, q, P);
  for (int k = n - 1; k >= 1; --k) q = apply_generator(Gen::T, k, q, P);
  return q;
}

SparsePoly apply_a_of_Y(int i, const SparsePoly& p, const Params& P) {
  int n = P.n;
  if (i == 0) return p - 2 * apply_Y(1, p, P);
  if (i == n) return 2 * apply_Y(n, p, P);
  return apply_Y(i, p, P) - apply_Y(i + 1, p, P);
}

namespace {

SparsePoly apply_T_tilde(int i, const SparsePoly& p, const Params& P) {
  return i == 0 ? apply_Un(p, P) : apply_generator(Gen::T, i, p, P);
}

}  // namespace

SparsePoly apply_S(int i, const SparsePoly& p, const Params& P) {
  return apply_T_tilde(i, apply_a_of_Y(i, p, P), P) -
         apply_a_of_Y(i, apply_T_tilde(i, p, P), P);
}

SparsePoly apply_S_eigen(int i, const SparsePoly& p, std::span<const Rat> gamma,
                         const Params& P) {
  Rat ag = root_eval(simple_root(i, P.n), gamma);
  SparsePoly tp = apply_T_tilde(i, p, P);
  return ag * tp - apply_a_of_Y(i, tp, P);
}

// ---------------------------------------------------------------------------
// Symmetrizer and the explicit difference operator.

SparsePoly symmetrize_Cplus(const SparsePoly& p, const Params& P) {
  int n = P.n;
  if (p.nvars() != n) throw DimensionError("polynomial rank mismatch");
  SparsePoly Np = c_plus_numer(P) * p;
  SparsePoly acc(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  // Sum over signed permutations with weight det(w) = sign(perm) * prod(signs).
  do {
    int perm_sign = 1;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) perm_sign = -perm_sign;
    for (int mask = 0; mask < (1 << n); ++mask) {
      int det = perm_sign;
      std::vector<LinearForm> map;
      for (int v = 0; v < n; ++v) {
        LinearForm f = LinearForm::zero(n);
        int sign = (mask >> v) & 1 ? -1 : 1;
        if (sign < 0) det = -det;
        f.coeffs[perm[v]] = sign;
        map.push_back(std::move(f));
      }
      SparsePoly img = affine_substitute(Np, map);
      acc += Rat(det) * img;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  // Divide by |W0| * m, factor by factor.
  try {
    for (int j = 0; j < n; ++j) {
      LinearForm xj = LinearForm::zero(n);
      xj.coeffs[j] = 1;
      acc = divide_linear(acc, xj);
    }
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        LinearForm diff = LinearForm::zero(n);
        diff.coeffs[k] = 1;
        diff.coeffs[j] = -1;
        acc = divide_linear(acc, diff);
        LinearForm sum = LinearForm::zero(n);
        sum.coeffs[k] = 1;
        sum.coeffs[j] = 1;
        acc = divide_linear(acc, sum);
      }
  } catch (const DivisibilityError& e) {
    throw InternalError(std::string("symmetrizer divisibility failed: ") + e.what());
  }
  Rat scale(1);
  for (int j = 0; j < n; ++j) scale *= -2;
  return acc * (Rat(1) / (scale * Rat(w0_order(n))));
}

Rat L_coeff_A(int i, std::span<const Rat> x, const Params& P) {
  auto [a, b, c, d] = P.wilson_abcd();
  int n = P.n;
  const Rat& xi = x[i - 1];
  Rat den = 2 * xi * (2 * xi + 1);
  if (is_zero(den)) throw PoleError("L coefficient pole");
  Rat acc = (a + xi) * (b + xi) * (c + xi) * (d + xi) / den;
  for (int j = 1; j <= n; ++j) {
    if (j == i) continue;
    const Rat& xj = x[j - 1];
    Rat dj = (xi + xj) * (xi - xj);
    if (is_zero(dj)) throw PoleError("L coefficient pole");
    acc *= (P.t + xi + xj) * (P.t + xi - xj) / dj;
  }
  return acc;
}

Rat L_eigenvalue(const Weight& lam, const Params& P) {
  if (!is_dominant(lam)) throw PreconditionError("L eigenvalue needs a dominant weight");
  auto [a, b, c, d] = P.wilson_abcd();
  Rat abcd = a + b + c + d;
  Rat acc(0);
  int n = P.n;
  for (int i = 1; i <= n; ++i)
    acc += Rat(lam[i - 1]) * (Rat(lam[i - 1]) + abcd - 1 + 2 * (n - i) * P.t);
  return acc;
}

namespace {

Rat L_value_at(const SparsePoly& p, std::span<const Rat> x, const Params& P) {
  int n = P.n;
  std::vector<Rat> neg(x.size());
  for (std::size_t v = 0; v < x.size(); ++v) neg[v] = -x[v];
  Rat px = p.eval(x);
  Rat acc(0);
  std::vector<Rat> shifted(x.begin(), x.end());
  for (int i = 1; i <= n; ++i) {
    shifted[i - 1] = x[i - 1] + 1;
    acc += L_coeff_A(i, x, P) * (p.eval(shifted) - px);
    shifted[i - 1] = x[i - 1] - 1;
    acc += L_coeff_A(i, neg, P) * (p.eval(shifted) - px);
    shifted[i - 1] = x[i - 1];
  }
  return acc;
}

}  // namespace

SparsePoly apply_L_sym(const SparsePoly& p, const Params& P) {
  int n = P.n;
  if (p.nvars() != n) throw DimensionError("polynomial rank mismatch");
  for (int i = 1; i <= n; ++i)
    if (!(apply_reflection(i, p) == p))
      throw PreconditionError("L is defined on W0-invariant polynomials only");
  int d = std::max(0, p.total_degree());
  auto offsets = default_grid_offsets(n);
  RationalFn values = [&](std::span<const Rat> x) { return L_value_at(p, x, P); };
  SparsePoly q = interpolate_on_grid(values, n, d, offsets);
  // Certify the rational residual vanishes identically: its cleared
  // denominator has per-variable degree below d + 2n + 4.
  RationalFn residual = [&](std::span<const Rat> x) {
    return Rat(L_value_at(p, x, P) - q.eval(x));
  };
  if (!grid_verify_zero(residual, n, d + 2 * n + 4, offsets))
    throw InternalError("difference operator output failed grid certification");
  return q;
}

// ---------------------------------------------------------------------------
// Composable operators.

struct Op::Node {
  enum Kind { kIdentity, kGenerator, kCompose, kLinComb, kMul } kind = kIdentity;
  Gen gen = Gen::T;
  int index = 0;
  std::vector<Op> children;
  std::vector<std::pair<Rat, Op>> combo;
  std::shared_ptr<const SparsePoly> mult;
};

Op Op::identity() {
  Op op;
  auto node = std::make_shared<Node>();
  node->kind = Node::kIdentity;
  op.node_ = std::move(node);
  return op;
}

Op Op::scalar(const Rat& c) { return lincomb({{c, identity()}}); }

Op Op::gen(Gen kind, int index) {
  Op op;
  auto node = std::make_shared<Node>();
  node->kind = Node::kGenerator;
  node->gen = kind;
  node->index = index;
  op.node_ = std::move(node);
  return op;
}

Op Op::compose(std::vector<Op> factors) {
  Op op;
  auto node = std::make_shared<Node>();
  node->kind = Node::kCompose;
  node->children = std::move(factors);
  op.node_ = std::move(node);
  return op;
}

Op Op::lincomb(std::vector<std::pair<Rat, Op>> terms) {
  Op op;
  auto node = std::make_shared<Node>();
  node->kind = Node::kLinComb;
  node->combo = std::move(terms);
  op.node_ = std::move(node);
  return op;
}

Op Op::mul(SparsePoly q) {
  Op op;
  auto node = std::make_shared<Node>();
  node->kind = Node::kMul;
  node->mult = std::make_shared<const SparsePoly>(std::move(q));
  op.node_ = std::move(node);
  return op;
}

SparsePoly Op::apply(const SparsePoly& p, const Params& P) const {
  if (!node_) throw InternalError("empty operator");
  switch (node_->kind) {
    case Node::kIdentity:
      return p;
    case Node::kGenerator:
      return apply_generator(node_->gen, node_->index, p, P);
    case Node::kCompose: {
      SparsePoly cur = p;
      for (auto it = node_->children.rbegin(); it != node_->children.rend(); ++it)
        cur = it->apply(cur, P);
      return cur;
    }
    case Node::kLinComb: {
      SparsePoly acc(p.nvars());
      for (const auto& [c, child] : node_->combo) acc += c * child.apply(p, P);
      return acc;
    }
    case Node::kMul:
      return *node_->mult * p;
  }
  throw InternalError("bad operator node");
}

Op op_T(int i) { return Op::gen(Gen::T, i); }
Op op_Tvee(int i) { return Op::gen(Gen::Tvee, i); }
Op op_X(int i) { return Op::gen(Gen::X, i); }

Op op_word_T(const ReducedWord& word) {
  std::vector<Op> factors;
  for (int i : word) factors.push_back(op_T(i));
  return Op::compose(std::move(factors));
}

Op op_Tij(int i, int j) { return op_word_T(tij_word(i, j)); }
Op op_Xi_in(int i, int n) { return op_word_T(xi_in_word(i, n)); }

Op op_Xi_in_vee(int i, int n) {
  std::vector<Op> factors;
  for (int k = i; k <= n - 1; ++k) factors.push_back(op_T(k));
  factors.push_back(op_Tvee(n));
  for (int k = n - 1; k >= i; --k) factors.push_back(op_T(k));
  return Op::compose(std::move(factors));
}

Op op_Xi_0i(int i) { return op_word_T(xi_0i_word(i)); }

Op op_Xi_0i_vee(int i) {
  std::vector<Op> factors;
  for (int k = i - 1; k >= 1; --k) factors.push_back(op_T(k));
  factors.push_back(op_Tvee(0));
  for (int k = 1; k <= i - 1; ++k) factors.push_back(op_T(k));
  return Op::compose(std::move(factors));
}

Op op_Y(int i, const Params& P) {
  std::vector<std::pair<Rat, Op>> terms;
  terms.emplace_back(Rat(1), op_Xi_in(i, P.n));
  terms.emplace_back(Rat(1), op_Xi_0i(i));
  for (int j = i + 1; j <= P.n; ++j) terms.emplace_back(P.t, op_Tij(i, j));
  return Op::lincomb(std::move(terms));
}

Op op_Un(const Params& P) { return op_Xi_in_vee(1, P.n); }

Op op_a_of_Y(int i, const Params& P) {
  if (i == 0) return Op::lincomb({{Rat(1), Op::identity()}, {Rat(-2), op_Y(1, P)}});
  if (i == P.n) return Op::lincomb({{Rat(2), op_Y(P.n, P)}});
  return op_Y(i, P) - op_Y(i + 1, P);
}

Op op_commutator(const Op& a, const Op& b) { return a * b - b * a; }

Op op_S(int i, const Params& P) {
  Op tt = i == 0 ? op_Un(P) : op_T(i);
  return op_commutator(tt, op_a_of_Y(i, P));
}

Op op_poly_of_Y(const SparsePoly& q, const Params& P) {
  std::vector<std::pair<Rat, Op>> terms;
  for (const auto& [key, c] : q.terms()) {
    auto exps = SparsePoly::unpack(key, q.nvars());
    std::vector<Op> chain;
    for (int v = 0; v < q.nvars(); ++v)
      for (int e = 0; e < exps[v]; ++e) chain.push_back(op_Y(v + 1, P));
    terms.emplace_back(c, chain.empty() ? Op::identity() : Op::compose(std::move(chain)));
  }
  if (terms.empty()) return Op::lincomb({});
  return Op::lincomb(std::move(terms));
}

// ---------------------------------------------------------------------------
// Identity verification.

std::vector<std::vector<int>> verify_basis(int n, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(n, 0);
  for (;;) {
    int s = std::accumulate(e.begin(), e.end(), 0);
    if (s <= degree) out.push_back(e);
    int v = n - 1;
    while (v >= 0 && e[v] == degree) e[v--] = 0;
    if (v < 0) break;
    ++e[v];
  }
  std::sort(out.begin(), out.end());
  return out;
}

VerifyResult verify_operator_identity(const Op& lhs, const Op& rhs, int degree,
                                      const Params& P, Exec exec, std::string name) {
  auto monos = verify_basis(P.n, degree);
  int count = static_cast<int>(monos.size());
  std::vector<char> failed(count, 0);

  auto check_one = [&](int idx) {
    SparsePoly m = SparsePoly::monomial(P.n, monos[idx], Rat(1));
    failed[idx] = !(lhs.apply(m, P) == rhs.apply(m, P));
  };

  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int idx = 0; idx < count; ++idx) check_one(idx);
  } else {
    for (int idx = 0; idx < count; ++idx) {
      check_one(idx);
      if (failed[idx]) break;  // serial path can stop at the first failure
    }
  }

  VerifyResult res;
  res.name = std::move(name);
  res.ok = true;
  for (int idx = 0; idx < count; ++idx)
    if (failed[idx]) {
      res.ok = false;
      res.counterexample = monos[idx];
      break;
    }
  return res;
}

}  // namespace wpoly
