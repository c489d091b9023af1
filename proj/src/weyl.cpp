#include "wpoly/weyl.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

namespace wpoly {

bool is_dominant(const Weight& lam) {
  for (std::size_t i = 0; i + 1 < lam.size(); ++i)
    if (lam[i] < lam[i + 1]) return false;
  return lam.empty() ? true : lam.back() >= 0;
}

Weight dominant_rep(const Weight& lam) {
  Weight d = lam;
  for (auto& x : d) x = std::abs(x);
  std::sort(d.begin(), d.end(), std::greater<int>());
  return d;
}

int abs_sum(const Weight& lam) {
  int s = 0;
  for (int x : lam) s += std::abs(x);
  return s;
}

int phi_int(int m) { return m >= 0 ? 2 * m : -2 * m - 1; }

int phi_inv_int(int e) { return e % 2 == 0 ? e / 2 : -(e + 1) / 2; }

std::vector<int> phi_map(const Weight& lam) {
  std::vector<int> e(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) e[i] = phi_int(lam[i]);
  return e;
}

Weight phi_inv(std::span<const int> exps) {
  Weight lam(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) lam[i] = phi_inv_int(exps[i]);
  return lam;
}

int filtration_level(std::span<const int> exps) { return abs_sum(phi_inv(exps)); }

namespace {

// -1: not a root shape; 0: short; 1: long.
int root_shape(const AffineRoot& a) {
  int n = static_cast<int>(a.v.size());
  int nonzero = 0, norm2 = 0;
  for (int i = 0; i < n; ++i) {
    if (a.v[i] != 0) ++nonzero;
    norm2 += a.v[i] * a.v[i];
  }
  if (nonzero == 1 && norm2 == 4) return 1;
  if (nonzero == 2 && norm2 == 2) return 0;
  return -1;
}

}  // namespace

bool root_is_long(const AffineRoot& a) {
  int s = root_shape(a);
  if (s < 0) throw ShapeError("malformed affine root finite part");
  return s == 1;
}

bool root_is_positive(const AffineRoot& a) {
  if (a.c != 0) return a.c > 0;
  for (int x : a.v) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  throw ShapeError("zero finite part");
}

RootOrbit classify_orbit(const AffineRoot& a) {
  if (root_is_long(a)) return (a.c % 2 != 0) ? RootOrbit::A0 : RootOrbit::An;
  return RootOrbit::Mid;
}

AffineRoot simple_root(int i, int n) {
  AffineRoot a;
  a.v.assign(n, 0);
  if (i == 0) {
    a.v[0] = -2;
    a.c = 1;
  } else if (i < n) {
    a.v[i - 1] = 1;
    a.v[i] = -1;
  } else if (i == n) {
    a.v[n - 1] = 2;
  } else {
    throw PreconditionError("simple root index out of range");
  }
  return a;
}

AffineRoot negate_root(const AffineRoot& a) {
  AffineRoot b = a;
  for (auto& x : b.v) x = -x;
  b.c = -a.c;
  return b;
}

AffineRoot reflect_root(int i, const AffineRoot& a) {
  int n = static_cast<int>(a.v.size());
  if (i < 0 || i > n) throw PreconditionError("reflection index out of range");
  AffineRoot s = simple_root(i, n);
  // <a, s^vee>: the bilinear form ignores the delta part.
  long pairing;
  if (i == 0)
    pairing = -a.v[0];  // s^vee = (delta - 2e_1)/2
  else if (i < n)
    pairing = a.v[i - 1] - a.v[i];
  else
    pairing = a.v[n - 1];
  AffineRoot out = a;
  for (int j = 0; j < n; ++j) out.v[j] -= static_cast<int>(pairing) * s.v[j];
  out.c -= static_cast<int>(pairing) * s.c;
  return out;
}

Rat root_eval(const AffineRoot& a, std::span<const Rat> x) {
  Rat acc(a.c);
  for (std::size_t i = 0; i < a.v.size(); ++i)
    if (a.v[i]) acc += Rat(a.v[i]) * x[i];
  return acc;
}

void apply_simple_point(int i, std::vector<Rat>& x) {
  int n = static_cast<int>(x.size());
  if (i == 0)
    x[0] = 1 - x[0];
  else if (i < n)
    std::swap(x[i - 1], x[i]);
  else if (i == n)
    x[n - 1] = -x[n - 1];
  else
    throw PreconditionError("reflection index out of range");
}

void apply_simple_dot(int i, std::vector<Rat>& x) {
  if (i == 0)
    x[0] = -x[0] - 1;
  else
    apply_simple_point(i, x);
}

std::vector<Rat> dot_apply(const ReducedWord& word, std::vector<Rat> x) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) apply_simple_dot(*it, x);
  return x;
}

Weight dot_simple_weight(int i, Weight lam) {
  int n = static_cast<int>(lam.size());
  if (i == 0)
    lam[0] = -lam[0] - 1;
  else if (i < n)
    std::swap(lam[i - 1], lam[i]);
  else if (i == n)
    lam[n - 1] = -lam[n - 1];
  else
    throw PreconditionError("reflection index out of range");
  return lam;
}

Weight dot_apply_weight(const ReducedWord& word, Weight lam) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) lam = dot_simple_weight(*it, lam);
  return lam;
}

namespace {

// Breadth-first table of the dot-action orbit of 0, grown on demand and
// shared per rank. Contents are deterministic: FIFO expansion, letters in
// increasing order, first arrival wins.
class OrbitTable {
 public:
  explicit OrbitTable(int n) : n_(n) {
    table_[Weight(n, 0)] = {-1, 0};
    frontier_.push_back(Weight(n, 0));
  }

  ReducedWord word(const Weight& lam) {
    std::lock_guard<std::mutex> lock(mu_);
    grow_until(lam);
    ReducedWord w;
    Weight cur = lam;
    while (true) {
      auto& entry = table_.at(cur);
      if (entry.letter < 0) break;
      w.push_back(entry.letter);
      cur = dot_simple_weight(entry.letter, cur);  // involution: back to parent
    }
    return w;
  }

  int distance(const Weight& lam) {
    std::lock_guard<std::mutex> lock(mu_);
    grow_until(lam);
    return table_.at(lam).dist;
  }

 private:
  struct Entry {
    int letter;  // -1 at the origin
    int dist;
  };

  void grow_until(const Weight& lam) {
    while (table_.find(lam) == table_.end()) {
      if (frontier_.empty()) throw InternalError("dot-action orbit exhausted");
      std::vector<Weight> next;
      for (const auto& state : frontier_) {
        int d = table_.at(state).dist;
        for (int i = 0; i <= n_; ++i) {
          Weight img = dot_simple_weight(i, state);
          if (img == state) continue;
          if (table_.emplace(img, Entry{i, d + 1}).second) next.push_back(img);
        }
      }
      frontier_ = std::move(next);
    }
  }

  int n_;
  std::map<Weight, Entry> table_;
  std::vector<Weight> frontier_;
  std::mutex mu_;
};

OrbitTable& orbit_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<OrbitTable>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = tables[n];
  if (!slot) slot = std::make_unique<OrbitTable>(n);
  return *slot;
}

}  // namespace

ReducedWord u_lambda_word(const Weight& lam) {
  return orbit_table(static_cast<int>(lam.size())).word(lam);
}

int u_lambda_length(const Weight& lam) {
  return orbit_table(static_cast<int>(lam.size())).distance(lam);
}

std::vector<AffineRoot> inversion_set(const ReducedWord& word, int n) {
  std::vector<AffineRoot> out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    AffineRoot beta = simple_root(word[k], n);
    for (std::size_t j = k; j-- > 0;) beta = reflect_root(word[j], beta);
    if (!root_is_positive(beta))
      throw ReducednessError("word is not reduced: non-positive inversion root");
    for (const auto& seen : out)
      if (seen == beta) throw ReducednessError("word is not reduced: repeated inversion root");
    out.push_back(std::move(beta));
  }
  return out;
}

std::vector<AffineRoot> tau_inversion_set(const Weight& lam) {
  if (!is_dominant(lam)) throw PreconditionError("tau inversion set needs a dominant weight");
  int n = static_cast<int>(lam.size());
  std::vector<AffineRoot> out;
  std::vector<std::vector<int>> shapes;
  for (int i = 0; i < n; ++i)
    for (int sign : {2, -2}) {
      std::vector<int> v(n, 0);
      v[i] = sign;
      shapes.push_back(v);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int sj : {1, -1}) {
        std::vector<int> v(n, 0);
        v[i] = 1;
        v[j] = sj;
        if (std::find(shapes.begin(), shapes.end(), v) == shapes.end()) shapes.push_back(v);
        std::vector<int> w(n, 0);
        w[i] = -1;
        w[j] = -sj;
        if (std::find(shapes.begin(), shapes.end(), w) == shapes.end()) shapes.push_back(w);
      }
    }
  for (const auto& v : shapes) {
    long pair = 0;
    for (int i = 0; i < n; ++i) pair += static_cast<long>(lam[i]) * v[i];
    // alpha = v + c delta positive, tau(lambda)^{-1} alpha = v + (c - <lam,v>) delta negative.
    for (long c = 0; c <= pair; ++c) {
      AffineRoot a{v, static_cast<int>(c)};
      if (!root_is_positive(a)) continue;
      long cp = c - pair;
      AffineRoot shifted{v, static_cast<int>(cp)};
      bool negative = cp != 0 ? cp < 0 : !root_is_positive(shifted);
      if (negative) out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> w0_orbit(const Weight& lam) {
  std::set<Weight> seen{lam};
  std::vector<Weight> frontier{lam};
  int n = static_cast<int>(lam.size());
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier)
      for (int i = 1; i <= n; ++i) {
        Weight img = dot_simple_weight(i, w);
        if (seen.insert(img).second) next.push_back(img);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

long w0_order(int n) {
  long f = 1;
  for (int i = 1; i <= n; ++i) f *= 2L * i;
  return f;
}

std::vector<Weight> weights_up_to(int n, int level) {
  std::vector<Weight> out;
  Weight cur(n, -level);
  // Plain box scan; filter by abs_sum.
  for (;;) {
    if (abs_sum(cur) <= level) out.push_back(cur);
    int v = n - 1;
    while (v >= 0 && cur[v] == level) cur[v--] = -level;
    if (v < 0) break;
    ++cur[v];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wpoly
