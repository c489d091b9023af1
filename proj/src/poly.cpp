#include "wpoly/poly.hpp"

#include <algorithm>
#include <sstream>

namespace wpoly {

SparsePoly::SparsePoly(int nvars) : nvars_(nvars) {
  if (nvars < 1 || nvars > kMaxVars)
    throw DimensionError("unsupported variable count " + std::to_string(nvars));
}

SparsePoly SparsePoly::constant(int nvars, const Rat& c) {
  SparsePoly p(nvars);
  if (!wpoly::is_zero(c)) p.terms_.emplace(0, c);
  return p;
}

SparsePoly SparsePoly::monomial(int nvars, std::span<const int> exps, const Rat& c) {
  if (static_cast<int>(exps.size()) != nvars)
    throw DimensionError("exponent vector length mismatch");
  SparsePoly p(nvars);
  if (!wpoly::is_zero(c)) p.terms_.emplace(pack(exps), c);
  return p;
}

SparsePoly SparsePoly::variable(int nvars, int var) {
  std::vector<int> e(nvars, 0);
  e.at(var) = 1;
  return monomial(nvars, e, Rat(1));
}

int SparsePoly::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) {
    int s = 0;
    for (int v = 0; v < nvars_; ++v) s += static_cast<int>((k >> (8 * (nvars_ - 1 - v))) & 0xff);
    d = std::max(d, s);
  }
  return d;
}

int SparsePoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [k, c] : terms_)
    d = std::max(d, static_cast<int>((k >> (8 * (nvars_ - 1 - var))) & 0xff));
  return d;
}

Rat SparsePoly::coeff(std::span<const int> exps) const {
  if (static_cast<int>(exps.size()) != nvars_)
    throw DimensionError("exponent vector length mismatch");
  return coeff_key(pack(exps));
}

Rat SparsePoly::coeff_key(Key k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rat(0) : it->second;
}

void SparsePoly::set_coeff(std::span<const int> exps, const Rat& c) {
  Key k = pack(exps);
  if (wpoly::is_zero(c))
    terms_.erase(k);
  else
    terms_[k] = c;
}

void SparsePoly::add_term(Key k, const Rat& c) {
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (wpoly::is_zero(it->second)) terms_.erase(it);
  } else if (wpoly::is_zero(c)) {
    terms_.erase(it);
  }
}

void SparsePoly::check_same(const SparsePoly& o) const {
  if (nvars_ != o.nvars_) throw DimensionError("variable count mismatch");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  check_same(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rat& c) {
  if (wpoly::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly p(nvars_);
  for (const auto& [k, c] : terms_) p.terms_.emplace(k, -c);
  return p;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check_same(b);
  SparsePoly p(a.nvars_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) p.add_term(ka + kb, ca * cb);
  return p;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Rat SparsePoly::eval(std::span<const Rat> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw DimensionError("evaluation point length mismatch");
  // Powers are cached per variable up to the degree actually present.
  std::vector<std::vector<Rat>> pows(nvars_);
  for (int v = 0; v < nvars_; ++v) pows[v].push_back(Rat(1));
  Rat acc(0);
  for (const auto& [k, c] : terms_) {
    Rat term = c;
    for (int v = 0; v < nvars_; ++v) {
      int e = static_cast<int>((k >> (8 * (nvars_ - 1 - v))) & 0xff);
      auto& pw = pows[v];
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * point[v]);
      if (e) term *= pw[e];
    }
    acc += term;
  }
  return acc;
}

SparsePoly SparsePoly::shifted(std::span<const Rat> delta) const {
  if (static_cast<int>(delta.size()) != nvars_)
    throw DimensionError("shift vector length mismatch");
  std::vector<LinearForm> map;
  for (int v = 0; v < nvars_; ++v) {
    LinearForm f = LinearForm::zero(nvars_);
    f.coeffs[v] = 1;
    f.constant = delta[v];
    map.push_back(std::move(f));
  }
  return affine_substitute(*this, map);
}

SparsePoly::Key SparsePoly::pack(std::span<const int> exps) {
  Key k = 0;
  int n = static_cast<int>(exps.size());
  for (int v = 0; v < n; ++v) {
    if (exps[v] < 0 || exps[v] > kMaxExp)
      throw DimensionError("exponent out of range: " + std::to_string(exps[v]));
    k |= static_cast<Key>(exps[v]) << (8 * (n - 1 - v));
  }
  return k;
}

std::vector<int> SparsePoly::unpack(Key k, int nvars) {
  std::vector<int> e(nvars);
  for (int v = 0; v < nvars; ++v) e[v] = static_cast<int>((k >> (8 * (nvars - 1 - v))) & 0xff);
  return e;
}

std::string SparsePoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << rat_str(c) << ")";
    auto e = unpack(k, nvars_);
    for (int v = 0; v < nvars_; ++v)
      if (e[v]) os << "*x" << (v + 1) << "^" << e[v];
  }
  return os.str();
}

Rat LinearForm::eval(std::span<const Rat> point) const {
  if (point.size() != coeffs.size()) throw DimensionError("linear form point mismatch");
  Rat acc = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * point[i];
  return acc;
}

SparsePoly LinearForm::to_poly() const {
  SparsePoly p = SparsePoly::constant(nvars(), constant);
  for (int v = 0; v < nvars(); ++v)
    if (!wpoly::is_zero(coeffs[v])) p += coeffs[v] * SparsePoly::variable(nvars(), v);
  return p;
}

bool LinearForm::is_identically_zero() const {
  if (!wpoly::is_zero(constant)) return false;
  for (const auto& c : coeffs)
    if (!wpoly::is_zero(c)) return false;
  return true;
}

LinearForm LinearForm::zero(int nvars) {
  return LinearForm{std::vector<Rat>(nvars, Rat(0)), Rat(0)};
}

SparsePoly affine_substitute(const SparsePoly& p, std::span<const LinearForm> map) {
  int n = p.nvars();
  if (static_cast<int>(map.size()) != n)
    throw DimensionError("substitution map length mismatch");
  // Powers of each image polynomial, grown on demand.
  std::vector<std::vector<SparsePoly>> pows(n);
  for (int v = 0; v < n; ++v) {
    pows[v].push_back(SparsePoly::constant(n, Rat(1)));
    pows[v].push_back(map[v].to_poly());
  }
  SparsePoly out(n);
  for (const auto& [k, c] : p.terms()) {
    SparsePoly term = SparsePoly::constant(n, c);
    auto e = SparsePoly::unpack(k, n);
    for (int v = 0; v < n; ++v) {
      auto& pw = pows[v];
      while (static_cast<int>(pw.size()) <= e[v]) pw.push_back(pw.back() * pw[1]);
      if (e[v]) term = term * pw[e[v]];
    }
    out += term;
  }
  return out;
}

SparsePoly divide_linear(const SparsePoly& p, const LinearForm& ell) {
  int n = p.nvars();
  if (ell.nvars() != n) throw DimensionError("divisor variable count mismatch");
  if (ell.is_identically_zero()) throw PoleError("division by the zero form");
  // Distinguished variable: last one with a nonzero coefficient.
  int k = -1;
  for (int v = n - 1; v >= 0; --v)
    if (!is_zero(ell.coeffs[v])) {
      k = v;
      break;
    }
  if (k < 0) throw PoleError("division by a constant form is a scalar multiply");
  const Rat& ck = ell.coeffs[k];
  SparsePoly ellp = ell.to_poly();
  SparsePoly rem = p;
  SparsePoly quot(n);
  // Synthetic division in x_k with polynomial coefficients in the rest:
  // kill the top x_k-slice at each step, descending.
  for (int d = rem.degree_in(k); d >= 1; d = std::min(d - 1, rem.degree_in(k))) {
    SparsePoly slice(n);
    for (const auto& [key, c] : rem.terms()) {
      int ek = static_cast<int>((key >> (8 * (n - 1 - k))) & 0xff);
      if (ek == d) slice.add_term(key - (static_cast<SparsePoly::Key>(1) << (8 * (n - 1 - k))), c);
    }
    if (slice.is_zero()) continue;
    SparsePoly qd = slice * (Rat(1) / ck);
    quot += qd;
    rem -= qd * ellp;
  }
  if (!rem.is_zero())
    throw DivisibilityError("not divisible; remainder " + rem.str(), rem);
  return quot;
}

std::vector<Rat> default_grid_offsets(int nvars) {
  static const int odd_primes[] = {3, 5, 7, 11, 13, 17, 19, 23};
  std::vector<Rat> off;
  for (int v = 0; v < nvars; ++v) off.push_back(rat(1, odd_primes[v]));
  return off;
}

namespace {

template <typename F>
void for_each_grid_point(int nvars, int count_per_var, std::span<const Rat> offsets, F&& f) {
  std::vector<int> idx(nvars, 0);
  std::vector<Rat> point(nvars);
  for (;;) {
    for (int v = 0; v < nvars; ++v) point[v] = offsets[v] + idx[v];
    f(std::span<const int>(idx), std::span<const Rat>(point));
    int v = nvars - 1;
    while (v >= 0 && ++idx[v] == count_per_var) idx[v--] = 0;
    if (v < 0) break;
  }
}

}  // namespace

bool grid_verify_zero(const RationalFn& expr, int nvars, int degree_bound,
                      std::span<const Rat> offsets) {
  if (static_cast<int>(offsets.size()) != nvars)
    throw DimensionError("offset vector length mismatch");
  if (degree_bound < 1) throw PreconditionError("degree bound must be positive");
  bool all_zero = true;
  std::vector<int> idx(nvars, 0);
  std::vector<Rat> point(nvars);
  for (;;) {
    for (int v = 0; v < nvars; ++v) point[v] = offsets[v] + idx[v];
    Rat value;
    try {
      value = expr(point);
    } catch (const PoleError& e) {
      throw GridConfigError(std::string("denominator vanished at grid point ") +
                            rat_vec_str(point) + ": " + e.what());
    }
    if (!is_zero(value)) {
      all_zero = false;
      break;
    }
    int v = nvars - 1;
    while (v >= 0 && ++idx[v] == degree_bound) idx[v--] = 0;
    if (v < 0) break;
  }
  return all_zero;
}

namespace {

// Coefficients of the univariate polynomial of degree <= d with the given
// values at nodes o, o+1, ..., o+d (Newton form, expanded).
std::vector<Rat> interp_1d(const std::vector<Rat>& values, const Rat& offset) {
  int d = static_cast<int>(values.size()) - 1;
  // Divided differences over unit-spaced nodes.
  std::vector<Rat> dd = values;
  for (int level = 1; level <= d; ++level)
    for (int j = d; j >= level; --j) dd[j] = (dd[j] - dd[j - 1]) / Rat(level);
  // Expand sum_j dd[j] * prod_{m<j} (x - offset - m).
  std::vector<Rat> coeffs(d + 1, Rat(0));
  std::vector<Rat> basis{Rat(1)};  // running product
  for (int j = 0; j <= d; ++j) {
    for (std::size_t m = 0; m < basis.size(); ++m) coeffs[m] += dd[j] * basis[m];
    if (j < d) {
      Rat node = offset + j;
      basis.push_back(Rat(0));
      for (int m = static_cast<int>(basis.size()) - 1; m >= 1; --m)
        basis[m] = basis[m - 1] - node * basis[m];
      basis[0] *= -node;
    }
  }
  return coeffs;
}

}  // namespace

SparsePoly interpolate_on_grid(const RationalFn& values, int nvars, int degree_per_var,
                               std::span<const Rat> offsets) {
  if (static_cast<int>(offsets.size()) != nvars)
    throw DimensionError("offset vector length mismatch");
  int count = degree_per_var + 1;
  // Dense tensor of values, laid out with the last variable fastest.
  std::size_t total = 1;
  for (int v = 0; v < nvars; ++v) total *= count;
  std::vector<Rat> data(total);
  for_each_grid_point(nvars, count, offsets, [&](std::span<const int> idx, std::span<const Rat> pt) {
    std::size_t flat = 0;
    for (int v = 0; v < nvars; ++v) flat = flat * count + idx[v];
    try {
      data[flat] = values(pt);
    } catch (const PoleError& e) {
      throw GridConfigError(std::string("denominator vanished at grid point ") +
                            rat_vec_str(std::vector<Rat>(pt.begin(), pt.end())) + ": " + e.what());
    }
  });
  // Convert axis by axis from values to coefficients.
  for (int axis = nvars - 1; axis >= 0; --axis) {
    std::size_t stride = 1;
    for (int v = axis + 1; v < nvars; ++v) stride *= count;
    std::size_t block = stride * count;
    for (std::size_t base = 0; base < total; base += block) {
      for (std::size_t inner = 0; inner < stride; ++inner) {
        std::vector<Rat> line(count);
        for (int j = 0; j < count; ++j) line[j] = data[base + inner + j * stride];
        auto coeffs = interp_1d(line, offsets[axis]);
        for (int j = 0; j < count; ++j) data[base + inner + j * stride] = coeffs[j];
      }
    }
  }
  SparsePoly out(nvars);
  std::vector<int> idx(nvars, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (int v = nvars - 1; v >= 0; --v) {
      idx[v] = static_cast<int>(rem % count);
      rem /= count;
    }
    if (!is_zero(data[flat])) out.add_term(SparsePoly::pack(idx), data[flat]);
  }
  return out;
}

std::string poly_to_json(const SparsePoly& p) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    if (!first) os << ",";
    first = false;
    os << "{\"exp\":[";
    auto e = SparsePoly::unpack(k, p.nvars());
    for (int v = 0; v < p.nvars(); ++v) {
      if (v) os << ",";
      os << e[v];
    }
    os << "],\"num\":\"" << Rat(c).get_num().get_str() << "\",\"den\":\""
       << Rat(c).get_den().get_str() << "\"}";
  }
  os << "]";
  return os.str();
}

}  // namespace wpoly
