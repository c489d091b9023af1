#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "wpoly/errors.hpp"

namespace wpoly {

// Exact rational scalars. GMP's mpq_class keeps values canonical
// (gcd(|num|,den) = 1, den >= 1) as long as every entry point canonicalizes,
// which the helpers below enforce.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw PoleError("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p", "-p", "p/q" with optional sign on p; decimal digits only.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw ConfigError("empty rational literal");
  std::size_t slash = s.find('/');
  auto digits_ok = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw ConfigError("malformed rational literal: " + s);
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
    throw ConfigError("malformed rational literal: " + s);
  if (q.get_den() == 0) throw ConfigError("zero denominator in: " + s);
  q.canonicalize();
  return q;
}

// "p/q", or just "p" when q == 1.
inline std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline std::string rat_vec_str(const std::vector<Rat>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += rat_str(v[i]);
  }
  return out + ")";
}

}  // namespace wpoly
