#pragma once

#include <array>
#include <string>

#include "wpoly/rational.hpp"
#include "wpoly/weyl.hpp"

namespace wpoly {

// Multiplicity data (t0, u0, t, tn, un): orbit-wise constants on the
// nonreduced affine root system, plus the rank. Everything downstream is a
// pure function of this struct.
struct Params {
  int n = 2;
  Rat t0, u0, t, tn, un;

  Rat k0() const { return 2 * (t0 + u0); }
  Rat k1() const { return t; }
  Rat kn() const { return 2 * (tn + un); }

  // Wilson quadruple (a, b, c, d).
  std::array<Rat, 4> wilson_abcd() const {
    return {tn + un, tn - un, t0 + u0 + rat(1, 2), t0 - u0 + rat(1, 2)};
  }

  Rat chi(int i) const {
    if (i == 0) return t0;
    if (i == n) return tn;
    return Rat(1);
  }

  // Duality involution on the parameters: swaps the a0- and an^vee-orbit
  // values.
  Params sigma() const { return Params{n, un, u0, t, tn, t0}; }

  Rat orbit_t(RootOrbit o) const {
    switch (o) {
      case RootOrbit::A0: return t0;
      case RootOrbit::Mid: return t;
      case RootOrbit::An: return tn;
    }
    throw PreconditionError("bad orbit tag");
  }

  // Value on the coroot orbit (long roots only).
  Rat orbit_u(RootOrbit o) const {
    switch (o) {
      case RootOrbit::A0: return u0;
      case RootOrbit::An: return un;
      default: throw PreconditionError("short roots have no coroot multiplicity");
    }
  }

  bool numeric_positive() const {
    auto [a, b, c, d] = wilson_abcd();
    return sgn(a) > 0 && sgn(b) > 0 && sgn(c) > 0 && sgn(d) > 0 && sgn(t) > 0;
  }

  std::string str() const {
    return "(t0,u0,t,tn,un)=(" + rat_str(t0) + "," + rat_str(u0) + "," + rat_str(t) +
           "," + rat_str(tn) + "," + rat_str(un) + "), n=" + std::to_string(n);
  }

  bool operator==(const Params&) const = default;
};

// Desk defaults: the generic set used throughout the test suites and a
// second independent one for cross-validation.
inline Params default_params(int n = 2) {
  return Params{n, rat(7, 10), rat(3, 10), rat(1, 2), rat(4, 5), rat(2, 5)};
}

inline Params alternate_params(int n = 2) {
  return Params{n, rat(2, 3), rat(1, 4), rat(1, 3), rat(3, 5), rat(1, 5)};
}

}  // namespace wpoly
