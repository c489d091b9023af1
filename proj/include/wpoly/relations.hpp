#pragma once

#include <string>
#include <vector>

#include "wpoly/operators.hpp"

namespace wpoly {

struct IdentityCheck {
  std::string name;
  Op lhs, rhs;
};

// Every algebra relation realized in the representation: quadratic, deformed
// braid (both generator families), cross relations with p(X) = X_j, the
// mixed T/Tvee lemma including the compatibility sum, duality braid-type
// relations, intertwiner braid + S_i^2 = q_i(Y), Y commutativity and Y-side
// cross relations, recursion, and center spot checks.
std::vector<IdentityCheck> relation_suite(const Params& P);

// Reduced presentation of the rational GDAHA under the explicit isomorphism,
// with gauge constants gamma_k = mu_0/4 and nu = -t.
std::vector<IdentityCheck> gdaha_suite(const Params& P);

struct SuiteReport {
  std::vector<VerifyResult> results;
  bool all_ok = true;
};

SuiteReport run_suite(const std::vector<IdentityCheck>& checks, int degree,
                      const Params& P, Exec exec = Exec::Parallel);

}  // namespace wpoly
