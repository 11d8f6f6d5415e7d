#pragma once

// Named verification suites behind `chowgen verify`.

#include <string>
#include <vector>

#include "chowgen/grstruct.hpp"

namespace chowgen {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int k = 4;        ///< beta-ideal: ranks 1..k; cs-membership: rank 2k+1
  int d_max = 12;   ///< sym-closed-forms
  int d = 5;        ///< torsion, hyperplane, a1
  int lo = 1, hi = 6;  ///< torsion degree range
  int f = 2;        ///< pushforward: f = g
  int e = 2;        ///< proof-chain
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Throws InvalidArgument for unknown suites or out-of-range options and
/// ScaleExceeded when a check leaves the resource guard.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options,
                                   const ResourceGuard& guard = {});

// Individual identities, shared with the test suites.

/// Degree 1 and 2 parts of c(Sym^d S), rank 2, against the closed forms.
CheckResult check_sym_closed_form(int d);
/// (beta_1..beta_k) = (2c1, 2c3, ...) for a rank-k bundle.
CheckResult check_beta_ideal(int k, const ResourceGuard& guard = {});
/// pushforward(zeta^(i-1) c_f(G (x) O(1))) = gamma_i, c(G)/c(F) = 1 + gamma_1 + ..., f = g.
CheckResult check_segre_identity(int f);
/// pushforward(zeta^(e-1+i)) = alpha_i and pushforward(zeta^(i-1) (L+zeta)^e) = alpha'_i.
CheckResult check_proof_chain(int e);
/// Degree-1 group of A*(d): Z/(d+1) for even d, Z/n for d = 2n-1.
CheckResult check_a1(int d, const ResourceGuard& guard = {});
/// free rank 0 in degrees lo..hi, integral and rational presentations.
CheckResult check_torsion(int d, int lo, int hi, const ResourceGuard& guard = {});
CheckResult check_hyperplane(int d);
CheckResult check_cs_membership(int k, const ResourceGuard& guard = {});

}  // namespace chowgen
