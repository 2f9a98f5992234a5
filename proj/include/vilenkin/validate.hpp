#pragma once

#include <string>

#include "vilenkin/radix.hpp"

namespace vilenkin {

struct IdentityResult {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = true;
};

/// Runs the exact-identity suite on the given system at depth d:
///   dirichlet_at_M   D_{M_n} = M_n on I_n, 0 elsewhere
///   dirichlet_multiple   D_{s M_n} = D_{M_n} * sum_{k<s} r_n^k
///   dirichlet_shift      D_{j+M_n} = D_{M_n} + psi_{M_n} D_j, j <= M_n
///   block_spectrum       coefficient blocks of the assembled atom sum
///   block_partial_sum    S_j f = S_M f + lambda psi_M D_{j-M} in-block
/// corrupt_eps != 0 perturbs the first kernel, the negative-control hook.
std::vector<IdentityResult> run_identity_suite(const RadixRef& rs, int d,
                                               double corrupt_eps = 0.0);

}  // namespace vilenkin
