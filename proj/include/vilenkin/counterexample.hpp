#pragma once

#include "vilenkin/hardy.hpp"
#include "vilenkin/phi.hpp"

namespace vilenkin {

/// Configuration of the divergence construction: checkpoint levels
/// alpha_0 < alpha_1 < ... (0-based storage; each >= 1, last < N) and the
/// normalizing weight phi.
struct CounterexampleConfig {
    RadixRef rs;
    int depth = 0;  // evaluation depth N
    std::vector<int> alphas;
    PhiFunction phi = PhiFunction::constant(1.0);
    /// finite surrogate for the limsup condition: max over checkpoints of
    /// ln(n)/phi_n must exceed this
    double cond1_threshold = 2.0;

    void validate() const;  // throws std::invalid_argument
};

/// lambda = sqrt(phi(2 M_alpha)) / sqrt(ln M_alpha)
double lambda_k(const PhiFunction& phi, const RadixSystem& rs, int alpha);

/// The building-block atom r_alpha * D_{M_alpha}, certified against the
/// cylinder I_alpha(0). Construction cross-checks the identity
/// r_alpha * D_{M_alpha} = D_{2 M_alpha} - D_{M_alpha} to 1e-12.
Atom atom_k(const RadixRef& rs, int alpha, int depth);

/// f = sum lambda_k * a_k at the configured depth, with its decomposition.
std::pair<CylinderFunction, AtomicDecomposition> assemble_f(const CounterexampleConfig& cfg);

struct SpectrumCheckResult {
    bool ok = true;
    std::int64_t first_bad = -1;
    double max_err = 0.0;
};

/// Verifies the block spectrum: f_hat(j) = lambda_k on
/// [M_alpha_k, 2 M_alpha_k), zero elsewhere.
SpectrumCheckResult spectrum_check(const CylinderFunction& f,
                                   const CounterexampleConfig& cfg, double tol = 1e-10);

/// sup-norm residual of S_j f = S_{M_alpha} f + lambda * psi_{M_alpha} *
/// D_{j - M_alpha} for in-block j. k indexes cfg.alphas (0-based).
double decomposition_check(const CylinderFunction& f, const CounterexampleConfig& cfg,
                           std::int64_t j, int k);

struct LedgerRow {
    int k = 0;  // 1-based checkpoint number
    int alpha = 0;
    std::int64_t m_alpha = 0;
    double lambda = 0.0;
    std::int64_t n = 0;  // checkpoint 2 M_alpha
    double q = 0.0;      // (1/(n phi_n)) sum_{l<=n} ||S_l f||_1
    double in_block_mean = 0.0;
    double lower_bound = 0.0;  // sqrt(ln M_alpha) / sqrt(phi(2 M_alpha))
    double envelope_max = 0.0;  // max |  ||S_l f||_1 - lambda L(l-M) | - ||S_M f||_1
};

struct DivergenceLedger {
    std::vector<LedgerRow> rows;
    double sum_lambda = 0.0;
    double proxy_norm = 0.0;
    bool q_increasing = true;
};

DivergenceLedger divergence_experiment(const CounterexampleConfig& cfg);

struct PartARow {
    std::int64_t n = 0;
    double t_log = 0.0;
    double ratio = 0.0;  // t_log / h1 upper bound
};

struct PartAReport {
    std::vector<std::vector<PartARow>> per_function;
    double max_ratio = 0.0;
};

/// Measures R(n) = [(1/(n ln n)) sum ||S_k f||_1] / h1_upper for each
/// (function, upper-bound) pair over the n grid.
PartAReport part_a_check(
    const std::vector<std::pair<CylinderFunction, double>>& functions,
    const std::vector<std::int64_t>& n_list);

}  // namespace vilenkin
