#include "vilenkin/counterexample.hpp"

#include <algorithm>
#include <cmath>

#include "vilenkin/kernels.hpp"
#include "vilenkin/operators.hpp"

namespace vilenkin {

void CounterexampleConfig::validate() const {
    if (!rs) throw std::invalid_argument("config: null radix system");
    if (depth < 1 || depth > rs->depth())
        throw std::invalid_argument("config: depth outside [1, N]");
    for (int a : alphas) {
        if (a < 1) throw std::invalid_argument("config: alpha below 1");
        if (a >= depth) throw std::invalid_argument("config: alpha >= depth (2 M_alpha not representable)");
    }
    for (std::size_t i = 1; i < alphas.size(); ++i)
        if (alphas[i] <= alphas[i - 1])
            throw std::invalid_argument("config: alphas not strictly increasing");
    if (alphas.empty()) return;

    // phi must be nondecreasing on the checkpoints, and the finite
    // surrogate of the limsup condition must clear the threshold.
    double prev_phi = 1.0;
    double best = 0.0;
    for (int a : alphas) {
        const std::int64_t n = 2 * rs->modulus(a);
        const double p = phi(n);
        if (p + 1e-15 < prev_phi)
            throw std::invalid_argument("config: phi decreasing on checkpoints");
        prev_phi = p;
        best = std::max(best, std::log(static_cast<double>(n)) / p);
    }
    if (best < cond1_threshold)
        throw std::invalid_argument("config: ln(n)/phi_n never exceeds the configured threshold");
}

double lambda_k(const PhiFunction& phi, const RadixSystem& rs, int alpha) {
    if (alpha < 1) throw std::invalid_argument("lambda_k: alpha must be >= 1 (ln M_alpha > 0)");
    if (alpha >= rs.depth()) throw std::out_of_range("lambda_k: alpha exceeds depth");
    const std::int64_t m = rs.modulus(alpha);
    return std::sqrt(phi(2 * m)) / std::sqrt(std::log(static_cast<double>(m)));
}

Atom atom_k(const RadixRef& rs, int alpha, int depth) {
    if (alpha < 0 || alpha >= rs->depth() || alpha + 1 > depth)
        throw std::out_of_range("atom_k: alpha exceeds depth");
    const std::int64_t m = rs->modulus(alpha);
    CylinderFunction a = pointwise_mul(rademacher(rs, alpha), dirichlet(rs, m, alpha + 1));
    const CylinderFunction alt =
        dirichlet(rs, 2 * m, alpha + 1) - dirichlet(rs, m, alpha + 1);
    if (max_abs_diff(a, alt) > 1e-12)
        throw std::logic_error("atom_k: r_a D_{M_a} != D_{2M_a} - D_{M_a}");
    GroupPoint origin;
    origin.coords.assign(static_cast<std::size_t>(rs->depth()), 0);
    // kept at its natural depth alpha+1; callers refine as needed
    return Atom::supported(std::move(a), full_cylinder(rs, origin, alpha));
}

std::pair<CylinderFunction, AtomicDecomposition> assemble_f(const CounterexampleConfig& cfg) {
    cfg.validate();
    AtomicDecomposition dec;
    dec.rs = cfg.rs;
    dec.depth = cfg.depth;
    for (int a : cfg.alphas) {
        const double lambda = lambda_k(cfg.phi, *cfg.rs, a);
        dec.terms.emplace_back(Complex{lambda, 0.0}, atom_k(cfg.rs, a, cfg.depth));
    }
    return {dec.assemble(), std::move(dec)};
}

SpectrumCheckResult spectrum_check(const CylinderFunction& f,
                                   const CounterexampleConfig& cfg, double tol) {
    const Spectrum s = forward(f);
    SpectrumCheckResult res;
    std::size_t block = 0;
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(s.coeffs.size()); ++j) {
        Complex expected{0.0, 0.0};
        while (block < cfg.alphas.size() && j >= 2 * cfg.rs->modulus(cfg.alphas[block]))
            ++block;
        if (block < cfg.alphas.size()) {
            const std::int64_t m = cfg.rs->modulus(cfg.alphas[block]);
            if (j >= m && j < 2 * m)
                expected = Complex{lambda_k(cfg.phi, *cfg.rs, cfg.alphas[block]), 0.0};
        }
        const double err = std::abs(s.coeffs[static_cast<std::size_t>(j)] - expected);
        if (err > res.max_err) res.max_err = err;
        if (err > tol && res.first_bad < 0) {
            res.ok = false;
            res.first_bad = j;
        }
    }
    return res;
}

double decomposition_check(const CylinderFunction& f, const CounterexampleConfig& cfg,
                           std::int64_t j, int k) {
    if (k < 0 || k >= static_cast<int>(cfg.alphas.size()))
        throw std::out_of_range("decomposition_check: bad checkpoint index");
    const int alpha = cfg.alphas[static_cast<std::size_t>(k)];
    const std::int64_t m = cfg.rs->modulus(alpha);
    if (j < m || j > 2 * m)
        throw std::invalid_argument("decomposition_check: j outside [M_alpha, 2 M_alpha]");
    const double lambda = lambda_k(cfg.phi, *cfg.rs, alpha);

    const CylinderFunction lhs = partial_sum(f, j);
    const CylinderFunction base = partial_sum(f, m);
    const CylinderFunction kernel =
        pointwise_mul(character(cfg.rs, m), dirichlet(cfg.rs, j - m, alpha + 1));
    const CylinderFunction rhs = base + Complex{lambda, 0.0} * refine(kernel, f.depth());
    return max_abs_diff(lhs, rhs);
}

DivergenceLedger divergence_experiment(const CounterexampleConfig& cfg) {
    cfg.validate();
    DivergenceLedger ledger;
    auto [f, dec] = assemble_f(cfg);
    ledger.proxy_norm = h1_proxy_norm(f);
    if (cfg.alphas.empty()) return ledger;

    const auto& ops = kernels::active();
    const int K = static_cast<int>(cfg.alphas.size());
    double total = 0.0;        // sum_{l <= current} ||S_l f||_1
    std::int64_t covered = 0;  // largest l accounted for
    double prev_q = -1.0;

    // S_{M_alpha_k} f = sum of the first k atom terms; grows as we walk the
    // blocks. Kept at the current block's grid depth.
    for (int k = 0; k < K; ++k) {
        const int alpha = cfg.alphas[static_cast<std::size_t>(k)];
        const std::int64_t m = cfg.rs->modulus(alpha);
        const int grid_depth = alpha + 1;
        const std::int64_t cells = cfg.rs->modulus(grid_depth);
        const double lambda = lambda_k(cfg.phi, *cfg.rs, alpha);
        ledger.sum_lambda += lambda;

        CylinderFunction base = CylinderFunction::zero(cfg.rs, grid_depth);
        for (int i = 0; i < k; ++i)
            base += dec.terms[static_cast<std::size_t>(i)].first *
                    refine(*dec.terms[static_cast<std::size_t>(i)].second.fn, grid_depth);
        const double base_norm = lp_norm(base, 1.0);

        // gap before this block: S_l f is constant there
        total += static_cast<double>(m - covered) * base_norm;
        covered = m;

        // in-block streaming: S_{m+j} f = base + lambda * psi_m * D_j on the
        // depth-(alpha+1) grid
        const std::vector<Complex> psi_m = character_values(*cfg.rs, m, grid_depth);
        std::vector<Complex> dkernel(static_cast<std::size_t>(cells), Complex{0.0, 0.0});
        std::vector<Complex> slf(static_cast<std::size_t>(cells));
        double block_sum = base_norm;  // the in-block range includes l = M_alpha
        double envelope_max = -1e300;
        for (std::int64_t j = 1; j <= m; ++j) {
            const std::vector<Complex> psi = character_values(*cfg.rs, j - 1, grid_depth);
            for (std::size_t c = 0; c < dkernel.size(); ++c) dkernel[c] += psi[c];
            const double l_of_j =
                ops.abs_sum_cx(dkernel.data(), dkernel.size()) / static_cast<double>(cells);
            for (std::size_t c = 0; c < slf.size(); ++c)
                slf[c] = base.values()[c] + lambda * psi_m[c] * dkernel[c];
            const double norm =
                ops.abs_sum_cx(slf.data(), slf.size()) / static_cast<double>(cells);
            total += norm;
            block_sum += norm;
            envelope_max =
                std::max(envelope_max, std::abs(norm - lambda * l_of_j) - base_norm);
        }
        covered = 2 * m;

        LedgerRow row;
        row.k = k + 1;
        row.alpha = alpha;
        row.m_alpha = m;
        row.lambda = lambda;
        row.n = 2 * m;
        row.q = total / (static_cast<double>(row.n) * cfg.phi(row.n));
        row.in_block_mean = block_sum / (static_cast<double>(row.n) * cfg.phi(row.n));
        row.lower_bound = std::sqrt(std::log(static_cast<double>(m))) / std::sqrt(cfg.phi(2 * m));
        row.envelope_max = envelope_max;
        ledger.rows.push_back(row);

        if (prev_q >= 0.0 && row.q <= prev_q) ledger.q_increasing = false;
        prev_q = row.q;
    }
    return ledger;
}

PartAReport part_a_check(
    const std::vector<std::pair<CylinderFunction, double>>& functions,
    const std::vector<std::int64_t>& n_list) {
    PartAReport report;
    for (const auto& [f, upper] : functions) {
        std::vector<PartARow> rows;
        for (std::int64_t n : n_list) {
            if (n < 2) throw std::invalid_argument("part_a_check: n must be >= 2");
            PartARow row;
            row.n = n;
            row.t_log = strong_sum_normalized(f, n, StrongWeight::Log);
            row.ratio = upper > 0.0 ? row.t_log / upper : 0.0;
            report.max_ratio = std::max(report.max_ratio, row.ratio);
            rows.push_back(row);
        }
        report.per_function.push_back(std::move(rows));
    }
    return report;
}

}  // namespace vilenkin
