#include "vilenkin/validate.hpp"

#include <algorithm>
#include <cmath>

#include "vilenkin/counterexample.hpp"
#include "vilenkin/operators.hpp"

namespace vilenkin {
namespace {

constexpr double kExactTol = 1e-12;
constexpr double kSpectrumTol = 1e-10;

double dirichlet_at_m_residual(const RadixRef& rs, int d, double corrupt_eps) {
    double worst = 0.0;
    for (int n = 0; n <= d; ++n) {
        CylinderFunction dk = dirichlet(rs, rs->modulus(n), d);
        if (corrupt_eps != 0.0) dk.values()[0] += corrupt_eps;
        const std::int64_t coarse = rs->modulus(n);
        const double mn = static_cast<double>(coarse);
        for (std::int64_t c = 0; c < dk.cells(); ++c) {
            const double expect = (c % coarse == 0) ? mn : 0.0;
            worst = std::max(worst, std::abs(dk[c] - expect));
        }
    }
    return worst;
}

double dirichlet_multiple_residual(const RadixRef& rs, int d) {
    double worst = 0.0;
    for (int n = 0; n < d; ++n) {
        const std::int64_t m = rs->modulus(n);
        const CylinderFunction dm = dirichlet(rs, m, d);
        const CylinderFunction rn = refine(rademacher(rs, n), d);
        CylinderFunction geom = CylinderFunction::zero(rs, d);
        CylinderFunction rpow = CylinderFunction::constant(rs, d, Complex{1.0, 0.0});
        for (int s = 1; s < rs->radix(n); ++s) {
            geom += rpow;                      // sum_{k<s} r_n^k
            rpow = pointwise_mul(rpow, rn);
            if (s * m > rs->modulus(d)) break;
            const CylinderFunction lhs = dirichlet(rs, s * m, d);
            const CylinderFunction rhs = pointwise_mul(dm, geom);
            worst = std::max(worst, max_abs_diff(lhs, rhs));
        }
    }
    return worst;
}

double dirichlet_shift_residual(const RadixRef& rs, int d) {
    double worst = 0.0;
    for (int n = 0; n < d; ++n) {
        const std::int64_t m = rs->modulus(n);
        if (2 * m > rs->modulus(d)) break;
        const int grid = n + 1;
        const CylinderFunction dm = dirichlet(rs, m, grid);
        const CylinderFunction psi_m = character(rs, m);
        for (std::int64_t j = 0; j <= m; ++j) {
            const CylinderFunction lhs = dirichlet(rs, j + m, grid);
            const CylinderFunction rhs =
                dm + pointwise_mul(refine(psi_m, grid), dirichlet(rs, j, grid));
            worst = std::max(worst, max_abs_diff(lhs, rhs));
        }
    }
    return worst;
}

CounterexampleConfig small_config(const RadixRef& rs, int d) {
    CounterexampleConfig cfg;
    cfg.rs = rs;
    cfg.depth = d;
    cfg.phi = PhiFunction::constant(1.0);
    cfg.cond1_threshold = 0.0;
    for (int a = 1; a < d; a += 2) cfg.alphas.push_back(a);
    return cfg;
}

}  // namespace

std::vector<IdentityResult> run_identity_suite(const RadixRef& rs, int d,
                                               double corrupt_eps) {
    std::vector<IdentityResult> out;
    auto push = [&](std::string name, double residual, double tol) {
        out.push_back({std::move(name), residual, tol, residual <= tol});
    };

    push("dirichlet_at_M", dirichlet_at_m_residual(rs, d, corrupt_eps), kExactTol);
    push("dirichlet_multiple", dirichlet_multiple_residual(rs, d), kExactTol);
    push("dirichlet_shift", dirichlet_shift_residual(rs, d), kExactTol);

    const CounterexampleConfig cfg = small_config(rs, d);
    if (!cfg.alphas.empty()) {
        auto [f, dec] = assemble_f(cfg);
        push("block_spectrum", spectrum_check(f, cfg).max_err, kSpectrumTol);

        double worst = 0.0;
        for (int k = 0; k < static_cast<int>(cfg.alphas.size()); ++k) {
            const std::int64_t m = rs->modulus(cfg.alphas[static_cast<std::size_t>(k)]);
            const std::int64_t step = std::max<std::int64_t>(1, m / 8);
            for (std::int64_t j = m; j <= 2 * m; j += step)
                worst = std::max(worst, decomposition_check(f, cfg, j, k));
        }
        push("block_partial_sum", worst, kSpectrumTol);
    }
    return out;
}

}  // namespace vilenkin
