#include "vilenkin/operators.hpp"

#include <algorithm>
#include <cmath>

#include "vilenkin/kernels.hpp"

namespace vilenkin {

CylinderFunction dirichlet(const RadixRef& rs, std::int64_t n, int d) {
    if (d > rs->depth()) throw std::out_of_range("dirichlet: depth exceeds truncation");
    if (n < 0 || n > rs->modulus(d)) throw std::out_of_range("dirichlet: n > M_d");
    std::vector<Complex> coeffs(static_cast<std::size_t>(rs->modulus(d)));
    std::fill_n(coeffs.begin(), n, Complex{1.0, 0.0});
    return inverse(Spectrum{rs, d, std::move(coeffs)});
}

CylinderFunction partial_sum(const Spectrum& s, std::int64_t n) {
    if (n < 0 || n > static_cast<std::int64_t>(s.coeffs.size()))
        throw std::out_of_range("partial_sum: n > M_d");
    Spectrum t{s.rs, s.depth, s.coeffs};
    std::fill(t.coeffs.begin() + static_cast<std::ptrdiff_t>(n), t.coeffs.end(),
              Complex{0.0, 0.0});
    return inverse(t);
}

CylinderFunction partial_sum(const CylinderFunction& f, std::int64_t n) {
    return partial_sum(forward(f), n);
}

CylinderFunction fejer(const CylinderFunction& f, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("fejer: n must be >= 1");
    if (n > f.cells()) throw std::out_of_range("fejer: n > M_d");
    Spectrum s = forward(f);
    // (1/n) sum_{j<n} S_j f has coefficient f_hat(k) * (n-1-k)/n at k < n.
    for (std::int64_t k = 0; k < n; ++k)
        s.coeffs[static_cast<std::size_t>(k)] *=
            static_cast<double>(n - 1 - k) / static_cast<double>(n);
    std::fill(s.coeffs.begin() + static_cast<std::ptrdiff_t>(n), s.coeffs.end(),
              Complex{0.0, 0.0});
    return inverse(s);
}

KernelScan lebesgue_scan(const RadixRef& rs, int d, std::int64_t n_max) {
    if (d > rs->depth()) throw std::out_of_range("lebesgue_scan: depth exceeds truncation");
    const std::int64_t cells = rs->modulus(d);
    if (n_max < 1 || n_max > cells) throw std::out_of_range("lebesgue_scan: n_max > M_d");

    KernelScan scan;
    scan.rs = rs;
    scan.depth = d;
    scan.n_max = n_max;
    scan.L.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    scan.A.assign(static_cast<std::size_t>(n_max) + 1, 0.0);

    const auto& ops = kernels::active();
    const double inv_cells = 1.0 / static_cast<double>(cells);
    double running = 0.0;

    if (rs->dyadic()) {
        // Walsh-Paley: D_n is real and +-1 increments suffice.
        std::vector<double> acc(static_cast<std::size_t>(cells), 0.0);
        for (std::int64_t n = 1; n <= n_max; ++n) {
            const double abs_sum = ops.walsh_update_abs_sum(
                acc.data(), acc.size(), static_cast<std::uint64_t>(n - 1));
            scan.L[static_cast<std::size_t>(n)] = abs_sum * inv_cells;
            running += scan.L[static_cast<std::size_t>(n)];
            scan.A[static_cast<std::size_t>(n)] = running / static_cast<double>(n);
        }
        return scan;
    }

    std::vector<Complex> acc(static_cast<std::size_t>(cells), Complex{0.0, 0.0});
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const std::vector<Complex> psi = character_values(*rs, n - 1, d);
        for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += psi[c];
        scan.L[static_cast<std::size_t>(n)] = ops.abs_sum_cx(acc.data(), acc.size()) * inv_cells;
        running += scan.L[static_cast<std::size_t>(n)];
        scan.A[static_cast<std::size_t>(n)] = running / static_cast<double>(n);
    }
    return scan;
}

double lebesgue_average_ratio(const KernelScan& scan, std::int64_t n) {
    if (n < 2) throw std::invalid_argument("lebesgue_average_ratio: n must be >= 2");
    if (n > scan.n_max) throw std::out_of_range("lebesgue_average_ratio: n > n_max");
    return scan.A[static_cast<std::size_t>(n)] / std::log(static_cast<double>(n));
}

CylinderFunction maximal_partial(const CylinderFunction& f) {
    const RadixSystem& rs = *f.radix();
    const int d = f.depth();
    std::vector<double> best(f.values().size(), 0.0);
    for (std::size_t c = 0; c < best.size(); ++c) best[c] = std::abs(f.values()[c]);

    // S_{M_n} f is the conditional average over depth-n cells; coarsen one
    // axis at a time and fold |average| into the running pointwise max.
    std::vector<Complex> avg = f.values();
    for (int n = d; n-- > 0;) {
        const std::int64_t coarse = rs.modulus(n);
        const int q = rs.radix(n);
        std::vector<Complex> next(static_cast<std::size_t>(coarse));
        for (std::int64_t k = 0; k < coarse; ++k) {
            Complex s{0.0, 0.0};
            for (int x = 0; x < q; ++x) s += avg[static_cast<std::size_t>(k + x * coarse)];
            next[static_cast<std::size_t>(k)] = s / static_cast<double>(q);
        }
        for (std::size_t c = 0; c < best.size(); ++c) {
            const double a =
                std::abs(next[static_cast<std::size_t>(static_cast<std::int64_t>(c) % coarse)]);
            best[c] = std::max(best[c], a);
        }
        avg = std::move(next);
    }
    std::vector<Complex> out(best.size());
    for (std::size_t c = 0; c < best.size(); ++c) out[c] = Complex{best[c], 0.0};
    return CylinderFunction(f.radix(), d, std::move(out));
}

void stream_partial_sums(const Spectrum& s, std::int64_t k_max,
                         const std::function<void(std::int64_t, const Complex*,
                                                  std::int64_t)>& visit) {
    const RadixSystem& rs = *s.rs;
    if (k_max < 1 || k_max > static_cast<std::int64_t>(s.coeffs.size()))
        throw std::out_of_range("stream_partial_sums: k_max > M_d");
    int d = 0;
    while (rs.modulus(d) < k_max) ++d;  // shallowest grid resolving k < k_max
    const std::int64_t cells = rs.modulus(d);
    std::vector<Complex> acc(static_cast<std::size_t>(cells), Complex{0.0, 0.0});
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const Complex fk = s.coeffs[static_cast<std::size_t>(k - 1)];
        if (fk != Complex{0.0, 0.0}) {
            const std::vector<Complex> psi = character_values(rs, k - 1, d);
            for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += fk * psi[c];
        }
        visit(k, acc.data(), cells);
    }
}

CylinderFunction maximal_fejer(const CylinderFunction& f) {
    const std::int64_t cells = f.cells();
    const Spectrum s = forward(f);
    std::vector<double> best(f.values().size(), 0.0);
    std::vector<Complex> cumulative(f.values().size(), Complex{0.0, 0.0});
    // sigma_1 f = S_0 f = 0 contributes nothing; fold sigma_n = C_n / n for
    // n = 2..M_d where C_n = sum_{k<n} S_k f.
    stream_partial_sums(s, cells, [&](std::int64_t k, const Complex* sk, std::int64_t n) {
        // after this callback C holds sum_{j<=k} S_j f = C_{k+1}
        const std::int64_t stride = n;
        for (std::int64_t c = 0; c < cells; ++c)
            cumulative[static_cast<std::size_t>(c)] += sk[c % stride];
        if (k + 1 <= cells) {
            const double inv = 1.0 / static_cast<double>(k + 1);
            for (std::int64_t c = 0; c < cells; ++c) {
                auto sc = static_cast<std::size_t>(c);
                best[sc] = std::max(best[sc], std::abs(cumulative[sc]) * inv);
            }
        }
    });
    std::vector<Complex> out(best.size());
    for (std::size_t c = 0; c < best.size(); ++c) out[c] = Complex{best[c], 0.0};
    return CylinderFunction(f.radix(), f.depth(), std::move(out));
}

namespace {

double l1_of_cells(const Complex* v, std::int64_t n) {
    return kernels::active().abs_sum_cx(v, static_cast<std::size_t>(n)) /
           static_cast<double>(n);
}

}  // namespace

double strong_mean_gat(const CylinderFunction& f, std::int64_t n) {
    if (n < 2) throw std::invalid_argument("strong_mean_gat: n must be >= 2");
    const Spectrum s = forward(f);
    const std::int64_t cells = f.cells();
    const std::int64_t k_top = std::min(n, cells);
    const std::vector<Complex>& fv = f.values();
    double sum = 0.0;
    stream_partial_sums(s, k_top, [&](std::int64_t k, const Complex* sk, std::int64_t nc) {
        if (k >= cells) return;  // S_{M_d} f = f, zero term
        double acc = 0.0;
        for (std::int64_t c = 0; c < cells; ++c) acc += std::abs(sk[c % nc] - fv[static_cast<std::size_t>(c)]);
        sum += (acc / static_cast<double>(cells)) / static_cast<double>(k);
    });
    return sum / std::log(static_cast<double>(n));
}

double strong_sum_normalized(const CylinderFunction& f, std::int64_t n,
                             StrongWeight weight, const PhiFunction* phi) {
    if (n < 2) throw std::invalid_argument("strong_sum_normalized: n must be >= 2");
    if (weight == StrongWeight::Phi && phi == nullptr)
        throw std::invalid_argument("strong_sum_normalized: phi weight needs a PhiFunction");
    const Spectrum s = forward(f);
    const std::int64_t cells = f.cells();
    const std::int64_t k_top = std::min(n, cells);
    double sum = 0.0;
    stream_partial_sums(s, k_top, [&](std::int64_t, const Complex* sk, std::int64_t nc) {
        sum += l1_of_cells(sk, nc);
    });
    if (n > cells) sum += static_cast<double>(n - cells) * lp_norm(f, 1.0);
    const double nn = static_cast<double>(n);
    switch (weight) {
        case StrongWeight::Uniform:
            return sum / nn;
        case StrongWeight::Log:
            return sum / (nn * std::log(nn));
        case StrongWeight::Phi:
            return sum / (nn * (*phi)(n));
    }
    throw std::logic_error("strong_sum_normalized: bad weight");
}

}  // namespace vilenkin
