#pragma once

#include <functional>

#include "vilenkin/phi.hpp"
#include "vilenkin/transform.hpp"

namespace vilenkin {

/// Dirichlet kernel D_n = sum_{k<n} psi_k on the depth-d grid; D_0 = 0.
CylinderFunction dirichlet(const RadixRef& rs, std::int64_t n, int d);

/// n-th partial sum S_n f; S_0 f = 0, S_{M_d} f = f.
CylinderFunction partial_sum(const CylinderFunction& f, std::int64_t n);
CylinderFunction partial_sum(const Spectrum& s, std::int64_t n);

/// Fejer mean: arithmetic mean of S_0 f ... S_{n-1} f.
CylinderFunction fejer(const CylinderFunction& f, std::int64_t n);

/// Streaming record of Lebesgue constants L[n] = ||D_n||_1 and running
/// averages A[n] = (1/n) sum_{k<=n} L[k].
struct KernelScan {
    RadixRef rs;
    int depth = 0;
    std::int64_t n_max = 0;
    std::vector<double> L;  // index 1..n_max; L[0] unused
    std::vector<double> A;
};

KernelScan lebesgue_scan(const RadixRef& rs, int d, std::int64_t n_max);
double lebesgue_average_ratio(const KernelScan& scan, std::int64_t n);

/// f*(x) = max_{0<=n<=d} |S_{M_n} f(x)|, the dyadic maximal function.
CylinderFunction maximal_partial(const CylinderFunction& f);

/// sup_{1<=n<=M_d} |sigma_n f| pointwise.
CylinderFunction maximal_fejer(const CylinderFunction& f);

/// (1/ln n) * sum_{k=1}^n ||S_k f - f||_1 / k. Terms with k >= M_d vanish.
double strong_mean_gat(const CylinderFunction& f, std::int64_t n);

enum class StrongWeight { Uniform, Log, Phi };

/// sum_{k=1}^n ||S_k f||_1 with normalization 1/n (uniform), 1/(n ln n)
/// (log), or 1/(n phi_n). S_k f = f for k beyond the truncation depth.
double strong_sum_normalized(const CylinderFunction& f, std::int64_t n,
                             StrongWeight weight, const PhiFunction* phi = nullptr);

/// Visit S_k f for k = 1..k_max in order, evaluated on the shallowest grid
/// that resolves frequencies below k_max. Callback gets (k, cell values,
/// cell count).
void stream_partial_sums(const Spectrum& s, std::int64_t k_max,
                         const std::function<void(std::int64_t, const Complex*,
                                                  std::int64_t)>& visit);

}  // namespace vilenkin
