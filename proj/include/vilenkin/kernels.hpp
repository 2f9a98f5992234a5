#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

namespace vilenkin::kernels {

/// Hot inner loops behind the transform and the kernel scans. Every entry
/// has a scalar reference implementation; vector backends must agree with
/// it (bitwise for the +-1 Walsh path, <= 1e-12 otherwise).
struct Ops {
    const char* name;

    /// sum_i |x_i|
    double (*abs_sum)(const double* x, std::size_t n);

    /// sum_i |z_i| (complex modulus)
    double (*abs_sum_cx)(const std::complex<double>* z, std::size_t n);

    /// acc[c] += (-1)^{popcount(freq & c)} for c in [0, n); returns the
    /// updated sum_c |acc[c]|. The streaming step of the Walsh-Paley
    /// Dirichlet kernel scan.
    double (*walsh_update_abs_sum)(double* acc, std::size_t n, std::uint64_t freq);

    /// (a_i, b_i) <- (a_i + b_i, a_i - b_i), the radix-2 transform stage.
    void (*radix2_butterfly)(std::complex<double>* a, std::complex<double>* b,
                             std::size_t n);
};

const Ops& scalar_ops();

/// Backend compiled for AVX2; nullptr when the CPU lacks it.
const Ops* avx2_ops();

/// Backend compiled for NEON; nullptr on non-ARM builds.
const Ops* neon_ops();

/// Runtime-selected backend. VILENKIN_KERNELS=scalar|avx2|neon forces one.
const Ops& active();

}  // namespace vilenkin::kernels
