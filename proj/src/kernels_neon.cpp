#include "vilenkin/kernels.hpp"

#if defined(__ARM_NEON) || defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>

namespace vilenkin::kernels {
namespace {

double abs_sum_neon(const double* x, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vabsq_f64(vld1q_f64(x + i)));
    double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
    for (; i < n; ++i) s += std::abs(x[i]);
    return s;
}

double abs_sum_cx_neon(const std::complex<double>* z, std::size_t n) {
    const double* x = reinterpret_cast<const double*>(z);
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2x2_t v = vld2q_f64(x + 2 * i);  // re lane, im lane
        float64x2_t sq = vmlaq_f64(vmulq_f64(v.val[0], v.val[0]), v.val[1], v.val[1]);
        acc = vaddq_f64(acc, vsqrtq_f64(sq));
    }
    double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
    for (; i < n; ++i)
        s += std::sqrt(z[i].real() * z[i].real() + z[i].imag() * z[i].imag());
    return s;
}

double walsh_update_abs_sum_neon(double* acc, std::size_t n, std::uint64_t freq) {
    const double s1 = (freq & 1) ? -1.0 : 1.0;
    const float64x2_t base = {1.0, s1};
    const float64x2_t nbase = vnegq_f64(base);
    const std::uint64_t fh = freq >> 1;
    float64x2_t sum = vdupq_n_f64(0.0);
    std::size_t nb = n / 2;
    for (std::size_t b = 0; b < nb; ++b) {
        float64x2_t add = (__builtin_popcountll(fh & b) & 1) ? nbase : base;
        float64x2_t v = vaddq_f64(vld1q_f64(acc + 2 * b), add);
        vst1q_f64(acc + 2 * b, v);
        sum = vaddq_f64(sum, vabsq_f64(v));
    }
    double s = vgetq_lane_f64(sum, 0) + vgetq_lane_f64(sum, 1);
    for (std::size_t c = 2 * nb; c < n; ++c) {
        acc[c] += (__builtin_popcountll(freq & c) & 1) ? -1.0 : 1.0;
        s += std::abs(acc[c]);
    }
    return s;
}

void radix2_butterfly_neon(std::complex<double>* a, std::complex<double>* b,
                           std::size_t n) {
    double* pa = reinterpret_cast<double*>(a);
    double* pb = reinterpret_cast<double*>(b);
    for (std::size_t i = 0; i < n; ++i) {
        float64x2_t u = vld1q_f64(pa + 2 * i);
        float64x2_t v = vld1q_f64(pb + 2 * i);
        vst1q_f64(pa + 2 * i, vaddq_f64(u, v));
        vst1q_f64(pb + 2 * i, vsubq_f64(u, v));
    }
}

}  // namespace

const Ops* neon_ops_impl() {
    static const Ops ops{"neon", abs_sum_neon, abs_sum_cx_neon,
                         walsh_update_abs_sum_neon, radix2_butterfly_neon};
    return &ops;
}

}  // namespace vilenkin::kernels

#else

namespace vilenkin::kernels {
const Ops* neon_ops_impl() { return nullptr; }
}  // namespace vilenkin::kernels

#endif
