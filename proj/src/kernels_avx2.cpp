// Compiled with -mavx2 (see CMakeLists); only dispatched to when the CPU
// reports AVX2 support.
#include "vilenkin/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

namespace vilenkin::kernels {
namespace {

const __m256d kAbsMask =
    _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double abs_sum_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_and_pd(_mm256_loadu_pd(x + i), kAbsMask));
    double s = hsum(acc);
    for (; i < n; ++i) s += std::abs(x[i]);
    return s;
}

double abs_sum_cx_avx2(const std::complex<double>* z, std::size_t n) {
    const double* x = reinterpret_cast<const double*>(z);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v0 = _mm256_loadu_pd(x + 2 * i);      // r0 i0 r1 i1
        __m256d v1 = _mm256_loadu_pd(x + 2 * i + 4);  // r2 i2 r3 i3
        __m256d sq = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
        acc = _mm256_add_pd(acc, _mm256_sqrt_pd(sq));
    }
    double s = hsum(acc);
    for (; i < n; ++i)
        s += std::sqrt(z[i].real() * z[i].real() + z[i].imag() * z[i].imag());
    return s;
}

double walsh_update_abs_sum_avx2(double* acc, std::size_t n, std::uint64_t freq) {
    // Sign of cell c factors as parity(freq & lane) ^ parity(freq_hi & block)
    // with c = 4*block + lane, so one +-1 pattern covers each 4-lane block.
    double lane[4];
    for (int l = 0; l < 4; ++l)
        lane[l] = (__builtin_popcountll(freq & static_cast<std::uint64_t>(l)) & 1)
                      ? -1.0
                      : 1.0;
    const __m256d base = _mm256_loadu_pd(lane);
    const __m256d nbase = _mm256_sub_pd(_mm256_setzero_pd(), base);
    const std::uint64_t fh = freq >> 2;
    __m256d sum = _mm256_setzero_pd();
    std::size_t nb = n / 4;
    for (std::size_t b = 0; b < nb; ++b) {
        __m256d add = (__builtin_popcountll(fh & b) & 1) ? nbase : base;
        __m256d v = _mm256_add_pd(_mm256_loadu_pd(acc + 4 * b), add);
        _mm256_storeu_pd(acc + 4 * b, v);
        sum = _mm256_add_pd(sum, _mm256_and_pd(v, kAbsMask));
    }
    double s = hsum(sum);
    for (std::size_t c = 4 * nb; c < n; ++c) {
        acc[c] += (__builtin_popcountll(freq & c) & 1) ? -1.0 : 1.0;
        s += std::abs(acc[c]);
    }
    return s;
}

void radix2_butterfly_avx2(std::complex<double>* a, std::complex<double>* b,
                           std::size_t n) {
    double* pa = reinterpret_cast<double*>(a);
    double* pb = reinterpret_cast<double*>(b);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d u = _mm256_loadu_pd(pa + 2 * i);
        __m256d v = _mm256_loadu_pd(pb + 2 * i);
        _mm256_storeu_pd(pa + 2 * i, _mm256_add_pd(u, v));
        _mm256_storeu_pd(pb + 2 * i, _mm256_sub_pd(u, v));
    }
    for (; i < n; ++i) {
        const std::complex<double> u = a[i], v = b[i];
        a[i] = u + v;
        b[i] = u - v;
    }
}

}  // namespace

const Ops* avx2_ops_impl() {
    static const Ops ops{"avx2", abs_sum_avx2, abs_sum_cx_avx2,
                         walsh_update_abs_sum_avx2, radix2_butterfly_avx2};
    return &ops;
}

}  // namespace vilenkin::kernels

#else

namespace vilenkin::kernels {
const Ops* avx2_ops_impl() { return nullptr; }
}  // namespace vilenkin::kernels

#endif
