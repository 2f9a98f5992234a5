#include "vilenkin/kernels.hpp"

#include <cmath>

namespace vilenkin::kernels {
namespace {

double abs_sum_scalar(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::abs(x[i]);
    return s;
}

double abs_sum_cx_scalar(const std::complex<double>* z, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += std::sqrt(z[i].real() * z[i].real() + z[i].imag() * z[i].imag());
    return s;
}

double walsh_update_abs_sum_scalar(double* acc, std::size_t n, std::uint64_t freq) {
    double s = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        acc[c] += (__builtin_popcountll(freq & c) & 1) ? -1.0 : 1.0;
        s += std::abs(acc[c]);
    }
    return s;
}

void radix2_butterfly_scalar(std::complex<double>* a, std::complex<double>* b,
                             std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const std::complex<double> u = a[i], v = b[i];
        a[i] = u + v;
        b[i] = u - v;
    }
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar", abs_sum_scalar, abs_sum_cx_scalar,
                         walsh_update_abs_sum_scalar, radix2_butterfly_scalar};
    return ops;
}

}  // namespace vilenkin::kernels
