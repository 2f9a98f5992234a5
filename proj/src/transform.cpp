#include "vilenkin/transform.hpp"

#include <cmath>
#include <numbers>

#include "vilenkin/kernels.hpp"

namespace vilenkin {
namespace {

Complex unit_root(int numerator, int q) {
    int r = numerator % q;
    if (r < 0) r += q;
    // exact values on the axes keep the q = 2 and q = 4 paths integer-clean
    if ((4 * r) % q == 0) {
        switch (4 * r / q) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    const double angle = 2.0 * std::numbers::pi * r / q;
    return {std::cos(angle), std::sin(angle)};
}

/// One separable stage along axis j: every length-(m_j * M_j) block is a
/// bundle of m_j contiguous runs of M_j values; mix the runs with the
/// m_j-point character matrix W^{x*y}, W = exp(sign * 2*pi*i / m_j).
void apply_stage(std::vector<Complex>& v, int q, std::int64_t stride, int sign) {
    const std::int64_t total = static_cast<std::int64_t>(v.size());
    const std::int64_t block = q * stride;
    if (q == 2) {
        // +-1 butterfly; exact, and the hot path for Walsh-Paley systems.
        const auto& ops = kernels::active();
        for (std::int64_t base = 0; base < total; base += block)
            ops.radix2_butterfly(v.data() + base, v.data() + base + stride,
                                 static_cast<std::size_t>(stride));
        return;
    }
    std::vector<Complex> w(static_cast<std::size_t>(q));
    for (int k = 0; k < q; ++k) w[static_cast<std::size_t>(k)] = unit_root(sign * k, q);
    std::vector<Complex> tmp(static_cast<std::size_t>(block));
    for (std::int64_t base = 0; base < total; base += block) {
        for (int x = 0; x < q; ++x) {
            Complex* out = tmp.data() + x * stride;
            for (std::int64_t i = 0; i < stride; ++i) out[i] = Complex{0.0, 0.0};
            for (int y = 0; y < q; ++y) {
                const Complex wxy = w[static_cast<std::size_t>((x * y) % q)];
                const Complex* in = v.data() + base + y * stride;
                for (std::int64_t i = 0; i < stride; ++i) out[i] += wxy * in[i];
            }
        }
        std::copy(tmp.begin(), tmp.end(), v.begin() + static_cast<std::ptrdiff_t>(base));
    }
}

void apply_all_stages(const RadixSystem& rs, std::vector<Complex>& v, int d, int sign) {
    for (int j = 0; j < d; ++j) apply_stage(v, rs.radix(j), rs.modulus(j), sign);
}

}  // namespace

CylinderFunction rademacher(const RadixRef& rs, int k) {
    if (k < 0 || k >= rs->depth()) throw std::out_of_range("rademacher: index exceeds depth");
    const int d = k + 1;
    const std::int64_t stride = rs->modulus(k);
    std::vector<Complex> v(static_cast<std::size_t>(rs->modulus(d)));
    for (int x = 0; x < rs->radix(k); ++x) {
        const Complex val = unit_root(x, rs->radix(k));
        for (std::int64_t i = 0; i < stride; ++i)
            v[static_cast<std::size_t>(x * stride + i)] = val;
    }
    return CylinderFunction(rs, d, std::move(v));
}

std::vector<Complex> character_values(const RadixSystem& rs, std::int64_t n, int d) {
    if (n < 0 || n >= rs.size()) throw std::out_of_range("character_values: n outside [0, M_N)");
    if (rs.modulus(d) <= n) throw std::out_of_range("character_values: n >= M_d");
    const DigitExpansion e = expand(rs, n);
    std::vector<Complex> v(static_cast<std::size_t>(rs.modulus(d)));
    v[0] = Complex{1.0, 0.0};
    // Kronecker build: extend one axis at a time, total cost < 2 M_d.
    std::int64_t filled = 1;
    for (int j = 0; j < d; ++j) {
        const int q = rs.radix(j);
        const int nj = e.digits[static_cast<std::size_t>(j)];
        for (int x = 1; x < q; ++x) {
            const Complex wx = unit_root(nj * x, q);
            Complex* out = v.data() + x * filled;
            for (std::int64_t i = 0; i < filled; ++i) out[i] = wx * v[static_cast<std::size_t>(i)];
        }
        filled *= q;
    }
    return v;
}

CylinderFunction character(const RadixRef& rs, std::int64_t n) {
    const int d = (n == 0) ? 1 : expand(*rs, n).order + 1;
    return CylinderFunction(rs, d, character_values(*rs, n, d));
}

Spectrum forward(const CylinderFunction& f) {
    std::vector<Complex> v = f.values();
    apply_all_stages(*f.radix(), v, f.depth(), -1);
    const double inv = 1.0 / static_cast<double>(f.cells());
    for (auto& z : v) z *= inv;
    return Spectrum{f.radix(), f.depth(), std::move(v)};
}

CylinderFunction inverse(const Spectrum& s) {
    if (!s.rs) throw std::invalid_argument("inverse: null radix system");
    if (static_cast<std::int64_t>(s.coeffs.size()) != s.rs->modulus(s.depth))
        throw std::invalid_argument("inverse: coefficient count != M_d");
    std::vector<Complex> v = s.coeffs;
    apply_all_stages(*s.rs, v, s.depth, +1);
    return CylinderFunction(s.rs, s.depth, std::move(v));
}

}  // namespace vilenkin
