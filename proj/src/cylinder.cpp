#include "vilenkin/cylinder.hpp"

#include <algorithm>
#include <cmath>

#include "vilenkin/kernels.hpp"

namespace vilenkin {

CylinderFunction::CylinderFunction(RadixRef rs, int depth, std::vector<Complex> values)
    : rs_(std::move(rs)), depth_(depth), values_(std::move(values)) {
    if (!rs_) throw std::invalid_argument("CylinderFunction: null radix system");
    if (depth_ < 0 || depth_ > rs_->depth())
        throw std::out_of_range("CylinderFunction: depth outside [0, N]");
    if (static_cast<std::int64_t>(values_.size()) != rs_->modulus(depth_))
        throw std::invalid_argument("CylinderFunction: value count != M_d");
}

CylinderFunction CylinderFunction::constant(RadixRef rs, int depth, Complex value) {
    auto cells = static_cast<std::size_t>(rs->modulus(depth));
    return CylinderFunction(std::move(rs), depth, std::vector<Complex>(cells, value));
}

CylinderFunction CylinderFunction::zero(RadixRef rs, int depth) {
    return constant(std::move(rs), depth, Complex{0.0, 0.0});
}

namespace {

void check_compatible(const CylinderFunction& f, const CylinderFunction& g) {
    if (f.radix().get() != g.radix().get() || f.depth() != g.depth())
        throw std::invalid_argument("CylinderFunction: radix/depth mismatch");
}

}  // namespace

CylinderFunction& CylinderFunction::operator+=(const CylinderFunction& g) {
    check_compatible(*this, g);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += g.values()[i];
    return *this;
}

CylinderFunction& CylinderFunction::operator-=(const CylinderFunction& g) {
    check_compatible(*this, g);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= g.values()[i];
    return *this;
}

CylinderFunction& CylinderFunction::operator*=(Complex s) {
    for (auto& v : values_) v *= s;
    return *this;
}

CylinderFunction operator+(CylinderFunction f, const CylinderFunction& g) {
    f += g;
    return f;
}

CylinderFunction operator-(CylinderFunction f, const CylinderFunction& g) {
    f -= g;
    return f;
}

CylinderFunction operator*(Complex s, CylinderFunction f) {
    f *= s;
    return f;
}

CylinderFunction pointwise_mul(const CylinderFunction& f, const CylinderFunction& g) {
    if (f.radix().get() != g.radix().get())
        throw std::invalid_argument("pointwise_mul: radix mismatch");
    int d = std::max(f.depth(), g.depth());
    CylinderFunction a = refine(f, d);
    const CylinderFunction b = refine(g, d);
    for (std::int64_t c = 0; c < a.cells(); ++c)
        a.values()[static_cast<std::size_t>(c)] *= b[c];
    return a;
}

Complex haar_integrate(const CylinderFunction& f) {
    Complex s{0.0, 0.0};
    for (const auto& v : f.values()) s += v;
    return s / static_cast<double>(f.cells());
}

double lp_norm(const CylinderFunction& f, double p) {
    const auto& v = f.values();
    if (p == 1.0) {
        return kernels::active().abs_sum_cx(v.data(), v.size()) /
               static_cast<double>(f.cells());
    }
    if (p == 2.0) {
        double s = 0.0;
        for (const auto& z : v) s += std::norm(z);
        return std::sqrt(s / static_cast<double>(f.cells()));
    }
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& z : v) m = std::max(m, std::abs(z));
        return m;
    }
    throw std::invalid_argument("lp_norm: only p in {1, 2, inf} supported");
}

CylinderFunction refine(const CylinderFunction& f, int finer_depth) {
    if (finer_depth < f.depth())
        throw std::invalid_argument("refine: cannot coarsen");
    if (finer_depth > f.radix()->depth())
        throw std::out_of_range("refine: depth exceeds truncation");
    if (finer_depth == f.depth()) return f;
    const std::int64_t coarse = f.radix()->modulus(f.depth());
    const std::int64_t fine = f.radix()->modulus(finer_depth);
    std::vector<Complex> out(static_cast<std::size_t>(fine));
    // Depth-d cell index is the depth-d' index mod M_d (x_0 least significant),
    // so the fine grid is block-periodic copies of the coarse one.
    for (std::int64_t base = 0; base < fine; base += coarse)
        std::copy(f.values().begin(), f.values().end(),
                  out.begin() + static_cast<std::ptrdiff_t>(base));
    return CylinderFunction(f.radix(), finer_depth, std::move(out));
}

double max_abs_diff(const CylinderFunction& f, const CylinderFunction& g) {
    if (f.radix().get() != g.radix().get())
        throw std::invalid_argument("max_abs_diff: radix mismatch");
    int d = std::max(f.depth(), g.depth());
    const CylinderFunction a = refine(f, d);
    const CylinderFunction b = refine(g, d);
    double m = 0.0;
    for (std::int64_t c = 0; c < a.cells(); ++c) m = std::max(m, std::abs(a[c] - b[c]));
    return m;
}

}  // namespace vilenkin
