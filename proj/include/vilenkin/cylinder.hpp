#pragma once

#include <complex>
#include <vector>

#include "vilenkin/radix.hpp"

namespace vilenkin {

using Complex = std::complex<double>;

/// Complex step function constant on depth-d cylinders; values[c] is the
/// value on the cell whose mixed-radix index is c (x_0 least significant).
class CylinderFunction {
public:
    CylinderFunction(RadixRef rs, int depth, std::vector<Complex> values);
    static CylinderFunction constant(RadixRef rs, int depth, Complex value);
    static CylinderFunction zero(RadixRef rs, int depth);

    const RadixRef& radix() const noexcept { return rs_; }
    int depth() const noexcept { return depth_; }
    std::int64_t cells() const noexcept { return static_cast<std::int64_t>(values_.size()); }
    const std::vector<Complex>& values() const noexcept { return values_; }
    std::vector<Complex>& values() noexcept { return values_; }

    Complex operator[](std::int64_t c) const { return values_[static_cast<std::size_t>(c)]; }

    CylinderFunction& operator+=(const CylinderFunction& g);
    CylinderFunction& operator-=(const CylinderFunction& g);
    CylinderFunction& operator*=(Complex s);

private:
    RadixRef rs_;
    int depth_;
    std::vector<Complex> values_;
};

CylinderFunction operator+(CylinderFunction f, const CylinderFunction& g);
CylinderFunction operator-(CylinderFunction f, const CylinderFunction& g);
CylinderFunction operator*(Complex s, CylinderFunction f);

/// Pointwise product (both operands refined to the deeper grid).
CylinderFunction pointwise_mul(const CylinderFunction& f, const CylinderFunction& g);

/// Exact mean over the group, (1/M_d) * sum of cell values.
Complex haar_integrate(const CylinderFunction& f);

/// L_p norm for p in {1, 2, inf}.
double lp_norm(const CylinderFunction& f, double p);

/// Lift to a finer grid d' >= d by replicating values over subcells.
CylinderFunction refine(const CylinderFunction& f, int finer_depth);

/// max residual |f - g| pointwise after refining both to a common depth.
double max_abs_diff(const CylinderFunction& f, const CylinderFunction& g);

}  // namespace vilenkin
