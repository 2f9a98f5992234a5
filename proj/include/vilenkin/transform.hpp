#pragma once

#include "vilenkin/cylinder.hpp"

namespace vilenkin {

/// Fourier coefficients of a depth-d step function, coeffs[k] = f_hat(k).
struct Spectrum {
    RadixRef rs;
    int depth = 0;
    std::vector<Complex> coeffs;
};

/// Generalized Rademacher function r_k, a depth-(k+1) step function with
/// value exp(2*pi*i*x_k/m_k).
CylinderFunction rademacher(const RadixRef& rs, int k);

/// Vilenkin character psi_n = prod_k r_k^{n_k}, depth |n|+1. Walsh-Paley
/// functions when every radix is 2.
CylinderFunction character(const RadixRef& rs, std::int64_t n);

/// psi_n sampled on the depth-d grid (d >= |n|+1 not required as long as
/// n < M_d). One flat pass, O(M_d).
std::vector<Complex> character_values(const RadixSystem& rs, std::int64_t n, int d);

/// Forward transform: coeffs[k] = integral of f * conj(psi_k), computed by
/// the separable per-axis character transform, cost O(M_d * sum m_j).
Spectrum forward(const CylinderFunction& f);

/// Inverse transform: f(x) = sum_k coeffs[k] * psi_k(x).
CylinderFunction inverse(const Spectrum& s);

}  // namespace vilenkin
