#include <doctest.h>

#include <numbers>
#include <random>

#include "vilenkin/operators.hpp"
#include "vilenkin/transform.hpp"

using namespace vilenkin;

namespace {

// Independent O(M^2) oracle: coefficients by direct summation of the
// defining integrals.
Spectrum forward_naive(const CylinderFunction& f) {
    const RadixSystem& rs = *f.radix();
    const int d = f.depth();
    const std::int64_t cells = f.cells();
    std::vector<Complex> coeffs(static_cast<std::size_t>(cells));
    for (std::int64_t k = 0; k < cells; ++k) {
        const std::vector<Complex> psi = character_values(rs, k, d);
        Complex s{0.0, 0.0};
        for (std::int64_t c = 0; c < cells; ++c)
            s += f[c] * std::conj(psi[static_cast<std::size_t>(c)]);
        coeffs[static_cast<std::size_t>(k)] = s / static_cast<double>(cells);
    }
    return Spectrum{f.radix(), d, std::move(coeffs)};
}

CylinderFunction random_function(const RadixRef& rs, int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> v(static_cast<std::size_t>(rs->modulus(d)));
    for (auto& z : v) z = Complex{u(rng), u(rng)};
    return CylinderFunction(rs, d, std::move(v));
}

}  // namespace

TEST_CASE("rademacher functions") {
    auto bin = RadixSystem::constant(2, 3);
    auto r0 = rademacher(bin, 0);
    CHECK(r0.depth() == 1);
    CHECK(r0[0] == Complex{1.0, 0.0});
    CHECK(std::abs(r0[1] - Complex{-1.0, 0.0}) <= 1e-15);

    auto rs = RadixSystem::of({3, 2});
    auto r = rademacher(rs, 0);
    const double t = 2.0 * std::numbers::pi / 3.0;
    CHECK(std::abs(r[1] - Complex{std::cos(t), std::sin(t)}) <= 1e-15);
    CHECK(std::abs(r[2] - Complex{std::cos(2 * t), std::sin(2 * t)}) <= 1e-15);

    for (int k = 0; k < rs->depth(); ++k)
        CHECK(std::abs(haar_integrate(rademacher(rs, k))) <= 1e-15);
    CHECK_THROWS_AS(rademacher(rs, 2), std::out_of_range);
}

TEST_CASE("characters") {
    auto rs = RadixSystem::of({2, 3, 2});
    auto psi0 = character(rs, 0);
    CHECK(psi0.depth() == 1);
    CHECK(max_abs_diff(psi0, CylinderFunction::constant(rs, 0, {1.0, 0.0})) <= 1e-15);

    // psi_{M_n} = r_n
    for (int n = 0; n < rs->depth(); ++n)
        CHECK(max_abs_diff(character(rs, rs->modulus(n)), rademacher(rs, n)) <= 1e-15);

    // Walsh-Paley: values are exactly +-1
    auto bin = RadixSystem::constant(2, 4);
    for (std::int64_t n = 0; n < bin->size(); ++n) {
        auto psi = character(bin, n);
        for (const auto& v : psi.values()) {
            CHECK(v.imag() == 0.0);
            CHECK(std::abs(v.real()) == 1.0);
        }
    }
}

TEST_CASE("character homomorphism (exhaustive small group)") {
    auto rs = RadixSystem::of({2, 3});
    const int d = rs->depth();
    for (std::int64_t n = 0; n < rs->size(); ++n) {
        auto psi = refine(character(rs, n), d);
        for (std::int64_t a = 0; a < rs->size(); ++a)
            for (std::int64_t b = 0; b < rs->size(); ++b) {
                auto pa = point_of_cell(*rs, a, d);
                auto pb = point_of_cell(*rs, b, d);
                auto pc = group_add(*rs, pa, pb);
                const Complex lhs = psi[cell_index(*rs, pc, d)];
                const Complex rhs = psi[a] * psi[b];
                CHECK(std::abs(lhs - rhs) <= 1e-12);
            }
    }
}

TEST_CASE("orthonormality (exhaustive, M_d <= 64)") {
    for (auto rs : {RadixSystem::constant(2, 5), RadixSystem::of({2, 3, 4, 2})}) {
        const int d = rs->depth();
        for (std::int64_t n = 0; n < rs->size(); ++n)
            for (std::int64_t k = 0; k < rs->size(); ++k) {
                auto pn = refine(character(rs, n), d);
                auto pk = refine(character(rs, k), d);
                Complex s{0.0, 0.0};
                for (std::int64_t c = 0; c < pn.cells(); ++c) s += pn[c] * std::conj(pk[c]);
                s /= static_cast<double>(pn.cells());
                const Complex expect = (n == k) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
                CHECK(std::abs(s - expect) <= 1e-12);
            }
    }
}

TEST_CASE("forward: delta at a single character") {
    auto rs = RadixSystem::of({2, 3, 2});
    auto s = forward(refine(character(rs, 3), rs->depth()));
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(s.coeffs.size()); ++k) {
        const Complex expect = (k == 3) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
        CHECK(std::abs(s.coeffs[static_cast<std::size_t>(k)] - expect) <= 1e-12);
    }
}

TEST_CASE("forward: constant function") {
    auto rs = RadixSystem::of({3, 2});
    auto s = forward(CylinderFunction::constant(rs, 2, Complex{2.5, -1.0}));
    CHECK(std::abs(s.coeffs[0] - Complex{2.5, -1.0}) <= 1e-12);
    for (std::size_t k = 1; k < s.coeffs.size(); ++k)
        CHECK(std::abs(s.coeffs[k]) <= 1e-12);
}

TEST_CASE("fast transform agrees with naive oracle") {
    for (auto rs : {RadixSystem::constant(2, 8), RadixSystem::of({2, 3, 2, 5, 4}),
                    RadixSystem::of({16, 2, 3})}) {
        auto f = random_function(rs, rs->depth(), 42);
        const Spectrum fast = forward(f);
        const Spectrum naive = forward_naive(f);
        double worst = 0.0;
        for (std::size_t k = 0; k < fast.coeffs.size(); ++k)
            worst = std::max(worst, std::abs(fast.coeffs[k] - naive.coeffs[k]));
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("roundtrip and Plancherel up to 2^16") {
    for (int d : {10, 16}) {
        auto rs = RadixSystem::constant(2, d);
        auto f = random_function(rs, d, 99 + static_cast<std::uint64_t>(d));
        const Spectrum s = forward(f);
        const CylinderFunction g = inverse(s);
        CHECK(max_abs_diff(f, g) <= 1e-9);

        double sum_sq = 0.0;
        for (const auto& z : s.coeffs) sum_sq += std::norm(z);
        const double f2 = lp_norm(f, 2.0);
        CHECK(std::abs(f2 * f2 - sum_sq) <= 1e-9 * f2 * f2);
    }
    auto rs = RadixSystem::of({2, 3, 2});
    auto f = random_function(rs, 3, 5);
    CHECK(max_abs_diff(inverse(forward(f)), f) <= 1e-9);
}

TEST_CASE("inverse examples") {
    auto rs = RadixSystem::of({2, 3, 2});
    // unit coefficient at 0 -> constant 1
    std::vector<Complex> c(static_cast<std::size_t>(rs->size()), Complex{0, 0});
    c[0] = Complex{1.0, 0.0};
    auto one = inverse(Spectrum{rs, rs->depth(), c});
    CHECK(max_abs_diff(one, CylinderFunction::constant(rs, rs->depth(), {1.0, 0.0})) <= 1e-12);

    // all-ones coefficients -> M_d * indicator of I_d(0)
    std::fill(c.begin(), c.end(), Complex{1.0, 0.0});
    auto dk = inverse(Spectrum{rs, rs->depth(), c});
    for (std::int64_t i = 0; i < dk.cells(); ++i) {
        const Complex expect = (i == 0) ? Complex{double(rs->size()), 0.0} : Complex{0.0, 0.0};
        CHECK(std::abs(dk[i] - expect) <= 1e-12);
    }
}

TEST_CASE("inverse is linear") {
    auto rs = RadixSystem::of({3, 2, 2});
    auto f1 = random_function(rs, 3, 1);
    auto f2 = random_function(rs, 3, 2);
    Spectrum s1 = forward(f1), s2 = forward(f2);
    const Complex a{0.7, -0.2}, b{-1.3, 0.4};
    Spectrum mix{rs, 3, s1.coeffs};
    for (std::size_t k = 0; k < mix.coeffs.size(); ++k)
        mix.coeffs[k] = a * s1.coeffs[k] + b * s2.coeffs[k];
    auto lhs = inverse(mix);
    auto rhs = a * inverse(s1) + b * inverse(s2);
    CHECK(max_abs_diff(lhs, rhs) <= 1e-12);
}
