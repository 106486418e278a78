#include <cmath>

#include "doctest.h"
#include "fractorus/kernels.hpp"
#include "fractorus/special.hpp"
#include "oracles.hpp"

using namespace fractorus;

TEST_CASE("wrap_coordinate: fundamental cell is (-pi, pi]") {
    CHECK(wrap_coordinate(0.0) == 0.0);
    CHECK(std::abs(wrap_coordinate(kPi) - kPi) < 1e-15);
    CHECK(std::abs(wrap_coordinate(-kPi) - kPi) < 1e-15);
    CHECK(std::abs(wrap_coordinate(3.0 * kPi) - kPi) < 1e-14);
    CHECK(std::abs(wrap_coordinate(2.0 * kPi)) < 1e-15);
    CHECK(std::abs(wrap_coordinate(kPi + 0.1) - (-kPi + 0.1)) < 1e-14);
    CHECK(std::abs(wrap_coordinate(-0.2) - (-0.2)) < 1e-16);
    CHECK(std::abs(wrap_coordinate(7.0) - (7.0 - 2.0 * kPi)) < 1e-14);
}

TEST_CASE("heat_kernel_1d: image and spectral series agree across the crossover") {
    for (double t : {0.05, 0.3, 0.5, 1.0, 3.0})
        for (double x : {0.0, 0.5, 2.0, kPi}) {
            const KernelValue g = heat_kernel_1d(x, t, {}, HeatSeries::gaussian);
            const KernelValue s = heat_kernel_1d(x, t, {}, HeatSeries::spectral);
            CHECK(std::abs(g.value - s.value) < 2e-12);
            CHECK(std::abs(g.value - oracles::heat_sum_1d(x, t)) < 1e-12);
            CHECK(g.value > 0.0);
            CHECK(g.est_error >= 0.0);
            CHECK(s.est_error >= 0.0);
        }
}

TEST_CASE("heat_kernel_1d: automatic crossover matches both explicit branches") {
    const KernelValue lo = heat_kernel_1d(1.0, 0.2, {});
    CHECK(lo.value == heat_kernel_1d(1.0, 0.2, {}, HeatSeries::gaussian).value);
    const KernelValue hi = heat_kernel_1d(1.0, 2.0, {});
    CHECK(hi.value == heat_kernel_1d(1.0, 2.0, {}, HeatSeries::spectral).value);
}

TEST_CASE("heat_kernel_1d: unit mass on the circle") {
    // (2π)·(grid mean) is exact for the trapezoid rule up to the aliasing
    // terms e^{-t(kM)^2}, which vanish at this t and M.
    const int m = 128;
    const double t = 0.7;
    double mean = 0.0;
    for (int j = 0; j < m; ++j) {
        const double x = -kPi + (j + 1) * (2.0 * kPi / m);
        mean += heat_kernel_1d(x, t, {}).value;
    }
    mean /= m;
    CHECK(std::abs(2.0 * kPi * mean - 1.0) < 1e-12);
}

TEST_CASE("heat_kernel: n-dimensional values match an independent 2D series") {
    const double t = 0.4;
    const std::array<double, 3> x{1.1, -2.3, 0.0};
    long double series = 0.0L;
    for (int a = -14; a <= 14; ++a)
        for (int b = -14; b <= 14; ++b)
            series += expl(-static_cast<long double>(t) * (a * a + b * b)) *
                      cosl(a * x[0] + b * x[1]);
    const double want = static_cast<double>(series / (4.0L * kPi * kPi));
    const KernelValue got = heat_kernel(x, 2, t, {});
    CHECK(std::abs(got.value - want) < 1e-13);
    CHECK(std::abs(got.value - want) <= got.est_error + 1e-13);
}

TEST_CASE("heat_kernel_1d: configured radii too small raise numerical errors") {
    KernelConfig tiny_spectral;
    tiny_spectral.spectral_radius = 4;
    CHECK_THROWS_AS(heat_kernel_1d(0.3, 1e-4, tiny_spectral, HeatSeries::spectral),
                    NumericalError);
    KernelConfig tiny_lattice;
    tiny_lattice.lattice_radius = 4;
    CHECK_THROWS_AS(heat_kernel_1d(0.3, 50.0, tiny_lattice, HeatSeries::gaussian),
                    NumericalError);
    CHECK_THROWS_AS(heat_kernel_1d(0.3, 0.0, {}), InputError);
    CHECK_THROWS_AS(heat_kernel(std::array<double, 3>{0, 0, 0}, 4, 1.0, {}), InputError);
}

TEST_CASE("riesz_kernel (1D): matches the long-double lattice oracle") {
    for (double sigma : {0.5, 1.0, 1.5})
        for (double x : {kPi / 8.0, kPi / 2.0, kPi}) {
            const KernelValue k = riesz_kernel({x, 0, 0}, 1, sigma, {});
            const double brute = oracles::brute_riesz_1d(x, sigma);
            CHECK(std::abs(k.value - brute) < 1e-9);
            CHECK(std::abs(k.value - brute) <= k.est_error + 1e-9);
        }
}

TEST_CASE("riesz_kernel (1D, sigma = 1): closed form 1/(4 pi sin^2(x/2))") {
    for (int j = 1; j <= 8; ++j) {
        const double x = j * kPi / 8.0;
        const double closed = 1.0 / (4.0 * kPi * std::sin(0.5 * x) * std::sin(0.5 * x));
        CHECK(std::abs(riesz_kernel({x, 0, 0}, 1, 1.0, {}).value - closed) < 1e-8);
    }
}

TEST_CASE("riesz_kernel_heat (1D): independent route agrees with the oracle") {
    for (double sigma : {0.5, 1.3})
        for (double x : {0.7, kPi}) {
            const KernelValue k = riesz_kernel_heat({x, 0, 0}, 1, sigma, {});
            CHECK(std::abs(k.value - oracles::brute_riesz_1d(x, sigma)) < 1e-9);
        }
}

TEST_CASE("riesz_kernel vs riesz_kernel_heat in 2D and 3D within certified budgets") {
    {
        const std::array<double, 3> x{1.0, 0.7, 0.0};
        const KernelValue lat = riesz_kernel(x, 2, 0.8, {});
        const KernelValue heat = riesz_kernel_heat(x, 2, 0.8, {});
        CHECK(std::abs(lat.value - heat.value) <= lat.est_error + heat.est_error + 1e-12);
        // The time-integral route carries a much tighter certificate.
        CHECK(heat.est_error < 1e-6 * std::abs(heat.value));
        CHECK(lat.value > 0.0);
    }
    {
        const std::array<double, 3> x{1.2, -0.5, 2.0};
        const KernelValue lat = riesz_kernel(x, 3, 1.4, {});
        const KernelValue heat = riesz_kernel_heat(x, 3, 1.4, {});
        CHECK(std::abs(lat.value - heat.value) <= lat.est_error + heat.est_error + 1e-12);
        CHECK(heat.est_error < 1e-6 * std::abs(heat.value));
    }
}

TEST_CASE("riesz_kernel: lattice truncation certificate is honest in 2D") {
    KernelConfig coarse;
    coarse.lattice_radius = 6;
    const std::array<double, 3> x{1.5, 2.0, 0.0};
    const KernelValue a = riesz_kernel(x, 2, 0.6, coarse);
    const KernelValue b = riesz_kernel(x, 2, 0.6, {});  // radius 48 reference
    CHECK(std::abs(a.value - b.value) <= a.est_error + b.est_error);
    CHECK(a.est_error > b.est_error);  // certificate shrinks with radius
}

TEST_CASE("riesz kernels: singularity and domain guards") {
    CHECK_THROWS_AS(riesz_kernel({0, 0, 0}, 1, 0.5, {}), InputError);
    CHECK_THROWS_AS(riesz_kernel({2.0 * kPi, 0, 0}, 1, 0.5, {}), InputError);
    CHECK_THROWS_AS(riesz_kernel({1.0, 0, 0}, 1, 2.0, {}), InputError);
    CHECK_THROWS_AS(riesz_kernel_heat({0, 0, 0}, 2, 0.5, {}), InputError);
    CHECK_THROWS_AS(riesz_kernel_poisson(0.0, 0.5, {}), InputError);
}

TEST_CASE("poisson_kernel_1d: closed form equals the spectral series") {
    for (double t : {0.05, 0.2, 1.0, 3.0})
        for (double x : {0.0, 1.0, kPi})
            CHECK(std::abs(poisson_kernel_1d(x, t) - oracles::poisson_series_1d(x, t)) <
                  1e-12);
    CHECK_THROWS_AS(poisson_kernel_1d(1.0, 0.0), InputError);
}

TEST_CASE("poisson_difference_kernel_1d: equals 2P_t - P_2t and stays nonnegative") {
    for (double t : {0.5, 1.0, 2.0})
        for (double x : {0.3, 1.5, kPi}) {
            const double naive = 2.0 * poisson_kernel_1d(x, t) - poisson_kernel_1d(x, 2.0 * t);
            CHECK(std::abs(poisson_difference_kernel_1d(x, t) - naive) < 1e-14);
        }
    // Small t at large x is where the naive difference loses every digit;
    // the factored form remains positive.
    for (double t : {1e-4, 1e-2, 0.1, 1.0, 10.0})
        for (int j = 1; j <= 16; ++j) {
            const double x = j * kPi / 16.0;
            CHECK(poisson_difference_kernel_1d(x, t) >= 0.0);
        }
}

TEST_CASE("riesz_kernel_poisson: both difference orders agree with the lattice kernel") {
    for (double sigma : {0.6, 1.3})
        for (double x : {0.8, 2.5}) {
            const KernelValue p = riesz_kernel_poisson(x, sigma, {});
            const KernelValue k = riesz_kernel({x, 0, 0}, 1, sigma, {});
            CHECK(std::abs(p.value - k.value) <=
                  p.est_error + k.est_error + 1e-9 * std::abs(k.value));
        }
}

TEST_CASE("KernelConfig: validation") {
    KernelConfig c;
    c.crossover_t = 0.0;
    CHECK_THROWS_AS(c.validate(), InputError);
    c = {};
    c.lattice_radius = 0;
    CHECK_THROWS_AS(c.validate(), InputError);
    c = {};
    c.quad_rel_tol = 1e-3;
    CHECK_THROWS_AS(c.validate(), InputError);
    c = {};
    c.quad_abs_tol = 0.0;
    CHECK_THROWS_AS(c.validate(), InputError);
}
