#include <cmath>
#include <random>

#include "doctest.h"
#include "fractorus/fields.hpp"
#include "fractorus/spectral.hpp"

using namespace fractorus;

namespace {

GridField cosine_field(const GridSpec& spec, int nu) {
    GridField f = GridField::zeros(spec);
    for (std::size_t i = 0; i < f.values.size(); ++i)
        f.values[i] = std::cos(nu * spec.point(i)[0]);
    return f;
}

GridField random_field(const GridSpec& spec, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    GridField f = GridField::zeros(spec);
    for (double& v : f.values) v = dist(rng);
    return f;
}

double sup_diff(const GridField& a, const GridField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

} // namespace

TEST_CASE("frac_laplacian_spectral: single modes scale by |nu|^sigma") {
    GridSpec s{1, 32};
    for (int nu : {1, 2, 3, 4})
        for (double sigma : {0.7, 1.4}) {
            GridField f = cosine_field(s, nu);
            GridField g = frac_laplacian_spectral(f, sigma);
            GridField want = f;
            const double factor = std::pow(double(nu), sigma);
            for (double& v : want.values) v *= factor;
            CHECK(sup_diff(g, want) < 1e-13 * factor);
        }
}

TEST_CASE("frac_laplacian_spectral: 2D product mode uses |nu|^sigma = (nu1^2+nu2^2)^{sigma/2}") {
    GridSpec s{2, 16};
    GridField f = GridField::zeros(s);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const auto x = s.point(i);
        f.values[i] = std::cos(x[0]) * std::cos(x[1]);
    }
    GridField g = frac_laplacian_spectral(f, 1.5);
    const double factor = std::pow(2.0, 0.75);
    GridField want = f;
    for (double& v : want.values) v *= factor;
    CHECK(sup_diff(g, want) < 1e-13);
}

TEST_CASE("zero mode is annihilated by fractional powers") {
    GridSpec s{1, 8};
    GridField f = GridField::zeros(s);
    for (double& v : f.values) v = 5.0;
    CHECK(frac_laplacian_spectral(f, 0.8).sup_norm() < 1e-13);
    CHECK(apply_multiplier(f, MultiplierOp::frac_power(1.3)).sup_norm() < 1e-13);
}

TEST_CASE("frac_power(sigma/2) coincides with frac_laplacian(sigma)") {
    GridSpec s{2, 8};
    GridField f = random_field(s, 99);
    GridField a = frac_laplacian_spectral(f, 1.1);
    GridField b = apply_multiplier(f, MultiplierOp::frac_power(0.55));
    CHECK(sup_diff(a, b) < 1e-14);
}

TEST_CASE("heat semigroup: mode decay and identity at t = 0") {
    GridSpec s{1, 16};
    GridField f = cosine_field(s, 3);
    GridField g = heat_semigroup(f, 0.2);
    GridField want = f;
    for (double& v : want.values) v *= std::exp(-0.2 * 9.0);
    CHECK(sup_diff(g, want) < 1e-14);
    CHECK(sup_diff(heat_semigroup(f, 0.0), f) < 1e-14);
    CHECK_THROWS_AS(heat_semigroup(f, -0.1), InputError);
}

TEST_CASE("poisson semigroup (1D): mode decay e^{-t|k|} and dim guard") {
    GridSpec s{1, 16};
    GridField f = cosine_field(s, 2);
    GridField g = poisson_semigroup_1d(f, 0.7);
    GridField want = f;
    for (double& v : want.values) v *= std::exp(-1.4);
    CHECK(sup_diff(g, want) < 1e-14);

    GridSpec s2{2, 8};
    GridField f2 = random_field(s2, 5);
    CHECK_THROWS_AS(apply_multiplier(f2, MultiplierOp::poisson1d(0.5)), InputError);
}

TEST_CASE("minus_laplacian multiplies modes by |nu|^2") {
    GridSpec s{1, 16};
    GridField f = cosine_field(s, 2);
    GridField want = f;
    for (double& v : want.values) v *= 4.0;
    CHECK(sup_diff(minus_laplacian(f), want) < 1e-13);
}

TEST_CASE("multiplier symbols: time-derivative factors") {
    CHECK(MultiplierOp::heat_dt(0.1, 1).factor(4.0) ==
          doctest::Approx(-4.0 * std::exp(-0.4)).epsilon(1e-14));
    CHECK(MultiplierOp::heat_dt(0.1, 2).factor(4.0) ==
          doctest::Approx(16.0 * std::exp(-0.4)).epsilon(1e-14));
    CHECK(MultiplierOp::poisson1d_dt(0.5, 1).factor(9.0) ==
          doctest::Approx(-3.0 * std::exp(-1.5)).epsilon(1e-14));
}

TEST_CASE("eval_interpolant: reproduces grid values and off-grid cosines") {
    GridSpec s{1, 16};
    GridField f = cosine_field(s, 3);
    FourierField F = to_fourier(f);
    for (std::size_t i = 0; i < f.values.size(); i += 3)
        CHECK(std::abs(eval_interpolant(F, s.point(i)) - f.values[i]) < 1e-13);
    for (double x : {0.123, -2.5, 3.1})
        CHECK(std::abs(eval_interpolant(F, {x, 0.0, 0.0}) - std::cos(3.0 * x)) < 1e-13);
}

TEST_CASE("translate_eval: phase shift equals translated samples") {
    GridSpec s{1, 16};
    GridField f = cosine_field(s, 2);
    const double z = 0.3;
    GridField g = translate_eval(to_fourier(f), s, {z, 0.0, 0.0});
    for (std::size_t i = 0; i < g.values.size(); ++i)
        CHECK(std::abs(g.values[i] - std::cos(2.0 * (s.point(i)[0] + z))) < 1e-13);
}

TEST_CASE("spectral_partial: exact derivatives of trigonometric data") {
    GridSpec s{1, 16};
    GridField f = cosine_field(s, 2);
    GridField df = spectral_partial(f, 0);
    for (std::size_t i = 0; i < df.values.size(); ++i)
        CHECK(std::abs(df.values[i] + 2.0 * std::sin(2.0 * s.point(i)[0])) < 1e-13);

    GridSpec s2{2, 16};
    GridField h = GridField::zeros(s2);
    for (std::size_t i = 0; i < h.values.size(); ++i) {
        const auto x = s2.point(i);
        h.values[i] = std::cos(x[0]) * std::cos(x[1]);
    }
    GridField dh = spectral_partial(h, 1);
    for (std::size_t i = 0; i < dh.values.size(); ++i) {
        const auto x = s2.point(i);
        CHECK(std::abs(dh.values[i] + std::cos(x[0]) * std::sin(x[1])) < 1e-13);
    }
    CHECK_THROWS_AS(spectral_partial(f, 1), InputError);  // axis out of range
}

TEST_CASE("heat_difference_coeffs: full relative accuracy at tiny t") {
    GridSpec s{1, 8};
    GridField f = cosine_field(s, 1);
    FourierField F = to_fourier(f);
    const double t = 1e-18;
    FourierField D = heat_difference_coeffs(F, t);
    // T_t f - f has coefficients expm1(-t)·(1/2) at nu = ±1; the naive
    // e^{-t} - 1 would round to zero here.
    const double want = std::expm1(-t) * 0.5;
    CHECK(want != 0.0);
    const double got = D.at({1, 0, 0}).real();
    CHECK(std::abs(got / want - 1.0) < 1e-12);
    CHECK(std::abs(D.at({0, 0, 0})) == 0.0);
}

TEST_CASE("poisson_difference_coeffs_1d: binomial identity at power 2") {
    GridSpec s{1, 16};
    GridField f = cosine_field(s, 3);
    FourierField F = to_fourier(f);
    const double t = 0.7;
    FourierField D = poisson_difference_coeffs_1d(F, t, 2);
    // (P_t - I)² has symbol (e^{-t|k|} - 1)² = e^{-2t|k|} - 2e^{-t|k|} + 1.
    const double sym = std::exp(-6.0 * t) - 2.0 * std::exp(-3.0 * t) + 1.0;
    CHECK(std::abs(D.at({3, 0, 0}).real() - 0.5 * sym) < 1e-15);
    // Tiny t: symbol ~ (t|k|)², far below double-rounding of the naive form.
    const double t2 = 1e-12;
    FourierField D2 = poisson_difference_coeffs_1d(F, t2, 2);
    CHECK(std::abs(D2.at({3, 0, 0}).real() / (0.5 * 9.0 * t2 * t2) - 1.0) < 1e-9);
}

TEST_CASE("multiplier operators are self-adjoint for the mean inner product") {
    GridSpec s{1, 16};
    GridField f = random_field(s, 11), g = random_field(s, 22);
    GridField Af = frac_laplacian_spectral(f, 0.9);
    GridField Ag = frac_laplacian_spectral(g, 0.9);
    const double lhs = inner_product_mean(Af, g);
    const double rhs = inner_product_mean(f, Ag);
    CHECK(std::abs(lhs - rhs) < 1e-13);
}

TEST_CASE("inner_product_mean: Parseval for sub-Nyquist trigonometric data") {
    GridSpec s{1, 16};
    GridField f = GridField::zeros(s);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double x = s.point(i)[0];
        f.values[i] = 2.0 + std::cos(3.0 * x) + 0.5 * std::sin(2.0 * x);
    }
    FourierField F = to_fourier(f);
    double parseval = 0.0;
    for (const auto& c : F.coeffs) parseval += std::norm(c);
    CHECK(std::abs(parseval - 4.625) < 1e-13);
    CHECK(std::abs(inner_product_mean(f, f) - parseval) < 1e-13);
}

TEST_CASE("multiplier validation rejects bad orders") {
    GridSpec s{1, 8};
    GridField f = cosine_field(s, 1);
    CHECK_THROWS_AS(frac_laplacian_spectral(f, 0.0), InputError);
    CHECK_THROWS_AS(frac_laplacian_spectral(f, 2.0), InputError);
    CHECK_THROWS_AS(apply_multiplier(f, MultiplierOp::frac_power(-1.0)), InputError);
}
