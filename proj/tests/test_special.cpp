#include <cmath>

#include "doctest.h"
#include "fractorus/errors.hpp"
#include "fractorus/special.hpp"

using namespace fractorus;

namespace {
const double kSqrtPi = std::sqrt(kPi);

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}
} // namespace

TEST_CASE("gamma_pos: classical values") {
    CHECK(std::abs(gamma_pos(1.0) - 1.0) < 1e-15);
    CHECK(std::abs(gamma_pos(0.5) - kSqrtPi) < 1e-15);
    CHECK(std::abs(gamma_pos(5.0) - 24.0) < 1e-13);
    CHECK(std::abs(gamma_pos(1.5) - 0.5 * kSqrtPi) < 1e-15);
    CHECK_THROWS_AS(gamma_pos(0.0), InputError);
    CHECK_THROWS_AS(log_gamma(-1.0), InputError);
}

TEST_CASE("gamma_neg: reflection through the recursion") {
    // Γ(-1/2) = -2√π, Γ(-3/2) = 4√π/3, Γ(-5/2) = -8√π/15.
    CHECK(rel_err(gamma_neg(0.5), -2.0 * kSqrtPi) < 1e-14);
    CHECK(rel_err(gamma_neg(1.5), 4.0 * kSqrtPi / 3.0) < 1e-14);
    CHECK(rel_err(gamma_neg(2.5), -8.0 * kSqrtPi / 15.0) < 1e-14);
    // Recursion consistency at a generic argument: Γ(-s) = Γ(-s+1)/(-s).
    const double s = 0.737;
    CHECK(rel_err(gamma_neg(s), gamma_pos(1.0 - s) / (-s)) < 1e-14);
    CHECK_THROWS_AS(gamma_neg(1.0), InputError);
    CHECK_THROWS_AS(gamma_neg(2.0), InputError);
    CHECK_THROWS_AS(gamma_neg(-0.5), InputError);
}

TEST_CASE("abs_gamma_neg_half and signed variant agree with gamma_neg") {
    for (double sigma : {0.1, 0.5, 1.0, 1.3, 1.9}) {
        CHECK(rel_err(abs_gamma_neg_half(sigma), std::abs(gamma_neg(0.5 * sigma))) < 1e-14);
        CHECK(gamma_neg_half(sigma) < 0.0);
        CHECK(rel_err(gamma_neg_half(sigma), gamma_neg(0.5 * sigma)) < 1e-14);
    }
    CHECK_THROWS_AS(abs_gamma_neg_half(0.0), InputError);
    CHECK_THROWS_AS(abs_gamma_neg_half(2.0), InputError);
}

TEST_CASE("riesz_prefactor: lgamma identity 2^s G((n+s)/2) / (|G(-s/2)| pi^{n/2})") {
    for (int n : {1, 2, 3})
        for (double sigma : {0.2, 0.77, 1.0, 1.5, 1.93}) {
            const double direct =
                std::exp(sigma * std::log(2.0) + std::lgamma(0.5 * (n + sigma)) -
                         0.5 * n * std::log(kPi)) /
                abs_gamma_neg_half(sigma);
            CHECK(rel_err(riesz_prefactor(sigma, n), direct) < 1e-13);
        }
    CHECK_THROWS_AS(riesz_prefactor(0.5, 4), InputError);
    CHECK_THROWS_AS(riesz_prefactor(2.0, 1), InputError);
}

TEST_CASE("riesz_prefactor: vanishes linearly at sigma -> 0") {
    // prefactor ~ (σ/2)·Γ(n/2)/π^{n/2} with an O(σ) relative correction.
    const double sigma = 1e-6;
    for (int n : {1, 2, 3}) {
        const double lead = 0.5 * sigma * gamma_pos(0.5 * n) / std::pow(kPi, 0.5 * n);
        CHECK(std::abs(riesz_prefactor(sigma, n) / lead - 1.0) < 1e-5);
    }
}

TEST_CASE("c_sigma: closed forms on both branches") {
    // σ < 1: Γ(-σ); the σ = 1/2 value is Γ(-1/2) = -2√π.
    CHECK(rel_err(c_sigma(0.5), -2.0 * kSqrtPi) < 1e-14);
    CHECK(rel_err(c_sigma(0.3), gamma_neg(0.3)) < 1e-14);
    // σ > 1: (2^σ - 2)·Γ(-σ); the σ = 3/2 value is (2√2-2)·4√π/3.
    CHECK(rel_err(c_sigma(1.5), (std::pow(2.0, 1.5) - 2.0) * 4.0 * kSqrtPi / 3.0) < 1e-14);
    CHECK(rel_err(c_sigma(1.2), (std::pow(2.0, 1.2) - 2.0) * gamma_neg(1.2)) < 1e-13);
    // Removable singularity at σ = 1: value 2 ln 2, approached continuously
    // from above.
    CHECK(rel_err(c_sigma(1.0), 2.0 * std::log(2.0)) < 1e-14);
    CHECK(rel_err(c_sigma(1.0 + 1e-9), 2.0 * std::log(2.0)) < 1e-7);
    // Signs: negative below 1, positive at and above 1.
    CHECK(c_sigma(0.9) < 0.0);
    CHECK(c_sigma(1.1) > 0.0);
    CHECK_THROWS_AS(c_sigma(2.0), InputError);
}

TEST_CASE("c_sigma_quadrature agrees with the closed forms") {
    for (double sigma : {0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.9}) {
        const double closed = c_sigma(sigma);
        const double quad = c_sigma_quadrature(sigma);
        CHECK(std::abs(quad - closed) <= 1e-9 * std::max(1.0, std::abs(closed)));
    }
}

TEST_CASE("mu_gamma: frozen reference values") {
    CHECK(std::abs(mu_gamma(0.5) + 1.0) < 1e-15);
    CHECK(rel_err(mu_gamma(0.3), -0.5725404585683117) < 1e-13);
    CHECK(rel_err(mu_gamma(0.7), -1.7466014585250251) < 1e-13);
    CHECK(rel_err(mu_gamma(1.4), 0.9639932637508286) < 1e-13);
    CHECK(std::abs(mu_gamma(1.5) - 1.0) < 1e-14);
    CHECK(rel_err(mu_gamma(2.5), -1.0 / 3.0) < 1e-14);
    CHECK(rel_err(mu_gamma(2.6), -0.3376795726421937) < 1e-13);
}

TEST_CASE("mu_gamma: sign alternates with the integer part") {
    CHECK(mu_gamma(0.25) < 0.0);
    CHECK(mu_gamma(0.9) < 0.0);
    CHECK(mu_gamma(1.1) > 0.0);
    CHECK(mu_gamma(1.9) > 0.0);
    CHECK(mu_gamma(2.2) < 0.0);
    CHECK_THROWS_AS(mu_gamma(1.0), InputError);
    CHECK_THROWS_AS(mu_gamma(-0.5), InputError);
}

TEST_CASE("mu_gamma: half-integer ladder (-1)^{m+1}/(2m+1)!!... reduces to rationals") {
    // γ = m + 1/2 gives 4^{1/2}Γ(1/2)/(2^{m+1}Γ(m+1/2)) with alternating sign:
    // -1, +1, -1/3, +1/15 for m = 0..3.
    CHECK(rel_err(mu_gamma(3.5), 1.0 / 15.0) < 1e-13);
}

TEST_CASE("perturbation knobs scale their constants exactly") {
    const double base_pref = riesz_prefactor(0.7, 2);
    const double base_c = c_sigma(1.3);
    const double base_mu = mu_gamma(0.7);
    {
        testing::PerturbationGuard g(testing::Knob::riesz_prefactor, 1.01);
        CHECK(rel_err(riesz_prefactor(0.7, 2), 1.01 * base_pref) < 1e-15);
        CHECK(rel_err(c_sigma(1.3), base_c) < 1e-15);  // other knobs untouched
    }
    {
        testing::PerturbationGuard g(testing::Knob::c_sigma, 0.99);
        CHECK(rel_err(c_sigma(1.3), 0.99 * base_c) < 1e-15);
    }
    {
        testing::PerturbationGuard g(testing::Knob::mu_gamma, 2.0);
        CHECK(rel_err(mu_gamma(0.7), 2.0 * base_mu) < 1e-15);
    }
    // Guards restored everything.
    CHECK(riesz_prefactor(0.7, 2) == base_pref);
    CHECK(c_sigma(1.3) == base_c);
    CHECK(mu_gamma(0.7) == base_mu);
    CHECK(testing::perturbation(testing::Knob::riesz_prefactor) == 1.0);
}

TEST_CASE("endpoint asymptotics of the constants") {
    // (-2/σ)/Γ(-σ/2) → 1 as σ→0⁺ and (σ-2)⁻¹/Γ(-σ/2) → 1/2 as σ→2⁻.
    const double s0 = 1e-3, s2 = 2.0 - 1e-3;
    CHECK(std::abs((-2.0 / s0) / gamma_neg_half(s0) - 1.0) < 1e-3);
    CHECK(std::abs((1.0 / (s2 - 2.0)) / gamma_neg_half(s2) - 0.5) < 1e-3);
    // 1/c_σ ~ -σ at 0⁺ and ~ (2-σ) at 2⁻.
    CHECK(std::abs(1.0 / c_sigma(s0) / (-s0) - 1.0) < 1e-3);
    CHECK(std::abs(1.0 / c_sigma(s2) / (2.0 - s2) - 1.0) < 1e-3);
}
