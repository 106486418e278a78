// fractorus — convolution kernels on the torus.
//
//  * heat_kernel: the periodized Gaussian W_t, evaluated by whichever of its
//    two series representations converges fast at the given t:
//      Gaussian series  (small t):  (4πt)^{-n/2} Σ_ν e^{-|x-2πν|²/4t}
//      spectral series  (large t):  (2π)^{-n} Σ_ν e^{-t|ν|²} e^{iν·x}
//    Both factorize over axes (the n-dim kernel is a product of 1D kernels),
//    so the crossover applies per axis and truncation bounds are explicit.
//  * riesz_kernel: the positive singular kernel of the pointwise formula,
//      K(x) = prefactor(σ,n) Σ_ν |x-2πν|^{-(n+σ)}.
//    For n = 1 the lattice tail is closed with Euler–Maclaurin corrections
//    (machine precision at modest radius); for n = 2,3 a certified truncation
//    bound goes into est_error.
//  * riesz_kernel_heat: the same kernel through its time-integral form
//      K(x) = |Γ(-σ/2)|^{-1} ∫₀^∞ W_t(x) t^{-1-σ/2} dt   — independent route.
//  * poisson_kernel_1d / poisson_difference_kernel_1d: closed-form 1D Poisson
//    kernel P_t and the difference kernel D_t = 2P_t - P_{2t} in a factored,
//    cancellation-free form (manifestly ≥ 0).
//  * riesz_kernel_poisson: 1D kernel through the Poisson-semigroup integral,
//    (1/|c_σ|)∫ P_t t^{-1-σ} dt for σ<1 and (1/c_σ)∫ D_t t^{-1-σ} dt for σ≥1.
#pragma once

#include <array>

#include "fractorus/errors.hpp"

namespace fractorus {

struct KernelConfig {
    double crossover_t = 0.5;    // Gaussian series for t <= crossover, else spectral
    int lattice_radius = 48;     // image/lattice truncation radius (>= 1)
    int spectral_radius = 256;   // spectral series truncation radius (>= 1)
    double quad_rel_tol = 1e-10; // relative tolerance of kernel quadratures
    double quad_abs_tol = 1e-13; // absolute floor of kernel quadratures

    void validate() const {
        if (!(crossover_t > 0.0)) throw InputError("KernelConfig: crossover_t must be > 0");
        if (lattice_radius < 1 || spectral_radius < 1)
            throw InputError("KernelConfig: truncation radii must be >= 1");
        if (!(quad_rel_tol > 0.0 && quad_rel_tol < 1e-6) ||
            !(quad_abs_tol > 0.0 && quad_abs_tol < 1e-6))
            throw InputError("KernelConfig: quadrature tolerances must lie in (0, 1e-6)");
    }
};

struct KernelValue {
    double value = 0.0;
    double est_error = 0.0;  // certified truncation/quadrature error estimate
};

enum class HeatSeries { automatic, gaussian, spectral };

// Wrap a coordinate into the fundamental cell (-π, π].
double wrap_coordinate(double x);

// 1D heat kernel w_t(x) with explicit truncation control; throws
// NumericalError if the configured radius cannot reach quad_abs_tol.
KernelValue heat_kernel_1d(double x, double t, const KernelConfig& cfg = {},
                           HeatSeries series = HeatSeries::automatic);

// n-dimensional heat kernel W_t(x) = Π_d w_t(x_d) (exact factorization).
KernelValue heat_kernel(const std::array<double, 3>& x, int n, double t,
                        const KernelConfig& cfg = {},
                        HeatSeries series = HeatSeries::automatic);

// Lattice-sum kernel (x wrapped into Q_n; throws InputError at x = 0).
KernelValue riesz_kernel(const std::array<double, 3>& x, int n, double sigma,
                         const KernelConfig& cfg = {});

// Same kernel via the heat-semigroup time integral.
KernelValue riesz_kernel_heat(const std::array<double, 3>& x, int n, double sigma,
                              const KernelConfig& cfg = {});

// 1D Poisson kernel P_t(x), closed form (t > 0).
double poisson_kernel_1d(double x, double t);

// D_t(x) = 2P_t(x) - P_{2t}(x) in factored form; nonnegative for all t > 0.
double poisson_difference_kernel_1d(double x, double t);

// 1D kernel via the Poisson-semigroup time integral (both σ branches).
KernelValue riesz_kernel_poisson(double x, double sigma, const KernelConfig& cfg = {});

} // namespace fractorus
