#pragma once
//
// Degenerate-elliptic extension solver on T^n × (0,∞).
//
// For noninteger γ > 0 write m = [γ], s = γ − m ∈ (0,1).  The cylinder
// problem
//
//     Δ_x u + ((1−2γ)/y)·∂_y u + ∂_yy u = 0,   u(x, 0) = f(x)
//
// diagonalizes over Fourier modes: with λ = |ν|² each coefficient is
// c_ν · Φ(λ, y, γ), where
//
//     Φ(λ, y, γ) = I_γ(λy²/4) / Γ(γ),
//     I_α(a)     = ∫₀^∞ e^{−a/r − r} r^{α−1} dr   (a > 0, any real α).
//
// Φ equals E[e^{−a/R}] for R ~ Gamma(γ): it lies in (0,1], decreases in both
// λ and y, and reduces to the subordination formula e^{−y√λ} at γ = 1/2.
// All y-derivatives are taken analytically under the integral sign via
// I_α'(a) = −I_{α−1}(a), so
//
//     (y⁻¹∂_y)^j Φ = (−λ/2)^j · I_{γ−j}(λy²/4) / Γ(γ).
//
// The weighted Neumann trace
//
//     y^{1−2s} ∂_y (y⁻¹∂_y)^m u  =  y^{2−2s} (y⁻¹∂_y)^{m+1} u  →  μ_γ·(−Δ)^γ f
//
// as y → 0, with μ_γ = (−1)^{m+1}·4^{1−s}·Γ(1−s) / (2^{m+1}·Γ(γ)) (see
// mu_gamma in special.hpp).  The limit is extracted per mode by least-squares
// extrapolation in the basis {1, y^{2−2s}, y²}, the exact form of the two
// leading corrections of the small-a expansion of I_{s−1}.
//
#include <complex>
#include <cstddef>
#include <vector>

#include "fractorus/errors.hpp"
#include "fractorus/fields.hpp"
#include "fractorus/kernels.hpp"
#include "fractorus/quadrature.hpp"

namespace fractorus {

// γ > 0 and not an integer (the trace constant has poles at integers).
void validate_power_order(double gamma);

// I_α(a) for a > 0; computed as e^{−2√a}·∫ e^{−(a e^{−w} + e^w − 2√a)} e^{αw} dw
// over w = ln r, which keeps the integrand O(1) near its peak for large a.
double extension_kernel_integral(double alpha, double a, QuadTol tol = {1e-12, 1e-300});

// 40-point geometric grid on [1e-4, 4], graded toward 0.
std::vector<double> default_y_grid();

// Φ(λ, y, γ); exactly 1 for λ = 0 (the zero mode passes through unchanged).
double extension_multiplier(double lambda, double y, double gamma,
                            const KernelConfig& cfg = {});

struct ExtensionSlice {
    double gamma = 0.5;
    std::vector<double> y_grid;  // strictly increasing, positive
    FourierField source;
    // modes[j * mode_count + idx] = c_idx · Φ(λ_idx, y_j, γ)
    std::vector<std::complex<double>> modes;

    std::size_t mode_count() const { return source.coeffs.size(); }
    std::complex<double> at(std::size_t j, std::size_t idx) const {
        return modes[j * mode_count() + idx];
    }
    void validate() const;
};

ExtensionSlice extension_solve(const FourierField& F, double gamma,
                               const std::vector<double>& y_grid,
                               const KernelConfig& cfg = {}, bool parallel = true);

struct TraceReport {
    double gamma = 0.0;
    double mu = 0.0;               // trace constant μ_γ
    FourierField recovered;        // extrapolated trace limit / μ_γ
    FourierField reference;        // spectral (−Δ)^γ f
    double sup_error = 0.0;        // ‖recovered − reference‖_∞ on the matched grid
    std::vector<double> y_used;    // extrapolation subset (smallest of y_grid)
    std::vector<double> trace_sup_seq;  // ‖q(·,y)/μ − reference‖_∞ per y (audit)
};

// Requires at least 8 grid points with the smallest ≤ 1e-4 (the boundary
// layer of the y^{2−2s} correction must be resolved).  Throws NumericalError
// if the extrapolation residual is incompatible with the correction model.
TraceReport neumann_trace(const ExtensionSlice& slice, const KernelConfig& cfg = {},
                          bool parallel = true);

// sup over modes of |λ·û − ((1−2γ)/y)·∂_y û − ∂_yy û| / (1 + λ|û|) at an
// interior y, with the derivatives evaluated by independent quadratures of
// the differentiated integrand (a genuine consistency check, not an identity
// rearrangement).
double pde_residual(const ExtensionSlice& slice, double y, const KernelConfig& cfg = {});

// ‖y^{1−2γ} ∂_y u(·, y)‖_{L²(T^n)} extrapolated to y → 0; valid for
// γ ∈ (0,1), where it converges to |μ_γ|·‖(−Δ)^γ f‖_{L²}.
double l2_trace_limit(const ExtensionSlice& slice, const KernelConfig& cfg = {});

} // namespace fractorus
