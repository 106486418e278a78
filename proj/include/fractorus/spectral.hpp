// fractorus — Fourier-multiplier operators on the torus.
//
// Every operator here acts diagonally on the coefficient cube:
//   frac_laplacian(σ):  |ν|^σ          (σ ∈ (0,2); zero mode annihilated)
//   frac_power(γ):      |ν|^{2γ}       (γ > 0; the fractional Laplacian of
//                                       order σ is frac_power(σ/2))
//   heat(t):            e^{-t|ν|²}     (t ≥ 0; t = 0 is the identity)
//   heat_dt(t, k):      (-|ν|²)^k e^{-t|ν|²}     (k-th time derivative)
//   poisson1d(t):       e^{-t|κ|}      (dim 1 only)
//   poisson1d_dt(t, k): (-|κ|)^k e^{-t|κ|}
#pragma once

#include <array>

#include "fractorus/fields.hpp"

namespace fractorus {

struct MultiplierOp {
    enum class Kind { frac_laplacian, frac_power, heat, heat_dt, poisson1d, poisson1d_dt };

    Kind kind = Kind::heat;
    double order = 0.0;  // σ (frac_laplacian) or γ (frac_power)
    double t = 0.0;      // semigroup time
    int k = 0;           // time-derivative order

    static MultiplierOp frac_laplacian(double sigma);
    static MultiplierOp frac_power(double gamma);
    static MultiplierOp heat(double t);
    static MultiplierOp heat_dt(double t, int k);
    static MultiplierOp poisson1d(double t);
    static MultiplierOp poisson1d_dt(double t, int k);

    void validate(int dim) const;
    // Scalar symbol at squared mode norm w2 = |ν|².
    double factor(double w2) const;
};

FourierField apply_multiplier(const FourierField& F, const MultiplierOp& op);
GridField apply_multiplier(const GridField& f, const MultiplierOp& op);

// Convenience wrappers used throughout the library and tests.
GridField frac_laplacian_spectral(const GridField& f, double sigma);
GridField heat_semigroup(const GridField& f, double t);
GridField poisson_semigroup_1d(const GridField& f, double t);
GridField minus_laplacian(const GridField& f);  // multiplier |ν|²

// Band-limited evaluation of Σ c_ν e^{iν·x} at an arbitrary point (real part).
double eval_interpolant(const FourierField& F, const std::array<double, 3>& x);

// f(x+z) sampled on the grid of `spec` (coefficients phase-shifted by e^{iν·z}).
GridField translate_eval(const FourierField& F, const GridSpec& spec,
                         const std::array<double, 3>& z);

// Spectral partial derivative ∂/∂x_axis (multiplier iν_axis).
GridField spectral_partial(const GridField& f, int axis);

// Coefficients of T_t f - f (heat) computed with expm1(-t|ν|²): full relative
// accuracy for arbitrarily small t (the naive difference e^{-t|ν|²}-1 loses
// all digits once t|ν|² < 1e-16).
FourierField heat_difference_coeffs(const FourierField& F, double t);

// Coefficients of (P_t - I)^power f (1D Poisson) via expm1(-t|κ|)^power;
// exact binomial identity, e.g. power 2 gives P_{2t} - 2P_t + I.
FourierField poisson_difference_coeffs_1d(const FourierField& F, double t, int power);

// Grid inner product (2π)^{-n} ∫ f g = mean of the pointwise product.
double inner_product_mean(const GridField& f, const GridField& g);

} // namespace fractorus
