#include "fractorus/kernels.hpp"

#include <cmath>
#include <string>

#include "fractorus/quadrature.hpp"
#include "fractorus/special.hpp"

namespace fractorus {

double wrap_coordinate(double x) {
    // Reduce to (-π, π].
    double y = std::remainder(x, 2.0 * kPi);  // (-π, π] up to the boundary tie
    if (y <= -kPi) y += 2.0 * kPi;
    return y;
}

//----------------------------------------------------------------------------
// Heat kernel
//----------------------------------------------------------------------------

KernelValue heat_kernel_1d(double x, double t, const KernelConfig& cfg, HeatSeries series) {
    cfg.validate();
    if (!(t > 0.0)) throw InputError("heat_kernel_1d: t must be > 0");
    const double xr = wrap_coordinate(x);
    if (series == HeatSeries::automatic)
        series = (t <= cfg.crossover_t) ? HeatSeries::gaussian : HeatSeries::spectral;

    const double eps = cfg.quad_abs_tol;
    KernelValue out;
    if (series == HeatSeries::gaussian) {
        // (4πt)^{-1/2} Σ_k e^{-(x-2πk)²/4t}; omitted images have
        // |x - 2πk| >= π(2k-1), and successive squared distances grow by
        // >= 8π²k, so the tail is geometrically dominated.
        const double amp = 1.0 / std::sqrt(4.0 * kPi * t);
        const double log_need = std::max(0.0, std::log(amp / eps));
        int radius = static_cast<int>(
                         std::ceil((std::sqrt(4.0 * t * (log_need + 2.0)) + kPi) / (2.0 * kPi))) +
                     1;
        if (radius > cfg.lattice_radius)
            throw NumericalError("heat_kernel_1d: lattice_radius " +
                                 std::to_string(cfg.lattice_radius) +
                                 " too small for requested tolerance at t = " +
                                 std::to_string(t));
        double s = 0.0;
        for (int k = -radius; k <= radius; ++k) {
            const double d = xr - 2.0 * kPi * k;
            s += std::exp(-d * d / (4.0 * t));
        }
        const double d_next = kPi * (2.0 * radius + 1.0);
        const double lead = std::exp(-d_next * d_next / (4.0 * t));
        const double ratio = std::exp(-2.0 * kPi * kPi * radius / t);
        out.value = amp * s;
        out.est_error = 2.0 * amp * lead / std::max(1e-300, 1.0 - ratio);
    } else {
        // (2π)^{-1} (1 + 2 Σ_{k>=1} e^{-tk²} cos kx); tail ratio e^{-t(2K+1)}.
        const double log_need = std::max(1.0, std::log(1.0 / (kPi * eps)));
        int radius = static_cast<int>(std::ceil(std::sqrt(log_need / t))) + 1;
        if (radius > cfg.spectral_radius)
            throw NumericalError("heat_kernel_1d: spectral_radius " +
                                 std::to_string(cfg.spectral_radius) +
                                 " too small for requested tolerance at t = " +
                                 std::to_string(t));
        double s = 1.0;
        for (int k = 1; k <= radius; ++k) s += 2.0 * std::exp(-t * k * k) * std::cos(k * xr);
        const double lead = std::exp(-t * double(radius + 1) * (radius + 1));
        const double ratio = std::exp(-t * (2.0 * radius + 3.0));
        out.value = s / (2.0 * kPi);
        out.est_error = (1.0 / kPi) * lead / std::max(1e-300, 1.0 - ratio);
    }
    return out;
}

KernelValue heat_kernel(const std::array<double, 3>& x, int n, double t,
                        const KernelConfig& cfg, HeatSeries series) {
    if (n < 1 || n > 3) throw InputError("heat_kernel: n must be 1, 2 or 3");
    // W_t(x) = Π_d w_t(x_d): the n-dim periodized Gaussian factorizes exactly,
    // in either series representation.
    KernelValue out;
    out.value = 1.0;
    double rel_err = 0.0;
    for (int d = 0; d < n; ++d) {
        KernelValue w = heat_kernel_1d(x[d], t, cfg, series);
        out.value *= w.value;
        rel_err += w.est_error / std::max(1e-300, std::abs(w.value));
    }
    out.est_error = std::abs(out.value) * rel_err;
    return out;
}

//----------------------------------------------------------------------------
// Riesz-type lattice kernel
//----------------------------------------------------------------------------

namespace {

// Euler–Maclaurin closure of Σ_{u=m}^{∞} (2πu + a)^{-(1+σ)}, a ∈ (-π, π].
// Terms through g⁽⁵⁾/30240 are kept; the g⁽⁷⁾ term bounds the remainder.
struct EmTail {
    double value;
    double est_error;
};

EmTail em_tail(double a, double sigma, int m) {
    const double twopi = 2.0 * kPi;
    const double base = twopi * m + a;  // > 0 for m >= 1
    const double p = 1.0 + sigma;
    const double integral = std::pow(base, -sigma) / (twopi * sigma);
    const double g0 = std::pow(base, -p);
    const double g1 = -p * twopi * std::pow(base, -p - 1.0);
    const double g3 = -p * (p + 1.0) * (p + 2.0) * std::pow(twopi, 3) * std::pow(base, -p - 3.0);
    const double g5 = -p * (p + 1.0) * (p + 2.0) * (p + 3.0) * (p + 4.0) *
                      std::pow(twopi, 5) * std::pow(base, -p - 5.0);
    const double g7 = -p * (p + 1.0) * (p + 2.0) * (p + 3.0) * (p + 4.0) * (p + 5.0) *
                      (p + 6.0) * std::pow(twopi, 7) * std::pow(base, -p - 7.0);
    EmTail t;
    t.value = integral + 0.5 * g0 - g1 / 12.0 + g3 / 720.0 - g5 / 30240.0;
    t.est_error = std::abs(g7) / 1209600.0;  // |B_8|/8! = 1/1209600
    return t;
}

KernelValue riesz_lattice_1d(double x, double sigma, const KernelConfig& cfg) {
    const int radius = cfg.lattice_radius;
    const double p = 1.0 + sigma;
    double s = 0.0;
    for (int nu = -radius; nu <= radius; ++nu)
        s += std::pow(std::abs(x - 2.0 * kPi * nu), -p);
    // ν >= R+1: distances 2πν - x; ν <= -(R+1): distances 2πν + x (ν = |ν|).
    EmTail plus = em_tail(-x, sigma, radius + 1);
    EmTail minus = em_tail(x, sigma, radius + 1);
    KernelValue out;
    out.value = s + plus.value + minus.value;
    out.est_error = plus.est_error + minus.est_error +
                    1e-15 * out.value * (2.0 * radius + 3.0);
    return out;
}

KernelValue riesz_lattice_nd(const std::array<double, 3>& x, int n, double sigma,
                             const KernelConfig& cfg) {
    const int radius = cfg.lattice_radius;
    const double p = n + sigma;
    double s = 0.0;
    const int r1 = radius, r2 = (n >= 2) ? radius : 0, r3 = (n >= 3) ? radius : 0;
    for (int a = -r1; a <= r1; ++a) {
        const double dx = x[0] - 2.0 * kPi * a;
        for (int b = -r2; b <= r2; ++b) {
            const double dy = (n >= 2) ? x[1] - 2.0 * kPi * b : 0.0;
            for (int c = -r3; c <= r3; ++c) {
                const double dz = (n >= 3) ? x[2] - 2.0 * kPi * c : 0.0;
                s += std::pow(dx * dx + dy * dy + dz * dz, -0.5 * p);
            }
        }
    }
    // Shell m > R has at most 8m (n=2) / 26m² (n=3) points at distance
    // >= π(2m-1) >= πm, so the tail is below C_n π^{-(n+σ)} R^{-σ}/σ.
    const double cn = (n == 2) ? 8.0 : 26.0;
    const double tail =
        cn * std::pow(kPi, -p) * std::pow(double(radius), -sigma) / sigma;
    KernelValue out;
    out.value = s;
    out.est_error = tail + 1e-15 * s * std::pow(2.0 * radius + 1.0, n);
    return out;
}

std::array<double, 3> wrap_point(const std::array<double, 3>& x, int n) {
    std::array<double, 3> y{0.0, 0.0, 0.0};
    for (int d = 0; d < n; ++d) y[d] = wrap_coordinate(x[d]);
    return y;
}

} // namespace

KernelValue riesz_kernel(const std::array<double, 3>& x, int n, double sigma,
                         const KernelConfig& cfg) {
    cfg.validate();
    if (n < 1 || n > 3) throw InputError("riesz_kernel: n must be 1, 2 or 3");
    if (!(sigma > 0.0 && sigma < 2.0)) throw InputError("riesz_kernel: sigma must lie in (0,2)");
    const std::array<double, 3> xr = wrap_point(x, n);
    double norm2 = 0.0;
    for (int d = 0; d < n; ++d) norm2 += xr[d] * xr[d];
    if (norm2 == 0.0) throw InputError("riesz_kernel: singular at x = 0");

    KernelValue lattice = (n == 1) ? riesz_lattice_1d(xr[0], sigma, cfg)
                                   : riesz_lattice_nd(xr, n, sigma, cfg);
    const double pref = riesz_prefactor(sigma, n);
    return {pref * lattice.value, pref * lattice.est_error};
}

KernelValue riesz_kernel_heat(const std::array<double, 3>& x, int n, double sigma,
                              const KernelConfig& cfg) {
    cfg.validate();
    if (n < 1 || n > 3) throw InputError("riesz_kernel_heat: n must be 1, 2 or 3");
    if (!(sigma > 0.0 && sigma < 2.0))
        throw InputError("riesz_kernel_heat: sigma must lie in (0,2)");
    const std::array<double, 3> xr = wrap_point(x, n);
    double d0sq = 0.0;
    for (int d = 0; d < n; ++d) d0sq += xr[d] * xr[d];
    if (d0sq == 0.0) throw InputError("riesz_kernel_heat: singular at x = 0");

    // ∫₀^∞ W_t(x) t^{-1-σ/2} dt / |Γ(-σ/2)| on the log axis t = e^v.
    // Left window: W_t(x) ≤ C t^{-n/2} e^{-d0²/4t}; right: W → (2π)^{-n} and
    // the weight decays like e^{-σv/2}.
    const double v_lo = std::log(d0sq) - std::log(4.0 * (45.0 + 3.0 * n)) - 3.0;
    const double v_hi = 2.0 * 45.0 / sigma + 5.0;
    auto integrand = [&](double v) {
        const double t = std::exp(v);
        return heat_kernel(xr, n, t, cfg).value * std::exp(-0.5 * sigma * v);
    };
    QuadTol tol{cfg.quad_rel_tol, cfg.quad_abs_tol};
    QuadResult q = gk_adaptive(integrand, v_lo, v_hi, tol, 4000,
                               {std::log(d0sq) - 1.0, 0.0, 10.0});
    if (!q.converged)
        throw NumericalError("riesz_kernel_heat: time-integral quadrature did not converge");
    const double inv_gamma = 1.0 / abs_gamma_neg_half(sigma);
    return {inv_gamma * q.value, inv_gamma * (q.est_error + 1e-15 * std::abs(q.value))};
}

//----------------------------------------------------------------------------
// 1D Poisson kernels
//----------------------------------------------------------------------------

double poisson_kernel_1d(double x, double t) {
    if (!(t > 0.0)) throw InputError("poisson_kernel_1d: t must be > 0");
    const double xr = wrap_coordinate(x);
    const double one_minus_q = -std::expm1(-t);        // 1 - e^{-t}
    const double one_minus_q2 = -std::expm1(-2.0 * t); // 1 - e^{-2t}
    const double q = std::exp(-t);
    const double s = std::sin(0.5 * xr);
    const double denom = one_minus_q * one_minus_q + 4.0 * q * s * s;
    return one_minus_q2 / (2.0 * kPi * denom);
}

double poisson_difference_kernel_1d(double x, double t) {
    if (!(t > 0.0)) throw InputError("poisson_difference_kernel_1d: t must be > 0");
    // 2P_t - P_{2t} = (1-q²)(1-q)²·(1+4q+q² - 4q sin²(x/2)) / (2π A B),
    // A = (1-q)²+4q sin²(x/2), B = (1-q²)²+4q² sin²(x/2):  every factor is
    // positive and evaluated without subtractive cancellation (the naive
    // difference loses all digits for small t, where D_t ~ t³ but P_t ~ t).
    const double xr = wrap_coordinate(x);
    const double q = std::exp(-t);
    const double s2 = std::sin(0.5 * xr) * std::sin(0.5 * xr);
    const double omq = -std::expm1(-t);        // 1-q
    const double omq2 = -std::expm1(-2.0 * t); // 1-q²
    const double a = omq * omq + 4.0 * q * s2;
    const double b = omq2 * omq2 + 4.0 * q * q * s2;
    const double num = omq2 * omq * omq * (1.0 + 4.0 * q + q * q - 4.0 * q * s2);
    return num / (2.0 * kPi * a * b);
}

KernelValue riesz_kernel_poisson(double x, double sigma, const KernelConfig& cfg) {
    cfg.validate();
    if (!(sigma > 0.0 && sigma < 2.0))
        throw InputError("riesz_kernel_poisson: sigma must lie in (0,2)");
    const double xr = wrap_coordinate(x);
    if (xr == 0.0) throw InputError("riesz_kernel_poisson: singular at x = 0");

    const bool low = sigma < 1.0;
    const double s2 = std::sin(0.5 * xr) * std::sin(0.5 * xr);
    // Small-t behaviour: P_t ~ t/(4π sin²(x/2)) and D_t ~ t³·(…)/sin⁴, so on
    // the log axis the integrand decays like e^{(1-σ)v} resp. e^{(3-σ)v} as
    // v → -∞; as v → +∞ both kernels tend to 1/2π and the weight e^{-σv}
    // takes over.
    const double left_rate = low ? (1.0 - sigma) : (3.0 - sigma);
    const double v_lo = -(45.0 + 2.0 * std::abs(std::log(s2))) / left_rate - 5.0;
    const double v_hi = 45.0 / sigma + 5.0;
    auto integrand = [&](double v) {
        const double t = std::exp(v);
        const double kern =
            low ? poisson_kernel_1d(xr, t) : poisson_difference_kernel_1d(xr, t);
        return kern * std::exp(-sigma * v);
    };
    QuadTol tol{cfg.quad_rel_tol, cfg.quad_abs_tol};
    // The t = 1 point (v = 0) seeds the split required near the kernel's
    // regime change between the two decay laws.
    QuadResult q = gk_adaptive(integrand, v_lo, v_hi, tol, 6000, {-10.0, 0.0, 10.0});
    if (!q.converged)
        throw NumericalError("riesz_kernel_poisson: time-integral quadrature did not converge");
    const double norm = low ? -c_sigma(sigma) : c_sigma(sigma);  // both positive
    return {q.value / norm, (q.est_error + 1e-15 * std::abs(q.value)) / norm};
}

} // namespace fractorus
