#pragma once
// Independent reference implementations used only by the tests.  Each oracle
// reaches its target quantity through a different representation than the
// library does (Bessel functions, long-double lattice sums with analytic tail
// closure, raw trigonometric series), so agreement is a genuine cross-check
// rather than a rearrangement of the same code.

namespace oracles {

// ∫₀^∞ e^{−a/r − r} r^{α−1} dr  =  2 a^{α/2} K_α(2√a),  a > 0, any real α
// (K is even in its order).  Evaluated via std::cyl_bessel_k.
double bessel_extension_integral(double alpha, double a);

// 1D periodized power-law kernel
//   prefactor(σ,1) · Σ_{ν∈Z} |x − 2πν|^{−(1+σ)},   x ∈ (0, π],
// by long-double summation to `radius` plus an Euler–Maclaurin midpoint tail;
// the prefactor is recomputed here directly from std::lgamma.
double brute_riesz_1d(double x, double sigma, long radius = 200000);

// 1D Poisson kernel by its raw spectral series (truncation chosen from t).
double poisson_series_1d(double x, double t);

// Periodized Gaussian by direct long-double image summation.
double heat_sum_1d(double x, double t, int radius = 40);

} // namespace oracles
