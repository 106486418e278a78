#include "oracles.hpp"

#include <cmath>
#include <initializer_list>

namespace oracles {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double bessel_extension_integral(double alpha, double a) {
    const double arg = 2.0 * std::sqrt(a);
    return 2.0 * std::pow(a, 0.5 * alpha) * std::cyl_bessel_k(std::abs(alpha), arg);
}

double brute_riesz_1d(double x, double sigma, long radius) {
    const long double p = 1.0L + static_cast<long double>(sigma);
    const long double twopi = 2.0L * static_cast<long double>(kPi);
    const long double xl = static_cast<long double>(x);

    long double sum = powl(fabsl(xl), -p);
    for (long nu = 1; nu <= radius; ++nu) {
        const long double base = twopi * nu;
        sum += powl(base - xl, -p) + powl(base + xl, -p);
    }
    // Midpoint Euler–Maclaurin closure of Σ_{ν>R} g(ν), g(u) = (2πu ∓ x)^{−p}:
    //   Σ = ∫_{R+1/2}^∞ g du + g'(R+1/2)/24 + O(g'''),
    //   ∫ = (2π(R+1/2) ∓ x)^{1−p} / (2π(p−1)),  g' = −p·2π·(…)^{−p−1}.
    const long double mid = twopi * (static_cast<long double>(radius) + 0.5L);
    for (long double sgn : {-1.0L, 1.0L}) {
        const long double e = mid + sgn * xl;
        sum += powl(e, 1.0L - p) / (twopi * (p - 1.0L));
        sum -= p * twopi * powl(e, -p - 1.0L) / 24.0L;
    }

    const double pref = std::exp(sigma * std::log(2.0) + std::lgamma(0.5 * (1.0 + sigma)) -
                                 std::lgamma(1.0 - 0.5 * sigma) - 0.5 * std::log(kPi)) *
                        0.5 * sigma;
    return pref * static_cast<double>(sum);
}

double poisson_series_1d(double x, double t) {
    // e^{−tν} < 1e−21 once ν > 48/t.
    const long radius = static_cast<long>(std::ceil(48.0 / t)) + 8;
    long double s = 0.5L;
    for (long nu = 1; nu <= radius; ++nu)
        s += expl(-static_cast<long double>(t) * nu) *
             cosl(static_cast<long double>(nu) * static_cast<long double>(x));
    return static_cast<double>(s / static_cast<long double>(kPi));
}

double heat_sum_1d(double x, double t, int radius) {
    const long double tl = static_cast<long double>(t);
    long double s = 0.0L;
    for (int nu = -radius; nu <= radius; ++nu) {
        const long double d =
            static_cast<long double>(x) - 2.0L * static_cast<long double>(kPi) * nu;
        s += expl(-d * d / (4.0L * tl));
    }
    return static_cast<double>(s / sqrtl(4.0L * static_cast<long double>(kPi) * tl));
}

} // namespace oracles
