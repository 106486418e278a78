#include "fractorus/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fractorus/builtins.hpp"
#include "fractorus/errors.hpp"
#include "fractorus/extension.hpp"
#include "fractorus/fields.hpp"
#include "fractorus/kernels.hpp"
#include "fractorus/pointwise.hpp"
#include "fractorus/quadrature.hpp"
#include "fractorus/regularity.hpp"
#include "fractorus/special.hpp"
#include "fractorus/spectral.hpp"

namespace fractorus::acceptance {
namespace {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

// Tracks the worst (largest) observed value together with where it occurred.
struct Worst {
    double value = -std::numeric_limits<double>::infinity();
    std::string tag;
    void feed(double v, std::string t) {
        if (!(v <= value)) {  // also promotes NaN to the reported worst case
            value = v;
            tag = std::move(t);
        }
    }
};

double sup_diff(const GridField& a, const GridField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

std::vector<double> geometric_grid(double lo, double hi, int count) {
    std::vector<double> g(count);
    const double r = std::log(hi / lo) / (count - 1);
    for (int i = 0; i < count; ++i) g[i] = lo * std::exp(r * i);
    g.back() = hi;
    return g;
}

// ---------------------------------------------------------------------------
// 1. Every computational route reproduces the multiplier definition.
// ---------------------------------------------------------------------------
CriterionResult crit_routes() {
    Stopwatch sw;
    const std::vector<double> sigmas{0.3, 0.7, 1.0, 1.3, 1.8};
    Worst worst;

    {
        GridSpec spec{1, 64};
        for (int nu = 1; nu <= 4; ++nu) {
            const GridField f = builtin_field("cos" + std::to_string(nu) + "x", spec);
            for (double s : sigmas) {
                const GridField ref = frac_laplacian_spectral(f, s);
                for (Route r : {Route::pointwise, Route::heat_integral, Route::poisson_1d}) {
                    const PointwiseFieldResult got = apply_route(f, s, r);
                    worst.feed(sup_diff(got.values, ref),
                               route_name(r) + " cos" + std::to_string(nu) +
                                   "x sigma=" + num(s));
                }
            }
        }
    }
    {
        GridSpec spec{2, 32};
        const GridField f = builtin_field("cos_x1_cos_x2", spec);
        for (double s : sigmas) {
            const GridField ref = frac_laplacian_spectral(f, s);
            for (Route r : {Route::pointwise, Route::heat_integral}) {
                const PointwiseFieldResult got = apply_route(f, s, r);
                worst.feed(sup_diff(got.values, ref),
                           route_name(r) + " cos_x1_cos_x2 sigma=" + num(s));
            }
        }
    }

    const double elapsed = sw.seconds();
    CriterionResult r;
    r.id = "routes-match-spectral";
    r.passed = worst.value <= 1e-5 && elapsed < 120.0;
    r.detail = "max sup-norm discrepancy vs multiplier " + num(worst.value) + " at " +
               worst.tag + " (bound 1e-05, time budget 120 s)";
    return r;
}

// ---------------------------------------------------------------------------
// 2. Heat kernel: image-sum and mode-sum series agree; unit mass.
// ---------------------------------------------------------------------------
CriterionResult crit_heat_dual() {
    const KernelConfig cfg;
    const std::vector<double> ts = geometric_grid(0.05, 5.0, 20);
    Worst dual, mass;

    for (int i = 0; i < 20; ++i) {
        const double x1 = -kPi + 2.0 * kPi * (i + 0.5) / 20.0;
        const double x2 = wrap_coordinate(0.37 * x1 + 1.1);
        for (double t : ts) {
            const double g1 = heat_kernel_1d(x1, t, cfg, HeatSeries::gaussian).value;
            const double s1 = heat_kernel_1d(x1, t, cfg, HeatSeries::spectral).value;
            dual.feed(std::abs(g1 - s1), "n=1 x=" + num(x1) + " t=" + num(t));
            const std::array<double, 3> x{x1, x2, 0.0};
            const double g2 = heat_kernel(x, 2, t, cfg, HeatSeries::gaussian).value;
            const double s2 = heat_kernel(x, 2, t, cfg, HeatSeries::spectral).value;
            dual.feed(std::abs(g2 - s2), "n=2 x=(" + num(x1) + "," + num(x2) + ") t=" + num(t));
        }
    }

    // Unit normalization: the cell integral of the image-sum series, evaluated
    // as (2π)^n × grid mean (exact for these t since aliased modes vanish).
    for (int n = 1; n <= 2; ++n) {
        const GridSpec spec{n, n == 1 ? 256 : 64};
        for (double t : ts) {
            long double acc = 0.0;
            for (std::size_t idx = 0; idx < spec.size(); ++idx)
                acc += heat_kernel(spec.point(idx), n, t, cfg, HeatSeries::gaussian).value;
            const double integral =
                static_cast<double>(acc / static_cast<long double>(spec.size())) *
                std::pow(2.0 * kPi, n);
            mass.feed(std::abs(integral - 1.0), "n=" + std::to_string(n) + " t=" + num(t));
        }
    }

    CriterionResult r;
    r.id = "heat-kernel-dual-series";
    r.passed = dual.value <= 2e-12 && mass.value <= 1e-11;
    r.detail = "max series mismatch " + num(dual.value) + " at " + dual.tag +
               " (bound 2e-12); max |cell mass - 1| " + num(mass.value) + " at " + mass.tag +
               " (bound 1e-11)";
    return r;
}

// ---------------------------------------------------------------------------
// 3. Riesz kernel closed form at σ = 1, n = 1, with a brute-force oracle.
// ---------------------------------------------------------------------------
const std::array<double, 8>& crit3_points() {
    static const std::array<double, 8> xs = [] {
        std::array<double, 8> v{};
        for (int j = 1; j <= 8; ++j) v[j - 1] = j * kPi / 8.0;
        return v;
    }();
    return xs;
}

// Direct image sum Σ_{|ν| ≤ R} |x-2πν|^{-2} with the Euler–Maclaurin midpoint
// tail (O(R^{-3}) residual); computed once per process.
const std::array<double, 8>& crit3_brute_oracle() {
    static const std::array<double, 8> vals = [] {
        constexpr long R = 1000000;
        std::array<double, 8> out{};
        const auto& xs = crit3_points();
        for (int j = 0; j < 8; ++j) {
            const double x = xs[j];
            long double acc = 1.0L / (static_cast<long double>(x) * x);
            for (long nu = 1; nu <= R; ++nu) {
                const long double p = 2.0L * kPi * nu;
                acc += 1.0L / ((p - x) * (p - x)) + 1.0L / ((p + x) * (p + x));
            }
            const long double edge = 2.0L * kPi * (R + 0.5L);
            acc += (1.0L / (edge - x) + 1.0L / (edge + x)) / (2.0L * kPi);
            out[j] = static_cast<double>(acc) * riesz_prefactor(1.0, 1);
        }
        return out;
    }();
    return vals;
}

CriterionResult crit_riesz_closed_form() {
    Worst closed, brute;
    const auto& xs = crit3_points();
    const auto& oracle = crit3_brute_oracle();
    for (int j = 0; j < 8; ++j) {
        const double x = xs[j];
        const double k = riesz_kernel({x, 0.0, 0.0}, 1, 1.0).value;
        const double s = std::sin(0.5 * x);
        const double target = 1.0 / (4.0 * kPi * s * s);
        closed.feed(std::abs(k - target), "x=" + num(x));
        brute.feed(std::abs(k - oracle[j]), "x=" + num(x));
    }
    CriterionResult r;
    r.id = "riesz-kernel-closed-form";
    r.passed = closed.value <= 1e-8 && brute.value <= 1e-9;
    r.detail = "max |K - 1/(4π sin²(x/2))| " + num(closed.value) + " at " + closed.tag +
               " (bound 1e-08); max |K - brute image sum| " + num(brute.value) +
               " (bound 1e-09)";
    return r;
}

// ---------------------------------------------------------------------------
// 4. Normalization constants: quadrature vs closed form, endpoint asymptotics.
// ---------------------------------------------------------------------------
CriterionResult crit_constants() {
    Worst quad, asym;

    const double target_half = -2.0 * std::sqrt(kPi);
    const double target_three_half = (std::pow(2.0, 1.5) - 2.0) * gamma_neg(1.5);
    quad.feed(std::abs(c_sigma_quadrature(0.5) - c_sigma(0.5)), "sigma=0.5 quad-vs-closed");
    quad.feed(std::abs(c_sigma_quadrature(1.5) - c_sigma(1.5)), "sigma=1.5 quad-vs-closed");
    quad.feed(std::abs(c_sigma(0.5) - target_half), "sigma=0.5 closed-vs--2sqrt(pi)");
    quad.feed(std::abs(c_sigma(1.5) - target_three_half), "sigma=1.5 closed-vs-stated");

    const double lo = 1e-3, hi = 2.0 - 1e-3;
    asym.feed(std::abs((-2.0 / lo) / gamma_neg_half(lo) - 1.0), "(-2/σ)/Γ(-σ/2)→1 at σ=1e-3");
    asym.feed(std::abs((1.0 / (hi - 2.0)) / gamma_neg_half(hi) / 0.5 - 1.0),
              "(σ-2)^{-1}/Γ(-σ/2)→1/2 at σ=2-1e-3");
    asym.feed(std::abs((1.0 / c_sigma(lo)) / (-lo) - 1.0), "1/c_σ ~ -σ at σ=1e-3");
    asym.feed(std::abs((1.0 / c_sigma(hi)) / (2.0 - hi) - 1.0), "1/c_σ ~ 2-σ at σ=2-1e-3");

    CriterionResult r;
    r.id = "semigroup-constants";
    r.passed = quad.value <= 1e-9 && asym.value < 1e-3;
    r.detail = "max constant mismatch " + num(quad.value) + " at " + quad.tag +
               " (bound 1e-09); max endpoint-asymptotic rel. error " + num(asym.value) +
               " at " + asym.tag + " (bound 1e-03)";
    return r;
}

// ---------------------------------------------------------------------------
// 5. σ → 0⁺ and σ → 2 limits on cos 2x: exact error values, monotone decay.
// ---------------------------------------------------------------------------
CriterionResult crit_limits() {
    const GridField f = builtin_field("cos2x", GridSpec{1, 32});
    const PVConfig cfg;
    Worst dev;
    bool monotone = true;

    const LimitScanReport zero = limit_zero_scan(f, {0.9, 0.7, 0.5, 0.3, 0.1}, cfg);
    for (std::size_t i = 0; i < zero.sigmas.size(); ++i) {
        const double expect = std::pow(2.0, zero.sigmas[i]) - 1.0;
        dev.feed(std::abs(zero.sup_errors[i] - expect),
                 "toward-0 sigma=" + num(zero.sigmas[i]));
        if (i > 0 && !(zero.sup_errors[i] < zero.sup_errors[i - 1] + 1e-12)) monotone = false;
    }
    monotone = monotone && zero.monotone;

    const LimitScanReport two =
        limit_two_scan(f, {1.2, 1.5, 1.8, 1.95, 2.05, 2.2, 2.5}, /*include_above=*/true, cfg);
    for (std::size_t i = 0; i < two.sigmas.size(); ++i) {
        const double s = two.sigmas[i];
        const double expect = std::abs(std::pow(2.0, s) - 4.0);
        dev.feed(std::abs(two.sup_errors[i] - expect), "toward-2 sigma=" + num(s));
        if (i > 0) {
            const bool below = two.sigmas[i] < 2.0;
            const bool prev_below = two.sigmas[i - 1] < 2.0;
            if (below && prev_below && !(two.sup_errors[i] < two.sup_errors[i - 1] + 1e-12))
                monotone = false;
            if (!below && !prev_below && !(two.sup_errors[i] > two.sup_errors[i - 1] - 1e-12))
                monotone = false;
        }
    }
    monotone = monotone && two.monotone;

    CriterionResult r;
    r.id = "limit-scans";
    r.passed = dev.value <= 1e-6 && monotone;
    r.detail = "max |sup_error - |2^σ - target|| " + num(dev.value) + " at " + dev.tag +
               " (bound 1e-06); monotone toward both endpoints: " + (monotone ? "yes" : "NO");
    return r;
}

// ---------------------------------------------------------------------------
// 6. Kernel two-sided power bounds and odd-moment cancellation.
// ---------------------------------------------------------------------------
CriterionResult crit_kernel_bounds() {
    Worst spread, moment;

    const std::array<std::array<double, 2>, 2> groups{{{0.25, 0.75}, {1.25, 1.75}}};
    for (const auto& group : groups) {
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        bool positive = true;
        for (double s : group) {
            for (int j = 1; j <= 16; ++j) {
                const double x = j * kPi / 16.0;
                const double k = riesz_kernel({x, 0.0, 0.0}, 1, s).value;
                if (!(k > 0.0)) positive = false;
                const double ratio = k * std::pow(x, 1.0 + s);
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
            }
        }
        spread.feed(positive ? hi / lo : std::numeric_limits<double>::infinity(),
                    "sigma in {" + num(group[0]) + "," + num(group[1]) + "}");
    }

    for (double s : {0.25, 0.75, 1.25, 1.75}) {
        const auto zk = [s](double z) {
            return z * riesz_kernel({z, 0.0, 0.0}, 1, s).value;
        };
        const QuadTol qt{1e-13, 1e-16};
        const double plus = gk_adaptive(zk, 0.05, kPi, qt).value;
        const double minus = gk_adaptive(zk, -kPi, -0.05, qt).value;
        moment.feed(std::abs(plus + minus), "sigma=" + num(s));
    }

    CriterionResult r;
    r.id = "kernel-sandwich-moment";
    r.passed = spread.value < 100.0 && moment.value < 1e-10;
    r.detail = "max spread of K(x)·x^{1+σ} " + num(spread.value) + " for " + spread.tag +
               " (bound 100); max |∫ z K| " + num(moment.value) + " at " + moment.tag +
               " (bound 1e-10)";
    return r;
}

// ---------------------------------------------------------------------------
// 7. Extension problem: trace constant, subordination, trace recovery.
// ---------------------------------------------------------------------------
CriterionResult crit_extension() {
    Worst mu_dev, subord, trace, residual, l2;

    mu_dev.feed(std::abs(mu_gamma(0.5) + 1.0), "mu(1/2)");

    for (double lambda : {1.0, 2.0, 4.0, 9.0, 16.0, 25.0})
        for (double y : {0.01, 0.1, 0.5, 1.0, 2.0, 4.0})
            subord.feed(std::abs(extension_multiplier(lambda, y, 0.5) -
                                 std::exp(-y * std::sqrt(lambda))),
                        "lambda=" + num(lambda) + " y=" + num(y));

    const GridSpec spec{1, 16};
    GridField f = GridField::zeros(spec);
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double x = spec.point(i)[0];
        f.values[i] = std::cos(x) + 0.5 * std::cos(3.0 * x);
    }
    const FourierField F = to_fourier(f);

    for (double g : {0.3, 0.5, 0.7, 1.4, 2.6}) {
        const ExtensionSlice slice = extension_solve(F, g, default_y_grid());
        const TraceReport tr = neumann_trace(slice);
        trace.feed(tr.sup_error, "gamma=" + num(g));
        residual.feed(pde_residual(slice, 0.5), "gamma=" + num(g));
        if (g < 1.0) {
            const double got = l2_trace_limit(slice);
            const double ref = std::abs(mu_gamma(g)) * std::sqrt(2.0 * kPi) *
                               sobolev_norm(F, 2.0 * g);
            l2.feed(std::abs(got - ref), "gamma=" + num(g));
        }
    }

    CriterionResult r;
    r.id = "extension-trace";
    r.passed = mu_dev.value <= 1e-12 && subord.value <= 1e-10 && trace.value < 1e-4 &&
               residual.value < 1e-6 && l2.value <= 1e-4;
    r.detail = "|mu(1/2)+1| " + num(mu_dev.value) + " (bound 1e-12); max |Φ - e^{-y√λ}| " +
               num(subord.value) + " (bound 1e-10); max trace sup_error " + num(trace.value) +
               " at " + trace.tag + " (bound 1e-04); max pde residual " + num(residual.value) +
               " (bound 1e-06); max L² trace mismatch " + num(l2.value) + " (bound 1e-04)";
    return r;
}

// ---------------------------------------------------------------------------
// 8. Seminorm estimators: closed forms, scaling, family-bounded ratios.
// ---------------------------------------------------------------------------
double heat_lambda_closed_form(int nu, double beta) {
    const int k = static_cast<int>(std::floor(0.5 * beta)) + 1;
    const double p = k - 0.5 * beta;
    return std::pow(nu, beta) * std::pow(p, p) * std::exp(-p);
}

CriterionResult crit_seminorms() {
    Worst closed, scaling, zyg;
    const GridSpec spec1{1, 32};

    const std::array<std::pair<int, double>, 4> cases{
        {{1, 1.0}, {2, 1.0}, {1, 1.5}, {3, 1.2}}};
    for (const auto& [nu, beta] : cases) {
        const GridField f = builtin_field("cos" + std::to_string(nu) + "x", spec1);
        const double got = heat_lambda_seminorm(f, beta).value;
        const double ref = heat_lambda_closed_form(nu, beta);
        closed.feed(std::abs(got / ref - 1.0),
                    "nu=" + std::to_string(nu) + " beta=" + num(beta));
    }

    for (double beta : {1.0, 1.6}) {
        const double base =
            heat_lambda_seminorm(builtin_field("cos1x", spec1), beta).value;
        for (int nu = 2; nu <= 8; ++nu) {
            const GridField f = builtin_field("cos" + std::to_string(nu) + "x", spec1);
            const double got = heat_lambda_seminorm(f, beta).value;
            scaling.feed(std::abs(got / (std::pow(nu, beta) * base) - 1.0),
                         "nu=" + std::to_string(nu) + " beta=" + num(beta));
        }
    }

    double eq_lo = std::numeric_limits<double>::infinity(), eq_hi = 0.0;
    for (int nu = 1; nu <= 8; ++nu) {
        const GridField f = builtin_field("cos" + std::to_string(nu) + "x", spec1);
        const auto [a, b] = equivalence_scan(f, 1.0, 1, 2);
        eq_lo = std::min(eq_lo, a / b);
        eq_hi = std::max(eq_hi, a / b);
    }

    double tr_lo = std::numeric_limits<double>::infinity(), tr_hi = 0.0;
    for (int nu = 1; nu <= 8; ++nu) {
        const GridField f = builtin_field("cos" + std::to_string(nu) + "x", spec1);
        for (double s : {0.3, 0.9}) {
            const double ratio = transfer_ratio(f, s, 1.5);
            tr_lo = std::min(tr_lo, ratio);
            tr_hi = std::max(tr_hi, ratio);
        }
    }

    const GridSpec spec64{1, 64};
    std::vector<GridField> zfields;
    for (const char* name : {"cosx", "cos2x", "cos3x", "gauss:0.8", "gauss:1.5"})
        zfields.push_back(builtin_field(name, spec64));
    zfields.push_back(builtin_field("cos_x1_cos_x2", GridSpec{2, 32}));
    for (std::size_t i = 0; i < zfields.size(); ++i) {
        const double z = zygmund_seminorm(zfields[i]).value;
        const double lip = holder_seminorm(zfields[i], 0, 1.0).value;
        zyg.feed(z - 2.0 * lip, "field #" + std::to_string(i));
    }

    CriterionResult r;
    r.id = "seminorm-family";
    const bool eq_ok = eq_hi / eq_lo < 10.0;
    const bool tr_ok = tr_lo > 0.0 && tr_hi / tr_lo < 50.0;
    r.passed = closed.value <= 0.01 && scaling.value <= 0.02 && eq_ok && tr_ok &&
               zyg.value <= 1e-12;
    r.detail = "max closed-form rel. dev " + num(closed.value) + " at " + closed.tag +
               " (bound 0.01); max scaling rel. dev " + num(scaling.value) +
               " (bound 0.02); equivalence ratio spread " + num(eq_hi / eq_lo) +
               " (bound 10); transfer ratio spread " + num(tr_hi / tr_lo) +
               " (bound 50); max Zygmund - 2·Lipschitz " + num(zyg.value) + " (bound 1e-12)";
    return r;
}

// ---------------------------------------------------------------------------
// 9. Mutation sensitivity: perturbed constants must fail a fast re-check.
// ---------------------------------------------------------------------------
bool fast_routes_check() {
    const GridField f = builtin_field("cos2x", GridSpec{1, 32});
    const GridField ref = frac_laplacian_spectral(f, 0.7);
    for (Route r : {Route::pointwise, Route::poisson_1d})
        if (sup_diff(apply_route(f, 0.7, r).values, ref) > 1e-5) return false;
    return true;
}

bool fast_kernel_check() {
    const double x = 0.5 * kPi;
    const double s = std::sin(0.5 * x);
    const double target = 1.0 / (4.0 * kPi * s * s);
    return std::abs(riesz_kernel({x, 0.0, 0.0}, 1, 1.0).value - target) <= 1e-8;
}

bool fast_constants_check() {
    return std::abs(c_sigma_quadrature(0.5) - c_sigma(0.5)) <= 1e-9 &&
           std::abs(c_sigma_quadrature(1.5) - c_sigma(1.5)) <= 1e-9;
}

bool fast_extension_check() {
    if (std::abs(mu_gamma(0.5) + 1.0) > 1e-12) return false;
    const GridField f = builtin_field("cosx", GridSpec{1, 8});
    const ExtensionSlice slice = extension_solve(to_fourier(f), 0.7, default_y_grid());
    return neumann_trace(slice).sup_error < 1e-4;
}

CriterionResult crit_mutation() {
    struct Sub {
        const char* name;
        bool (*run)();
    };
    const std::array<Sub, 4> subs{{{"routes", fast_routes_check},
                                   {"kernel", fast_kernel_check},
                                   {"constants", fast_constants_check},
                                   {"extension", fast_extension_check}}};

    const auto failed_subs = [&subs]() {
        std::string failed;
        for (const auto& sub : subs) {
            bool ok = false;
            try {
                ok = sub.run();
            } catch (const std::exception&) {
                ok = false;  // an internal guard tripping also counts as detection
            }
            if (!ok) failed += std::string(failed.empty() ? "" : "+") + sub.name;
        }
        return failed;
    };

    std::string baseline = failed_subs();
    bool ok = baseline.empty();
    std::string detail =
        baseline.empty() ? std::string("baseline fast checks pass")
                         : "baseline fast checks FAIL (" + baseline + ")";

    const std::array<std::pair<testing::Knob, const char*>, 3> knobs{
        {{testing::Knob::riesz_prefactor, "riesz_prefactor"},
         {testing::Knob::c_sigma, "c_sigma"},
         {testing::Knob::mu_gamma, "mu_gamma"}}};
    for (const auto& [knob, name] : knobs) {
        for (double factor : {1.01, 0.99}) {
            testing::PerturbationGuard guard(knob, factor);
            const std::string failed = failed_subs();
            detail += std::string("; ") + name + "×" + num(factor) + "→" +
                      (failed.empty() ? "UNDETECTED" : failed);
            if (failed.empty()) ok = false;
        }
    }

    CriterionResult r;
    r.id = "mutation-sensitivity";
    r.passed = ok;
    r.detail = detail;
    return r;
}

struct Entry {
    const char* id;
    CriterionResult (*run)();
};

const std::array<Entry, 9>& registry() {
    static const std::array<Entry, 9> entries{{
        {"routes-match-spectral", crit_routes},
        {"heat-kernel-dual-series", crit_heat_dual},
        {"riesz-kernel-closed-form", crit_riesz_closed_form},
        {"semigroup-constants", crit_constants},
        {"limit-scans", crit_limits},
        {"kernel-sandwich-moment", crit_kernel_bounds},
        {"extension-trace", crit_extension},
        {"seminorm-family", crit_seminorms},
        {"mutation-sensitivity", crit_mutation},
    }};
    return entries;
}

} // namespace

std::vector<std::string> criterion_ids() {
    std::vector<std::string> ids;
    for (const auto& e : registry()) ids.emplace_back(e.id);
    return ids;
}

CriterionResult run_criterion(const std::string& id) {
    for (const auto& e : registry()) {
        if (id == e.id) {
            Stopwatch sw;
            CriterionResult r;
            try {
                r = e.run();
            } catch (const std::exception& ex) {
                r.id = e.id;
                r.passed = false;
                r.detail = std::string("exception: ") + ex.what();
            }
            r.elapsed_s = sw.seconds();
            return r;
        }
    }
    throw InputError("unknown criterion id '" + id + "'");
}

std::vector<CriterionResult> run_all(const std::string& filter, std::ostream* live) {
    std::vector<CriterionResult> out;
    for (const auto& e : registry()) {
        if (!filter.empty() && std::string(e.id).find(filter) == std::string::npos) continue;
        out.push_back(run_criterion(e.id));
        if (live) *live << format_line(out.back()) << std::endl;
    }
    if (out.empty()) throw InputError("selftest filter '" + filter + "' matches no criterion");
    return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult& r) { return r.passed; });
}

std::string format_line(const CriterionResult& r) {
    char t[32];
    std::snprintf(t, sizeof t, "%.1f", r.elapsed_s);
    return std::string(r.passed ? "[PASS] " : "[FAIL] ") + r.id + ": " + r.detail + " [" + t +
           " s]";
}

int run_and_report(std::ostream& os, const std::string& filter) {
    const auto results = run_all(filter, &os);
    int failed = 0;
    for (const auto& r : results)
        if (!r.passed) ++failed;
    os << (failed == 0 ? "all " + std::to_string(results.size()) + " criteria passed"
                       : std::to_string(failed) + " of " + std::to_string(results.size()) +
                             " criteria FAILED")
       << std::endl;
    return failed;
}

} // namespace fractorus::acceptance
