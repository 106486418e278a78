#include "fractorus/extension.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "fractorus/parallel.hpp"
#include "fractorus/special.hpp"
#include "fractorus/spectral.hpp"

namespace fractorus {

void validate_power_order(double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw InputError("power order must be positive and finite");
    if (std::abs(gamma - std::round(gamma)) < 1e-12)
        throw InputError("power order must not be an integer");
}

double extension_kernel_integral(double alpha, double a, QuadTol tol) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw InputError("extension_kernel_integral: a must be positive");
    const double sq = std::sqrt(a);
    const double la = std::log(a);
    const double aa = std::abs(alpha);
    // Window: outside [w_lo, w_hi] the shifted exponent a·e^{−w} + e^w − 2√a
    // exceeds the e^{αw} factor by > 50, so the tail is < e^{−50} of scale.
    const double w_lo = la - std::log(55.0 + 2.0 * sq + 20.0 * (1.0 + aa) * (1.0 + std::abs(la))) - 2.0;
    const double w_hi = std::log(2.0 * sq + 120.0 + 20.0 * aa) + 3.0;
    auto integrand = [&](double w) {
        const double phi = a * std::exp(-w) + std::exp(w) - 2.0 * sq;
        return std::exp(alpha * w - phi);
    };
    std::vector<double> splits;
    const double peak = 0.5 * la;  // minimum of the shifted exponent
    if (peak > w_lo && peak < w_hi) splits.push_back(peak);
    if (0.0 > w_lo && 0.0 < w_hi) splits.push_back(0.0);
    QuadResult q = gk_adaptive(integrand, w_lo, w_hi, tol, 4000, splits);
    if (!q.converged)
        throw NumericalError("extension_kernel_integral: quadrature did not converge");
    return std::exp(-2.0 * sq) * q.value;
}

std::vector<double> default_y_grid() {
    const int count = 40;
    const double lo = std::log(1e-4), hi = std::log(4.0);
    std::vector<double> ys(count);
    for (int j = 0; j < count; ++j)
        ys[j] = std::exp(lo + (hi - lo) * j / (count - 1));
    return ys;
}

double extension_multiplier(double lambda, double y, double gamma,
                            const KernelConfig& cfg) {
    validate_power_order(gamma);
    cfg.validate();
    if (!(y > 0.0)) throw InputError("extension_multiplier: y must be positive");
    if (lambda < 0.0) throw InputError("extension_multiplier: lambda must be >= 0");
    if (lambda == 0.0) return 1.0;
    const double a = 0.25 * lambda * y * y;
    return extension_kernel_integral(gamma, a, {cfg.quad_rel_tol, 1e-300}) /
           gamma_pos(gamma);
}

void ExtensionSlice::validate() const {
    validate_power_order(gamma);
    source.validate();
    if (y_grid.empty()) throw InputError("ExtensionSlice: empty y_grid");
    for (std::size_t j = 0; j < y_grid.size(); ++j) {
        if (!(y_grid[j] > 0.0)) throw InputError("ExtensionSlice: y_grid must be positive");
        if (j > 0 && !(y_grid[j] > y_grid[j - 1]))
            throw InputError("ExtensionSlice: y_grid must be strictly increasing");
    }
    if (modes.size() != y_grid.size() * source.coeffs.size())
        throw InputError("ExtensionSlice: mode table size mismatch");
}

namespace {

// Distinct λ = |ν|² values with the mode indices sharing each of them; λ is a
// small-integer-valued double, so exact keying is safe.
std::map<long long, std::vector<std::size_t>> group_by_lambda(const FourierField& F) {
    std::map<long long, std::vector<std::size_t>> groups;
    for (std::size_t idx = 0; idx < F.coeffs.size(); ++idx)
        groups[llround(F.mode_sq(idx))].push_back(idx);
    return groups;
}

GridSpec matched_grid(const FourierField& F) {
    GridSpec spec;
    spec.dim = F.dim;
    spec.m = std::max(4, 2 * F.mode_radius);
    return spec;
}

// Least-squares fit q(y) ≈ A + B·y^e + C·y² on (ys, qs); returns A and the
// rms residual.  Columns are max-scaled and the 3×3 normal equations solved
// in long double.
struct Fit {
    double limit = 0.0;
    double rms = 0.0;
};

Fit fit_three_term(const std::vector<double>& ys, const std::vector<double>& qs,
                   double e) {
    const std::size_t n = ys.size();
    std::vector<std::array<long double, 3>> cols(n);
    std::array<long double, 3> scale{1.0L, 0.0L, 0.0L};
    for (std::size_t i = 0; i < n; ++i) {
        cols[i] = {1.0L, static_cast<long double>(std::pow(ys[i], e)),
                   static_cast<long double>(ys[i]) * ys[i]};
        scale[1] = std::max(scale[1], cols[i][1]);
        scale[2] = std::max(scale[2], cols[i][2]);
    }
    for (auto& c : cols) {
        c[1] /= scale[1];
        c[2] /= scale[2];
    }
    long double ata[3][3] = {};
    long double atb[3] = {};
    for (std::size_t i = 0; i < n; ++i)
        for (int r = 0; r < 3; ++r) {
            atb[r] += cols[i][r] * qs[i];
            for (int c = 0; c < 3; ++c) ata[r][c] += cols[i][r] * cols[i][c];
        }
    // Gaussian elimination with partial pivoting on the 3×3 system.
    int perm[3] = {0, 1, 2};
    for (int k = 0; k < 3; ++k) {
        int p = k;
        for (int r = k + 1; r < 3; ++r)
            if (std::abs(ata[perm[r]][k]) > std::abs(ata[perm[p]][k])) p = r;
        std::swap(perm[k], perm[p]);
        const long double piv = ata[perm[k]][k];
        if (std::abs(static_cast<double>(piv)) < 1e-30)
            throw NumericalError("trace extrapolation: singular least-squares system");
        for (int r = k + 1; r < 3; ++r) {
            const long double m = ata[perm[r]][k] / piv;
            for (int c = k; c < 3; ++c) ata[perm[r]][c] -= m * ata[perm[k]][c];
            atb[perm[r]] -= m * atb[perm[k]];
        }
    }
    long double sol[3];
    for (int k = 2; k >= 0; --k) {
        long double v = atb[perm[k]];
        for (int c = k + 1; c < 3; ++c) v -= ata[perm[k]][c] * sol[c];
        sol[k] = v / ata[perm[k]][k];
    }
    Fit fit;
    fit.limit = static_cast<double>(sol[0]);
    long double ss = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        const long double r =
            qs[i] - (sol[0] * cols[i][0] + sol[1] * cols[i][1] + sol[2] * cols[i][2]);
        ss += r * r;
    }
    fit.rms = static_cast<double>(std::sqrt(static_cast<double>(ss / n)));
    return fit;
}

// Trace quantity per unit coefficient:
//   q_λ(y) = y^{2−2s}·(−λ/2)^{m+1}·I_{s−1}(λy²/4) / Γ(γ)  →  μ_γ·λ^γ.
double trace_quantity(double lambda, double y, double gamma, double rel_tol) {
    const int m = static_cast<int>(std::floor(gamma));
    const double s = gamma - m;
    const double a = 0.25 * lambda * y * y;
    const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (−1)^{m+1}
    return sign * std::pow(0.5 * lambda, m + 1) * std::pow(y, 2.0 - 2.0 * s) *
           extension_kernel_integral(s - 1.0, a, {rel_tol, 1e-300}) / gamma_pos(gamma);
}

} // namespace

ExtensionSlice extension_solve(const FourierField& F, double gamma,
                               const std::vector<double>& y_grid,
                               const KernelConfig& cfg, bool parallel) {
    validate_power_order(gamma);
    F.validate();
    cfg.validate();
    ExtensionSlice slice;
    slice.gamma = gamma;
    slice.y_grid = y_grid;
    slice.source = F;
    slice.modes.assign(y_grid.size() * F.coeffs.size(), {0.0, 0.0});
    slice.validate();

    const auto groups = group_by_lambda(F);
    std::vector<std::pair<long long, const std::vector<std::size_t>*>> work;
    work.reserve(groups.size());
    for (const auto& [lam, idxs] : groups) work.emplace_back(lam, &idxs);

    const std::size_t ny = y_grid.size();
    for_each_index(work.size() * ny, parallel, [&](std::size_t task) {
        const std::size_t g = task / ny, j = task % ny;
        const double lambda = static_cast<double>(work[g].first);
        const double phi = extension_multiplier(lambda, y_grid[j], gamma, cfg);
        for (std::size_t idx : *work[g].second)
            slice.modes[j * F.coeffs.size() + idx] = F.coeffs[idx] * phi;
    });
    return slice;
}

TraceReport neumann_trace(const ExtensionSlice& slice, const KernelConfig& cfg,
                          bool parallel) {
    slice.validate();
    cfg.validate();
    if (slice.y_grid.size() < 8)
        throw InputError("neumann_trace: need at least 8 y-grid points");
    if (slice.y_grid.front() > 1.01e-4)
        throw InputError("neumann_trace: smallest y must be <= 1e-4");
    const double gamma = slice.gamma;
    const int m = static_cast<int>(std::floor(gamma));
    const double s = gamma - m;
    const FourierField& F = slice.source;

    const auto groups = group_by_lambda(F);
    std::vector<long long> lambdas;
    for (const auto& [lam, idxs] : groups) lambdas.push_back(lam);
    const std::size_t nl = lambdas.size();
    const std::size_t ny = slice.y_grid.size();

    // q_λ(y) for every distinct λ on the whole grid (audit sequence) — the
    // extrapolation uses the 8 smallest y.
    std::vector<double> qtab(nl * ny, 0.0);
    const double rel = std::min(cfg.quad_rel_tol, 1e-12);
    for_each_index(nl * ny, parallel, [&](std::size_t task) {
        const std::size_t g = task / ny, j = task % ny;
        if (lambdas[g] == 0) return;  // zero mode: trace is identically 0
        qtab[task] =
            trace_quantity(static_cast<double>(lambdas[g]), slice.y_grid[j], gamma, rel);
    });

    TraceReport rep;
    rep.gamma = gamma;
    rep.mu = mu_gamma(gamma);
    rep.reference = apply_multiplier(F, MultiplierOp::frac_power(gamma));
    rep.recovered = FourierField::zeros(F.dim, F.mode_radius);
    rep.y_used.assign(slice.y_grid.begin(), slice.y_grid.begin() + 8);

    std::vector<double> limits(nl, 0.0);
    for (std::size_t g = 0; g < nl; ++g) {
        if (lambdas[g] == 0) continue;
        std::vector<double> qs(qtab.begin() + g * ny, qtab.begin() + g * ny + 8);
        Fit fit = fit_three_term(rep.y_used, qs, 2.0 - 2.0 * s);
        double scale = 0.0;
        for (double q : qs) scale = std::max(scale, std::abs(q));
        if (fit.rms > 1e-3 * (scale + 1e-300)) {
            std::ostringstream msg;
            msg << "neumann_trace: extrapolation residual " << fit.rms
                << " incompatible with the correction model at lambda=" << lambdas[g]
                << "; q(y) sequence:";
            for (double q : qs) msg << ' ' << q;
            throw NumericalError(msg.str());
        }
        limits[g] = fit.limit;
    }
    for (std::size_t g = 0; g < nl; ++g)
        for (std::size_t idx : groups.at(lambdas[g]))
            rep.recovered.coeffs[idx] = F.coeffs[idx] * (limits[g] / rep.mu);

    const GridSpec spec = matched_grid(F);
    FourierField diff = rep.recovered;
    for (std::size_t idx = 0; idx < diff.coeffs.size(); ++idx)
        diff.coeffs[idx] -= rep.reference.coeffs[idx];
    rep.sup_error = to_grid(diff, spec).sup_norm();

    rep.trace_sup_seq.resize(ny);
    for (std::size_t j = 0; j < ny; ++j) {
        FourierField seq = FourierField::zeros(F.dim, F.mode_radius);
        for (std::size_t g = 0; g < nl; ++g)
            for (std::size_t idx : groups.at(lambdas[g]))
                seq.coeffs[idx] = F.coeffs[idx] * (qtab[g * ny + j] / rep.mu) -
                                  rep.reference.coeffs[idx];
        rep.trace_sup_seq[j] = to_grid(seq, spec).sup_norm();
    }
    return rep;
}

double pde_residual(const ExtensionSlice& slice, double y, const KernelConfig& cfg) {
    slice.validate();
    cfg.validate();
    if (!(y >= slice.y_grid.front() && y <= slice.y_grid.back()))
        throw InputError("pde_residual: y must lie inside the y_grid range");
    const double gamma = slice.gamma;
    const double g0 = gamma_pos(gamma);
    const double rel = std::min(cfg.quad_rel_tol, 1e-12);
    const FourierField& F = slice.source;

    double worst = 0.0;
    for (const auto& [lam, idxs] : group_by_lambda(F)) {
        if (lam == 0) continue;
        const double lambda = static_cast<double>(lam);
        const double a = 0.25 * lambda * y * y;
        const double i0 = extension_kernel_integral(gamma, a, {rel, 1e-300});
        const double i1 = extension_kernel_integral(gamma - 1.0, a, {rel, 1e-300});
        const double i2 = extension_kernel_integral(gamma - 2.0, a, {rel, 1e-300});
        const double phi = i0 / g0;
        const double dphi = -(0.5 * lambda * y) * i1 / g0;
        const double ddphi = (-(0.5 * lambda) * i1 + 0.25 * lambda * lambda * y * y * i2) / g0;
        const double unit = lambda * phi - (1.0 - 2.0 * gamma) / y * dphi - ddphi;
        for (std::size_t idx : idxs) {
            const double scale = 1.0 + lambda * std::abs(F.coeffs[idx]) * phi;
            worst = std::max(worst, std::abs(unit) * std::abs(F.coeffs[idx]) / scale);
        }
    }
    return worst;
}

double l2_trace_limit(const ExtensionSlice& slice, const KernelConfig& cfg) {
    slice.validate();
    cfg.validate();
    if (!(slice.gamma > 0.0 && slice.gamma < 1.0))
        throw InputError("l2_trace_limit: requires gamma in (0,1)");
    if (slice.y_grid.size() < 8 || slice.y_grid.front() > 1.01e-4)
        throw InputError("l2_trace_limit: need >= 8 y points with smallest <= 1e-4");
    const double gamma = slice.gamma;
    const FourierField& F = slice.source;
    const double rel = std::min(cfg.quad_rel_tol, 1e-12);
    const double vol = std::pow(2.0 * kPi, F.dim);

    const auto groups = group_by_lambda(F);
    std::vector<double> norms(8, 0.0);
    std::vector<double> ys(slice.y_grid.begin(), slice.y_grid.begin() + 8);
    for (std::size_t j = 0; j < ys.size(); ++j) {
        double acc = 0.0;
        for (const auto& [lam, idxs] : groups) {
            if (lam == 0) continue;
            const double q = trace_quantity(static_cast<double>(lam), ys[j], gamma, rel);
            double csum = 0.0;
            for (std::size_t idx : idxs) csum += std::norm(F.coeffs[idx]);
            acc += csum * q * q;
        }
        norms[j] = std::sqrt(vol * acc);
    }
    Fit fit = fit_three_term(ys, norms, 2.0 - 2.0 * gamma);
    double scale = 0.0;
    for (double nv : norms) scale = std::max(scale, nv);
    if (fit.rms > 1e-3 * (scale + 1e-300))
        throw NumericalError("l2_trace_limit: extrapolation residual incompatible with model");
    return std::abs(fit.limit);
}

} // namespace fractorus
