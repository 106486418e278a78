#include "fractorus/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "fractorus/kernels.hpp"
#include "fractorus/parallel.hpp"
#include "fractorus/special.hpp"
#include "fractorus/spectral.hpp"

namespace fractorus {

std::vector<double> default_t_grid() {
    const int count = 60;
    const double lo = std::log(1e-4), hi = std::log(10.0);
    std::vector<double> ts(count);
    for (int j = 0; j < count; ++j)
        ts[j] = std::exp(lo + (hi - lo) * j / (count - 1));
    return ts;
}

namespace {

double torus_dist(const GridSpec& spec, const std::array<int, 3>& a,
                  const std::array<int, 3>& b) {
    const double dx = spec.spacing();
    double d2 = 0.0;
    for (int d = 0; d < spec.dim; ++d) {
        const double w = wrap_coordinate((a[d] - b[d]) * dx);
        d2 += w * w;
    }
    return std::sqrt(d2);
}

// k-th pure derivative along one axis, spectrally: coefficients (i ν_d)^k c_ν.
GridField axis_derivative(const FourierField& F, const GridSpec& spec, int axis, int k) {
    FourierField G = F;
    for (std::size_t idx = 0; idx < F.coeffs.size(); ++idx) {
        const auto nu = F.unflatten(idx);
        const std::complex<double> iv(0.0, static_cast<double>(nu[axis]));
        std::complex<double> p(1.0, 0.0);
        for (int j = 0; j < k; ++j) p *= iv;
        G.coeffs[idx] = F.coeffs[idx] * p;
    }
    return to_grid(G, spec);
}

std::size_t pair_stride(std::size_t points) {
    return points <= 4096 ? 1 : (points + 4095) / 4096;
}

} // namespace

SeminormReport holder_seminorm(const GridField& f, int k, double alpha, bool parallel) {
    f.validate();
    if (k < 0) throw InputError("holder_seminorm: k must be >= 0");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw InputError("holder_seminorm: alpha must lie in (0,1]");
    const GridSpec& spec = f.spec;
    std::vector<GridField> derivs;
    if (k == 0) {
        derivs.push_back(f);
    } else {
        const FourierField F = to_fourier(f);
        for (int d = 0; d < spec.dim; ++d) derivs.push_back(axis_derivative(F, spec, d, k));
    }

    const std::size_t total = spec.size();
    const std::size_t stride = pair_stride(total);
    std::vector<std::size_t> sample;
    for (std::size_t i = 0; i < total; i += stride) sample.push_back(i);

    struct Best {
        double value = 0.0;
        std::size_t i = 0, j = 0;
    };
    std::vector<Best> best(sample.size());
    for_each_index(sample.size(), parallel, [&](std::size_t si) {
        const std::size_t i = sample[si];
        const auto pi = spec.unflatten(i);
        Best b;
        for (std::size_t sj = si + 1; sj < sample.size(); ++sj) {
            const std::size_t j = sample[sj];
            const auto pj = spec.unflatten(j);
            const double dist = torus_dist(spec, pi, pj);
            double num = 0.0;
            for (const GridField& g : derivs)
                num = std::max(num, std::abs(g.values[i] - g.values[j]));
            const double r = num / std::pow(dist, alpha);
            if (r > b.value) b = {r, i, j};
        }
        best[si] = b;
    });
    Best top;
    for (const Best& b : best)
        if (b.value > top.value) top = b;

    SeminormReport rep;
    rep.kind = "holder";
    rep.value = top.value;
    rep.k_used = k;
    rep.alpha = alpha;
    rep.argmax_x = spec.point(top.i);
    rep.argmax_h = spec.point(top.j);
    return rep;
}

SeminormReport zygmund_seminorm(const GridField& f, bool parallel) {
    f.validate();
    const GridSpec& spec = f.spec;
    const std::size_t total = spec.size();
    const std::size_t stride = pair_stride(total);  // applied to the offset loop
    const double dx = spec.spacing();

    struct Best {
        double value = 0.0;
        std::size_t x = 0, h = 0;
    };
    std::vector<Best> best(total, Best{});
    for_each_index(total, parallel, [&](std::size_t xi) {
        const auto px = spec.unflatten(xi);
        Best b;
        for (std::size_t hi = stride; hi < total; hi += stride) {
            const auto oh = spec.unflatten(hi);
            double h2 = 0.0;
            std::array<int, 3> plus{0, 0, 0}, minus{0, 0, 0};
            for (int d = 0; d < spec.dim; ++d) {
                const double w = wrap_coordinate(oh[d] * dx);
                h2 += w * w;
                plus[d] = (px[d] + oh[d]) % spec.m;
                minus[d] = ((px[d] - oh[d]) % spec.m + spec.m) % spec.m;
            }
            const double second = f.values[spec.flatten(plus)] +
                                  f.values[spec.flatten(minus)] - 2.0 * f.values[xi];
            const double r = std::abs(second) / std::sqrt(h2);
            if (r > b.value) b = {r, xi, hi};
        }
        best[xi] = b;
    });
    Best top;
    for (const Best& b : best)
        if (b.value > top.value) top = b;

    SeminormReport rep;
    rep.kind = "zygmund";
    rep.value = top.value;
    rep.argmax_x = spec.point(top.x);
    const auto oh = spec.unflatten(top.h);
    for (int d = 0; d < spec.dim; ++d) rep.argmax_h[d] = wrap_coordinate(oh[d] * dx);
    return rep;
}

namespace {

SeminormReport semigroup_lambda(const GridField& f, double beta,
                                const std::vector<double>& t_grid_in, int k,
                                bool poisson, bool parallel) {
    f.validate();
    if (!(beta > 0.0)) throw InputError("lambda seminorm: beta must be positive");
    const double half = poisson ? 1.0 : 0.5;  // exponent scale: t^{k−β} vs t^{k−β/2}
    if (!(k > half * beta))
        throw InputError("lambda seminorm: derivative order must exceed " +
                         std::string(poisson ? "beta" : "beta/2"));
    const std::vector<double> ts = t_grid_in.empty() ? default_t_grid() : t_grid_in;
    for (std::size_t j = 0; j < ts.size(); ++j)
        if (!(ts[j] > 0.0) || (j > 0 && !(ts[j] > ts[j - 1])))
            throw InputError("lambda seminorm: t_grid must be positive increasing");

    const FourierField F = to_fourier(f);
    std::vector<double> vals(ts.size(), 0.0);
    for_each_index(ts.size(), parallel, [&](std::size_t j) {
        const double t = ts[j];
        FourierField G = F;
        for (std::size_t idx = 0; idx < F.coeffs.size(); ++idx) {
            const double w2 = F.mode_sq(idx);
            if (w2 == 0.0) {
                G.coeffs[idx] = 0.0;  // ∂_t of the constant mode vanishes
                continue;
            }
            const double rate = poisson ? std::sqrt(w2) : w2;
            double p = 1.0;
            for (int i = 0; i < k; ++i) p *= -rate;
            G.coeffs[idx] = F.coeffs[idx] * p * std::exp(-t * rate);
        }
        vals[j] = std::pow(t, k - half * beta) * to_grid(G, f.spec).sup_norm();
    });

    SeminormReport rep;
    rep.kind = poisson ? "poisson_lambda_1d" : "heat_lambda";
    rep.k_used = k;
    rep.beta = beta;
    rep.t_grid = ts;
    for (std::size_t j = 0; j < ts.size(); ++j)
        if (vals[j] > rep.value) {
            rep.value = vals[j];
            rep.argmax_t = ts[j];
        }
    return rep;
}

} // namespace

SeminormReport heat_lambda_seminorm(const GridField& f, double beta,
                                    const std::vector<double>& t_grid, int k_override,
                                    bool parallel) {
    const int k = k_override > 0 ? k_override : static_cast<int>(std::floor(0.5 * beta)) + 1;
    return semigroup_lambda(f, beta, t_grid, k, /*poisson=*/false, parallel);
}

SeminormReport poisson_lambda_seminorm_1d(const GridField& f, double beta,
                                          const std::vector<double>& t_grid,
                                          bool parallel) {
    if (f.spec.dim != 1) throw InputError("poisson_lambda_seminorm_1d: dim must be 1");
    const int k = static_cast<int>(std::floor(beta)) + 1;
    return semigroup_lambda(f, beta, t_grid, k, /*poisson=*/true, parallel);
}

std::pair<double, double> equivalence_scan(const GridField& f, double beta, int k, int l,
                                           const std::vector<double>& t_grid) {
    if (!(k > 0.5 * beta) || !(l > 0.5 * beta))
        throw InputError("equivalence_scan: both orders must exceed beta/2");
    const double a = heat_lambda_seminorm(f, beta, t_grid, k).value;
    const double b = heat_lambda_seminorm(f, beta, t_grid, l).value;
    return {a, b};
}

double transfer_ratio(const GridField& f, double sigma, double beta) {
    if (!(beta > sigma)) throw InputError("transfer_ratio: requires beta > sigma");
    const GridField g = frac_laplacian_spectral(f, sigma);
    const double num = heat_lambda_seminorm(g, beta - sigma).value;
    const double den = f.sup_norm() + heat_lambda_seminorm(f, beta).value;
    if (den == 0.0) return 0.0;
    return num / den;
}

} // namespace fractorus
