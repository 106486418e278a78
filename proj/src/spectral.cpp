#include "fractorus/spectral.hpp"

#include <cmath>
#include <complex>

#include "fractorus/special.hpp"

namespace fractorus {

namespace {
using cplx = std::complex<double>;

void require(bool ok, const char* msg) {
    if (!ok) throw InputError(msg);
}
} // namespace

MultiplierOp MultiplierOp::frac_laplacian(double sigma) {
    MultiplierOp op;
    op.kind = Kind::frac_laplacian;
    op.order = sigma;
    return op;
}
MultiplierOp MultiplierOp::frac_power(double gamma) {
    MultiplierOp op;
    op.kind = Kind::frac_power;
    op.order = gamma;
    return op;
}
MultiplierOp MultiplierOp::heat(double t) {
    MultiplierOp op;
    op.kind = Kind::heat;
    op.t = t;
    return op;
}
MultiplierOp MultiplierOp::heat_dt(double t, int k) {
    MultiplierOp op;
    op.kind = Kind::heat_dt;
    op.t = t;
    op.k = k;
    return op;
}
MultiplierOp MultiplierOp::poisson1d(double t) {
    MultiplierOp op;
    op.kind = Kind::poisson1d;
    op.t = t;
    return op;
}
MultiplierOp MultiplierOp::poisson1d_dt(double t, int k) {
    MultiplierOp op;
    op.kind = Kind::poisson1d_dt;
    op.t = t;
    op.k = k;
    return op;
}

void MultiplierOp::validate(int dim) const {
    switch (kind) {
        case Kind::frac_laplacian:
            require(order > 0.0 && order < 2.0, "frac_laplacian: sigma must lie in (0,2)");
            break;
        case Kind::frac_power:
            require(order > 0.0, "frac_power: gamma must be positive");
            break;
        case Kind::heat:
            require(t >= 0.0, "heat: t must be >= 0");
            break;
        case Kind::heat_dt:
            require(t >= 0.0, "heat_dt: t must be >= 0");
            require(k >= 1, "heat_dt: k must be >= 1");
            break;
        case Kind::poisson1d:
            require(t >= 0.0, "poisson1d: t must be >= 0");
            require(dim == 1, "poisson1d: dim must be 1");
            break;
        case Kind::poisson1d_dt:
            require(t >= 0.0, "poisson1d_dt: t must be >= 0");
            require(k >= 1, "poisson1d_dt: k must be >= 1");
            require(dim == 1, "poisson1d_dt: dim must be 1");
            break;
    }
}

double MultiplierOp::factor(double w2) const {
    switch (kind) {
        case Kind::frac_laplacian:
            return (w2 == 0.0) ? 0.0 : std::pow(w2, 0.5 * order);
        case Kind::frac_power:
            return (w2 == 0.0) ? 0.0 : std::pow(w2, order);
        case Kind::heat:
            return std::exp(-t * w2);
        case Kind::heat_dt: {
            double p = 1.0;
            for (int i = 0; i < k; ++i) p *= -w2;
            return p * std::exp(-t * w2);
        }
        case Kind::poisson1d:
            return std::exp(-t * std::sqrt(w2));
        case Kind::poisson1d_dt: {
            const double kappa = std::sqrt(w2);
            double p = 1.0;
            for (int i = 0; i < k; ++i) p *= -kappa;
            return p * std::exp(-t * kappa);
        }
    }
    return 0.0;
}

FourierField apply_multiplier(const FourierField& F, const MultiplierOp& op) {
    F.validate();
    op.validate(F.dim);
    FourierField out = F;
    for (std::size_t idx = 0; idx < F.coeffs.size(); ++idx)
        out.coeffs[idx] = F.coeffs[idx] * op.factor(F.mode_sq(idx));
    return out;
}

GridField apply_multiplier(const GridField& f, const MultiplierOp& op) {
    f.validate();
    op.validate(f.spec.dim);
    // t = 0 semigroups are the identity on the samples themselves (round-trip
    // through the coefficient cube would only add rounding noise).
    if ((op.kind == MultiplierOp::Kind::heat || op.kind == MultiplierOp::Kind::poisson1d) &&
        op.t == 0.0)
        return f;
    return to_grid(apply_multiplier(to_fourier(f), op), f.spec);
}

GridField frac_laplacian_spectral(const GridField& f, double sigma) {
    return apply_multiplier(f, MultiplierOp::frac_laplacian(sigma));
}

GridField heat_semigroup(const GridField& f, double t) {
    return apply_multiplier(f, MultiplierOp::heat(t));
}

GridField poisson_semigroup_1d(const GridField& f, double t) {
    return apply_multiplier(f, MultiplierOp::poisson1d(t));
}

GridField minus_laplacian(const GridField& f) {
    return apply_multiplier(f, MultiplierOp::frac_power(1.0));
}

double eval_interpolant(const FourierField& F, const std::array<double, 3>& x) {
    F.validate();
    // Per-axis phase tables e^{iν x_d}, then one pass over the cube.
    const int side = F.side(), radius = F.mode_radius;
    std::array<std::vector<cplx>, 3> phase;
    for (int d = 0; d < F.dim; ++d) {
        phase[d].resize(side);
        for (int a = 0; a < side; ++a) phase[d][a] = std::polar(1.0, (a - radius) * x[d]);
    }
    cplx acc(0.0, 0.0);
    for (std::size_t idx = 0; idx < F.coeffs.size(); ++idx) {
        if (F.coeffs[idx] == cplx(0.0, 0.0)) continue;
        auto nu = F.unflatten(idx);
        cplx ph(1.0, 0.0);
        for (int d = 0; d < F.dim; ++d) ph *= phase[d][nu[d] + radius];
        acc += F.coeffs[idx] * ph;
    }
    return acc.real();
}

GridField translate_eval(const FourierField& F, const GridSpec& spec,
                         const std::array<double, 3>& z) {
    FourierField shifted = F;
    const int side = F.side(), radius = F.mode_radius;
    std::array<std::vector<cplx>, 3> phase;
    for (int d = 0; d < F.dim; ++d) {
        phase[d].resize(side);
        for (int a = 0; a < side; ++a) phase[d][a] = std::polar(1.0, (a - radius) * z[d]);
    }
    for (std::size_t idx = 0; idx < F.coeffs.size(); ++idx) {
        auto nu = F.unflatten(idx);
        cplx ph(1.0, 0.0);
        for (int d = 0; d < F.dim; ++d) ph *= phase[d][nu[d] + radius];
        shifted.coeffs[idx] = F.coeffs[idx] * ph;
    }
    return to_grid(shifted, spec);
}

GridField spectral_partial(const GridField& f, int axis) {
    f.validate();
    require(axis >= 0 && axis < f.spec.dim, "spectral_partial: axis out of range");
    FourierField F = to_fourier(f);
    for (std::size_t idx = 0; idx < F.coeffs.size(); ++idx) {
        auto nu = F.unflatten(idx);
        F.coeffs[idx] *= cplx(0.0, static_cast<double>(nu[axis]));
    }
    return to_grid(F, f.spec);
}

FourierField heat_difference_coeffs(const FourierField& F, double t) {
    F.validate();
    require(t >= 0.0, "heat_difference_coeffs: t must be >= 0");
    FourierField out = F;
    for (std::size_t idx = 0; idx < F.coeffs.size(); ++idx)
        out.coeffs[idx] = F.coeffs[idx] * std::expm1(-t * F.mode_sq(idx));
    return out;
}

FourierField poisson_difference_coeffs_1d(const FourierField& F, double t, int power) {
    F.validate();
    require(F.dim == 1, "poisson_difference_coeffs_1d: dim must be 1");
    require(t >= 0.0 && power >= 1, "poisson_difference_coeffs_1d: need t >= 0, power >= 1");
    FourierField out = F;
    for (std::size_t idx = 0; idx < F.coeffs.size(); ++idx) {
        const double base = std::expm1(-t * std::sqrt(F.mode_sq(idx)));
        double p = 1.0;
        for (int i = 0; i < power; ++i) p *= base;
        out.coeffs[idx] = F.coeffs[idx] * p;
    }
    return out;
}

double inner_product_mean(const GridField& f, const GridField& g) {
    f.validate();
    g.validate();
    require(f.spec == g.spec, "inner_product_mean: grids must match");
    double acc = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) acc += f.values[i] * g.values[i];
    return acc / static_cast<double>(f.values.size());
}

} // namespace fractorus
