// fractorus — grids and Fourier coefficient cubes on the n-torus (n ≤ 3).
//
// Conventions (fixed across the whole library):
//  * Fundamental cube Q_n = (-π, π]^n.  The per-axis grid is
//        x_j = -π + (j+1)·Δ,  Δ = 2π/M,  j = 0..M-1,
//    i.e. offset so that +π is a grid point and -π is excluded.
//  * Storage is row-major with the LAST axis fastest (C order); flat index of
//    (j_0,…,j_{n-1}) is ((j_0·M + j_1)·M + j_2).
//  * Fourier coefficients use the analyst's normalization
//        c_ν = (2π)^{-n} ∫_{Q_n} f(x) e^{-iν·x} dx,
//    so c_0 is the mean and f(x) = Σ_ν c_ν e^{iν·x}.
//  * to_fourier fills the symmetric mode cube |ν_i| ≤ N with N = M/2.  That
//    cube has M+1 bins per axis for M samples; the aliased pair ν = ±M/2 is
//    stored split (half weight each), which keeps Hermitian symmetry exact
//    and makes to_grid an exact inverse: for the Nyquist cosine cos((M/2)x)
//    the split bins are the true coefficients 1/2, 1/2.
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "fractorus/errors.hpp"

namespace fractorus {

struct GridSpec {
    int dim = 1;  // 1, 2 or 3
    int m = 4;    // grid points per axis; even, >= 4

    void validate() const {
        if (dim < 1 || dim > 3) throw InputError("GridSpec: dim must be 1, 2 or 3");
        if (m < 4 || m % 2 != 0) throw InputError("GridSpec: M must be even and >= 4");
    }
    double spacing() const { return 2.0 * 3.141592653589793238462643383279502884 / m; }
    double coord(int j) const {
        return -3.141592653589793238462643383279502884 + (j + 1) * spacing();
    }
    std::size_t size() const {
        std::size_t s = 1;
        for (int d = 0; d < dim; ++d) s *= static_cast<std::size_t>(m);
        return s;
    }
    std::size_t flatten(const std::array<int, 3>& j) const {
        std::size_t idx = 0;
        for (int d = 0; d < dim; ++d) idx = idx * m + static_cast<std::size_t>(j[d]);
        return idx;
    }
    std::array<int, 3> unflatten(std::size_t idx) const {
        std::array<int, 3> j{0, 0, 0};
        for (int d = dim - 1; d >= 0; --d) {
            j[d] = static_cast<int>(idx % m);
            idx /= m;
        }
        return j;
    }
    // Coordinates of the grid point with flat index idx.
    std::array<double, 3> point(std::size_t idx) const {
        auto j = unflatten(idx);
        std::array<double, 3> x{0.0, 0.0, 0.0};
        for (int d = 0; d < dim; ++d) x[d] = coord(j[d]);
        return x;
    }
    friend bool operator==(const GridSpec& a, const GridSpec& b) {
        return a.dim == b.dim && a.m == b.m;
    }
};

struct GridField {
    GridSpec spec;
    std::vector<double> values;  // spec.size() entries, row-major

    static GridField zeros(const GridSpec& s) {
        s.validate();
        GridField f;
        f.spec = s;
        f.values.assign(s.size(), 0.0);
        return f;
    }
    double& at(const std::array<int, 3>& j) { return values[spec.flatten(j)]; }
    double at(const std::array<int, 3>& j) const { return values[spec.flatten(j)]; }
    void validate() const {
        spec.validate();
        if (values.size() != spec.size())
            throw InputError("GridField: value count does not match spec");
    }
    double sup_norm() const;
};

// Symmetric cube of Fourier coefficients, |ν_i| ≤ mode_radius.
struct FourierField {
    int dim = 1;
    int mode_radius = 0;  // N
    std::vector<std::complex<double>> coeffs;  // side (2N+1) per axis, row-major

    static FourierField zeros(int dim, int mode_radius);
    int side() const { return 2 * mode_radius + 1; }
    std::size_t size() const {
        std::size_t s = 1;
        for (int d = 0; d < dim; ++d) s *= static_cast<std::size_t>(side());
        return s;
    }
    std::size_t flatten(const std::array<int, 3>& nu) const {
        std::size_t idx = 0;
        for (int d = 0; d < dim; ++d)
            idx = idx * side() + static_cast<std::size_t>(nu[d] + mode_radius);
        return idx;
    }
    std::array<int, 3> unflatten(std::size_t idx) const {
        std::array<int, 3> nu{0, 0, 0};
        for (int d = dim - 1; d >= 0; --d) {
            nu[d] = static_cast<int>(idx % side()) - mode_radius;
            idx /= side();
        }
        return nu;
    }
    std::complex<double>& at(const std::array<int, 3>& nu) { return coeffs[flatten(nu)]; }
    std::complex<double> at(const std::array<int, 3>& nu) const { return coeffs[flatten(nu)]; }
    void validate() const;
    // |ν|² of the mode with flat index idx.
    double mode_sq(std::size_t idx) const {
        auto nu = unflatten(idx);
        double s = 0.0;
        for (int d = 0; d < dim; ++d) s += double(nu[d]) * nu[d];
        return s;
    }
};

// Forward analysis: grid samples -> coefficient cube with N = M/2 (split
// Nyquist bins).  Hermitian symmetry is enforced exactly on the output.
FourierField to_fourier(const GridField& f);

// Synthesis on the given grid (exact inverse of to_fourier when the specs
// match; valid band-limited evaluation for any other compatible grid).
GridField to_grid(const FourierField& F, const GridSpec& spec);

// Mean value (equals the real part of c_0 after to_fourier).
double field_mean(const GridField& f);

// Discrete Sobolev norm (Σ_ν |ν|^{2s} |c_ν|²)^{1/2}.  The ν = 0 term uses the
// convention 0^{2s} := 0 for s > 0 and := 1 at s = 0.
double sobolev_norm(const FourierField& F, double s);

// Hermitian-symmetry defect max_ν |c_ν - conj(c_{-ν})| (diagnostic).
double hermitian_defect(const FourierField& F);

} // namespace fractorus
