#include "fractorus/fields.hpp"

#include <algorithm>
#include <cmath>

#include "fractorus/special.hpp"

namespace fractorus {

namespace {

using cplx = std::complex<double>;

// Replace the extent of `axis` (currently `cols`) by `rows` through the
// row-major matrix `mat` (rows x cols):  out[.., r, ..] = Σ_c mat[r,c]·in[.., c, ..].
void transform_axis(std::vector<cplx>& data, std::array<int, 3>& shape, int dim, int axis,
                    const std::vector<cplx>& mat, int rows, int cols) {
    std::size_t outer = 1, inner = 1;
    for (int d = 0; d < axis; ++d) outer *= static_cast<std::size_t>(shape[d]);
    for (int d = axis + 1; d < dim; ++d) inner *= static_cast<std::size_t>(shape[d]);

    std::vector<cplx> out(outer * static_cast<std::size_t>(rows) * inner);
    for (std::size_t o = 0; o < outer; ++o) {
        const cplx* in_block = data.data() + o * static_cast<std::size_t>(cols) * inner;
        cplx* out_block = out.data() + o * static_cast<std::size_t>(rows) * inner;
        for (int r = 0; r < rows; ++r) {
            const cplx* mrow = mat.data() + static_cast<std::size_t>(r) * cols;
            cplx* orow = out_block + static_cast<std::size_t>(r) * inner;
            std::fill(orow, orow + inner, cplx(0.0, 0.0));
            for (int c = 0; c < cols; ++c) {
                const cplx w = mrow[c];
                const cplx* irow = in_block + static_cast<std::size_t>(c) * inner;
                for (std::size_t i = 0; i < inner; ++i) orow[i] += w * irow[i];
            }
        }
    }
    shape[axis] = rows;
    data.swap(out);
}

// Forward matrix: rows ν = -N..N, cols j = 0..M-1, entry (1/M)·e^{-iν x_j},
// with the ν = ±N rows halved (split Nyquist).
std::vector<cplx> forward_matrix(const GridSpec& spec) {
    const int m = spec.m, n_modes = m + 1, radius = m / 2;
    std::vector<cplx> mat(static_cast<std::size_t>(n_modes) * m);
    for (int r = 0; r < n_modes; ++r) {
        const int nu = r - radius;
        const double w = (std::abs(nu) == radius) ? 0.5 / m : 1.0 / m;
        for (int j = 0; j < m; ++j)
            mat[static_cast<std::size_t>(r) * m + j] = std::polar(w, -nu * spec.coord(j));
    }
    return mat;
}

// Synthesis matrix: rows j = 0..M-1, cols ν = -N..N, entry e^{iν x_j}.
std::vector<cplx> synthesis_matrix(const GridSpec& spec, int mode_radius) {
    const int m = spec.m, n_modes = 2 * mode_radius + 1;
    std::vector<cplx> mat(static_cast<std::size_t>(m) * n_modes);
    for (int j = 0; j < m; ++j)
        for (int c = 0; c < n_modes; ++c)
            mat[static_cast<std::size_t>(j) * n_modes + c] =
                std::polar(1.0, (c - mode_radius) * spec.coord(j));
    return mat;
}

} // namespace

FourierField FourierField::zeros(int dim, int mode_radius) {
    FourierField F;
    F.dim = dim;
    F.mode_radius = mode_radius;
    F.validate();
    F.coeffs.assign(F.size(), cplx(0.0, 0.0));
    return F;
}

void FourierField::validate() const {
    if (dim < 1 || dim > 3) throw InputError("FourierField: dim must be 1, 2 or 3");
    if (mode_radius < 0) throw InputError("FourierField: mode_radius must be >= 0");
    if (!coeffs.empty() && coeffs.size() != size())
        throw InputError("FourierField: coefficient count does not match cube size");
}

double GridField::sup_norm() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

FourierField to_fourier(const GridField& f) {
    f.validate();
    const GridSpec& spec = f.spec;
    const int radius = spec.m / 2;

    std::vector<cplx> data(f.values.begin(), f.values.end());
    std::array<int, 3> shape{1, 1, 1};
    for (int d = 0; d < spec.dim; ++d) shape[d] = spec.m;

    const std::vector<cplx> mat = forward_matrix(spec);
    for (int axis = 0; axis < spec.dim; ++axis)
        transform_axis(data, shape, spec.dim, axis, mat, spec.m + 1, spec.m);

    FourierField F = FourierField::zeros(spec.dim, radius);
    F.coeffs = std::move(data);

    // Enforce Hermitian symmetry exactly (real input guarantees it up to
    // rounding; averaging with the mirrored conjugate removes the residue).
    FourierField sym = F;
    for (std::size_t idx = 0; idx < F.size(); ++idx) {
        auto nu = F.unflatten(idx);
        std::array<int, 3> neg{-nu[0], -nu[1], -nu[2]};
        sym.coeffs[idx] = 0.5 * (F.coeffs[idx] + std::conj(F.at(neg)));
    }
    return sym;
}

GridField to_grid(const FourierField& F, const GridSpec& spec) {
    F.validate();
    spec.validate();
    if (F.dim != spec.dim) throw InputError("to_grid: dimension mismatch");

    std::vector<cplx> data = F.coeffs;
    std::array<int, 3> shape{1, 1, 1};
    for (int d = 0; d < F.dim; ++d) shape[d] = F.side();

    const std::vector<cplx> mat = synthesis_matrix(spec, F.mode_radius);
    for (int axis = 0; axis < F.dim; ++axis)
        transform_axis(data, shape, F.dim, axis, mat, spec.m, F.side());

    GridField g = GridField::zeros(spec);
    for (std::size_t i = 0; i < g.values.size(); ++i) g.values[i] = data[i].real();
    return g;
}

double field_mean(const GridField& f) {
    f.validate();
    double acc = 0.0;
    for (double v : f.values) acc += v;
    return acc / static_cast<double>(f.values.size());
}

double sobolev_norm(const FourierField& F, double s) {
    F.validate();
    if (s < 0.0) throw InputError("sobolev_norm: s must be >= 0");
    double acc = 0.0;
    for (std::size_t idx = 0; idx < F.coeffs.size(); ++idx) {
        const double w2 = F.mode_sq(idx);
        const double a2 = std::norm(F.coeffs[idx]);
        if (w2 == 0.0) {
            if (s == 0.0) acc += a2;  // 0^0 := 1 convention at s = 0
        } else {
            acc += std::pow(w2, s) * a2;
        }
    }
    return std::sqrt(acc);
}

double hermitian_defect(const FourierField& F) {
    F.validate();
    double worst = 0.0;
    for (std::size_t idx = 0; idx < F.coeffs.size(); ++idx) {
        auto nu = F.unflatten(idx);
        std::array<int, 3> neg{-nu[0], -nu[1], -nu[2]};
        worst = std::max(worst, std::abs(F.coeffs[idx] - std::conj(F.at(neg))));
    }
    return worst;
}

} // namespace fractorus
