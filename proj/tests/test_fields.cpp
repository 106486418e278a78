#include <cmath>
#include <random>

#include "doctest.h"
#include "fractorus/fields.hpp"
#include "fractorus/special.hpp"

using namespace fractorus;

namespace {

GridField random_field(const GridSpec& spec, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    GridField f = GridField::zeros(spec);
    for (double& v : f.values) v = dist(rng);
    return f;
}

double sup_diff(const GridField& a, const GridField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

} // namespace

TEST_CASE("GridSpec: validation and coordinate conventions") {
    CHECK_THROWS_AS((GridSpec{0, 8}.validate()), InputError);
    CHECK_THROWS_AS((GridSpec{4, 8}.validate()), InputError);
    CHECK_THROWS_AS((GridSpec{1, 7}.validate()), InputError);
    CHECK_THROWS_AS((GridSpec{1, 2}.validate()), InputError);

    GridSpec s{1, 8};
    s.validate();
    CHECK(std::abs(s.spacing() - kPi / 4.0) < 1e-15);
    // Axis runs (-π, π] with +π included and -π excluded.
    CHECK(std::abs(s.coord(7) - kPi) < 1e-15);
    CHECK(s.coord(0) > -kPi);
    for (int j = 0; j + 1 < 8; ++j) CHECK(s.coord(j) < s.coord(j + 1));
}

TEST_CASE("GridSpec: flatten/unflatten roundtrip, last axis fastest") {
    GridSpec s{3, 4};
    for (std::size_t idx = 0; idx < s.size(); ++idx) {
        CHECK(s.flatten(s.unflatten(idx)) == idx);
    }
    // Row-major: incrementing the last index moves the flat index by 1.
    CHECK(s.flatten({1, 2, 3}) == (std::size_t{1} * 4 + 2) * 4 + 3);
}

TEST_CASE("to_fourier/to_grid: exact roundtrip on random data") {
    for (int dim : {1, 2, 3}) {
        GridSpec s{dim, 8};
        GridField f = random_field(s, 1234 + dim);
        GridField back = to_grid(to_fourier(f), s);
        CHECK(sup_diff(f, back) < 1e-13);
    }
}

TEST_CASE("to_fourier: pure cosine lands on the +/-nu pair") {
    GridSpec s{1, 16};
    GridField f = GridField::zeros(s);
    for (std::size_t i = 0; i < f.values.size(); ++i)
        f.values[i] = std::cos(2.0 * s.point(i)[0]);
    FourierField F = to_fourier(f);
    for (std::size_t idx = 0; idx < F.coeffs.size(); ++idx) {
        const auto nu = F.unflatten(idx);
        const double want = (std::abs(nu[0]) == 2) ? 0.5 : 0.0;
        CHECK(std::abs(F.coeffs[idx].real() - want) < 1e-14);
        CHECK(std::abs(F.coeffs[idx].imag()) < 1e-14);
    }
}

TEST_CASE("to_fourier: Nyquist cosine splits into two half-weight bins") {
    GridSpec s{1, 8};
    GridField f = GridField::zeros(s);
    for (std::size_t i = 0; i < f.values.size(); ++i)
        f.values[i] = std::cos(4.0 * s.point(i)[0]);
    FourierField F = to_fourier(f);
    CHECK(std::abs(F.at({4, 0, 0}).real() - 0.5) < 1e-14);
    CHECK(std::abs(F.at({-4, 0, 0}).real() - 0.5) < 1e-14);
    CHECK(hermitian_defect(F) < 1e-15);
    // And the split makes synthesis exact.
    CHECK(sup_diff(to_grid(F, s), f) < 1e-13);
}

TEST_CASE("hermitian_defect: zero for real data, positive after tampering") {
    GridSpec s{2, 8};
    FourierField F = to_fourier(random_field(s, 77));
    CHECK(hermitian_defect(F) < 1e-15);
    F.at({1, 2, 0}) += std::complex<double>(0.0, 1e-3);
    CHECK(hermitian_defect(F) > 1e-4);
}

TEST_CASE("field_mean equals the zero coefficient") {
    GridSpec s{1, 16};
    GridField f = GridField::zeros(s);
    for (std::size_t i = 0; i < f.values.size(); ++i)
        f.values[i] = 3.0 + std::cos(2.0 * s.point(i)[0]);
    CHECK(std::abs(field_mean(f) - 3.0) < 1e-14);
    FourierField F = to_fourier(f);
    CHECK(std::abs(F.at({0, 0, 0}).real() - 3.0) < 1e-14);
}

TEST_CASE("sobolev_norm: single mode gives nu^s/sqrt(2)") {
    GridSpec s{1, 16};
    GridField f = GridField::zeros(s);
    for (std::size_t i = 0; i < f.values.size(); ++i)
        f.values[i] = std::cos(3.0 * s.point(i)[0]);
    FourierField F = to_fourier(f);
    for (double expnt : {0.0, 0.8, 2.0}) {
        const double want = std::pow(3.0, expnt) / std::sqrt(2.0);
        CHECK(std::abs(sobolev_norm(F, expnt) - want) < 1e-13);
    }
}

TEST_CASE("sobolev_norm: s = 0 includes the mean, s > 0 drops it") {
    GridSpec s{1, 8};
    GridField f = GridField::zeros(s);
    for (std::size_t i = 0; i < f.values.size(); ++i)
        f.values[i] = 1.0 + std::cos(s.point(i)[0]);
    FourierField F = to_fourier(f);
    CHECK(std::abs(sobolev_norm(F, 0.0) - std::sqrt(1.5)) < 1e-13);
    CHECK(std::abs(sobolev_norm(F, 1.0) - std::sqrt(0.5)) < 1e-13);
}

TEST_CASE("to_grid: band-limited upsampling reproduces the mode exactly") {
    GridSpec coarse{1, 8}, fine{1, 32};
    GridField f = GridField::zeros(coarse);
    for (std::size_t i = 0; i < f.values.size(); ++i)
        f.values[i] = std::cos(3.0 * coarse.point(i)[0]);
    GridField up = to_grid(to_fourier(f), fine);
    GridField want = GridField::zeros(fine);
    for (std::size_t i = 0; i < want.values.size(); ++i)
        want.values[i] = std::cos(3.0 * fine.point(i)[0]);
    CHECK(sup_diff(up, want) < 1e-13);
}

TEST_CASE("GridField/FourierField: size validation") {
    GridSpec s{1, 8};
    GridField f = GridField::zeros(s);
    f.values.pop_back();
    CHECK_THROWS_AS(f.validate(), InputError);

    FourierField F = FourierField::zeros(2, 4);
    CHECK(F.side() == 9);
    CHECK(F.size() == 81);
    F.coeffs.pop_back();
    CHECK_THROWS_AS(F.validate(), InputError);
}

TEST_CASE("FourierField: mode flatten/unflatten and mode_sq") {
    FourierField F = FourierField::zeros(3, 2);
    for (std::size_t idx = 0; idx < F.size(); ++idx)
        CHECK(F.flatten(F.unflatten(idx)) == idx);
    CHECK(F.mode_sq(F.flatten({1, -2, 2})) == doctest::Approx(9.0).epsilon(1e-15));
}
