#pragma once
//
// Semigroup-based smoothness estimators.
//
// For β > 0 the Λ_β quantity is  max_t  t^{k−β/2}·‖∂_t^k T_t f‖_∞  with
// k = [β/2]+1 (heat semigroup), and its Poisson analogue uses
// t^{k−β}·‖∂_t^k P_t f‖_∞ with k = [β]+1.  The time derivatives are exact:
// ∂_t^k acts per mode as (−|ν|²)^k e^{−t|ν|²} (resp. (−|κ|)^k e^{−t|κ|}).
// All estimators take grid / t-grid suprema and are therefore lower bounds
// of the true suprema; each report carries its argmax so refinement can be
// targeted.
//
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "fractorus/errors.hpp"
#include "fractorus/fields.hpp"

namespace fractorus {

struct SeminormReport {
    std::string kind;  // "holder" | "zygmund" | "heat_lambda" | "poisson_lambda_1d"
    double value = 0.0;
    int k_used = 0;    // derivative order actually applied
    double beta = 0.0;
    double alpha = 0.0;
    std::vector<double> t_grid;            // semigroup kinds
    double argmax_t = 0.0;                 // semigroup kinds
    std::array<double, 3> argmax_x{0, 0, 0};  // pair kinds: first point
    std::array<double, 3> argmax_h{0, 0, 0};  // zygmund: offset; holder: second point
};

// 60 geometric points on [1e-4, 10]; contributions beyond t = 10 are
// dominated for sup-norm-1 data since every nonzero mode decays like e^{-t}.
std::vector<double> default_t_grid();

// max over grid pairs of |f^{(k)}(x) − f^{(k)}(y)| / dist(x,y)^α with the
// torus distance; k-th derivative taken spectrally.  In n >= 2 the estimator
// uses the per-axis pure derivatives ∂_d^k f and maximizes over d as well.
// Pair enumeration is subsampled by a stride above 4096 grid points.
SeminormReport holder_seminorm(const GridField& f, int k, double alpha,
                               bool parallel = true);

// sup over grid points x and nonzero grid offsets h of
// |f(x+h) + f(x−h) − 2f(x)| / |h|  (offsets wrapped to the torus).
SeminormReport zygmund_seminorm(const GridField& f, bool parallel = true);

// k_override = 0 uses the defining k = [β/2]+1; any other value must still
// exceed β/2 (used by equivalence_scan).
SeminormReport heat_lambda_seminorm(const GridField& f, double beta,
                                    const std::vector<double>& t_grid = {},
                                    int k_override = 0, bool parallel = true);

SeminormReport poisson_lambda_seminorm_1d(const GridField& f, double beta,
                                          const std::vector<double>& t_grid = {},
                                          bool parallel = true);

// The Λ_β estimate computed with derivative orders k and ℓ (both > β/2); the
// two values are equivalent seminorms up to constants.
std::pair<double, double> equivalence_scan(const GridField& f, double beta, int k, int l,
                                           const std::vector<double>& t_grid = {});

// heat_lambda((−Δ)^{σ/2} f, β−σ) / (‖f‖_∞ + heat_lambda(f, β)): the empirical
// constant of the regularity-transfer estimate; 0 for constant fields.
double transfer_ratio(const GridField& f, double sigma, double beta);

} // namespace fractorus
