// fractorus — Gamma-function machinery and the model constants.
//
// Everything here is computed through std::lgamma at positive arguments plus
// algebraic recursions/reflection; Gamma is never evaluated naively at a
// negative argument.  The three "model constants" exposed below carry
// multiplicative test perturbation knobs (see testing::Knob) so the test
// suite can prove that downstream cross-checks actually depend on them.
#pragma once

namespace fractorus {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

// log Γ(x) for x > 0 (thin wrapper, input validated).
double log_gamma(double x);

// Γ(x) for x > 0.
double gamma_pos(double x);

// Γ(-s) for s > 0 noninteger, via the recursion Γ(-s) = -Γ(1-s)/s continued
// through Γ(k-s) factors — no naive negative-argument Gamma, stable near the
// poles because expm1-style factors are handled by callers where needed.
double gamma_neg(double s);

// |Γ(-σ/2)| for σ ∈ (0,2): equals Γ(1-σ/2)/(σ/2).
double abs_gamma_neg_half(double sigma);

// Signed Γ(-σ/2) for σ ∈ (0,2) (always negative on this range).
double gamma_neg_half(double sigma);

//----------------------------------------------------------------------------
// Model constants
//----------------------------------------------------------------------------

// Prefactor of the periodized Riesz-type kernel:
//   2^σ Γ((n+σ)/2) / (|Γ(-σ/2)| π^{n/2}),  σ ∈ (0,2), n ∈ {1,2,3}.
// Computed as 2^σ Γ((n+σ)/2) (σ/2) / (Γ(1-σ/2) π^{n/2}); behaves like
// (σ/2)·Γ(n/2)/π^{n/2}·(1 - γ_E σ + O(σ²)) as σ→0⁺.
double riesz_prefactor(double sigma, int n);

// Normalizing constant of the Poisson-semigroup difference formula:
//   c_σ = ∫₀^∞ (e^{-s} - 1)^{[σ]+1} s^{-1-σ} ds
// Closed forms: Γ(-σ) on σ∈(0,1); (2^σ-2)Γ(-σ) on σ∈(1,2); the σ=1 value is
// the removable-singularity limit 2 ln 2.  Negative on (0,1), positive on
// [1,2).
double c_sigma(double sigma);

// Same constant by adaptive quadrature of the defining integral (log-axis
// substitution s = e^v).  Used for the dual-route agreement tests; carries no
// perturbation knob.
double c_sigma_quadrature(double sigma, double rel_tol = 1e-12);

// Neumann-trace constant of the extension problem for noninteger γ > 0:
//   μ_γ = (-1)^{m+1} 4^{1-s} Γ(1-s) / (2^{m+1} Γ(γ)),  m = [γ], s = γ - m.
// μ_{1/2} = -1 exactly; μ_γ < 0 for even m, > 0 for odd m.
double mu_gamma(double gamma);

//----------------------------------------------------------------------------
// Test perturbation knobs (mutation-sensitivity harness)
//----------------------------------------------------------------------------
namespace testing {

enum class Knob { riesz_prefactor = 0, c_sigma = 1, mu_gamma = 2 };

// Multiplicative factor applied inside the corresponding constant; 1.0 in
// normal operation.  Not thread-safe while toggling (test-only facility).
void set_perturbation(Knob k, double factor);
double perturbation(Knob k);
void reset_perturbations();

// RAII guard: applies a factor, restores the previous one on destruction.
class PerturbationGuard {
  public:
    PerturbationGuard(Knob k, double factor);
    ~PerturbationGuard();
    PerturbationGuard(const PerturbationGuard&) = delete;
    PerturbationGuard& operator=(const PerturbationGuard&) = delete;

  private:
    Knob knob_;
    double previous_;
};

} // namespace testing

} // namespace fractorus
