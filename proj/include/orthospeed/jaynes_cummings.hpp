#pragma once

// Qubit coupled to a single cavity mode,
//   H = lambda (a^dagger sigma_- + a sigma_+) + (Delta / 2) sigma_z,  lambda = eta * gamma,
// with the field starting in the Fock state |n>.
//
// Qubit level 0 is the excited state |e> (sigma_z = +1) and level 1 the
// ground state |g>. H conserves the excitation number, so |e,k> and |g,k+1>
// form a closed 2x2 block for every k; |g,0> only picks up the phase
// exp(+i Delta t / 2).

#include <vector>

#include "orthospeed/numerics.hpp"
#include "orthospeed/qubit_state.hpp"
#include "orthospeed/series.hpp"

namespace orthospeed::jc {

struct JCParams {
    double eta = 0.0;               // coupling in units of gamma
    double delta_over_gamma = 0.0;  // detuning in units of gamma
    double gamma = 1.0;             // inverse-time scale
    int photons = 0;                // initial Fock number

    double coupling() const { return eta * gamma; }
    double detuning() const { return delta_over_gamma * gamma; }
};

/// Throws ContractViolation unless eta >= 0, gamma > 0, photons >= 0 and all finite.
void validate(const JCParams& p);

/// mu_k = sqrt((Delta / 2 gamma)^2 + eta^2 k), S_k = sin(mu_k gamma t) / mu_k, C_k = cos(mu_k gamma t).
struct BlockCoefficients {
    double mu = 0.0;
    double s_coef = 0.0;
    double c_coef = 1.0;
    int index = 0;
};

/// S falls back to its limit gamma * t when mu = 0.
BlockCoefficients block_coefficients(const JCParams& p, int index, double t);

/// Dimensionless generator of block n on {|e,n>, |g,n+1>}; H_block = gamma * block_generator.
numerics::ComplexMatrix block_generator(const JCParams& p, int n);

/// exp(-i H_block t) = C I - i S block_generator, with (C, S) at index n + 1.
numerics::ComplexMatrix jc_block_propagator(const JCParams& p, int n, double t);

/// Reduced qubit state at time t, propagated block by block on the invariant subspace.
qubit::BlochVector evolve_qubit_jc(const qubit::BlochVector& s0, const JCParams& p, double t);

/// Amplitudes of (|e,n>, |g,n+1>, |e,n-1>, |g,n>) after evolving a pure qubit
/// state (c_e |e> + c_g |g>) ⊗ |n>. Entries for absent levels (n = 0) are zero.
std::array<numerics::Complex, 4> invariant_subspace_amplitudes(numerics::Complex c_e, numerics::Complex c_g,
                                                               const JCParams& p, double t);

/// Full Hamiltonian on the 2 (n_max + 1) dimensional truncated space,
/// composite index = qubit_index * (n_max + 1) + fock_index.
numerics::ComplexMatrix jc_hamiltonian(const JCParams& p, int n_max);

/// Reference path: full truncated Hamiltonian, spectral exponential, partial trace.
qubit::BlochVector full_fock_oracle(const qubit::BlochVector& s0, const JCParams& p, double t, int n_max);

inline int default_nmax(const JCParams& p) { return p.photons + 3; }

/// Printed closed-form Bloch components, evaluated verbatim in complex
/// arithmetic. The detuning symbol is read as Delta / gamma.
struct PaperBlochResult {
    qubit::BlochVector bloch;  // real parts, not range-checked
    double residual = 0.0;     // max |imaginary part| over the three components
};

PaperBlochResult paper_bloch_jc(const qubit::BlochVector& s0, const JCParams& p, double t);

/// Evolution used for trajectories; `n_max` > 0 selects the full-Fock oracle.
metrics::BlochEvolution jc_evolution(const qubit::BlochVector& s0, const JCParams& p, int n_max = 0);

metrics::OverlapSeries jc_trajectory(const qubit::BlochVector& s0, const JCParams& p,
                                     const metrics::TimeGrid& grid, int oracle_nmax = 0);

}  // namespace orthospeed::jc
