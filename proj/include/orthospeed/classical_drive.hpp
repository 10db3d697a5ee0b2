#pragma once

// Qubit driven by a classical three-axis field with components alpha_1..3.
//
// The drive acts as the uniform mixture of single-axis rotations
//   rho -> (1/3) sum_k U_k rho U_k^dagger,  U_k = exp(-i alpha_k t sigma_k),
// whose Bloch-vector action has the closed form implemented by
// evolve_bloch_classical. channel_oracle_classical builds the same map from
// matrices and is kept as an independent check.

#include "orthospeed/qubit_state.hpp"
#include "orthospeed/series.hpp"

namespace orthospeed::classical {

struct ClassicalFieldParams {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double alpha3 = 0.0;
};

/// How the three single-axis exponentials combine.
enum class CompositionLaw {
    Mixture,  ///< uniform random-unitary channel (default)
    Product,  ///< coherent product exp(-i a3 t Z) exp(-i a2 t Y) exp(-i a1 t X)
};

qubit::BlochVector evolve_bloch_classical(const qubit::BlochVector& s, const ClassicalFieldParams& p, double t);

qubit::BlochVector channel_oracle_classical(const qubit::BlochVector& s, const ClassicalFieldParams& p, double t);

/// Comparison mode only; does not reproduce the 1/3 weights of the mixture.
qubit::BlochVector evolve_bloch_product(const qubit::BlochVector& s, const ClassicalFieldParams& p, double t);

/// Selects the evolution used for trajectories. `use_oracle` swaps the
/// closed form for the matrix path under the mixture law.
metrics::BlochEvolution classical_evolution(const qubit::BlochVector& s0, const ClassicalFieldParams& p,
                                            CompositionLaw law = CompositionLaw::Mixture,
                                            bool use_oracle = false);

metrics::OverlapSeries classical_trajectory(const qubit::BlochVector& s0, const ClassicalFieldParams& p,
                                            const metrics::TimeGrid& grid,
                                            CompositionLaw law = CompositionLaw::Mixture,
                                            bool use_oracle = false);

}  // namespace orthospeed::classical
