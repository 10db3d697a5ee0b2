#include "orthospeed/classical_drive.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "orthospeed/errors.hpp"

namespace orthospeed::classical {

using numerics::ComplexMatrix;
using qubit::BlochVector;

namespace {

void require_finite(const ClassicalFieldParams& p, double t) {
    if (!std::isfinite(p.alpha1) || !std::isfinite(p.alpha2) || !std::isfinite(p.alpha3) || !std::isfinite(t))
        throw ContractViolation("classical drive: non-finite field component or time");
}

std::array<ComplexMatrix, 3> axis_rotations(const ClassicalFieldParams& p, double t) {
    return {numerics::evolve_unitary(numerics::pauli_x() * p.alpha1, t),
            numerics::evolve_unitary(numerics::pauli_y() * p.alpha2, t),
            numerics::evolve_unitary(numerics::pauli_z() * p.alpha3, t)};
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

BlochVector evolve_bloch_classical(const BlochVector& s, const ClassicalFieldParams& p, double t) {
    require_finite(p, t);
    const double c1 = std::cos(2.0 * t * p.alpha1), sn1 = std::sin(2.0 * t * p.alpha1);
    const double c2 = std::cos(2.0 * t * p.alpha2), sn2 = std::sin(2.0 * t * p.alpha2);
    const double c3 = std::cos(2.0 * t * p.alpha3), sn3 = std::sin(2.0 * t * p.alpha3);
    return {(s.sx * (1.0 + c2 + c3) - s.sy * sn3 + s.sz * sn2) / 3.0,
            (s.sy * (1.0 + c1 + c3) + s.sx * sn3 - s.sz * sn1) / 3.0,
            (s.sz * (1.0 + c1 + c2) - s.sx * sn2 + s.sy * sn1) / 3.0};
}

BlochVector channel_oracle_classical(const BlochVector& s, const ClassicalFieldParams& p, double t) {
    require_finite(p, t);
    const auto rho = qubit::bloch_to_density(s);
    ComplexMatrix mixed(2, 2);
    for (const auto& u : axis_rotations(p, t)) mixed += u * rho.matrix() * u.adjoint();
    mixed *= 1.0 / 3.0;
    return qubit::density_to_bloch(qubit::QubitDensity(std::move(mixed)));
}

BlochVector evolve_bloch_product(const BlochVector& s, const ClassicalFieldParams& p, double t) {
    require_finite(p, t);
    const auto rho = qubit::bloch_to_density(s);
    const auto u = axis_rotations(p, t);
    const ComplexMatrix total = u[2] * u[1] * u[0];
    return qubit::density_to_bloch(qubit::QubitDensity(total * rho.matrix() * total.adjoint()));
}

metrics::BlochEvolution classical_evolution(const BlochVector& s0, const ClassicalFieldParams& p,
                                            CompositionLaw law, bool use_oracle) {
    if (law == CompositionLaw::Product)
        return [s0, p](double t) { return evolve_bloch_product(s0, p, t); };
    if (use_oracle) return [s0, p](double t) { return channel_oracle_classical(s0, p, t); };
    return [s0, p](double t) { return evolve_bloch_classical(s0, p, t); };
}

metrics::OverlapSeries classical_trajectory(const BlochVector& s0, const ClassicalFieldParams& p,
                                            const metrics::TimeGrid& grid, CompositionLaw law,
                                            bool use_oracle) {
    require_finite(p, 0.0);
    metrics::SeriesMetadata meta;
    meta.model = "classical";
    meta.parameters = {{"alpha1", format_real(p.alpha1)},
                       {"alpha2", format_real(p.alpha2)},
                       {"alpha3", format_real(p.alpha3)},
                       {"law", law == CompositionLaw::Mixture ? "mixture" : "product"},
                       {"engine", law == CompositionLaw::Product ? "matrix"
                                  : use_oracle                   ? "channel-oracle"
                                                                 : "closed-form"}};
    meta.conventions = {"U_k = exp(-i alpha_k t sigma_k), sigma_y = [[0,-i],[i,0]]",
                        "time axis is the bare t multiplying alpha_k"};
    return metrics::trace_trajectory(s0, classical_evolution(s0, p, law, use_oracle), grid, std::move(meta));
}

}  // namespace orthospeed::classical
