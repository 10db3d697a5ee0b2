#include "orthospeed/jaynes_cummings.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "orthospeed/errors.hpp"

namespace orthospeed::jc {

using numerics::Complex;
using numerics::ComplexMatrix;
using numerics::kI;
using qubit::BlochVector;

namespace {

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Wraps a reduced 2x2 operator after symmetrizing away rounding asymmetry.
qubit::QubitDensity reduced_state(ComplexMatrix m) {
    ComplexMatrix h = (m + m.adjoint()) * 0.5;
    const Complex tr = h.trace();
    if (std::abs(tr - 1.0) > 1e-12) throw NumericalFailure("JC evolution lost trace");
    return qubit::QubitDensity(std::move(h));
}

// Image of |e,n> and |g,n> under the propagator, stored as amp[qubit][f - n + 1]
// for f in {n-1, n, n+1}.
using Amplitudes = std::array<std::array<Complex, 3>, 2>;

std::array<Amplitudes, 2> propagate_basis(const JCParams& p, double t) {
    const int n = p.photons;
    std::array<Amplitudes, 2> img{};
    const auto upper = jc_block_propagator(p, n, t);
    img[0][0][1] = upper(0, 0);  // |e,n>
    img[0][1][2] = upper(1, 0);  // |g,n+1>
    if (n >= 1) {
        const auto lower = jc_block_propagator(p, n - 1, t);
        img[1][0][0] = lower(0, 1);  // |e,n-1>
        img[1][1][1] = lower(1, 1);  // |g,n>
    } else {
        img[1][1][1] = std::exp(kI * (0.5 * p.detuning() * t));
    }
    return img;
}

}  // namespace

void validate(const JCParams& p) {
    if (!std::isfinite(p.eta) || !std::isfinite(p.delta_over_gamma) || !std::isfinite(p.gamma))
        throw ContractViolation("JCParams: non-finite parameter");
    if (p.eta < 0.0) throw ContractViolation("JCParams: eta must be >= 0");
    if (!(p.gamma > 0.0)) throw ContractViolation("JCParams: gamma must be > 0");
    if (p.photons < 0) throw ContractViolation("JCParams: photons must be >= 0");
}

BlockCoefficients block_coefficients(const JCParams& p, int index, double t) {
    if (index < 0) throw ContractViolation("block_coefficients: index must be >= 0");
    const double d = 0.5 * p.delta_over_gamma;
    BlockCoefficients out;
    out.index = index;
    out.mu = std::sqrt(d * d + p.eta * p.eta * index);
    const double phase = out.mu * p.gamma * t;
    out.c_coef = std::cos(phase);
    out.s_coef = out.mu > 0.0 ? std::sin(phase) / out.mu : p.gamma * t;
    return out;
}

ComplexMatrix block_generator(const JCParams& p, int n) {
    const double d = 0.5 * p.delta_over_gamma;
    const double g = p.eta * std::sqrt(static_cast<double>(n) + 1.0);
    return {{d, g}, {g, -d}};
}

ComplexMatrix jc_block_propagator(const JCParams& p, int n, double t) {
    validate(p);
    if (n < 0) throw ContractViolation("jc_block_propagator: n must be >= 0");
    const auto k = block_coefficients(p, n + 1, t);
    ComplexMatrix u = block_generator(p, n) * (-kI * k.s_coef);
    u(0, 0) += k.c_coef;
    u(1, 1) += k.c_coef;
    return u;
}

std::array<Complex, 4> invariant_subspace_amplitudes(Complex c_e, Complex c_g, const JCParams& p, double t) {
    validate(p);
    const auto img = propagate_basis(p, t);
    return {c_e * img[0][0][1], c_e * img[0][1][2], c_g * img[1][0][0], c_g * img[1][1][1]};
}

BlochVector evolve_qubit_jc(const BlochVector& s0, const JCParams& p, double t) {
    validate(p);
    const auto rho0 = qubit::bloch_to_density(s0);
    const auto img = propagate_basis(p, t);

    ComplexMatrix reduced(2, 2);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) {
            const Complex weight = rho0(a, b);
            if (weight == Complex{}) continue;
            for (std::size_t q = 0; q < 2; ++q)
                for (std::size_t qp = 0; qp < 2; ++qp)
                    for (std::size_t f = 0; f < 3; ++f)
                        reduced(q, qp) += weight * img[a][q][f] * std::conj(img[b][qp][f]);
        }
    return qubit::density_to_bloch(reduced_state(std::move(reduced)));
}

ComplexMatrix jc_hamiltonian(const JCParams& p, int n_max) {
    validate(p);
    if (n_max < 1) throw ContractViolation("jc_hamiltonian: n_max must be >= 1");
    const std::size_t dim = static_cast<std::size_t>(n_max) + 1;
    ComplexMatrix h(2 * dim, 2 * dim);
    const double half_detuning = 0.5 * p.detuning();
    for (std::size_t f = 0; f < dim; ++f) {
        h(f, f) = half_detuning;               // |e,f>
        h(dim + f, dim + f) = -half_detuning;  // |g,f>
    }
    // a^dagger sigma_- |e,f> = sqrt(f+1) |g,f+1>
    for (std::size_t f = 0; f + 1 < dim; ++f) {
        const double coupling = p.coupling() * std::sqrt(static_cast<double>(f) + 1.0);
        h(dim + f + 1, f) = coupling;
        h(f, dim + f + 1) = coupling;
    }
    return h;
}

BlochVector full_fock_oracle(const BlochVector& s0, const JCParams& p, double t, int n_max) {
    validate(p);
    if (n_max < p.photons + 2)
        throw ContractViolation("full_fock_oracle: n_max must be at least photons + 2");
    const std::size_t dim = static_cast<std::size_t>(n_max) + 1;
    const auto rho_a = qubit::bloch_to_density(s0);
    ComplexMatrix field(dim, dim);
    field(static_cast<std::size_t>(p.photons), static_cast<std::size_t>(p.photons)) = 1.0;
    const ComplexMatrix rho0 = numerics::kron(rho_a.matrix(), field);

    const ComplexMatrix u = numerics::evolve_unitary(jc_hamiltonian(p, n_max), t);
    const ComplexMatrix rho_t = u * rho0 * u.adjoint();
    return qubit::density_to_bloch(reduced_state(numerics::partial_trace_field((rho_t + rho_t.adjoint()) * 0.5, dim)));
}

PaperBlochResult paper_bloch_jc(const BlochVector& s0, const JCParams& p, double t) {
    validate(p);
    const int n = p.photons;
    const auto k0 = block_coefficients(p, n, t);
    const auto k1 = block_coefficients(p, n + 1, t);
    const auto k2 = block_coefficients(p, n + 2, t);
    const double Sn = k0.s_coef, Sn1 = k1.s_coef, Sn2 = k2.s_coef;
    const double Cn1 = k1.c_coef, Cn2 = k2.c_coef;
    const double eta = p.eta;
    const double D = p.delta_over_gamma;
    const double r1 = std::sqrt(n + 1.0);
    const double r2 = std::sqrt(n + 2.0);
    const double sx = s0.sx, sy = s0.sy, sz = s0.sz;
    const double up = 0.5 * (1.0 + sz);
    const double down = 0.5 * (1.0 - sz);
    const double bracket = r1 * (Cn1 + 0.5 * D * Sn1) + (Cn1 - 0.5 * D * Sn1);

    const Complex x = -kI * eta * Sn1 * up * bracket
                      + eta * eta * r1 * r2 * Sn * Sn1 * sx
                      + kI * eta * r1 * down * Sn * Cn2
                      + (Cn1 * Cn1 - 0.5 * D * D * Sn1 * Sn1) * sx
                      - D * Sn1 * Cn1 * sy;

    const Complex y = eta * Sn1 * up * bracket
                      - eta * eta * r1 * r2 * Sn * Sn1 * sy
                      + kI * eta * D * r1 * down * Sn * Sn2
                      + D * Sn1 * Cn1 * sx
                      + (Cn2 * Cn2 - 0.5 * D * D * Sn1 * Sn1) * sy;

    const Complex z = -kI * (0.5 * eta) * ((1.0 + r1) * Cn1 + 0.5 * D * (1.0 - r1) * Sn1) * sx * Sn1
                      + (0.5 * eta) * ((1.0 - r1) * Cn1 + 0.5 * D * (1.0 + r1) * Sn1) * sy * Sn1
                      - (Cn1 * Cn1 + 0.25 * D * D * Sn1) * sz
                      + eta * eta * Sn * Sn * (0.5 - (n + 0.5) * sz)
                      - kI * eta * (0.5 * (sx - kI * sy)) * r1 * Sn * Cn1;

    PaperBlochResult out;
    out.bloch = {x.real(), y.real(), z.real()};
    out.residual = std::max({std::abs(x.imag()), std::abs(y.imag()), std::abs(z.imag())});
    return out;
}

metrics::BlochEvolution jc_evolution(const BlochVector& s0, const JCParams& p, int n_max) {
    validate(p);
    if (n_max > 0) return [s0, p, n_max](double t) { return full_fock_oracle(s0, p, t, n_max); };
    return [s0, p](double t) { return evolve_qubit_jc(s0, p, t); };
}

metrics::OverlapSeries jc_trajectory(const BlochVector& s0, const JCParams& p, const metrics::TimeGrid& grid,
                                     int oracle_nmax) {
    validate(p);
    metrics::SeriesMetadata meta;
    meta.model = "jc";
    meta.parameters = {{"eta", format_real(p.eta)},
                       {"detuning", format_real(p.delta_over_gamma)},
                       {"gamma", format_real(p.gamma)},
                       {"photons", std::to_string(p.photons)},
                       {"engine", oracle_nmax > 0 ? "full-fock-oracle" : "block"}};
    if (oracle_nmax > 0) meta.parameters.emplace_back("nmax", std::to_string(oracle_nmax));
    meta.conventions = {"qubit level 0 = excited (sigma_z=+1), level 1 = ground",
                        "composite index = qubit * (nmax+1) + fock",
                        "time axis is gamma*t"};
    return metrics::trace_trajectory(s0, jc_evolution(s0, p, oracle_nmax), grid, std::move(meta));
}

}  // namespace orthospeed::jc
