#include "orthospeed/qubit_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "orthospeed/errors.hpp"

namespace orthospeed::qubit {

using numerics::kI;

double BlochVector::norm() const { return std::sqrt(sx * sx + sy * sy + sz * sz); }

double purity(const BlochVector& s) { return 0.5 * (1.0 + s.sx * s.sx + s.sy * s.sy + s.sz * s.sz); }

QubitDensity::QubitDensity(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() != 2 || m_.cols() != 2) throw InvalidState("QubitDensity: matrix must be 2x2");
    if (!m_.all_finite()) throw InvalidState("QubitDensity: non-finite entry");
    if (!numerics::is_hermitian(m_, 1e-12)) throw InvalidState("QubitDensity: not Hermitian");
    if (std::abs(m_.trace() - 1.0) > 1e-12) throw InvalidState("QubitDensity: trace differs from 1");
    // Closed-form 2x2 spectrum: (1 +- sqrt(1 - 4 det)) / 2.
    const double det = determinant();
    const double disc = std::sqrt(std::max(0.0, 1.0 - 4.0 * det));
    const double lo = 0.5 * (1.0 - disc);
    const double hi = 0.5 * (1.0 + disc);
    if (lo < -kPurityTolerance || hi > 1.0 + kPurityTolerance || 1.0 - 4.0 * det < -kPurityTolerance)
        throw InvalidState("QubitDensity: eigenvalues outside [0, 1]");
}

double QubitDensity::purity() const {
    double sum = 0.0;
    for (const auto& z : m_.entries()) sum += std::norm(z);
    return sum;
}

double QubitDensity::determinant() const {
    return (m_(0, 0) * m_(1, 1) - m_(0, 1) * m_(1, 0)).real();
}

QubitDensity bloch_to_density(const BlochVector& s) {
    if (!std::isfinite(s.sx) || !std::isfinite(s.sy) || !std::isfinite(s.sz))
        throw InvalidState("bloch_to_density: non-finite component");
    const double n2 = s.sx * s.sx + s.sy * s.sy + s.sz * s.sz;
    if (n2 > 1.0 + kPurityTolerance)
        throw InvalidState("bloch_to_density: |s|^2 = " + std::to_string(n2) + " exceeds 1");
    ComplexMatrix m{{0.5 * (1.0 + s.sz), 0.5 * (s.sx - kI * s.sy)},
                    {0.5 * (s.sx + kI * s.sy), 0.5 * (1.0 - s.sz)}};
    return QubitDensity(std::move(m));
}

BlochVector density_to_bloch(const QubitDensity& rho) {
    // tr(rho X) = 2 Re rho01, tr(rho Y) = -2 Im rho01, tr(rho Z) = rho00 - rho11
    const Complex off = rho(0, 1);
    return {2.0 * off.real(), -2.0 * off.imag(), (rho(0, 0) - rho(1, 1)).real()};
}

EigenBasis eigenbasis(const QubitDensity& rho, const std::optional<EigenBasis>& previous) {
    const auto eig = numerics::hermitian_eig(rho.matrix());
    EigenBasis basis;
    basis.eigenvalues = {eig.eigenvalues[0], eig.eigenvalues[1]};
    basis.degenerate = (eig.eigenvalues[0] - eig.eigenvalues[1]) < kDegeneracyGap;
    if (basis.degenerate && previous) {
        basis.vectors = previous->vectors;
        return basis;
    }
    for (std::size_t k = 0; k < 2; ++k)
        basis.vectors[k] = {eig.eigenvectors(0, k), eig.eigenvectors(1, k)};
    return basis;
}

OverlapMatrix overlap_matrix(const EigenBasis& initial, const EigenBasis& evolved) {
    OverlapMatrix out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const auto& v = initial.vectors[i];
            const auto& u = evolved.vectors[j];
            out.sp[i][j] = std::conj(v[0]) * u[0] + std::conj(v[1]) * u[1];
            out.abs[i][j] = std::abs(out.sp[i][j]);
        }
    }
    return out;
}

double uhlmann_fidelity(const QubitDensity& a, const QubitDensity& b) {
    const double overlap = (a.matrix() * b.matrix()).trace().real();
    const double dets = a.determinant() * b.determinant();
    const double f = overlap + 2.0 * std::sqrt(std::max(0.0, dets));
    if (f < -1e-12 || f > 1.0 + 1e-12) throw NumericalFailure("uhlmann_fidelity: value outside [0, 1]");
    return std::clamp(f, 0.0, 1.0);
}

}  // namespace orthospeed::qubit
