#pragma once

#include <array>
#include <optional>

#include "orthospeed/numerics.hpp"

namespace orthospeed::qubit {

using numerics::Complex;
using numerics::ComplexMatrix;

inline constexpr double kPurityTolerance = 1e-10;
inline constexpr double kDegeneracyGap = 1e-9;

struct BlochVector {
    double sx = 0.0;
    double sy = 0.0;
    double sz = 0.0;

    double norm() const;
    friend bool operator==(const BlochVector&, const BlochVector&) = default;
};

/// 2x2 Hermitian, unit-trace, positive semidefinite matrix.
/// Basis order is (|0>, |1>) with sigma_z = diag(+1, -1).
class QubitDensity {
public:
    /// Validates and wraps `m`; throws InvalidState when it is not a density matrix.
    explicit QubitDensity(ComplexMatrix m);

    const ComplexMatrix& matrix() const { return m_; }
    Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

    double purity() const;
    double determinant() const;

private:
    ComplexMatrix m_;
};

using Vector2 = std::array<Complex, 2>;

struct EigenBasis {
    std::array<double, 2> eigenvalues{};  // descending
    std::array<Vector2, 2> vectors{};
    bool degenerate = false;
};

/// sp[i][j] = <initial_i | evolved_j>.
struct OverlapMatrix {
    std::array<std::array<Complex, 2>, 2> sp{};
    std::array<std::array<double, 2>, 2> abs{};
};

/// rho = (I + sx X + sy Y + sz Z) / 2. Throws InvalidState when |s| > 1 + 1e-10.
QubitDensity bloch_to_density(const BlochVector& s);

/// s_k = tr(rho sigma_k).
BlochVector density_to_bloch(const QubitDensity& rho);

/// Sorted, phase-fixed eigenbasis. When the spectrum is degenerate (gap < 1e-9)
/// and `previous` is given, the previous vectors are kept, since the whole
/// plane is then an eigenspace.
EigenBasis eigenbasis(const QubitDensity& rho, const std::optional<EigenBasis>& previous = std::nullopt);

OverlapMatrix overlap_matrix(const EigenBasis& initial, const EigenBasis& evolved);

/// F = tr(ab) + 2 sqrt(det a det b), clamped to [0, 1].
double uhlmann_fidelity(const QubitDensity& a, const QubitDensity& b);

/// Convenience: purity of the state with Bloch vector s, (1 + |s|^2) / 2.
double purity(const BlochVector& s);

}  // namespace orthospeed::qubit
