#pragma once

// Small dense complex linear algebra: Hermitian eigensolver (cyclic Jacobi),
// spectral matrix exponential and the qubit/field partial trace.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace orthospeed::numerics {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Dense row-major complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Complex> entries() const { return data_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double max_abs() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// max_ij |a_ij - b_ij|; shapes must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hermitian within `tol`, measured relative to max(1, max|m_ij|).
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12);

/// Kronecker product a ⊗ b; the row index of the result is ia * b.rows() + ib.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Eigenvalues sorted descending with matching orthonormal eigenvector columns.
/// Each eigenvector has its largest-magnitude component (lowest index on ties)
/// real and nonnegative.
struct HermitianEigenSystem {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;  // column k pairs with eigenvalues[k]

    std::vector<Complex> vector(std::size_t k) const;
};

struct JacobiOptions {
    double off_diagonal_tolerance = 1e-14;
    int max_sweeps = 100;
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
/// Throws ContractViolation for non-square/non-Hermitian input and
/// NumericalFailure when the sweep budget is exhausted.
HermitianEigenSystem hermitian_eig(const ComplexMatrix& m, JacobiOptions options = {});

/// Applies the phase convention in place to a single vector.
void fix_phase(std::span<Complex> v);

/// exp(-i h t) via the spectral decomposition of h.
ComplexMatrix evolve_unitary(const ComplexMatrix& h, double t);

/// Traces out the field of a (2·field_dim)-square operator whose composite
/// index is qubit_index * field_dim + fock_index.
ComplexMatrix partial_trace_field(const ComplexMatrix& rho, std::size_t field_dim);

}  // namespace orthospeed::numerics
