#include "orthospeed/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "orthospeed/errors.hpp"

namespace orthospeed::numerics {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw ContractViolation("ComplexMatrix: entry count " + std::to_string(data_.size()) +
                                " does not match " + std::to_string(rows_) + "x" +
                                std::to_string(cols_));
    }
    if (!all_finite()) throw ContractViolation("ComplexMatrix: non-finite entry");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw ContractViolation("ComplexMatrix: ragged initializer");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) sum += (*this)(i, i);
    return sum;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ContractViolation("ComplexMatrix: shape mismatch in +");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ContractViolation("ComplexMatrix: shape mismatch in -");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (auto& z : data_) z *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw ContractViolation("ComplexMatrix: shape mismatch in *");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ContractViolation("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
    return m;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (!m.square()) return false;
    const double scale = std::max(1.0, m.max_abs());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = r; c < m.cols(); ++c)
            if (std::abs(m(r, c) - std::conj(m(c, r))) > tol * scale) return false;
    return true;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja)
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    out(ia * b.rows() + ib, ja * b.cols() + jb) = a(ia, ja) * b(ib, jb);
    return out;
}

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix pauli_y() { return {{0.0, -kI}, {kI, 0.0}}; }
ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

std::vector<Complex> HermitianEigenSystem::vector(std::size_t k) const {
    std::vector<Complex> v(eigenvectors.rows());
    for (std::size_t r = 0; r < v.size(); ++r) v[r] = eigenvectors(r, k);
    return v;
}

void fix_phase(std::span<Complex> v) {
    double largest = 0.0;
    for (const auto& z : v) largest = std::max(largest, std::abs(z));
    if (largest == 0.0) return;
    // Components within 1e-12 of the largest magnitude count as ties.
    std::size_t pivot = 0;
    while (std::abs(v[pivot]) < largest - 1e-12) ++pivot;
    const Complex phase = std::conj(v[pivot]) / std::abs(v[pivot]);
    for (auto& z : v) z *= phase;
    v[pivot] = std::abs(v[pivot]);
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (r != c) sum += std::norm(a(r, c));
    return std::sqrt(sum);
}

double frobenius_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (const auto& z : a.entries()) sum += std::norm(z);
    return std::sqrt(sum);
}

// Annihilates a(p,q) with the unitary G = diag(1, e^{-i phi}) R(theta):
// the phase makes the pivot real, then a real Jacobi rotation zeroes it.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double g = std::abs(apq);
    const Complex phase = std::conj(apq) / g;  // D_qq
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double theta = (aqq - app) / (2.0 * g);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const Complex g00 = c;
    const Complex g01 = s;
    const Complex g10 = -s * phase;
    const Complex g11 = c * phase;

    const std::size_t n = a.rows();
    // A <- A G
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * g00 + akq * g10;
        a(k, q) = akp * g01 + akq * g11;
    }
    // A <- G^dagger A
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(g00) * apk + std::conj(g10) * aqk;
        a(q, k) = std::conj(g01) * apk + std::conj(g11) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
    // V <- V G
    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * g00 + vkq * g10;
        v(k, q) = vkp * g01 + vkq * g11;
    }
}

}  // namespace

HermitianEigenSystem hermitian_eig(const ComplexMatrix& m, JacobiOptions options) {
    if (!m.square() || m.rows() == 0)
        throw ContractViolation("hermitian_eig: matrix must be square and non-empty");
    if (!m.all_finite()) throw ContractViolation("hermitian_eig: non-finite entry");
    if (!is_hermitian(m, 1e-12)) throw ContractViolation("hermitian_eig: matrix is not Hermitian");

    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) {
            const Complex mean = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = mean;
            a(c, r) = std::conj(mean);
        }
    for (std::size_t r = 0; r < n; ++r) a(r, r) = a(r, r).real();

    ComplexMatrix v = ComplexMatrix::identity(n);
    // Scale-aware stopping: the absolute tolerance applies to matrices of unit norm.
    const double stop = options.off_diagonal_tolerance * std::max(1.0, frobenius_norm(a));
    const double tiny = std::numeric_limits<double>::min();

    int sweep = 0;
    while (off_diagonal_norm(a) >= stop) {
        if (sweep++ >= options.max_sweeps)
            throw NumericalFailure("hermitian_eig: no convergence after " +
                                   std::to_string(options.max_sweeps) + " sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > tiny) jacobi_rotate(a, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    HermitianEigenSystem out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    std::vector<Complex> column(n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) column[r] = v(r, order[k]);
        fix_phase(column);
        for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = column[r];
    }
    if (!out.eigenvectors.all_finite())
        throw NumericalFailure("hermitian_eig: non-finite eigenvectors");
    return out;
}

ComplexMatrix evolve_unitary(const ComplexMatrix& h, double t) {
    const auto eig = hermitian_eig(h);
    const std::size_t n = h.rows();
    ComplexMatrix scaled = eig.eigenvectors;
    for (std::size_t k = 0; k < n; ++k) {
        const Complex phase = std::exp(-kI * (eig.eigenvalues[k] * t));
        for (std::size_t r = 0; r < n; ++r) scaled(r, k) *= phase;
    }
    return scaled * eig.eigenvectors.adjoint();
}

ComplexMatrix partial_trace_field(const ComplexMatrix& rho, std::size_t field_dim) {
    if (field_dim == 0 || !rho.square() || rho.rows() != 2 * field_dim)
        throw ContractViolation("partial_trace_field: expected a " + std::to_string(2 * field_dim) +
                                "-square matrix, got " + std::to_string(rho.rows()) + "x" +
                                std::to_string(rho.cols()));
    if (!is_hermitian(rho, 1e-10)) throw ContractViolation("partial_trace_field: input not Hermitian");
    if (std::abs(rho.trace() - 1.0) > 1e-10)
        throw ContractViolation("partial_trace_field: input trace differs from 1");

    ComplexMatrix out(2, 2);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t f = 0; f < field_dim; ++f)
                out(a, b) += rho(a * field_dim + f, b * field_dim + f);
    return out;
}

}  // namespace orthospeed::numerics
