#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "orthospeed/errors.hpp"
#include "orthospeed/numerics.hpp"
#include "test_support.hpp"

using namespace orthospeed;
using namespace orthospeed::numerics;
using orthospeed::testing::random_hermitian;
using orthospeed::testing::random_unitary;

namespace {

ComplexMatrix reconstruct(const HermitianEigenSystem& eig) {
    const std::size_t n = eig.eigenvalues.size();
    ComplexMatrix scaled = eig.eigenvectors;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < n; ++r) scaled(r, k) *= eig.eigenvalues[k];
    return scaled * eig.eigenvectors.adjoint();
}

void check_phase_convention(const HermitianEigenSystem& eig) {
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        const auto v = eig.vector(k);
        double largest = 0.0;
        for (const auto& z : v) largest = std::max(largest, std::abs(z));
        std::size_t pivot = 0;
        while (std::abs(v[pivot]) < largest - 1e-12) ++pivot;
        CHECK(v[pivot].imag() == 0.0);
        CHECK(v[pivot].real() >= 0.0);
    }
}

}  // namespace

TEST_CASE("hermitian_eig: identity") {
    const auto eig = hermitian_eig(ComplexMatrix::identity(2));
    CHECK(eig.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.0));
    CHECK(max_abs_diff(eig.eigenvectors.adjoint() * eig.eigenvectors, ComplexMatrix::identity(2)) < 1e-12);
    check_phase_convention(eig);
}

TEST_CASE("hermitian_eig: pauli x") {
    const auto eig = hermitian_eig(pauli_x());
    CHECK(std::abs(eig.eigenvalues[0] - 1.0) < 1e-14);
    CHECK(std::abs(eig.eigenvalues[1] + 1.0) < 1e-14);
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(eig.eigenvectors(0, 0) - h) < 1e-14);
    CHECK(std::abs(eig.eigenvectors(1, 0) - h) < 1e-14);
    CHECK(std::abs(eig.eigenvectors(0, 1) - h) < 1e-14);
    CHECK(std::abs(eig.eigenvectors(1, 1) + h) < 1e-14);
}

TEST_CASE("hermitian_eig: random 6x6 with a known spectrum") {
    std::mt19937_64 rng(42);
    const auto u = random_unitary(rng, 6);
    std::vector<double> spectrum = {2.5, -1.25, 0.75, 0.1, -3.0, 1.9};
    ComplexMatrix scaled = u;
    for (std::size_t k = 0; k < 6; ++k)
        for (std::size_t r = 0; r < 6; ++r) scaled(r, k) *= spectrum[k];
    const ComplexMatrix m = scaled * u.adjoint();

    const auto eig = hermitian_eig(m);
    std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
    for (std::size_t k = 0; k < 6; ++k) CHECK(std::abs(eig.eigenvalues[k] - spectrum[k]) < 1e-12);
    CHECK(max_abs_diff(reconstruct(eig), m) < 1e-12);
}

TEST_CASE("hermitian_eig: reconstruction and orthonormality on random inputs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t dim = 1 + trial % 10;
        const auto m = random_hermitian(rng, dim);
        const auto eig = hermitian_eig(m);
        CHECK(max_abs_diff(reconstruct(eig), m) < 1e-12);
        CHECK(max_abs_diff(eig.eigenvectors.adjoint() * eig.eigenvectors, ComplexMatrix::identity(dim)) < 1e-12);
        CHECK(std::is_sorted(eig.eigenvalues.rbegin(), eig.eigenvalues.rend()));
        check_phase_convention(eig);
    }
}

TEST_CASE("hermitian_eig: contract violations and non-convergence") {
    CHECK_THROWS_AS(hermitian_eig(ComplexMatrix(2, 3)), ContractViolation);
    CHECK_THROWS_AS(hermitian_eig(ComplexMatrix{{1.0, 2.0}, {0.0, 1.0}}), ContractViolation);
    CHECK_THROWS_AS(hermitian_eig(ComplexMatrix{{Complex(1.0, 0.5), 0.0}, {0.0, 1.0}}), ContractViolation);
    CHECK_THROWS_AS(hermitian_eig(pauli_x(), {1e-14, 0}), NumericalFailure);
}

TEST_CASE("evolve_unitary: closed cases") {
    CHECK(max_abs_diff(evolve_unitary(ComplexMatrix(3, 3), 1.7), ComplexMatrix::identity(3)) < 1e-15);

    const auto u = evolve_unitary(pauli_z(), std::numbers::pi / 2);
    const ComplexMatrix expected{{std::exp(-kI * (std::numbers::pi / 2)), 0.0}, {0.0, std::exp(kI * (std::numbers::pi / 2))}};
    CHECK(max_abs_diff(u, expected) < 1e-15);

    const double t = std::numbers::pi / 4;
    CHECK(max_abs_diff(evolve_unitary(pauli_x(), t), orthospeed::testing::taylor_exp(pauli_x(), t)) < 1e-12);
}

TEST_CASE("evolve_unitary: unitarity, Taylor agreement and group property") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> time(-3.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 2 + trial % 5;
        const auto h = random_hermitian(rng, dim, 0.5);
        const double t1 = time(rng), t2 = time(rng);
        const auto u1 = evolve_unitary(h, t1);
        const auto u2 = evolve_unitary(h, t2);
        CHECK(max_abs_diff(u1.adjoint() * u1, ComplexMatrix::identity(dim)) < 1e-12);
        CHECK(max_abs_diff(u1 * u2, evolve_unitary(h, t1 + t2)) < 1e-11);
        CHECK(max_abs_diff(u1, orthospeed::testing::taylor_exp(h, t1, 60)) < 1e-10);
    }
}

TEST_CASE("partial_trace_field: product and entangled states") {
    const ComplexMatrix rho_a{{0.7, Complex(0.1, -0.2)}, {Complex(0.1, 0.2), 0.3}};
    ComplexMatrix fock(4, 4);
    fock(2, 2) = 1.0;
    CHECK(max_abs_diff(partial_trace_field(kron(rho_a, fock), 4), rho_a) < 1e-15);

    // (|0,0> + |1,1>) / sqrt(2) with index = qubit * 2 + fock
    ComplexMatrix bell(4, 4);
    for (std::size_t r : {0u, 3u})
        for (std::size_t c : {0u, 3u}) bell(r, c) = 0.5;
    CHECK(max_abs_diff(partial_trace_field(bell, 2), ComplexMatrix::identity(2) * 0.5) < 1e-15);
}

TEST_CASE("partial_trace_field: rejects mismatched shapes and unnormalized input") {
    CHECK_THROWS_AS(partial_trace_field(ComplexMatrix::identity(6) * (1.0 / 6.0), 4), ContractViolation);
    CHECK_THROWS_AS(partial_trace_field(ComplexMatrix::identity(4), 2), ContractViolation);
    CHECK_THROWS_AS(partial_trace_field(ComplexMatrix::identity(4) * 0.25, 0), ContractViolation);
}

TEST_CASE("partial_trace_field: preserves trace and positivity of random states") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t field = 1 + trial % 6;
        const std::size_t dim = 2 * field;
        // rho = A A^dagger / tr
        ComplexMatrix a(dim, dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) a(r, c) = orthospeed::testing::random_complex(rng);
        ComplexMatrix rho = a * a.adjoint();
        rho *= 1.0 / rho.trace().real();
        const auto reduced = partial_trace_field(rho, field);
        CHECK(std::abs(reduced.trace() - 1.0) < 1e-12);
        CHECK(hermitian_eig(reduced).eigenvalues[1] >= -1e-10);
    }
}
