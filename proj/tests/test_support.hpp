#pragma once

// Test-only generators and oracles. Nothing here calls into the eigensolver.

#include <cmath>
#include <random>
#include <vector>

#include "orthospeed/numerics.hpp"
#include "orthospeed/qubit_state.hpp"

namespace orthospeed::testing {

using numerics::Complex;
using numerics::ComplexMatrix;

inline Complex random_complex(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    return {n(rng), n(rng)};
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t dim, double scale = 1.0) {
    ComplexMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        m(r, r) = scale * random_complex(rng).real();
        for (std::size_t c = r + 1; c < dim; ++c) {
            m(r, c) = scale * random_complex(rng);
            m(c, r) = std::conj(m(r, c));
        }
    }
    return m;
}

/// Gram-Schmidt on a Gaussian matrix.
inline ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t dim) {
    ComplexMatrix q(dim, dim);
    for (std::size_t c = 0; c < dim; ++c) {
        std::vector<Complex> v(dim);
        for (auto& z : v) z = random_complex(rng);
        for (std::size_t k = 0; k < c; ++k) {
            Complex proj = 0.0;
            for (std::size_t r = 0; r < dim; ++r) proj += std::conj(q(r, k)) * v[r];
            for (std::size_t r = 0; r < dim; ++r) v[r] -= proj * q(r, k);
        }
        double norm = 0.0;
        for (const auto& z : v) norm += std::norm(z);
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < dim; ++r) q(r, c) = v[r] / norm;
    }
    return q;
}

/// exp(-i h t) by direct power series.
inline ComplexMatrix taylor_exp(const ComplexMatrix& h, double t, int terms = 30) {
    const std::size_t n = h.rows();
    ComplexMatrix sum = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    const ComplexMatrix step = h * Complex(0.0, -t);
    for (int k = 1; k <= terms; ++k) {
        term = term * step;
        term *= 1.0 / k;
        sum += term;
    }
    return sum;
}

inline qubit::BlochVector random_bloch(std::mt19937_64& rng, double max_norm = 1.0) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        qubit::BlochVector s{u(rng), u(rng), u(rng)};
        if (s.norm() <= max_norm) return s;
    }
}

inline double max_component_diff(const qubit::BlochVector& a, const qubit::BlochVector& b) {
    return std::max({std::abs(a.sx - b.sx), std::abs(a.sy - b.sy), std::abs(a.sz - b.sz)});
}

}  // namespace orthospeed::testing
