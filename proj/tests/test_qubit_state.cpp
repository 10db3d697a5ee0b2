#include <cmath>
#include <numbers>

#include "doctest.h"
#include "orthospeed/classical_drive.hpp"
#include "orthospeed/errors.hpp"
#include "orthospeed/qubit_state.hpp"
#include "test_support.hpp"

using namespace orthospeed;
using namespace orthospeed::qubit;
using numerics::ComplexMatrix;
using numerics::max_abs_diff;

namespace {

double inner_abs(const Vector2& a, const Vector2& b) {
    return std::abs(std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1]);
}

}  // namespace

TEST_CASE("bloch_to_density: reference states") {
    CHECK(max_abs_diff(bloch_to_density({0, 0, 0}).matrix(), ComplexMatrix::identity(2) * 0.5) == 0.0);
    CHECK(max_abs_diff(bloch_to_density({1, 0, 0}).matrix(), ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}}) == 0.0);
    CHECK(max_abs_diff(bloch_to_density({0, 0, 1}).matrix(), ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}) == 0.0);
    CHECK_THROWS_AS(bloch_to_density({1.0, 0.1, 0.0}), InvalidState);
    CHECK_NOTHROW(bloch_to_density({1.0 + 1e-12, 0.0, 0.0}));
}

TEST_CASE("density_to_bloch: inverse on reference states") {
    CHECK(density_to_bloch(QubitDensity(ComplexMatrix::identity(2) * 0.5)) == BlochVector{0, 0, 0});
    CHECK(density_to_bloch(QubitDensity(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}})) == BlochVector{1, 0, 0});
    CHECK_THROWS_AS(QubitDensity(ComplexMatrix{{1.5, 0.0}, {0.0, -0.5}}), InvalidState);
    CHECK_THROWS_AS(QubitDensity(ComplexMatrix{{0.6, 0.0}, {0.0, 0.6}}), InvalidState);
    CHECK_THROWS_AS(QubitDensity(ComplexMatrix{{0.5, 1.0}, {0.0, 0.5}}), InvalidState);
}

TEST_CASE("bloch/density round trip over the ball") {
    std::mt19937_64 rng(2024);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const auto s = orthospeed::testing::random_bloch(rng);
        worst = std::max(worst, orthospeed::testing::max_component_diff(density_to_bloch(bloch_to_density(s)), s));
    }
    CHECK(worst < 1e-14);
}

TEST_CASE("eigenbasis: pure x state") {
    const auto b = eigenbasis(bloch_to_density({1, 0, 0}));
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(b.eigenvalues[0] - 1.0) < 1e-14);
    CHECK(std::abs(b.eigenvalues[1]) < 1e-14);
    CHECK(std::abs(b.vectors[0][0] - h) < 1e-14);
    CHECK(std::abs(b.vectors[0][1] - h) < 1e-14);
    CHECK(std::abs(b.vectors[1][0] - h) < 1e-14);
    CHECK(std::abs(b.vectors[1][1] + h) < 1e-14);
    CHECK_FALSE(b.degenerate);
}

TEST_CASE("eigenbasis: mixed state along -x") {
    const auto b = eigenbasis(bloch_to_density({-1.0 / 3.0, 0, 0}));
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(b.eigenvalues[0] - 2.0 / 3.0) < 1e-14);
    CHECK(std::abs(b.eigenvalues[1] - 1.0 / 3.0) < 1e-14);
    CHECK(std::abs(b.vectors[0][0] - h) < 1e-14);
    CHECK(std::abs(b.vectors[0][1] + h) < 1e-14);
}

TEST_CASE("eigenbasis: degenerate state keeps the previous basis") {
    const auto previous = eigenbasis(bloch_to_density({0.3, -0.4, 0.5}));
    const auto b = eigenbasis(bloch_to_density({0, 0, 0}), previous);
    CHECK(b.degenerate);
    CHECK(b.vectors == previous.vectors);
    CHECK(eigenbasis(bloch_to_density({0, 0, 0})).degenerate);
}

TEST_CASE("overlap_matrix: self overlap, orthogonality event and row norms") {
    const auto x = eigenbasis(bloch_to_density({1, 0, 0}));
    const auto self = overlap_matrix(x, x);
    CHECK(std::abs(self.abs[0][0] - 1.0) < 1e-14);
    CHECK(std::abs(self.abs[1][1] - 1.0) < 1e-14);
    CHECK(self.abs[0][1] < 1e-14);
    CHECK(self.abs[1][0] < 1e-14);

    const auto flipped = overlap_matrix(x, eigenbasis(bloch_to_density({-1.0 / 3.0, 0, 0})));
    CHECK(flipped.abs[0][0] < 1e-14);
    CHECK(std::abs(flipped.abs[0][1] - 1.0) < 1e-14);
    CHECK(std::abs(flipped.abs[1][0] - 1.0) < 1e-14);
    CHECK(flipped.abs[1][1] < 1e-14);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        const auto a = eigenbasis(bloch_to_density(orthospeed::testing::random_bloch(rng)));
        const auto b = eigenbasis(bloch_to_density(orthospeed::testing::random_bloch(rng)));
        if (a.degenerate || b.degenerate) continue;
        const auto m = overlap_matrix(a, b);
        for (int r = 0; r < 2; ++r) {
            CHECK(std::abs(m.abs[r][0] * m.abs[r][0] + m.abs[r][1] * m.abs[r][1] - 1.0) < 1e-10);
            CHECK(m.abs[r][0] <= 1.0 + 1e-10);
        }
    }
}

TEST_CASE("eigenbasis continuity along a finely sampled trajectory") {
    // Consecutive Bloch vectors differ by < 1e-3; samples with |s| < 0.01 are
    // skipped because eigenvectors are ill-conditioned near the maximally mixed point.
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (int run = 0; run < 20; ++run) {
        const auto s0 = orthospeed::testing::random_bloch(rng);
        const classical::ClassicalFieldParams p{angle(rng), angle(rng), angle(rng)};
        std::optional<EigenBasis> previous;
        BlochVector last = s0;
        double t = 0.0;
        int checked = 0;
        while (t < 3.0) {
            const auto s = classical::evolve_bloch_classical(s0, p, t);
            CHECK(std::sqrt(std::pow(s.sx - last.sx, 2) + std::pow(s.sy - last.sy, 2) + std::pow(s.sz - last.sz, 2)) < 1e-3);
            const auto b = eigenbasis(bloch_to_density(s), previous);
            if (previous && s.norm() >= 0.01 && last.norm() >= 0.01) {
                CHECK(inner_abs(previous->vectors[0], b.vectors[0]) > 0.99);
                CHECK(inner_abs(previous->vectors[1], b.vectors[1]) > 0.99);
                ++checked;
            }
            previous = b;
            last = s;
            t += 1e-4;
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("uhlmann_fidelity") {
    const auto up = bloch_to_density({0, 0, 1});
    const auto down = bloch_to_density({0, 0, -1});
    CHECK(std::abs(uhlmann_fidelity(up, up) - 1.0) < 1e-14);
    CHECK(uhlmann_fidelity(up, down) < 1e-14);
    CHECK(std::abs(uhlmann_fidelity(bloch_to_density({0, 0, 0}), bloch_to_density({0.6, 0.0, 0.8})) - 0.5) < 1e-14);

    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        const auto a = bloch_to_density(orthospeed::testing::random_bloch(rng));
        const auto b = bloch_to_density(orthospeed::testing::random_bloch(rng));
        CHECK(std::abs(uhlmann_fidelity(a, b) - uhlmann_fidelity(b, a)) < 1e-14);

        // pure states: F = |<psi|phi>|^2 = (1 + s.r) / 2
        auto unit = [&] {
            auto s = orthospeed::testing::random_bloch(rng);
            const double n = s.norm();
            return BlochVector{s.sx / n, s.sy / n, s.sz / n};
        };
        const auto s = unit();
        const auto r = unit();
        const double expected = 0.5 * (1.0 + s.sx * r.sx + s.sy * r.sy + s.sz * r.sz);
        CHECK(std::abs(uhlmann_fidelity(bloch_to_density(s), bloch_to_density(r)) - expected) < 1e-12);
    }
}
