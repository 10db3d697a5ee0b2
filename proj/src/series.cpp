#include "orthospeed/series.hpp"

#include <cmath>
#include <string>

#include "orthospeed/errors.hpp"

namespace orthospeed::metrics {

TimeGrid TimeGrid::uniform(double t_end, int steps) {
    if (!(t_end > 0.0) || !std::isfinite(t_end)) throw ContractViolation("TimeGrid: t_end must be positive");
    if (steps < 1) throw ContractViolation("TimeGrid: need at least one step");
    std::vector<double> values(static_cast<std::size_t>(steps) + 1);
    for (int k = 0; k <= steps; ++k) values[k] = t_end * static_cast<double>(k) / steps;
    values.back() = t_end;
    return TimeGrid(std::move(values));
}

TimeGrid TimeGrid::from_values(std::vector<double> values) {
    if (values.empty() || values.front() != 0.0) throw ContractViolation("TimeGrid: must start at 0");
    for (std::size_t k = 1; k < values.size(); ++k)
        if (!(values[k] > values[k - 1]) || !std::isfinite(values[k]))
            throw ContractViolation("TimeGrid: values must be strictly increasing");
    return TimeGrid(std::move(values));
}

std::string to_string(Track track) {
    switch (track) {
        case Track::Sp11: return "sp11";
        case Track::Sp12: return "sp12";
        case Track::Sp21: return "sp21";
        case Track::Sp22: return "sp22";
        case Track::Fidelity: return "fidelity";
    }
    return "?";
}

Track parse_track(const std::string& name) {
    if (name == "sp11") return Track::Sp11;
    if (name == "sp12") return Track::Sp12;
    if (name == "sp21") return Track::Sp21;
    if (name == "sp22") return Track::Sp22;
    if (name == "fidelity") return Track::Fidelity;
    throw ArgumentError("unknown track '" + name + "' (expected sp11|sp12|sp21|sp22|fidelity)");
}

double track_value(const SeriesSample& sample, Track track) {
    switch (track) {
        case Track::Sp11: return sample.overlap.abs[0][0];
        case Track::Sp12: return sample.overlap.abs[0][1];
        case Track::Sp21: return sample.overlap.abs[1][0];
        case Track::Sp22: return sample.overlap.abs[1][1];
        case Track::Fidelity: return sample.fidelity;
    }
    return 0.0;
}

SeriesSample evaluate_sample(const BlochEvolution& evolution, const qubit::QubitDensity& initial_rho,
                             const qubit::EigenBasis& initial_basis, double t,
                             const std::optional<qubit::EigenBasis>& previous) {
    SeriesSample sample;
    sample.t = t;
    sample.bloch = evolution(t);
    if (!std::isfinite(sample.bloch.sx) || !std::isfinite(sample.bloch.sy) || !std::isfinite(sample.bloch.sz))
        throw NumericalFailure("evolution produced a non-finite Bloch vector at t = " + std::to_string(t));
    const auto rho = qubit::bloch_to_density(sample.bloch);
    sample.purity = rho.purity();
    sample.basis = qubit::eigenbasis(rho, previous);
    sample.degenerate = sample.basis.degenerate;
    sample.overlap = qubit::overlap_matrix(initial_basis, sample.basis);
    sample.fidelity = qubit::uhlmann_fidelity(initial_rho, rho);
    return sample;
}

OverlapSeries trace_trajectory(const qubit::BlochVector& s0, BlochEvolution evolution, const TimeGrid& grid,
                               SeriesMetadata metadata) {
    OverlapSeries series;
    series.grid = grid;
    series.metadata = std::move(metadata);
    series.initial = s0;
    const auto rho0 = qubit::bloch_to_density(s0);
    series.initial_basis = qubit::eigenbasis(rho0);
    series.evolution = std::move(evolution);
    series.samples.reserve(grid.size());

    std::optional<qubit::EigenBasis> previous = series.initial_basis;
    for (double t : grid.values()) {
        auto sample = evaluate_sample(series.evolution, rho0, series.initial_basis, t, previous);
        previous = sample.basis;
        series.samples.push_back(std::move(sample));
    }
    return series;
}

}  // namespace orthospeed::metrics
