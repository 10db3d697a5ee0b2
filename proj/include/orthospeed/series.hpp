#pragma once

// Time grids and sampled overlap trajectories shared by both dynamical models.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthospeed/qubit_state.hpp"

namespace orthospeed::metrics {

/// Strictly increasing sample times starting at 0.
class TimeGrid {
public:
    /// `steps` intervals over [0, t_end]: steps + 1 samples, last sample exactly t_end.
    static TimeGrid uniform(double t_end, int steps);
    /// Arbitrary strictly increasing times; the first must be 0.
    static TimeGrid from_values(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double t_end() const { return values_.back(); }
    double operator[](std::size_t k) const { return values_[k]; }

private:
    explicit TimeGrid(std::vector<double> values) : values_(std::move(values)) {}
    std::vector<double> values_;
};

/// Which curve an orthogonality search follows.
enum class Track { Sp11, Sp12, Sp21, Sp22, Fidelity };

std::string to_string(Track track);
/// Accepts sp11|sp12|sp21|sp22|fidelity; throws ArgumentError otherwise.
Track parse_track(const std::string& name);

/// Maps a time to the evolved Bloch vector of a fixed initial state.
using BlochEvolution = std::function<qubit::BlochVector(double)>;

struct SeriesSample {
    double t = 0.0;
    qubit::BlochVector bloch;
    double purity = 1.0;
    qubit::OverlapMatrix overlap;
    double fidelity = 1.0;
    bool degenerate = false;
    qubit::EigenBasis basis;
};

struct SeriesMetadata {
    std::string model;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::string> conventions;
};

/// A sampled trajectory. Carries its evolution so events can be refined
/// against the continuous model rather than the samples.
struct OverlapSeries {
    TimeGrid grid = TimeGrid::uniform(1.0, 1);
    std::vector<SeriesSample> samples;
    SeriesMetadata metadata;
    qubit::BlochVector initial;
    qubit::EigenBasis initial_basis;
    BlochEvolution evolution;
};

/// Value of `track` at a sample.
double track_value(const SeriesSample& sample, Track track);

/// Evaluates one sample at time t. `previous` feeds eigenbasis continuity.
SeriesSample evaluate_sample(const BlochEvolution& evolution, const qubit::QubitDensity& initial_rho,
                             const qubit::EigenBasis& initial_basis, double t,
                             const std::optional<qubit::EigenBasis>& previous);

/// Samples `evolution` over the grid in time order, threading the eigenbasis
/// of each sample into the next.
OverlapSeries trace_trajectory(const qubit::BlochVector& s0, BlochEvolution evolution, const TimeGrid& grid,
                               SeriesMetadata metadata);

}  // namespace orthospeed::metrics
