#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orthospeed/classical_drive.hpp"
#include "orthospeed/jaynes_cummings.hpp"
#include "orthospeed/series.hpp"

namespace orthospeed::metrics {

inline constexpr double kDefaultThreshold = 1e-3;

/// An interior local minimum of a track that dips below the threshold.
struct OrthogonalityEvent {
    double t_event = 0.0;
    double min_value = 0.0;
    Track channel = Track::Sp11;
};

struct SpeedMetrics {
    std::optional<double> first_orthogonality_time;
    int event_count = 0;
    double events_per_unit_time = 0.0;
    double window_end = 0.0;
};

struct EventConfig {
    double threshold = kDefaultThreshold;
    Track track = Track::Sp11;
};

/// Finds strict interior local minima of the track on the grid, refines each
/// by golden-section search on the series' own evolution (time tolerance
/// 1e-10 * t_end) and keeps those whose refined value is below `threshold`.
/// Brackets touching a degenerate sample are skipped.
/// Throws ArgumentError unless 0 < threshold < 0.5.
std::vector<OrthogonalityEvent> detect_events(const OverlapSeries& series, double threshold,
                                              Track track = Track::Sp11);

/// Track value at an arbitrary time, using `continuity` as the previous basis.
double evaluate_track(const OverlapSeries& series, double t, Track track,
                      const std::optional<qubit::EigenBasis>& continuity);

SpeedMetrics speed_metrics(const std::vector<OrthogonalityEvent>& events, double window_end);

enum class Model { Classical, JaynesCummings };

std::string to_string(Model model);

/// Everything needed to rebuild one trajectory.
struct ModelConfig {
    Model model = Model::Classical;
    qubit::BlochVector initial{1.0, 0.0, 0.0};
    classical::ClassicalFieldParams field;
    classical::CompositionLaw law = classical::CompositionLaw::Mixture;
    jc::JCParams jc;
    bool use_oracle = false;
    int oracle_nmax = 0;  // 0 selects photons + 3 when use_oracle is set
};

OverlapSeries run_trajectory(const ModelConfig& config, const TimeGrid& grid);

/// Names accepted by `sweep` for a given model.
std::vector<std::string> sweep_parameters(Model model);

/// Returns a copy of `base` with the named parameter set to `value`.
/// Throws ArgumentError for names that do not belong to the model.
ModelConfig with_parameter(ModelConfig base, const std::string& name, double value);

struct SweepSpec {
    ModelConfig base;
    std::string parameter;
    std::vector<double> values;
    double t_end = 1.0;
    int steps = 1000;
    EventConfig events;
    unsigned jobs = 0;  // worker threads; 0 picks the hardware concurrency
};

struct SweepResult {
    std::string parameter;
    std::vector<double> values;
    std::vector<SpeedMetrics> metrics;
    std::size_t argmax = 0;  // highest events_per_unit_time, first on ties
    std::size_t argmin = 0;
};

/// Runs one trajectory per value. Output order follows `values` regardless of
/// how the points are scheduled across workers.
SweepResult sweep(const SweepSpec& spec);

/// Evenly spaced values from start to stop inclusive.
std::vector<double> linspace(double start, double stop, int count);

}  // namespace orthospeed::metrics
