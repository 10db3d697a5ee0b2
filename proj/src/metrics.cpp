#include "orthospeed/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "orthospeed/errors.hpp"

namespace orthospeed::metrics {

namespace {

constexpr double kInvGolden = 0.6180339887498949;  // (sqrt(5) - 1) / 2

struct Minimum {
    double t;
    double value;
};

template <typename F>
Minimum golden_section(F&& f, double lo, double hi, double tol, Minimum best) {
    double x1 = hi - kInvGolden * (hi - lo);
    double x2 = lo + kInvGolden * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    auto keep = [&best](double t, double v) {
        if (v < best.value) best = {t, v};
    };
    keep(x1, f1);
    keep(x2, f2);
    while (hi - lo > tol) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvGolden * (hi - lo);
            f1 = f(x1);
            keep(x1, f1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvGolden * (hi - lo);
            f2 = f(x2);
            keep(x2, f2);
        }
    }
    const double mid = 0.5 * (lo + hi);
    keep(mid, f(mid));
    return best;
}

}  // namespace

double evaluate_track(const OverlapSeries& series, double t, Track track,
                      const std::optional<qubit::EigenBasis>& continuity) {
    if (!series.evolution) throw ContractViolation("evaluate_track: series carries no evolution");
    const auto rho0 = qubit::bloch_to_density(series.initial);
    return track_value(evaluate_sample(series.evolution, rho0, series.initial_basis, t, continuity), track);
}

std::vector<OrthogonalityEvent> detect_events(const OverlapSeries& series, double threshold, Track track) {
    if (!(threshold > 0.0 && threshold < 0.5))
        throw ArgumentError("detect_events: threshold must lie in (0, 0.5)");
    const auto& s = series.samples;
    if (s.size() != series.grid.size()) throw ContractViolation("detect_events: series/grid length mismatch");

    std::vector<OrthogonalityEvent> events;
    if (s.size() < 3) return events;

    const double tol = 1e-10 * series.grid.t_end();
    const auto rho0 = qubit::bloch_to_density(series.initial);

    for (std::size_t k = 1; k + 1 < s.size(); ++k) {
        if (s[k - 1].degenerate || s[k].degenerate || s[k + 1].degenerate) continue;
        const double left = track_value(s[k - 1], track);
        const double here = track_value(s[k], track);
        const double right = track_value(s[k + 1], track);
        if (!(left > here && here <= right)) continue;

        const std::optional<qubit::EigenBasis> continuity = s[k].basis;
        auto f = [&](double t) {
            return track_value(evaluate_sample(series.evolution, rho0, series.initial_basis, t, continuity), track);
        };
        const Minimum best = golden_section(f, s[k - 1].t, s[k + 1].t, tol, {s[k].t, here});
        if (best.value < threshold) events.push_back({best.t, best.value, track});
    }
    std::sort(events.begin(), events.end(),
              [](const auto& a, const auto& b) { return a.t_event < b.t_event; });
    return events;
}

SpeedMetrics speed_metrics(const std::vector<OrthogonalityEvent>& events, double window_end) {
    if (!(window_end > 0.0)) throw ArgumentError("speed_metrics: window_end must be positive");
    SpeedMetrics m;
    m.window_end = window_end;
    m.event_count = static_cast<int>(events.size());
    m.events_per_unit_time = static_cast<double>(m.event_count) / window_end;
    if (!events.empty()) {
        double first = events.front().t_event;
        for (const auto& e : events) first = std::min(first, e.t_event);
        m.first_orthogonality_time = first;
    }
    return m;
}

std::string to_string(Model model) { return model == Model::Classical ? "classical" : "jc"; }

OverlapSeries run_trajectory(const ModelConfig& config, const TimeGrid& grid) {
    if (config.model == Model::Classical)
        return classical::classical_trajectory(config.initial, config.field, grid, config.law, config.use_oracle);
    int nmax = 0;
    if (config.use_oracle) nmax = config.oracle_nmax > 0 ? config.oracle_nmax : jc::default_nmax(config.jc);
    return jc::jc_trajectory(config.initial, config.jc, grid, nmax);
}

std::vector<std::string> sweep_parameters(Model model) {
    if (model == Model::Classical) return {"alpha", "alpha1", "alpha2", "alpha3"};
    return {"eta", "detuning", "gamma", "photons"};
}

ModelConfig with_parameter(ModelConfig base, const std::string& name, double value) {
    if (!std::isfinite(value)) throw ArgumentError("sweep value must be finite");
    if (base.model == Model::Classical) {
        if (name == "alpha") base.field = {value, value, value};
        else if (name == "alpha1") base.field.alpha1 = value;
        else if (name == "alpha2") base.field.alpha2 = value;
        else if (name == "alpha3") base.field.alpha3 = value;
        else throw ArgumentError("unknown classical sweep parameter '" + name + "'");
        return base;
    }
    if (name == "eta") base.jc.eta = value;
    else if (name == "detuning") base.jc.delta_over_gamma = value;
    else if (name == "gamma") base.jc.gamma = value;
    else if (name == "photons") {
        if (value < 0.0 || value != std::floor(value)) throw ArgumentError("photons must be a nonnegative integer");
        base.jc.photons = static_cast<int>(value);
    } else {
        throw ArgumentError("unknown jc sweep parameter '" + name + "'");
    }
    return base;
}

SweepResult sweep(const SweepSpec& spec) {
    const auto names = sweep_parameters(spec.base.model);
    if (std::find(names.begin(), names.end(), spec.parameter) == names.end())
        throw ArgumentError("parameter '" + spec.parameter + "' is not valid for model " + to_string(spec.base.model));
    if (spec.values.empty()) throw ArgumentError("sweep: no parameter values");

    // Validate every point up front so workers only see numerical failures.
    std::vector<ModelConfig> configs;
    configs.reserve(spec.values.size());
    for (double v : spec.values) {
        configs.push_back(with_parameter(spec.base, spec.parameter, v));
        if (configs.back().model == Model::JaynesCummings) jc::validate(configs.back().jc);
    }
    const TimeGrid grid = TimeGrid::uniform(spec.t_end, spec.steps);

    SweepResult result;
    result.parameter = spec.parameter;
    result.values = spec.values;
    result.metrics.resize(spec.values.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < configs.size(); i = next++) {
            try {
                const auto series = run_trajectory(configs[i], grid);
                const auto events = detect_events(series, spec.events.threshold, spec.events.track);
                result.metrics[i] = speed_metrics(events, grid.t_end());
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    unsigned jobs = spec.jobs > 0 ? spec.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, configs.size()));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t i = 1; i < result.metrics.size(); ++i) {
        if (result.metrics[i].events_per_unit_time > result.metrics[result.argmax].events_per_unit_time)
            result.argmax = i;
        if (result.metrics[i].events_per_unit_time < result.metrics[result.argmin].events_per_unit_time)
            result.argmin = i;
    }
    return result;
}

std::vector<double> linspace(double start, double stop, int count) {
    if (count < 1) throw ArgumentError("linspace: count must be >= 1");
    if (count == 1) return {start};
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out[i] = start + (stop - start) * static_cast<double>(i) / (count - 1);
    out.back() = stop;
    return out;
}

}  // namespace orthospeed::metrics
