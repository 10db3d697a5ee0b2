#include "orthospeed/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

namespace orthospeed::cli {

namespace {

using metrics::Model;
using qubit::BlochVector;

double parse_real(const std::string& token, const std::string& what) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value))
        throw UsageError("cannot parse " + what + " '" + token + "'");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else if (c != ' ') {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

BlochVector random_bloch(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        BlochVector s{u(rng), u(rng), u(rng)};
        if (s.norm() <= 1.0) return s;
    }
}

std::string format_optional(const std::optional<double>& v) { return v ? format_real(*v) : "none"; }

std::string summary_line(const metrics::SpeedMetrics& m) {
    return "events=" + std::to_string(m.event_count) +
           " first_orthogonality_time=" + format_optional(m.first_orthogonality_time) +
           " events_per_unit_time=" + format_real(m.events_per_unit_time) + " window=" + format_real(m.window_end);
}

void model_metadata(std::ostringstream& os, const RunConfig& config) {
    const auto& m = config.model;
    os << "# model=" << metrics::to_string(m.model) << '\n';
    os << "# bloch0=" << format_real(m.initial.sx) << ',' << format_real(m.initial.sy) << ','
       << format_real(m.initial.sz) << '\n';
    if (config.seed) os << "# seed=" << *config.seed << '\n';
    if (m.model == Model::Classical) {
        os << "# alpha=" << format_real(m.field.alpha1) << ',' << format_real(m.field.alpha2) << ','
           << format_real(m.field.alpha3) << '\n';
        os << "# law=" << (m.law == classical::CompositionLaw::Mixture ? "mixture" : "product") << '\n';
        os << "# engine="
           << (m.law == classical::CompositionLaw::Product ? "matrix"
               : m.use_oracle                               ? "channel-oracle"
                                                            : "closed-form")
           << '\n';
        os << "# convention: U_k = exp(-i alpha_k t sigma_k); rho -> (1/3) sum_k U_k rho U_k^dagger (mixture law)\n";
        os << "# convention: time axis is the bare t multiplying alpha_k\n";
    } else {
        os << "# eta=" << format_real(m.jc.eta) << '\n';
        os << "# detuning_over_gamma=" << format_real(m.jc.delta_over_gamma) << '\n';
        os << "# gamma=" << format_real(m.jc.gamma) << '\n';
        os << "# photons=" << m.jc.photons << '\n';
        if (m.use_oracle) {
            os << "# engine=full-fock-oracle\n";
            os << "# nmax=" << (m.oracle_nmax > 0 ? m.oracle_nmax : jc::default_nmax(m.jc)) << '\n';
        } else {
            os << "# engine=block\n";
        }
        os << "# convention: qubit level 0 = excited (sigma_z=+1), level 1 = ground; field starts in Fock |n>\n";
        os << "# convention: time axis is gamma*t\n";
    }
}

void run_metadata(std::ostringstream& os, const RunConfig& config) {
    os << "# orthospeed " << kVersion << '\n';
    os << "# mode=" << to_string(config.mode) << '\n';
    model_metadata(os, config);
    os << "# window=0:" << format_real(config.t_max) << " steps=" << config.steps << '\n';
    os << "# threshold=" << format_real(config.events.threshold) << " track=" << metrics::to_string(config.events.track)
       << '\n';
    os << "# event definition: strict interior local minimum of the track, golden-section refined on the model,"
          " kept when below threshold\n";
}

void emit(const std::optional<std::filesystem::path>& path, const std::string& content) {
    if (path) write_atomic(*path, content);
}

std::vector<PlotLine> overlap_lines(const metrics::OverlapSeries& series) {
    std::vector<PlotLine> lines(4);
    const char* labels[] = {"|Sp11|", "|Sp12|", "|Sp21|", "|Sp22|"};
    for (std::size_t c = 0; c < 4; ++c) {
        lines[c].label = labels[c];
        for (const auto& s : series.samples) {
            lines[c].x.push_back(s.t);
            lines[c].y.push_back(s.overlap.abs[c / 2][c % 2]);
        }
    }
    return lines;
}

int run_trajectory_mode(const RunConfig& config, std::ostream& out) {
    const auto grid = metrics::TimeGrid::uniform(config.t_max, config.steps);
    const auto series = metrics::run_trajectory(config.model, grid);
    const auto events = metrics::detect_events(series, config.events.threshold, config.events.track);
    const auto speed = metrics::speed_metrics(events, grid.t_end());

    if (config.mode == Mode::Metrics) {
        emit(config.out, events_csv(series, config, events, speed));
    } else {
        emit(config.out, series_csv(series, config, events, speed));
        if (config.plot)
            write_atomic(*config.plot, render_svg(to_string(config.mode) + " overlap", config.model.model == Model::Classical ? "t" : "gamma t",
                                                  overlap_lines(series)));
    }
    out << summary_line(speed) << '\n';
    return static_cast<int>(ExitCode::Ok);
}

int run_sweep_mode(const RunConfig& config, std::ostream& out) {
    metrics::SweepSpec spec;
    spec.base = config.model;
    spec.parameter = config.sweep_parameter;
    spec.values = config.sweep_values;
    spec.t_end = config.t_max;
    spec.steps = config.steps;
    spec.events = config.events;
    spec.jobs = config.jobs;
    const auto result = metrics::sweep(spec);
    emit(config.out, sweep_csv(result, config));
    if (config.plot) {
        PlotLine line{"events_per_unit_time", result.values, {}};
        for (const auto& m : result.metrics) line.y.push_back(m.events_per_unit_time);
        write_atomic(*config.plot, render_svg("sweep " + result.parameter, result.parameter, {line}));
    }
    out << "points=" << result.values.size() << " argmax_" << result.parameter << '='
        << format_real(result.values[result.argmax])
        << " max_events_per_unit_time=" << format_real(result.metrics[result.argmax].events_per_unit_time) << '\n';
    return static_cast<int>(ExitCode::Ok);
}

int run_compare_mode(const RunConfig& config, std::ostream& out) {
    const auto rows = compare_rows(config);
    emit(config.out, compare_csv(rows, config));
    double max_dev = 0.0, max_res = 0.0;
    for (const auto& r : rows) {
        max_dev = std::max(max_dev, r.deviation);
        max_res = std::max(max_res, r.residual);
    }
    if (config.plot) {
        PlotLine dev{"deviation", {}, {}}, res{"residual", {}, {}};
        for (const auto& r : rows) {
            dev.x.push_back(r.t);
            dev.y.push_back(r.deviation);
            res.x.push_back(r.t);
            res.y.push_back(r.residual);
        }
        write_atomic(*config.plot, render_svg("printed form vs block propagation", "gamma t", {dev, res}));
    }
    out << "samples=" << rows.size() << " max_deviation=" << format_real(max_dev)
        << " max_residual=" << format_real(max_res) << '\n';
    return static_cast<int>(ExitCode::Ok);
}

}  // namespace

std::string to_string(Mode mode) {
    switch (mode) {
        case Mode::Classical: return "classical";
        case Mode::Jc: return "jc";
        case Mode::Sweep: return "sweep";
        case Mode::Compare: return "compare";
        case Mode::Metrics: return "metrics";
    }
    return "?";
}

std::string format_real(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.14e", value);
    return buf;
}

double parse_angle(const std::string& token) {
    if (token.size() >= 2 && token.compare(token.size() - 2, 2, "pi") == 0) {
        const std::string factor = token.substr(0, token.size() - 2);
        double scale = 1.0;
        if (factor == "-") scale = -1.0;
        else if (!factor.empty() && factor != "+") scale = parse_real(factor, "angle");
        return scale * std::numbers::pi;
    }
    return parse_real(token, "angle");
}

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Qubit orthogonality-speed simulator", args.empty() ? "orthospeed" : args.front()};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    struct Raw {
        std::string bloch = "1,0,0";
        double tmax = 0.0;
        int steps = 0;
        double threshold = metrics::kDefaultThreshold;
        std::string track = "sp11";
        std::string out;
        std::string plot;
        std::uint64_t seed = 0;
        std::string alpha;
        std::string law = "mixture";
        bool oracle = false;
        double eta = 0.05;
        double detuning = 2.0;
        double gamma = 1.0;
        int photons = 10;
        int nmax = 0;
        bool paper_mode = false;
        std::string model;
        std::string param;
        std::string range;
        unsigned jobs = 0;
    } raw;

    std::vector<CLI::Option*> tmax_opts, steps_opts, seed_opts, nmax_opts;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--bloch", raw.bloch, "initial Bloch vector x,y,z or 'random' (uses --seed)");
        tmax_opts.push_back(sub->add_option("--tmax", raw.tmax, "end of the time window"));
        steps_opts.push_back(sub->add_option("--steps", raw.steps, "number of time steps (samples = steps + 1)"));
        sub->add_option("--threshold", raw.threshold, "orthogonality threshold in (0, 0.5)");
        sub->add_option("--track", raw.track, "sp11|sp12|sp21|sp22|fidelity");
        sub->add_option("--out", raw.out, "output CSV path");
        sub->add_option("--plot", raw.plot, "output SVG path");
        seed_opts.push_back(sub->add_option("--seed", raw.seed, "seed for randomized inputs"));
    };
    auto classical_flags = [&](CLI::App* sub) {
        sub->add_option("--alpha", raw.alpha, "field components a1,a2,a3 (pi suffix accepted)");
        sub->add_option("--law", raw.law, "mixture|product");
    };
    auto jc_flags = [&](CLI::App* sub) {
        sub->add_option("--eta", raw.eta, "coupling eta (lambda = eta * gamma)");
        sub->add_option("--detuning", raw.detuning, "detuning Delta/gamma");
        sub->add_option("--gamma", raw.gamma, "inverse-time scale gamma");
        sub->add_option("--photons", raw.photons, "initial Fock number n");
        nmax_opts.push_back(sub->add_option("--nmax", raw.nmax, "Fock truncation for the oracle (default n+3)"));
    };

    auto* classical_cmd = app.add_subcommand("classical", "qubit under a classical three-axis drive");
    common(classical_cmd);
    classical_flags(classical_cmd);
    classical_cmd->add_flag("--oracle", raw.oracle, "use the matrix channel instead of the closed form");

    auto* jc_cmd = app.add_subcommand("jc", "qubit coupled to a cavity mode in a Fock state");
    common(jc_cmd);
    jc_flags(jc_cmd);
    jc_cmd->add_flag("--oracle", raw.oracle, "use the full truncated-Fock oracle");
    jc_cmd->add_flag("--paper-mode", raw.paper_mode, "append the printed closed-form components as extra columns");

    auto* sweep_cmd = app.add_subcommand("sweep", "speed metrics across a parameter range");
    common(sweep_cmd);
    classical_flags(sweep_cmd);
    jc_flags(sweep_cmd);
    sweep_cmd->add_option("--model", raw.model, "classical|jc")->required();
    sweep_cmd->add_option("--param", raw.param, "parameter to sweep")->required();
    sweep_cmd->add_option("--range", raw.range, "start:stop:count")->required();
    sweep_cmd->add_option("--jobs", raw.jobs, "worker threads (0 = hardware concurrency)");
    sweep_cmd->add_flag("--oracle", raw.oracle, "use the oracle engine of the model");

    auto* compare_cmd = app.add_subcommand("compare", "printed JC closed form vs block propagation");
    common(compare_cmd);
    jc_flags(compare_cmd);

    auto* metrics_cmd = app.add_subcommand("metrics", "orthogonality events of one run");
    common(metrics_cmd);
    classical_flags(metrics_cmd);
    jc_flags(metrics_cmd);
    metrics_cmd->add_option("--model", raw.model, "classical|jc")->required();
    metrics_cmd->add_flag("--oracle", raw.oracle, "use the oracle engine of the model");

    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream os, es;
        app.exit(e, os, es);
        throw HelpRequested{os.str()};
    } catch (const CLI::CallForAllHelp& e) {
        std::ostringstream os, es;
        app.exit(e, os, es);
        throw HelpRequested{os.str()};
    } catch (const CLI::CallForVersion& e) {
        throw HelpRequested{std::string(kVersion) + "\n"};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig config;
    if (classical_cmd->parsed()) config.mode = Mode::Classical;
    else if (jc_cmd->parsed()) config.mode = Mode::Jc;
    else if (sweep_cmd->parsed()) config.mode = Mode::Sweep;
    else if (compare_cmd->parsed()) config.mode = Mode::Compare;
    else config.mode = Mode::Metrics;

    auto given = [](const std::vector<CLI::Option*>& opts) {
        return std::any_of(opts.begin(), opts.end(), [](const CLI::Option* o) { return o->count() > 0; });
    };

    Model model = Model::Classical;
    if (config.mode == Mode::Jc || config.mode == Mode::Compare) {
        model = Model::JaynesCummings;
    } else if (config.mode == Mode::Sweep || config.mode == Mode::Metrics) {
        if (raw.model == "classical") model = Model::Classical;
        else if (raw.model == "jc") model = Model::JaynesCummings;
        else throw UsageError("--model must be classical or jc");
    }
    config.model.model = model;

    if (given(seed_opts)) config.seed = raw.seed;
    if (raw.bloch == "random") {
        if (!config.seed) throw UsageError("--bloch random requires --seed");
        config.model.initial = random_bloch(*config.seed);
    } else {
        const auto parts = split(raw.bloch, ',');
        if (parts.size() != 3) throw UsageError("--bloch expects three comma-separated components");
        config.model.initial = {parse_real(parts[0], "--bloch"), parse_real(parts[1], "--bloch"),
                                parse_real(parts[2], "--bloch")};
    }
    if (config.model.initial.norm() > 1.0 + qubit::kPurityTolerance)
        throw UsageError("--bloch vector lies outside the Bloch ball");

    if (model == Model::Classical) {
        if (raw.alpha.empty()) {
            config.model.field = {std::numbers::pi / 2, std::numbers::pi / 2, std::numbers::pi / 2};
        } else {
            const auto parts = split(raw.alpha, ',');
            if (parts.size() != 3) throw UsageError("--alpha expects three comma-separated components");
            config.model.field = {parse_angle(parts[0]), parse_angle(parts[1]), parse_angle(parts[2])};
        }
        if (raw.law == "mixture") config.model.law = classical::CompositionLaw::Mixture;
        else if (raw.law == "product") config.model.law = classical::CompositionLaw::Product;
        else throw UsageError("--law must be mixture or product");
    } else {
        config.model.jc = {raw.eta, raw.detuning, raw.gamma, raw.photons};
        try {
            jc::validate(config.model.jc);
        } catch (const ContractViolation& e) {
            throw UsageError(e.what());
        }
        if (given(nmax_opts)) {
            if (raw.nmax < raw.photons + 2) throw UsageError("--nmax must be at least photons + 2");
            config.model.oracle_nmax = raw.nmax;
        }
    }
    config.model.use_oracle = raw.oracle;
    config.paper_mode = raw.paper_mode;

    config.t_max = given(tmax_opts) ? raw.tmax : (model == Model::Classical ? 6.0 : 50.0);
    config.steps = given(steps_opts) ? raw.steps : (model == Model::Classical ? 2000 : 5000);
    if (!(config.t_max > 0.0) || !std::isfinite(config.t_max)) throw UsageError("--tmax must be positive");
    if (config.steps < 1) throw UsageError("--steps must be at least 1");

    if (!(raw.threshold > 0.0 && raw.threshold < 0.5)) throw UsageError("--threshold must lie in (0, 0.5)");
    config.events.threshold = raw.threshold;
    try {
        config.events.track = metrics::parse_track(raw.track);
    } catch (const ArgumentError& e) {
        throw UsageError(e.what());
    }

    if (!raw.out.empty()) config.out = raw.out;
    if (!raw.plot.empty()) config.plot = raw.plot;

    if (config.mode == Mode::Sweep) {
        const auto names = metrics::sweep_parameters(model);
        if (std::find(names.begin(), names.end(), raw.param) == names.end())
            throw UsageError("--param '" + raw.param + "' is not a " + metrics::to_string(model) + " parameter");
        const auto parts = split(raw.range, ':');
        if (parts.size() != 3) throw UsageError("--range expects start:stop:count");
        const double start = parse_angle(parts[0]);
        const double stop = parse_angle(parts[1]);
        int count = 0;
        const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), count);
        if (ec != std::errc{} || ptr != parts[2].data() + parts[2].size() || count < 1)
            throw UsageError("--range count must be a positive integer");
        config.sweep_parameter = raw.param;
        config.sweep_values = metrics::linspace(start, stop, count);
        config.jobs = raw.jobs;
        for (double v : config.sweep_values) {
            try {
                const auto point = metrics::with_parameter(config.model, raw.param, v);
                if (model == Model::JaynesCummings) jc::validate(point.jc);
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("--range: ") + e.what());
            }
        }
    }
    return config;
}

std::string series_csv(const metrics::OverlapSeries& series, const RunConfig& config,
                       const std::vector<metrics::OrthogonalityEvent>& events, const metrics::SpeedMetrics& speed) {
    std::ostringstream os;
    run_metadata(os, config);
    os << "# " << summary_line(speed) << '\n';
    for (const auto& e : events) os << "# event t=" << format_real(e.t_event) << " value=" << format_real(e.min_value) << '\n';

    const bool paper = config.paper_mode && config.model.model == Model::JaynesCummings;
    os << kSeriesHeader;
    if (paper) os << ",paper_sx,paper_sy,paper_sz,paper_residual";
    os << '\n';
    for (const auto& s : series.samples) {
        os << format_real(s.t) << ',' << format_real(s.bloch.sx) << ',' << format_real(s.bloch.sy) << ','
           << format_real(s.bloch.sz) << ',' << format_real(s.purity) << ',' << format_real(s.fidelity);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) os << ',' << format_real(s.overlap.abs[i][j]);
        os << ',' << (s.degenerate ? 1 : 0);
        if (paper) {
            const auto p = jc::paper_bloch_jc(config.model.initial, config.model.jc, s.t);
            os << ',' << format_real(p.bloch.sx) << ',' << format_real(p.bloch.sy) << ',' << format_real(p.bloch.sz)
               << ',' << format_real(p.residual);
        }
        os << '\n';
    }
    return os.str();
}

std::string events_csv(const metrics::OverlapSeries&, const RunConfig& config,
                       const std::vector<metrics::OrthogonalityEvent>& events, const metrics::SpeedMetrics& speed) {
    std::ostringstream os;
    run_metadata(os, config);
    os << "# " << summary_line(speed) << '\n';
    os << "index,t_event,min_value,track\n";
    for (std::size_t i = 0; i < events.size(); ++i)
        os << i << ',' << format_real(events[i].t_event) << ',' << format_real(events[i].min_value) << ','
           << metrics::to_string(events[i].channel) << '\n';
    return os.str();
}

std::string sweep_csv(const metrics::SweepResult& result, const RunConfig& config) {
    std::ostringstream os;
    run_metadata(os, config);
    os << "# param=" << result.parameter << '\n';
    os << "# argmax=" << format_real(result.values[result.argmax]) << " argmin=" << format_real(result.values[result.argmin])
       << '\n';
    os << "value,event_count,events_per_unit_time,first_orthogonality_time\n";
    for (std::size_t i = 0; i < result.values.size(); ++i) {
        const auto& m = result.metrics[i];
        os << format_real(result.values[i]) << ',' << m.event_count << ',' << format_real(m.events_per_unit_time) << ','
           << format_optional(m.first_orthogonality_time) << '\n';
    }
    return os.str();
}

std::vector<CompareRow> compare_rows(const RunConfig& config) {
    const auto grid = metrics::TimeGrid::uniform(config.t_max, config.steps);
    std::vector<CompareRow> rows;
    rows.reserve(grid.size());
    for (double t : grid.values()) {
        CompareRow row;
        row.t = t;
        row.block = jc::evolve_qubit_jc(config.model.initial, config.model.jc, t);
        const auto printed = jc::paper_bloch_jc(config.model.initial, config.model.jc, t);
        row.paper = printed.bloch;
        row.residual = printed.residual;
        row.deviation = std::max({std::abs(row.block.sx - row.paper.sx), std::abs(row.block.sy - row.paper.sy),
                                  std::abs(row.block.sz - row.paper.sz)});
        rows.push_back(row);
    }
    return rows;
}

std::string compare_csv(const std::vector<CompareRow>& rows, const RunConfig& config) {
    std::ostringstream os;
    os << "# orthospeed " << kVersion << '\n';
    os << "# mode=compare\n";
    model_metadata(os, config);
    os << "# window=0:" << format_real(config.t_max) << " steps=" << config.steps << '\n';
    os << "# printed form evaluated verbatim in complex arithmetic with Delta read as Delta/gamma;"
          " residual = max |imaginary part|\n";
    os << "t,sx,sy,sz,paper_sx,paper_sy,paper_sz,deviation,residual\n";
    for (const auto& r : rows)
        os << format_real(r.t) << ',' << format_real(r.block.sx) << ',' << format_real(r.block.sy) << ','
           << format_real(r.block.sz) << ',' << format_real(r.paper.sx) << ',' << format_real(r.paper.sy) << ','
           << format_real(r.paper.sz) << ',' << format_real(r.deviation) << ',' << format_real(r.residual) << '\n';
    return os.str();
}

std::string render_svg(const std::string& title, const std::string& x_label, const std::vector<PlotLine>& lines) {
    constexpr double width = 800, height = 420, left = 60, right = 20, top = 40, bottom = 50;
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    bool first = true;
    for (const auto& l : lines)
        for (std::size_t i = 0; i < l.x.size() && i < l.y.size(); ++i) {
            if (first) {
                x0 = x1 = l.x[i];
                y0 = y1 = l.y[i];
                first = false;
            }
            x0 = std::min(x0, l.x[i]);
            x1 = std::max(x1, l.x[i]);
            y0 = std::min(y0, l.y[i]);
            y1 = std::max(y1, l.y[i]);
        }
    y0 = std::min(y0, 0.0);
    if (x1 <= x0) x1 = x0 + 1;
    if (y1 <= y0) y1 = y0 + 1;
    auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * (width - left - right); };
    auto py = [&](double y) { return height - bottom - (y - y0) / (y1 - y0) * (height - top - bottom); };

    std::ostringstream os;
    char buf[128];
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
       << title << "</text>\n";
    std::snprintf(buf, sizeof buf, "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n", left,
                  height - bottom, width - right, height - bottom);
    os << buf;
    std::snprintf(buf, sizeof buf, "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n", left, top,
                  left, height - bottom);
    os << buf;
    for (int tick = 0; tick <= 4; ++tick) {
        const double xv = x0 + (x1 - x0) * tick / 4.0;
        const double yv = y0 + (y1 - y0) * tick / 4.0;
        std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\" font-size=\"11\" text-anchor=\"middle\">%.3g</text>\n",
                      px(xv), height - bottom + 16, xv);
        os << buf;
        std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\" font-size=\"11\" text-anchor=\"end\">%.3g</text>\n",
                      left - 6, py(yv) + 4, yv);
        os << buf;
    }
    os << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << x_label << "</text>\n";
    for (std::size_t c = 0; c < lines.size(); ++c) {
        const auto& l = lines[c];
        const char* color = colors[c % std::size(colors)];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\" points=\"";
        for (std::size_t i = 0; i < l.x.size() && i < l.y.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(l.x[i]), py(l.y[i]));
            os << buf;
        }
        os << "\"/>\n";
        std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" fill=\"%s\">", width - right - 120,
                      top + 14.0 * (c + 1), color);
        os << buf << l.label << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw IoFailure("cannot open " + tmp.string() + " for writing");
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        f.flush();
        if (!f) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw IoFailure("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw IoFailure("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.mode) {
            case Mode::Classical:
            case Mode::Jc:
            case Mode::Metrics: return run_trajectory_mode(config, out);
            case Mode::Sweep: return run_sweep_mode(config, out);
            case Mode::Compare: return run_compare_mode(config, out);
        }
    } catch (const IoFailure& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::IoFailure);
    } catch (const NumericalFailure& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::NumericalFailure);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::InvalidArguments);
    }
    return static_cast<int>(ExitCode::Ok);
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    try {
        config = parse_args(args);
    } catch (const HelpRequested& help) {
        out << help.text;
        return static_cast<int>(ExitCode::Ok);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::InvalidArguments);
    }
    return run(config, out, err);
}

}  // namespace orthospeed::cli
