#pragma once

// Command-line front end: classical | jc | sweep | compare | metrics.
//
// Exit codes: 0 success, 1 invalid arguments, 2 numerical failure, 3 I/O failure.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "orthospeed/errors.hpp"
#include "orthospeed/metrics.hpp"

namespace orthospeed::cli {

inline constexpr const char* kVersion = "1.0.0";

enum class ExitCode : int { Ok = 0, InvalidArguments = 1, NumericalFailure = 2, IoFailure = 3 };

enum class Mode { Classical, Jc, Sweep, Compare, Metrics };

std::string to_string(Mode mode);

struct RunConfig {
    Mode mode = Mode::Classical;
    metrics::ModelConfig model;
    double t_max = 6.0;
    int steps = 2000;
    metrics::EventConfig events;
    std::optional<std::filesystem::path> out;
    std::optional<std::filesystem::path> plot;
    std::optional<std::uint64_t> seed;
    bool paper_mode = false;

    // sweep only
    std::string sweep_parameter;
    std::vector<double> sweep_values;
    unsigned jobs = 0;
};

class UsageError : public ArgumentError {
public:
    explicit UsageError(const std::string& what) : ArgumentError(what) {}
};

/// Thrown by parse_args for --help; carries the rendered help text.
struct HelpRequested {
    std::string text;
};

/// `args` includes the program name. Throws UsageError or HelpRequested.
RunConfig parse_args(const std::vector<std::string>& args);

/// Parses a real, optionally suffixed with `pi` ("0.5pi", "pi", "-2pi").
double parse_angle(const std::string& token);

/// Executes the run and returns the process exit code. The one-line summary
/// goes to `out`; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses and runs; the whole CLI behind main().
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Output formats, exposed for tests.

inline constexpr const char* kSeriesHeader =
    "t,sx,sy,sz,purity,fidelity,abs_sp_11,abs_sp_12,abs_sp_21,abs_sp_22,degenerate";

/// Real in scientific notation with 15 significant digits.
std::string format_real(double value);

std::string series_csv(const metrics::OverlapSeries& series, const RunConfig& config,
                       const std::vector<metrics::OrthogonalityEvent>& events, const metrics::SpeedMetrics& speed);

std::string sweep_csv(const metrics::SweepResult& result, const RunConfig& config);

std::string events_csv(const metrics::OverlapSeries& series, const RunConfig& config,
                       const std::vector<metrics::OrthogonalityEvent>& events, const metrics::SpeedMetrics& speed);

/// Block path vs printed closed form for the JC model.
struct CompareRow {
    double t;
    qubit::BlochVector block;
    qubit::BlochVector paper;
    double deviation;  // max-abs component difference
    double residual;   // imaginary residue of the printed form
};

std::vector<CompareRow> compare_rows(const RunConfig& config);
std::string compare_csv(const std::vector<CompareRow>& rows, const RunConfig& config);

struct PlotLine {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Static SVG line chart.
std::string render_svg(const std::string& title, const std::string& x_label, const std::vector<PlotLine>& lines);

/// Writes via a sibling temp file and rename. Throws IoFailure.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace orthospeed::cli
