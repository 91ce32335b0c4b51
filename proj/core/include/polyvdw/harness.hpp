#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "polyvdw/coloring.hpp"
#include "polyvdw/counting.hpp"
#include "polyvdw/pattern.hpp"

namespace polyvdw {

enum class ReportFormat { Csv, Json };

ReportFormat parse_format(std::string_view name);  // "csv" | "json"

// Name of the environment variable that overrides the output directory for
// relative report paths.
inline constexpr const char* kOutputDirEnvVar = "POLYVDW_OUT_DIR";

struct ExperimentConfig {
    std::string id;
    std::string familySpec;
    std::vector<int64_t> nGrid;
    uint64_t seed = 0;
    double epsilon = 0.0;  // reporting threshold only, never a correctness input
    std::string outPath;
    ReportFormat format = ReportFormat::Csv;
    std::string rng = "splitmix64";  // must name a known generator
};

struct ScalingRow {
    int64_t n = 0;
    bool skipped = false;     // infeasible under the convolution cost model
    uint128 moment = 0;
    double ratio = 0.0;       // moment / n^(s-d)
};

/// Exact moments over an ascending n-grid with the normalized ratio column.
/// Rows that the exact convolution pipeline cannot afford are marked
/// skipped, never dropped.
std::vector<ScalingRow> scaling_study(const IntPolynomial& f, int s, std::span<const int64_t> nGrid);

struct PipelineVerdict {
    bool rainbowExists = false;
    bool nonRainbowLessThanTotal = false;
    bool monoWitnessPresent = false;
};

struct PipelineReport {
    WindowDensity density;
    ScanReport scan;
    uint64_t unionBound = 0;
    PipelineVerdict verdict;
};

/// Runs the full counting pipeline on one coloring: windowed densities,
/// the mono/rainbow scan, and the union bound on non-rainbow instances.
PipelineReport proof_pipeline(const Coloring& coloring, const PatternFamily& family,
                              int64_t minWindow, XDomain dom = XDomain::AnyInteger);

// Simple string table; the unit every report is serialized through.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

Table scaling_table(std::span<const ScalingRow> rows);

/// Writes the table to the config's output path (CSV or JSON), creating
/// parent directories.  Relative paths are redirected under POLYVDW_OUT_DIR
/// when that variable is set.  Byte output is deterministic for a fixed
/// config: fixed column order, fixed formatting, LF line endings.
std::filesystem::path emit_report(const ExperimentConfig& config, const Table& table);

/// Coloring sources accepted by the CLI: "random:<colors>[,<seed>]" or a
/// path to a file holding one color id per line (or one comma-separated
/// line).  File colorings must have exactly groundSize entries.
Coloring load_coloring_spec(const std::string& spec, int64_t groundSize, uint64_t defaultSeed);

std::string format_double(double value);  // fixed "%.12g" formatting

}  // namespace polyvdw
