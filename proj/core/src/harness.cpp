#include "polyvdw/harness.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace polyvdw {

ReportFormat parse_format(std::string_view name) {
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json") return ReportFormat::Json;
    throw std::invalid_argument("unknown report format '" + std::string(name) + "' (want csv|json)");
}

namespace {

constexpr int64_t kMaxScalingRange = int64_t{1} << 26;
constexpr uint64_t kMaxScalingMass = uint64_t{1} << 53;

// The convolution cost model: the folded histogram must fit in memory and
// its mass must stay within the FFT-verifiable window.
bool scaling_feasible(const IntPolynomial& f, int64_t n, int s) {
    const int folds = s / 2;
    int64_t lo = f(1), hi = f(1);
    for (int64_t y = 2; y <= n; ++y) {
        int64_t v = f(y);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    double range = (static_cast<double>(hi) - static_cast<double>(lo)) * folds + 1;
    if (range > static_cast<double>(kMaxScalingRange)) return false;
    double mass = std::pow(static_cast<double>(n), folds);
    return mass <= static_cast<double>(kMaxScalingMass);
}

}  // namespace

std::vector<ScalingRow> scaling_study(const IntPolynomial& f, int s, std::span<const int64_t> nGrid) {
    if (s < 2 || s % 2 != 0) throw std::invalid_argument("scaling_study: s must be even and >= 2");
    if (nGrid.empty()) throw std::invalid_argument("scaling_study: empty n grid");
    for (size_t i = 1; i < nGrid.size(); ++i)
        if (nGrid[i] <= nGrid[i - 1])
            throw std::invalid_argument("scaling_study: n grid must be ascending");
    const int d = f.degree();
    if (d < 1) throw std::invalid_argument("scaling_study: f must be nonconstant");

    std::vector<ScalingRow> rows;
    rows.reserve(nGrid.size());
    for (int64_t n : nGrid) {
        ScalingRow row;
        row.n = n;
        if (!scaling_feasible(f, n, s)) {
            row.skipped = true;
            rows.push_back(row);
            continue;
        }
        row.moment = moment_count(CountingQuery{f, n, s});
        long double scale = std::pow(static_cast<long double>(n), static_cast<long double>(s - d));
        row.ratio = static_cast<double>(static_cast<long double>(row.moment) / scale);
        rows.push_back(row);
    }
    return rows;
}

PipelineReport proof_pipeline(const Coloring& coloring, const PatternFamily& family,
                              int64_t minWindow, XDomain dom) {
    if (family.size() < 2) throw std::invalid_argument("proof_pipeline: needs k >= 2");
    PipelineReport report;
    report.density = max_window_density(coloring, minWindow);
    report.scan = scan_coloring(coloring, family, dom);
    report.unionBound = non_rainbow_upper_bound(coloring, family, dom);
    report.verdict.rainbowExists = report.scan.rainbow > 0;
    report.verdict.nonRainbowLessThanTotal = report.scan.nonRainbow < report.scan.total;
    report.verdict.monoWitnessPresent = report.scan.monoWitness.has_value();
    return report;
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

Table scaling_table(std::span<const ScalingRow> rows) {
    Table table;
    table.columns = {"n", "moment", "ratio", "status"};
    for (const auto& row : rows) {
        if (row.skipped) {
            table.rows.push_back({std::to_string(row.n), "", "", "skipped"});
        } else {
            table.rows.push_back({std::to_string(row.n), to_decimal(row.moment),
                                  format_double(row.ratio), "ok"});
        }
    }
    return table;
}

std::filesystem::path emit_report(const ExperimentConfig& config, const Table& table) {
    if (config.rng != "splitmix64")
        throw std::invalid_argument("emit_report: unknown rng '" + config.rng + "'");
    if (config.outPath.empty()) throw std::invalid_argument("emit_report: output path required");

    std::filesystem::path path(config.outPath);
    if (const char* dir = std::getenv(kOutputDirEnvVar); dir && *dir && path.is_relative())
        path = std::filesystem::path(dir) / path;
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }

    std::string payload;
    if (config.format == ReportFormat::Csv) {
        std::ostringstream out;
        for (size_t i = 0; i < table.columns.size(); ++i)
            out << (i ? "," : "") << table.columns[i];
        out << "\n";
        for (const auto& row : table.rows) {
            for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
            out << "\n";
        }
        payload = out.str();
    } else {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (size_t i = 0; i < table.columns.size() && i < row.size(); ++i)
                obj[table.columns[i]] = row[i];
            doc.push_back(std::move(obj));
        }
        payload = doc.dump(2);
        payload += "\n";
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_report: cannot open " + path.string());
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    out.flush();
    if (!out) throw std::runtime_error("emit_report: write failed for " + path.string());
    return path;
}

Coloring load_coloring_spec(const std::string& spec, int64_t groundSize, uint64_t defaultSeed) {
    if (spec.rfind("random:", 0) == 0) {
        std::string rest = spec.substr(7);
        uint64_t seed = defaultSeed;
        size_t comma = rest.find(',');
        if (comma != std::string::npos) {
            seed = std::stoull(rest.substr(comma + 1));
            rest = rest.substr(0, comma);
        }
        int64_t colors = std::stoll(rest);
        if (colors < 1 || colors > INT32_MAX)
            throw std::invalid_argument("random coloring: bad color count");
        return Coloring::random(groundSize, static_cast<int32_t>(colors), seed);
    }
    std::ifstream in(spec);
    if (!in) throw std::runtime_error("cannot open coloring file " + spec);
    std::vector<int64_t> ids;
    std::string line;
    while (std::getline(in, line)) {
        std::string token;
        std::istringstream ls(line);
        while (std::getline(ls, token, ',')) {
            std::istringstream ts(token);
            int64_t id;
            if (ts >> id) ids.push_back(id);
        }
    }
    if (static_cast<int64_t>(ids.size()) != groundSize)
        throw std::invalid_argument("coloring file " + spec + " has " + std::to_string(ids.size()) +
                                    " entries, expected " + std::to_string(groundSize));
    return normalize_labels(ids);
}

}  // namespace polyvdw
