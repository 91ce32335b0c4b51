// polyvdw: polynomial progression Ramsey toolkit CLI.
//
// Subcommands wrap the library one-to-one: enumerate, analyze, count-pairs,
// moment, fourier-check, vdw-search, scaling-study, pipeline.  Every command
// writes its full report to --out (or stdout) and can diff it against a
// golden file; all randomness is derived from --seed.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polyvdw/coloring.hpp"
#include "polyvdw/counting.hpp"
#include "polyvdw/fourier.hpp"
#include "polyvdw/harness.hpp"
#include "polyvdw/pattern.hpp"
#include "polyvdw/search.hpp"
#include "polyvdw/serialize.hpp"
#include "polyvdw/util.hpp"

namespace {

struct GlobalOptions {
    uint64_t seed = 0;
    std::string format = "json";
    std::string outPath;
    std::string goldenPath;
};

std::filesystem::path resolve_out_path(const std::string& raw) {
    std::filesystem::path path(raw);
    if (const char* dir = std::getenv(polyvdw::kOutputDirEnvVar); dir && *dir && path.is_relative())
        path = std::filesystem::path(dir) / path;
    return path;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& payload) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

// Deliver the report: write/print, then hold it against the golden file if
// one was requested (writes the golden on first use, exits 2 on mismatch).
int deliver(const GlobalOptions& global, const std::string& payload) {
    if (!global.outPath.empty()) {
        write_file(resolve_out_path(global.outPath), payload);
    } else {
        std::cout << payload;
    }
    if (!global.goldenPath.empty()) {
        std::filesystem::path golden = resolve_out_path(global.goldenPath);
        if (std::filesystem::exists(golden)) {
            if (read_file(golden) != payload) {
                std::cerr << "golden mismatch against " << golden << "\n";
                return 2;
            }
        } else {
            write_file(golden, payload);
        }
    }
    return 0;
}

std::vector<int64_t> load_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open set file " + path);
    std::vector<int64_t> values;
    int64_t v;
    while (in >> v) values.push_back(v);
    return polyvdw::normalize_set(std::move(values));
}

std::vector<int64_t> parse_grid(const std::string& csv) {
    std::vector<int64_t> grid;
    std::istringstream in(csv);
    std::string token;
    while (std::getline(in, token, ',')) grid.push_back(std::stoll(token));
    return grid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial progression Ramsey toolkit"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--seed", global.seed, "seed for all randomized inputs")->capture_default_str();
    app.add_option("--format", global.format, "report format: csv|json")->capture_default_str();
    app.add_option("--out", global.outPath, "write the report to this path instead of stdout");
    app.add_option("--golden", global.goldenPath,
                   "compare the report against this golden file (created on first run); "
                   "exits 2 on mismatch");

    int exitCode = 0;

    // -- enumerate ---------------------------------------------------------
    auto* enumerateCmd = app.add_subcommand("enumerate", "list pattern instances, one JSON per line");
    struct {
        std::string polys;
        int64_t groundSize = 0;
        std::string xdom = "any";
        uint64_t limit = UINT64_MAX;
    } enumOpt;
    enumerateCmd->add_option("--polys", enumOpt.polys, "family spec, ';'-separated")->required();
    enumerateCmd->add_option("--N", enumOpt.groundSize, "ground-set size")->required();
    enumerateCmd->add_option("--xdom", enumOpt.xdom, "x domain: any|nonneg|pos");
    enumerateCmd->add_option("--limit", enumOpt.limit, "stop after this many instances");
    enumerateCmd->callback([&] {
        auto family = polyvdw::PatternFamily::parse(enumOpt.polys);
        auto dom = polyvdw::parse_xdomain(enumOpt.xdom);
        std::ostringstream out;
        uint64_t emitted = 0;
        polyvdw::for_each_instance(family, enumOpt.groundSize, dom,
                                   [&](const polyvdw::PatternInstance& inst) {
                                       out << polyvdw::to_json(inst) << "\n";
                                       return ++emitted < enumOpt.limit;
                                   });
        exitCode = deliver(global, out.str());
    });

    // -- analyze -----------------------------------------------------------
    auto* analyzeCmd = app.add_subcommand("analyze", "scan a coloring and report densities");
    struct {
        std::string polys;
        int64_t groundSize = 0;
        std::string coloring;
        std::string xdom = "any";
        int64_t minWindow = 1;
    } analyzeOpt;
    analyzeCmd->add_option("--polys", analyzeOpt.polys)->required();
    analyzeCmd->add_option("--N", analyzeOpt.groundSize)->required();
    analyzeCmd->add_option("--coloring", analyzeOpt.coloring,
                           "coloring file or random:<colors>[,<seed>]")->required();
    analyzeCmd->add_option("--xdom", analyzeOpt.xdom);
    analyzeCmd->add_option("--lmin", analyzeOpt.minWindow, "minimum window length for densities");
    analyzeCmd->callback([&] {
        auto family = polyvdw::PatternFamily::parse(analyzeOpt.polys);
        auto dom = polyvdw::parse_xdomain(analyzeOpt.xdom);
        auto coloring =
            polyvdw::load_coloring_spec(analyzeOpt.coloring, analyzeOpt.groundSize, global.seed);
        auto scan = polyvdw::scan_coloring(coloring, family, dom);
        auto density = polyvdw::max_window_density(coloring, analyzeOpt.minWindow);
        exitCode = deliver(global, polyvdw::analyze_json(scan, density));
    });

    // -- count-pairs -------------------------------------------------------
    auto* pairsCmd = app.add_subcommand("count-pairs", "exact pair count #{(x,y): x+f(y) in A}");
    struct {
        std::string setPath;
        std::string f;
        int64_t n = 1;
        bool windowed = false;
    } pairsOpt;
    pairsCmd->add_option("--set", pairsOpt.setPath, "file with one integer per line")->required();
    pairsCmd->add_option("--f", pairsOpt.f, "polynomial spec")->required();
    pairsCmd->add_option("--n", pairsOpt.n)->required();
    pairsCmd->add_flag("--windowed", pairsOpt.windowed, "also report the window decomposition");
    pairsCmd->callback([&] {
        auto set = load_set_file(pairsOpt.setPath);
        auto f = polyvdw::IntPolynomial::parse(pairsOpt.f);
        uint64_t pairs = polyvdw::pair_count(set, f, pairsOpt.n);
        if (pairsOpt.windowed) {
            auto windowed = polyvdw::pair_count_windowed(set, f, pairsOpt.n);
            exitCode = deliver(global, polyvdw::pair_count_windowed_json(pairs, windowed));
        } else {
            exitCode = deliver(global, polyvdw::pair_count_json(pairs));
        }
    });

    // -- moment ------------------------------------------------------------
    auto* momentCmd = app.add_subcommand("moment", "exact exponential-sum moment as a solution count");
    struct {
        std::string f;
        int64_t n = 1;
        int s = 2;
        bool bruteforce = false;
    } momentOpt;
    momentCmd->add_option("--f", momentOpt.f)->required();
    momentCmd->add_option("--n", momentOpt.n)->required();
    momentCmd->add_option("--s", momentOpt.s)->required();
    momentCmd->add_flag("--bruteforce", momentOpt.bruteforce, "use the direct tuple enumeration");
    momentCmd->callback([&] {
        auto f = polyvdw::IntPolynomial::parse(momentOpt.f);
        polyvdw::CountingQuery query{f, momentOpt.n, momentOpt.s};
        polyvdw::uint128 moment = momentOpt.bruteforce ? polyvdw::moment_count_bruteforce(query)
                                                       : polyvdw::moment_count(query);
        exitCode = deliver(global, polyvdw::moment_json(f, momentOpt.n, momentOpt.s, moment,
                                                        momentOpt.bruteforce ? "bruteforce"
                                                                             : "histogram"));
    });

    // -- fourier-check -----------------------------------------------------
    auto* fourierCmd = app.add_subcommand("fourier-check", "verify the Fourier inequality chain");
    struct {
        std::string setPath;
        std::string f;
        int64_t n = 1;
        int s = 8;
    } fourierOpt;
    fourierCmd->add_option("--set", fourierOpt.setPath)->required();
    fourierCmd->add_option("--f", fourierOpt.f)->required();
    fourierCmd->add_option("--n", fourierOpt.n)->required();
    fourierCmd->add_option("--s", fourierOpt.s)->required();
    fourierCmd->callback([&] {
        auto set = load_set_file(fourierOpt.setPath);
        auto f = polyvdw::IntPolynomial::parse(fourierOpt.f);
        auto report = polyvdw::holder_chain_report(set, f, fourierOpt.n, fourierOpt.s);
        exitCode = deliver(global, polyvdw::to_json(report));
    });

    // -- vdw-search --------------------------------------------------------
    auto* searchCmd = app.add_subcommand("vdw-search", "exact canonical / monochromatic thresholds");
    struct {
        std::string polys;
        std::string mode = "canonical";
        int32_t colors = 2;
        int64_t cap = polyvdw::kDefaultSearchCap;
        std::string xdom = "any";
        bool degenerateMonoOff = false;
    } searchOpt;
    searchCmd->add_option("--polys", searchOpt.polys)->required();
    searchCmd->add_option("--mode", searchOpt.mode, "canonical|mono")->capture_default_str();
    searchCmd->add_option("--colors", searchOpt.colors, "color count for mono mode")
        ->capture_default_str();
    searchCmd->add_option("--cap", searchOpt.cap, "hard search wall")->capture_default_str();
    searchCmd->add_option("--xdom", searchOpt.xdom)->capture_default_str();
    searchCmd->add_flag("--no-degenerate-mono", searchOpt.degenerateMonoOff,
                        "degenerate instances never count as monochromatic");
    searchCmd->callback([&] {
        auto family = polyvdw::PatternFamily::parse(searchOpt.polys);
        auto dom = polyvdw::parse_xdomain(searchOpt.xdom);
        bool degMono = !searchOpt.degenerateMonoOff;
        polyvdw::SearchResult result;
        polyvdw::SearchMode mode;
        if (searchOpt.mode == "canonical") {
            mode = polyvdw::SearchMode::Canonical;
            result = polyvdw::canonical_vdw_number(family, dom, searchOpt.cap, degMono);
        } else if (searchOpt.mode == "mono") {
            mode = polyvdw::SearchMode::MonoOnly;
            result = polyvdw::mono_vdw_number(family, searchOpt.colors, dom, searchOpt.cap, degMono);
        } else {
            throw CLI::ValidationError("--mode must be canonical or mono");
        }
        exitCode = deliver(global, polyvdw::search_result_json(result, mode));
    });

    // -- scaling-study -----------------------------------------------------
    auto* scalingCmd = app.add_subcommand("scaling-study", "moment scaling over an n grid");
    struct {
        std::string f;
        int s = 8;
        std::string grid;
    } scalingOpt;
    scalingCmd->add_option("--f", scalingOpt.f)->required();
    scalingCmd->add_option("--s", scalingOpt.s)->required();
    scalingCmd->add_option("--n-grid", scalingOpt.grid, "comma-separated ascending n values")
        ->required();
    scalingCmd->callback([&] {
        auto f = polyvdw::IntPolynomial::parse(scalingOpt.f);
        auto grid = parse_grid(scalingOpt.grid);
        auto rows = polyvdw::scaling_study(f, scalingOpt.s, grid);
        polyvdw::Table table = polyvdw::scaling_table(rows);
        // scaling reports default to CSV
        std::string format = global.format;
        if (app.count("--format") == 0) format = "csv";
        std::string payload;
        if (polyvdw::parse_format(format) == polyvdw::ReportFormat::Csv) {
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
            std::ostringstream out;
            out << "[\n";
            for (size_t r = 0; r < table.rows.size(); ++r) {
                out << "  {";
                for (size_t i = 0; i < table.columns.size(); ++i)
                    out << (i ? ", " : "") << '"' << table.columns[i] << "\": \"" << table.rows[r][i]
                        << '"';
                out << (r + 1 < table.rows.size() ? "},\n" : "}\n");
            }
            out << "]\n";
            payload = out.str();
        }
        exitCode = deliver(global, payload);
    });

    // -- pipeline ----------------------------------------------------------
    auto* pipelineCmd = app.add_subcommand("pipeline", "density + scan + union bound on one coloring");
    struct {
        std::string polys;
        int64_t groundSize = 0;
        std::string coloring;
        int64_t minWindow = 1;
        std::string xdom = "any";
    } pipelineOpt;
    pipelineCmd->add_option("--polys", pipelineOpt.polys)->required();
    pipelineCmd->add_option("--N", pipelineOpt.groundSize)->required();
    pipelineCmd->add_option("--coloring", pipelineOpt.coloring)->required();
    pipelineCmd->add_option("--lmin", pipelineOpt.minWindow)->capture_default_str();
    pipelineCmd->add_option("--xdom", pipelineOpt.xdom)->capture_default_str();
    pipelineCmd->callback([&] {
        auto family = polyvdw::PatternFamily::parse(pipelineOpt.polys);
        auto dom = polyvdw::parse_xdomain(pipelineOpt.xdom);
        auto coloring =
            polyvdw::load_coloring_spec(pipelineOpt.coloring, pipelineOpt.groundSize, global.seed);
        auto report = polyvdw::proof_pipeline(coloring, family, pipelineOpt.minWindow, dom);
        exitCode = deliver(global, polyvdw::to_json(report));
    });

    // let --seed/--format/--out/--golden appear after the subcommand too
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exitCode;
}
