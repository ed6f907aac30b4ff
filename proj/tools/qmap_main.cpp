#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmap/config.hpp"
#include "qmap/error.hpp"
#include "qmap/metrics.hpp"
#include "qmap/oracle.hpp"
#include "qmap/pipeline.hpp"
#include "qmap/qasm.hpp"

namespace {

struct CommonOpts {
    std::string config_name = "surface17";
    std::string strategy = "qmap";
    std::uint64_t seed = 0;
    int restarts = 1;
    std::string lookback = "full";
    std::string optimize = "default";
    std::string placement = "default";
    double placement_budget = 10.0;
    int placement_gates = 10;
    bool no_moves = false;
    bool no_timing = false;
    std::string metrics_csv;
    std::string metrics_json;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_name,
                    "Processor description: 'surface17' or a JSON file path");
    cmd->add_option("--seed", opts.seed, "Base seed for all random tie-breaks");
    cmd->add_option("--restarts", opts.restarts,
                    "Routing streams to try; the lowest-latency result wins")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--lookback", opts.lookback,
                    "Mapped-prefix window for latency evaluation: 'full' or a "
                    "primitive gate count");
    cmd->add_option("--optimize", opts.optimize,
                    "Single-qubit optimization passes: none, pre, post, both "
                    "(default: both; none for the trivial strategy)");
    cmd->add_option("--initial-placement", opts.placement,
                    "qap or trivial (default: qap; trivial for the trivial "
                    "strategy)");
    cmd->add_option("--placement-budget", opts.placement_budget,
                    "Seconds of placement search before the greedy fallback");
    cmd->add_option("--placement-gates", opts.placement_gates,
                    "Two-qubit gates counted into the placement objective");
    cmd->add_flag("--no-moves", opts.no_moves,
                  "Insert SWAPs only, even onto clean qubits");
    cmd->add_flag("--no-timing", opts.no_timing,
                  "Report time_s as 0 so metrics are byte-reproducible");
    cmd->add_option("--metrics", opts.metrics_csv, "Write a CSV report here");
    cmd->add_option("--metrics-json", opts.metrics_json,
                    "Write a JSON report here");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qmap::Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw qmap::Error("cannot write " + path);
    out << text;
    if (!out.flush()) throw qmap::Error("cannot write " + path);
}

const qmap::HardwareConfig& resolve_config(const std::string& name,
                                           qmap::HardwareConfig& storage) {
    if (name == "surface17") return qmap::builtin_surface17();
    storage = qmap::load_config(read_file(name));
    return storage;
}

qmap::PipelineOptions pipeline_options(const CommonOpts& opts,
                                       const std::string& strategy) {
    qmap::PipelineOptions p;
    p.strategy = qmap::strategy_from_name(strategy);
    p.seed = opts.seed;
    p.restarts = opts.restarts;
    if (opts.lookback == "full")
        p.lookback = -1;
    else
        try {
            p.lookback = std::stoi(opts.lookback);
            if (p.lookback < 0) throw std::invalid_argument("negative");
        } catch (const std::exception&) {
            throw qmap::Error("--lookback takes 'full' or a non-negative count");
        }
    p.allow_moves = !opts.no_moves;
    if (opts.optimize != "default")
        p.optimize = qmap::optimize_from_name(opts.optimize);
    if (opts.placement != "default")
        p.placement = qmap::placement_from_name(opts.placement);
    p.placement_budget_s = opts.placement_budget;
    p.placement_gates = opts.placement_gates;
    p.measure_time = !opts.no_timing;
    return p;
}

qmap::ReportRow report_row(const std::string& name, const std::string& strategy,
                           std::uint64_t seed, const qmap::PipelineResult& r) {
    qmap::ReportRow row;
    row.name = name;
    row.strategy = strategy;
    row.seed = seed;
    row.latency = r.output_stats.latency;
    row.gates = r.output_stats.gates;
    row.czs = r.output_stats.two_qubit_gates;
    row.swaps = r.swaps;
    row.moves = r.moves;
    row.time_s = r.output_stats.time_s;
    row.latency_overhead = r.latency_overhead;
    row.gate_overhead = r.gate_overhead;
    return row;
}

void write_reports(const CommonOpts& opts,
                   const std::vector<qmap::ReportRow>& rows) {
    if (!opts.metrics_csv.empty())
        write_file(opts.metrics_csv, qmap::report_csv(rows));
    if (!opts.metrics_json.empty())
        write_file(opts.metrics_json, qmap::report_json(rows));
}

int run_map(const CommonOpts& opts, const std::string& in_path,
            const std::string& out_path, bool verify) {
    qmap::HardwareConfig storage;
    const qmap::HardwareConfig& config = resolve_config(opts.config_name, storage);
    qmap::Circuit input = qmap::parse_circuit(
        read_file(in_path), std::filesystem::path(in_path).stem().string());

    qmap::PipelineResult result =
        qmap::run_pipeline(input, config, pipeline_options(opts, opts.strategy));

    qmap::BundledOutput bundled =
        qmap::bundle(result.mapped, result.schedule, result.final_map.forward);
    std::string text = qmap::bundled_text(result.mapped, bundled);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    std::cout << "latency " << result.schedule.latency << " cycles\n";

    write_reports(opts, {report_row(input.name, opts.strategy, opts.seed, result)});

    if (verify) {
        for (const qmap::Gate& g : input.gates)
            if (g.name == "measure")
                throw qmap::Error("--verify needs a measurement-free circuit");
        if (!qmap::equivalent(input, result.mapped, result.initial_map.forward,
                              result.final_map.forward, config)) {
            std::cerr << "verification FAILED: mapped circuit is not "
                         "equivalent to the input\n";
            return 2;
        }
        std::cout << "verified: mapped circuit is equivalent to the input\n";
    }
    return 0;
}

int run_bench(const CommonOpts& opts, const std::string& suite,
              const std::string& strategies_csv) {
    qmap::HardwareConfig storage;
    const qmap::HardwareConfig& config = resolve_config(opts.config_name, storage);

    std::vector<std::string> strategies;
    std::stringstream ss(strategies_csv);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) strategies.push_back(item);
    if (strategies.empty()) throw qmap::Error("--strategies lists no strategy");

    std::vector<std::filesystem::path> inputs;
    for (const auto& entry : std::filesystem::directory_iterator(suite))
        if (entry.path().extension() == ".qasm") inputs.push_back(entry.path());
    std::sort(inputs.begin(), inputs.end());
    if (inputs.empty()) throw qmap::Error("no .qasm files in " + suite);

    std::vector<qmap::ReportRow> rows;
    for (const auto& path : inputs) {
        qmap::Circuit input =
            qmap::parse_circuit(read_file(path.string()), path.stem().string());
        for (const std::string& strategy : strategies) {
            qmap::PipelineResult result = qmap::run_pipeline(
                input, config, pipeline_options(opts, strategy));
            rows.push_back(report_row(input.name, strategy, opts.seed, result));
            std::cout << input.name << ' ' << strategy << ": latency "
                      << result.output_stats.latency << " cycles, "
                      << result.output_stats.gates << " gates\n";
        }
    }
    write_reports(opts, rows);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Timing- and resource-aware circuit mapper for a 17-qubit "
                 "surface-code processor"};
    app.require_subcommand(1);

    CommonOpts map_opts;
    std::string in_path, out_path;
    bool verify = false;
    CLI::App* map_cmd =
        app.add_subcommand("map", "Map one circuit and write its schedule");
    map_cmd->add_option("--in", in_path, "Input circuit")->required();
    map_cmd->add_option("--out", out_path,
                        "Scheduled output path (default: stdout)");
    map_cmd->add_option("--strategy", map_opts.strategy,
                        "trivial, minpath, or qmap");
    map_cmd->add_flag("--verify", verify,
                      "Check input/output equivalence by simulation");
    add_common(map_cmd, map_opts);

    CommonOpts bench_opts;
    std::string suite, strategies = "trivial,minpath,qmap";
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "Map every .qasm in a directory");
    bench_cmd->add_option("--suite", suite, "Directory of .qasm files")
        ->required();
    bench_cmd->add_option("--strategies", strategies,
                          "Comma-separated strategy list");
    add_common(bench_cmd, bench_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (map_cmd->parsed()) return run_map(map_opts, in_path, out_path, verify);
        return run_bench(bench_opts, suite, strategies);
    } catch (const qmap::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
