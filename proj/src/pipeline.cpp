#include "qmap/pipeline.hpp"

#include <chrono>

#include "qmap/decompose.hpp"
#include "qmap/error.hpp"
#include "qmap/qodg.hpp"
#include "qmap/rng.hpp"

namespace qmap {

OptimizeMode optimize_from_name(const std::string& name) {
    if (name == "none") return OptimizeMode::None;
    if (name == "pre") return OptimizeMode::Pre;
    if (name == "post") return OptimizeMode::Post;
    if (name == "both") return OptimizeMode::Both;
    throw Error("unknown optimize mode '" + name + "' (none, pre, post, both)");
}

PlacementMode placement_from_name(const std::string& name) {
    if (name == "qap") return PlacementMode::Qap;
    if (name == "trivial") return PlacementMode::Trivial;
    throw Error("unknown placement '" + name + "' (qap, trivial)");
}

PipelineResult run_pipeline(const Circuit& input, const HardwareConfig& config,
                            const PipelineOptions& options) {
    using clock = std::chrono::steady_clock;
    auto t_begin = clock::now();

    bool baseline = options.strategy == Strategy::Trivial;
    OptimizeMode optimize = options.optimize.value_or(
        baseline ? OptimizeMode::None : OptimizeMode::Both);
    PlacementMode placement = options.placement.value_or(
        baseline ? PlacementMode::Trivial : PlacementMode::Qap);
    bool opt_pre = optimize == OptimizeMode::Pre || optimize == OptimizeMode::Both;
    bool opt_post = optimize == OptimizeMode::Post || optimize == OptimizeMode::Both;

    PipelineResult result;
    result.input_stats = stats(input, nullptr, config);

    // Placement wall time is excluded from the reported mapping time.
    auto t_place = clock::now();
    if (placement == PlacementMode::Qap)
        result.initial_map =
            place_qap(interaction_weights(input, options.placement_gates),
                      input.qubit_count, config, options.placement_budget_s);
    else
        result.initial_map = place_trivial(input, config);
    auto placement_elapsed = clock::now() - t_place;

    Circuit staged = decompose(input, config, {"cnot", "swap", "move"});
    if (opt_pre) staged = optimize_1q(staged);

    bool have_best = false;
    int restarts = std::max(1, options.restarts);
    Rng streams(options.seed);
    for (int r = 0; r < restarts; ++r) {
        RouteOptions ropt;
        ropt.strategy = options.strategy;
        ropt.seed = streams.split(static_cast<std::uint64_t>(r)).next();
        ropt.allow_moves = options.allow_moves;
        ropt.lookback = options.lookback;
        RouteResult routed = route(staged, config, result.initial_map, ropt);

        Circuit mapped = decompose(routed.circuit, config);
        if (opt_post) mapped = optimize_1q(mapped);
        Schedule alap = schedule_alap(mapped, build_qodg(mapped, config), config);

        if (!have_best || alap.latency < result.schedule.latency) {
            have_best = true;
            result.mapped = std::move(mapped);
            result.schedule = std::move(alap);
            result.final_map = std::move(routed.final_map);
            result.swaps = routed.swaps;
            result.moves = routed.moves;
            result.chosen_restart = r;
        }
    }

    ValidationReport report = validate_schedule(
        result.mapped, build_qodg(result.mapped, config), result.schedule, config);
    if (!report.ok)
        throw ValidationError("mapped schedule is illegal: " + report.message);

    result.output_stats = stats(result.mapped, &result.schedule, config,
                                result.swaps, result.moves);
    if (options.measure_time) {
        auto mapping_elapsed = (clock::now() - t_begin) - placement_elapsed;
        result.output_stats.time_s =
            std::chrono::duration<double>(mapping_elapsed).count();
    }
    // Degenerate empty inputs have no baseline to compare against; report
    // zero overhead rather than failing the whole run.
    if (result.input_stats.latency > 0)
        result.latency_overhead =
            overhead(static_cast<double>(result.input_stats.latency),
                     static_cast<double>(result.output_stats.latency));
    if (result.input_stats.gates > 0)
        result.gate_overhead =
            overhead(static_cast<double>(result.input_stats.gates),
                     static_cast<double>(result.output_stats.gates));
    return result;
}

} // namespace qmap
