// Command-line front end: buckling / vibration / sweep / convergence / mode-shape
// analyses of circumferentially cracked cylindrical shells, plus a verification
// mode for the enriched-element conversion matrices.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 solver failure.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cylshell/analysis.hpp"
#include "cylshell/cli_io.hpp"

using namespace cylshell;

namespace {

struct CommonArgs {
    std::string config_path;
    std::string preset;
    std::string technique;
    std::string bc;
    std::string out_dir;
    int elements = 0;
    int gauss = 0;
    int jobs = 1;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON configuration file");
    cmd->add_option("--preset", args.preset,
                    "Named setup: table1, table4, table5, table2-experimental");
    cmd->add_option("--technique", args.technique, "conversion | spring_set");
    cmd->add_option("--bc", args.bc, "simply_supported | clamped | free_ends");
    cmd->add_option("--elements", args.elements, "Number of axial elements");
    cmd->add_option("--gauss", args.gauss, "Gauss points per element (2..5)");
    cmd->add_option("--out", args.out_dir, "Output directory for CSV tables");
    cmd->add_option("--jobs", args.jobs, "Concurrent sweep evaluations")
        ->check(CLI::PositiveNumber);
}

RunConfig resolve_config(const CommonArgs& args) {
    RunConfig config;
    if (!args.preset.empty() && !args.config_path.empty())
        throw std::invalid_argument("give either --preset or --config, not both");
    if (!args.preset.empty())
        config = preset_config(args.preset);
    else if (!args.config_path.empty())
        config = parse_config(args.config_path);
    else
        config = preset_config("table1");
    if (!args.technique.empty()) config.technique = technique_from_string(args.technique);
    if (!args.bc.empty()) config.bc = bc_from_string(args.bc);
    if (args.elements > 0) config.n_elements = args.elements;
    if (args.gauss > 0) config.gauss_points = args.gauss;
    if (!args.out_dir.empty()) config.out_dir = args.out_dir;
    config.validate();
    return config;
}

std::string output_path(const RunConfig& config, const std::string& file) {
    std::filesystem::create_directories(config.out_dir);
    return (std::filesystem::path(config.out_dir) / file).string();
}

std::vector<std::string> provenance(const RunConfig& config, const std::string& what) {
    return {what,
            "technique: " + to_string(config.technique) + ", bc: " + to_string(config.bc) +
                ", elements: " + std::to_string(config.n_elements),
            "config hash: " + config_hash(config)};
}

/// Evaluate `work` over `inputs` with up to `jobs` concurrent tasks, preserving order.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& inputs, int jobs, Fn work)
    -> std::vector<decltype(work(inputs[0]))> {
    using Out = decltype(work(inputs[0]));
    std::vector<Out> out(inputs.size());
    if (jobs <= 1 || inputs.size() < 2) {
        for (size_t i = 0; i < inputs.size(); ++i) out[i] = work(inputs[i]);
        return out;
    }
    std::vector<std::future<Out>> futures(inputs.size());
    size_t next = 0;
    while (next < inputs.size()) {
        const size_t batch_end = std::min(inputs.size(), next + static_cast<size_t>(jobs));
        for (size_t i = next; i < batch_end; ++i)
            futures[i] = std::async(std::launch::async, work, inputs[i]);
        for (size_t i = next; i < batch_end; ++i) out[i] = futures[i].get();
        next = batch_end;
    }
    return out;
}

int run_buckle(const RunConfig& config, int n_first, int n_last) {
    const ShellModel model = config.model();
    const auto sweep = critical_load(model, config.mesh(), n_first, n_last,
                                     config.solve_options());
    ResultTable table;
    table.columns = {"n", "load_factor", "normalized"};
    for (const auto& r : sweep.rows)
        table.rows.push_back({static_cast<double>(r.n), r.lambda, r.normalized});
    const std::string path = output_path(config, "buckle.csv");
    write_table(table, path, provenance(config, "critical buckling load per mode number"));
    std::printf("minimum normalized load %.6g at n = %d  (classical intact reference %.6g)\n",
                sweep.minimum.normalized, sweep.minimum.n, classical_normalized_load(model));
    for (const auto& [n, err] : sweep.errors)
        std::fprintf(stderr, "warning: n = %d failed: %s\n", n, err.c_str());
    std::printf("wrote %s\n", path.c_str());
    return 0;
}

int run_vibrate(const RunConfig& config) {
    const ShellModel model = config.model();
    const auto result = natural_frequencies(model, config.mesh(), config.analysis.n_list,
                                            config.analysis.count, config.solve_options());
    ResultTable table;
    table.columns = {"n", "mode", "omega_rad_s", "Omega"};
    for (const auto& r : result.rows)
        table.rows.push_back(
            {static_cast<double>(r.n), static_cast<double>(r.mode_index), r.omega, r.Omega});
    const std::string path = output_path(config, "vibrate.csv");
    write_table(table, path, provenance(config, "radial natural frequencies"));
    for (const auto& r : result.rows)
        std::printf("n = %2d  mode %d  Omega = %.6g\n", r.n, r.mode_index, r.Omega);
    std::printf("wrote %s\n", path.c_str());
    return 0;
}

int run_sweep(const RunConfig& config, int jobs) {
    const ShellModel model = config.model();
    const AnalysisSpec& a = config.analysis;
    ResultTable table;
    std::string file;
    if (a.sweep_by == "depth") {
        std::vector<double> grid = a.depth_grid;
        if (grid.empty()) grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
        const double x_c = config.crack ? config.crack->x_c : 0.5 * config.geometry.L;
        // the intact reference is shared; compute rows concurrently over depths
        const auto rows = parallel_map(grid, jobs, [&](double mu) {
            return depth_ratio_curve(model, x_c, {mu}, config.n_elements, config.technique,
                                     a.n_first, a.n_last, config.solve_options())[0];
        });
        table.columns = {"a_over_h", "normalized", "ratio", "n_at_min"};
        for (const auto& r : rows)
            table.rows.push_back(
                {r.a_over_h, r.normalized, r.ratio, static_cast<double>(r.n_at_min)});
        file = "sweep_depth.csv";
    } else if (a.sweep_by == "position") {
        std::vector<double> grid = a.position_grid;
        if (grid.empty()) grid = {0.1, 0.2, 0.3, 0.4, 0.5};
        const auto rows = parallel_map(grid, jobs, [&](double pos) {
            return crack_position_sweep(model, {pos}, config.n_elements, config.technique,
                                        a.n_first, a.n_last, config.solve_options())[0];
        });
        table.columns = {"xc_over_L", "normalized", "n_at_min"};
        for (const auto& r : rows)
            table.rows.push_back({r.xc_over_L, r.normalized, static_cast<double>(r.n_at_min)});
        file = "sweep_position.csv";
    } else if (a.sweep_by == "length") {
        std::vector<double> grid = a.lengths;
        if (grid.empty())
            for (int i = 1; i <= 12; ++i) grid.push_back(0.5 * i * 3.14159265358979323846);
        const auto rows = length_sweep(model, grid, config.n_elements, config.technique,
                                       a.n_first, a.n_last, config.solve_options());
        table.columns = {"L", "normalized", "asymptotic"};
        for (const auto& r : rows)
            table.rows.push_back({r.L, r.normalized, r.asymptotic ? 1.0 : 0.0});
        file = "sweep_length.csv";
    } else {
        throw std::invalid_argument("sweep: unknown --by '" + a.sweep_by + "'");
    }
    const std::string path = output_path(config, file);
    write_table(table, path, provenance(config, "parameter sweep by " + a.sweep_by));
    std::printf("wrote %s (%zu rows)\n", path.c_str(), table.rows.size());
    return 0;
}

int run_converge(const RunConfig& config) {
    const ShellModel model = config.model();
    std::vector<int> counts = config.analysis.element_counts;
    if (counts.empty()) counts = {5, 11, 21, 41};
    const auto rows = convergence_study(model, counts, config.technique,
                                        config.analysis.n_first, config.analysis.n_last,
                                        config.solve_options());
    ResultTable table;
    table.columns = {"n_elements", "normalized", "strain_energy", "wall_time_s"};
    for (const auto& r : rows)
        table.rows.push_back(
            {static_cast<double>(r.n_elements), r.normalized, r.strain_energy, r.wall_time_s});
    const std::string path = output_path(config, "converge.csv");
    write_table(table, path, provenance(config, "mesh convergence study"));
    for (const auto& r : rows)
        std::printf("%4d elements  normalized %.6g  (%.3f s)\n", r.n_elements, r.normalized,
                    r.wall_time_s);
    std::printf("wrote %s\n", path.c_str());
    return 0;
}

int run_modeshape(const RunConfig& config, int n_requested) {
    const ShellModel model = config.model();
    const Mesh mesh = config.mesh();
    const int n_first = n_requested > 0 ? n_requested : config.analysis.n_first;
    const int n_last = n_requested > 0 ? n_requested : config.analysis.n_last;
    const auto sweep = critical_load(model, mesh, n_first, n_last, config.solve_options());
    const ResultTable table =
        modeshape_surface(model, mesh, sweep.minimum.n, sweep.minimum_mode,
                          config.analysis.grid_nx, config.analysis.grid_ntheta,
                          config.analysis.scale);
    const std::string path = output_path(config, "modeshape.csv");
    write_table(table, path,
                provenance(config, "critical buckling mode surface, n = " +
                                       std::to_string(sweep.minimum.n)));
    std::printf("critical mode n = %d, normalized load %.6g, %zu surface samples\n",
                sweep.minimum.n, sweep.minimum.normalized, table.rows.size());
    std::printf("wrote %s\n", path.c_str());
    return 0;
}

int run_verify(const RunConfig& config) {
    ShellModel model = config.model();
    if (!model.crack) model.crack = CrackSpec{0.5 * model.geometry.h, 0.5 * model.geometry.L};
    double worst = 0.0;
    const auto entries = conversion_comparison(model, worst);
    std::printf("closed-form vs continuity-solve conversion matrices: worst relative "
                "discrepancy %.3e over the comparison grid\n",
                worst);
    if (entries.empty()) {
        std::printf("agreement within 1e-8: PASS\n");
        return 0;
    }
    ResultTable table;
    table.columns = {"x0_over_l", "n", "ks_total", "row", "col", "closed_form", "oracle",
                     "rel_error"};
    for (const auto& e : entries)
        table.rows.push_back({e.x0_over_l, static_cast<double>(e.n), e.ks_total,
                              static_cast<double>(e.row), static_cast<double>(e.col),
                              e.closed_form, e.oracle, e.rel_error});
    const std::string path = output_path(config, "verify.csv");
    write_table(table, path, provenance(config, "conversion-matrix discrepancy report"));
    std::printf("%zu entries above 1e-8; full report written to %s\n", entries.size(),
                path.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Buckling and vibration of circumferentially cracked cylindrical shells"};
    app.require_subcommand(1);

    CommonArgs args;
    std::vector<int> n_range;
    std::vector<int> n_list;
    int count = 0;
    std::string sweep_by;
    std::vector<double> grid;
    std::vector<int> element_counts;
    int modeshape_n = 0;

    CLI::App* buckle = app.add_subcommand("buckle", "Critical buckling load sweep over n");
    add_common(buckle, args);
    buckle->add_option("--n-range", n_range, "First and last circumferential mode number")
        ->expected(2);

    CLI::App* vibrate = app.add_subcommand("vibrate", "Radial natural frequencies");
    add_common(vibrate, args);
    vibrate->add_option("--n-list", n_list, "Circumferential mode numbers to report");
    vibrate->add_option("--count", count, "Frequencies per mode number");

    CLI::App* sweep = app.add_subcommand("sweep", "Parameter sweeps (depth/position/length)");
    add_common(sweep, args);
    sweep->add_option("--by", sweep_by, "depth | position | length");
    sweep->add_option("--grid", grid, "Sweep grid values");
    sweep->add_option("--n-range", n_range, "First and last mode number")->expected(2);

    CLI::App* converge = app.add_subcommand("converge", "Mesh convergence study");
    add_common(converge, args);
    converge->add_option("--elements-list", element_counts, "Ascending element counts");

    CLI::App* modeshape = app.add_subcommand("modeshape", "Export the critical mode surface");
    add_common(modeshape, args);
    modeshape->add_option("--n", modeshape_n, "Fix the circumferential mode number");

    CLI::App* verify =
        app.add_subcommand("verify", "Check closed-form conversion matrices against the "
                                     "continuity-condition solve");
    add_common(verify, args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // --help exits 0; any parse error is a usage error
    }

    try {
        RunConfig config = resolve_config(args);
        if (!n_range.empty()) {
            config.analysis.n_first = n_range[0];
            config.analysis.n_last = n_range[1];
        }
        if (!n_list.empty()) config.analysis.n_list = n_list;
        if (count > 0) config.analysis.count = count;
        if (!sweep_by.empty()) config.analysis.sweep_by = sweep_by;
        if (!grid.empty()) {
            if (config.analysis.sweep_by == "depth") config.analysis.depth_grid = grid;
            if (config.analysis.sweep_by == "position") config.analysis.position_grid = grid;
            if (config.analysis.sweep_by == "length") config.analysis.lengths = grid;
        }
        if (!element_counts.empty()) config.analysis.element_counts = element_counts;

        if (buckle->parsed())
            return run_buckle(config, config.analysis.n_first, config.analysis.n_last);
        if (vibrate->parsed()) return run_vibrate(config);
        if (sweep->parsed()) return run_sweep(config, args.jobs);
        if (converge->parsed()) return run_converge(config);
        if (modeshape->parsed()) return run_modeshape(config, modeshape_n);
        if (verify->parsed()) return run_verify(config);
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
