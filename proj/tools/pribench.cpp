#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pribench/archive.hpp"
#include "pribench/config_io.hpp"
#include "pribench/harness.hpp"

namespace {

using namespace pribench;

Config resolve_config(const std::string& path) {
    return path.empty() ? Config{} : load_config(path);
}

int cmd_run(const RunConfig& rc, const std::string& config_path) {
    const Config cfg = resolve_config(config_path);
    const RunSummary s = run_experiment(rc, cfg);
    std::cout << "algorithm: " << s.algorithm << '\n'
              << "evaluations: " << s.total_evaluations << '\n'
              << "nd_points: " << s.nd_count << '\n'
              << "point_set: " << s.point_set_path << '\n'
              << "wall_s: " << s.wall_seconds << '\n';
    return 0;
}

int cmd_merge(const std::vector<std::string>& inputs, const std::string& out) {
    std::vector<PointSet> sets;
    sets.reserve(inputs.size());
    for (const auto& p : inputs) sets.push_back(read_point_set(p));
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (sets[i].provenance.empty()) sets[i].provenance.push_back(inputs[i]);
    const PointSet best = merge_best(sets);
    write_point_set(out, best);
    std::size_t total = 0;
    for (const auto& s : sets) total += s.records.size();
    std::cout << "merged: " << best.records.size() << " of " << total << " candidates\n";
    return 0;
}

int cmd_import(const std::string& input, const std::string& out,
               const std::string& config_path) {
    const Config cfg = resolve_config(config_path);
    PointSet s = import_external(input, cfg.radar, cfg.eval);
    s = nd_filter(std::move(s));
    write_point_set(out, s);
    std::cout << "imported: " << s.records.size() << " non-dominated points\n";
    return 0;
}

int cmd_metrics(const std::vector<std::string>& inputs, const std::string& best_path,
                const std::string& out, std::uint64_t samples, std::uint64_t seed) {
    std::vector<PointSet> sets;
    sets.reserve(inputs.size());
    for (const auto& p : inputs) sets.push_back(read_point_set(p));
    const PointSet best = read_point_set(best_path);
    const MetricsReport report = compute_metrics(sets, best, samples, seed);
    write_metrics_report(out, report);
    std::cout << "metrics written: " << out << '\n';
    return 0;
}

int cmd_filter(const std::string& input, const std::string& out, bool realistic,
               double dwell_min, double dwell_max, const std::string& closest_to,
               const std::string& config_path) {
    const Config cfg = resolve_config(config_path);
    PointSet s = read_point_set(input);
    if (realistic) s = realistic_filter(s, cfg.radar);
    if (dwell_min > 0.0 || dwell_max < 1e300) s = dwell_window_filter(s, dwell_min, dwell_max);
    if (!closest_to.empty()) {
        if (s.records.empty()) throw std::runtime_error("filter: no records left to query");
        const PointSet query = import_external(closest_to, cfg.radar, cfg.eval);
        if (query.records.empty()) throw std::runtime_error("filter: empty query file");
        const ScalingBounds bounds = ScalingBounds::from_set(s.objectives());
        const auto [idx, dist] = closest_point(s, query.records.front().minimized(), bounds);
        std::cout << "closest: index " << idx << " distance " << format_g17(dist) << '\n';
        std::cout << "decision:";
        for (int x : s.records[idx].decision) std::cout << ' ' << x;
        std::cout << '\n';
    }
    if (!out.empty()) {
        write_point_set(out, s);
        std::cout << "kept: " << s.records.size() << " records -> " << out << '\n';
    }
    return 0;
}

int cmd_report(const std::string& input, const std::string& subset_path,
               const std::string& out_dir, std::size_t bins) {
    const PointSet set = read_point_set(input);
    if (set.records.empty()) throw std::runtime_error("report: empty point set");
    PointSet quartile_set = set;
    if (!subset_path.empty()) {
        quartile_set = read_point_set(subset_path);
        if (quartile_set.model_hash != set.model_hash)
            throw IncompatibleInputs("report: model config hashes differ");
    }
    const ScalingBounds bounds = ScalingBounds::from_set(set.objectives());
    write_report_data(out_dir, set, quartile_set, bounds, bins);
    std::cout << "report data written: " << out_dir << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Medium-PRF PRI design benchmark suite"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Execute seeded optimization runs");
    RunConfig rc;
    std::string run_config_path;
    run->add_option("--algo", rc.algorithm, "Algorithm id")->required();
    run->add_option("--dim", rc.dim, "PRI count D");
    run->add_option("--pop", rc.popsize, "Population size");
    run->add_option("--evals", rc.evaluations, "Evaluations per run");
    run->add_option("--runs", rc.runs, "Independent runs");
    run->add_option("--seed", rc.base_seed, "Base seed (run k uses seed + k)");
    run->add_option("--out", rc.out_dir, "Output directory");
    run->add_option("--config", run_config_path, "Model/algorithm config file");

    // merge
    auto* merge = app.add_subcommand("merge", "Merge point sets into a best set");
    std::vector<std::string> merge_inputs;
    std::string merge_out = "best.points";
    merge->add_option("inputs", merge_inputs, "Point-set files")->required();
    merge->add_option("--out", merge_out, "Output best-set file");

    // import
    auto* import = app.add_subcommand("import", "Evaluate an external PRI list");
    std::string import_in, import_out = "external.points", import_config;
    import->add_option("input", import_in, "PRI list with '# units:' header")->required();
    import->add_option("--out", import_out, "Output point-set file");
    import->add_option("--config", import_config, "Model config file");

    // metrics
    auto* metrics = app.add_subcommand("metrics", "Quality indicators against a best set");
    std::vector<std::string> metric_inputs;
    std::string metrics_best, metrics_out = "metrics.json";
    std::uint64_t mc_samples = 100000, mc_seed = 12345;
    metrics->add_option("inputs", metric_inputs, "Per-algorithm point-set files")->required();
    metrics->add_option("--best", metrics_best, "Best-set file")->required();
    metrics->add_option("--out", metrics_out, "Report file");
    metrics->add_option("--samples", mc_samples, "Monte Carlo samples per estimate");
    metrics->add_option("--mc-seed", mc_seed, "Monte Carlo seed");

    // filter
    auto* filter = app.add_subcommand("filter", "Subset a point set");
    std::string filter_in, filter_out, closest_to, filter_config;
    bool realistic = false;
    double dwell_min = 0.0, dwell_max = 1e300;
    filter->add_option("input", filter_in, "Point-set file")->required();
    filter->add_option("--out", filter_out, "Output point-set file");
    filter->add_flag("--realistic", realistic, "Keep only realistic designs");
    filter->add_option("--dwell-min", dwell_min, "Dwell window lower bound, ms");
    filter->add_option("--dwell-max", dwell_max, "Dwell window upper bound, ms");
    filter->add_option("--closest-to", closest_to, "PRI list file; report nearest record");
    filter->add_option("--config", filter_config, "Model config file");

    // report
    auto* report = app.add_subcommand("report", "Histogram and quartile data files");
    std::string report_in, report_subset, report_out = "report";
    std::size_t bins = 50;
    report->add_option("input", report_in, "Point-set file (histogram source)")->required();
    report->add_option("--subset", report_subset, "Point-set file for quartiles");
    report->add_option("--out", report_out, "Output directory");
    report->add_option("--bins", bins, "Histogram bins per objective");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*run) return cmd_run(rc, run_config_path);
        if (*merge) return cmd_merge(merge_inputs, merge_out);
        if (*import) return cmd_import(import_in, import_out, import_config);
        if (*metrics) return cmd_metrics(metric_inputs, metrics_best, metrics_out, mc_samples, mc_seed);
        if (*filter)
            return cmd_filter(filter_in, filter_out, realistic, dwell_min, dwell_max, closest_to,
                              filter_config);
        if (*report) return cmd_report(report_in, report_subset, report_out, bins);
    } catch (const pribench::IncompatibleInputs& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
