#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pribench/archive.hpp"
#include "pribench/config_io.hpp"
#include "pribench/metrics.hpp"

namespace pribench {

struct RunConfig {
    std::string algorithm;
    std::size_t dim = 10;
    std::size_t popsize = 100;
    std::uint64_t evaluations = 100000;
    std::uint32_t runs = 10;
    std::uint64_t base_seed = 1;
    std::string out_dir = ".";

    void validate() const;  // throws std::invalid_argument
};

struct RunSummary {
    std::string algorithm;
    std::uint64_t total_evaluations = 0;
    std::size_t nd_count = 0;
    std::string point_set_path;
    std::vector<std::string> log_paths;
    double wall_seconds = 0.0;
};

// Executes `runs` independent runs (seed = base_seed + run index), writes one
// evaluation log per run plus the ND-filtered concatenation of all runs, and a
// timing sidecar. All objective values in the records come from the quantized
// decision vector actually evaluated.
RunSummary run_experiment(const RunConfig& rc, const Config& cfg);

// Table-style report: per-algorithm counts, survivors against the best set,
// shared-sample MC hypervolume at c in {0.9, 1.0, 1.1}, GD and IGD.
MetricsReport compute_metrics(const std::vector<PointSet>& algo_sets, const PointSet& best,
                              std::uint64_t mc_samples, std::uint64_t mc_seed);

void write_metrics_report(const std::string& path, const MetricsReport& report);

// Plot-ready data: per-objective histogram counts over raw objective values of
// `set`, plus scaled per-objective quartiles of `quartile_set` (boxplot input).
void write_report_data(const std::string& out_dir, const PointSet& set,
                       const PointSet& quartile_set, const ScalingBounds& bounds,
                       std::size_t bins);

}  // namespace pribench
