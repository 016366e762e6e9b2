#include "pribench/harness.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "pribench/algorithms.hpp"

namespace pribench {

namespace fs = std::filesystem;

void RunConfig::validate() const {
    const auto& names = algorithm_names();
    if (std::find(names.begin(), names.end(), algorithm) == names.end())
        throw std::invalid_argument("unknown algorithm: " + algorithm);
    if (dim < static_cast<std::size_t>(kMinPriDim) || dim > static_cast<std::size_t>(kMaxPriDim))
        throw std::invalid_argument("dim must be in [4, 12]");
    if (popsize < 2) throw std::invalid_argument("popsize must be at least 2");
    if (popsize > evaluations) throw std::invalid_argument("popsize must not exceed evaluations");
    if (runs < 1) throw std::invalid_argument("runs must be at least 1");
}

RunSummary run_experiment(const RunConfig& rc, const Config& cfg) {
    rc.validate();
    fs::create_directories(rc.out_dir);

    Problem problem;
    problem.dim = rc.dim;
    problem.n_objectives = 9;
    problem.lower = kPriLoTenthUs;
    problem.upper = kPriHiTenthUs;
    problem.eval = [&cfg](const std::vector<double>& x) {
        const auto v = evaluate_raw(x, cfg.radar, cfg.eval).minimized();
        return std::vector<double>(v.begin(), v.end());
    };

    const std::string hash = model_config_hash(cfg.radar, cfg.eval);
    RunSummary summary;
    summary.algorithm = rc.algorithm;

    PointSet all;
    all.model_hash = hash;
    std::vector<double> run_seconds;

    for (std::uint32_t k = 0; k < rc.runs; ++k) {
        const std::uint64_t seed = rc.base_seed + k;
        RandomStream rng(seed);
        auto stepper = make_stepper(rc.algorithm, cfg.algorithm);

        std::vector<EvaluationRecord> records;
        records.reserve(rc.evaluations);
        const auto recorder = [&](const std::vector<double>& decision,
                                  const std::vector<double>& objectives,
                                  std::uint64_t eval_index) {
            EvaluationRecord r;
            r.run = k;
            r.algo = rc.algorithm;
            r.eval_index = eval_index;
            r.decision = PriVector::quantize(decision).grid();
            for (std::size_t i = 0; i < 8; ++i) r.margins[i] = -objectives[i];
            r.dwell_ms = objectives[8];
            records.push_back(std::move(r));
        };

        const auto t0 = std::chrono::steady_clock::now();
        run_algorithm(*stepper, problem, rc.popsize, rc.evaluations, cfg.variation, rng, recorder);
        const auto t1 = std::chrono::steady_clock::now();
        run_seconds.push_back(std::chrono::duration<double>(t1 - t0).count());

        const std::string log_path =
            (fs::path(rc.out_dir) / (rc.algorithm + "_run" + std::to_string(k) + ".csv")).string();
        write_log(log_path, records, hash, seed);
        summary.log_paths.push_back(log_path);
        summary.total_evaluations += records.size();
        // file name only: artifacts stay byte-identical across output dirs
        all.provenance.push_back(fs::path(log_path).filename().string());
        for (auto& r : records) all.records.push_back(std::move(r));
    }

    PointSet nd = nd_filter(all);
    summary.nd_count = nd.records.size();
    summary.point_set_path = (fs::path(rc.out_dir) / (rc.algorithm + "_P.points")).string();
    write_point_set(summary.point_set_path, nd);

    for (double s : run_seconds) summary.wall_seconds += s;
    // Wall-clock data stays in its own sidecar so the main artifacts are
    // byte-reproducible.
    std::ofstream timing((fs::path(rc.out_dir) / (rc.algorithm + "_timing.txt")).string());
    const auto now = std::chrono::system_clock::now();
    timing << "finished_unix_s: "
           << std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count()
           << '\n';
    for (std::size_t k = 0; k < run_seconds.size(); ++k)
        timing << "run" << k << "_wall_s: " << run_seconds[k] << '\n';
    timing << "total_wall_s: " << summary.wall_seconds << '\n';

    return summary;
}

MetricsReport compute_metrics(const std::vector<PointSet>& algo_sets, const PointSet& best,
                              std::uint64_t mc_samples, std::uint64_t mc_seed) {
    for (const auto& s : algo_sets)
        if (s.model_hash != best.model_hash)
            throw IncompatibleInputs("metrics: model config hashes differ");
    if (best.records.empty()) throw std::invalid_argument("metrics: empty best set");

    const auto best_objs = best.objectives();
    const ScalingBounds bounds = ScalingBounds::from_set(best_objs);
    const std::size_t m = best_objs.front().size();

    const auto scale_all = [&bounds](const std::vector<std::vector<double>>& objs) {
        std::vector<std::vector<double>> out;
        out.reserve(objs.size());
        for (const auto& f : objs) out.push_back(bounds.scale(f));
        return out;
    };
    const auto best_scaled = scale_all(best_objs);

    MetricsReport report;
    report.mc_samples = mc_samples;
    report.mc_seed = mc_seed;
    report.model_hash = best.model_hash;

    report.best.name = "best";
    report.best.size = best.records.size();
    report.best.survivors = best.records.size();
    report.best.survivor_ratio = 1.0;

    std::vector<AlgoMetrics> algos;
    std::vector<std::vector<std::vector<double>>> algo_scaled;
    for (const auto& s : algo_sets) {
        AlgoMetrics am;
        am.name = s.provenance.empty() ? "set" + std::to_string(algos.size()) : s.provenance.front();
        if (!s.records.empty()) am.name = s.records.front().algo;
        const auto objs = s.objectives();
        const auto c = contribution(objs, best_objs);
        am.size = c.size;
        am.survivors = c.survivors;
        am.survivor_ratio = c.ratio;
        algo_scaled.push_back(scale_all(objs));
        algos.push_back(std::move(am));
    }

    // GD/IGD take pre-scaled inputs here; use identity bounds over [0,1].
    ScalingBounds unit;
    unit.bmin.assign(m, 0.0);
    unit.bmax.assign(m, 1.0);
    for (std::size_t i = 0; i < algos.size(); ++i) {
        algos[i].gd = gd(algo_scaled[i], best_scaled, unit);
        algos[i].igd = igd(algo_scaled[i], best_scaled, unit);
    }
    report.best.gd = 0.0;
    report.best.igd = 0.0;

    const double cs[] = {0.9, 1.0, 1.1};
    for (std::size_t ci = 0; ci < 3; ++ci) {
        // One sample set per reference point, shared by every compared set.
        RandomStream rng(mc_seed + ci);
        HvSampleSet samples(m, cs[ci], mc_samples, rng);
        const HvEstimate hb = samples.estimate(best_scaled);
        AlgoMetrics::Hv bh;
        bh.c = cs[ci];
        bh.value = hb.value;
        bh.std_error = hb.std_error;
        bh.ratio_vs_best = 1.0;
        report.best.hv.push_back(bh);
        for (std::size_t i = 0; i < algos.size(); ++i) {
            const HvEstimate ha = samples.estimate(algo_scaled[i]);
            AlgoMetrics::Hv h;
            h.c = cs[ci];
            h.value = ha.value;
            h.std_error = ha.std_error;
            h.ratio_vs_best = hb.value > 0.0 ? ha.value / hb.value : 0.0;
            algos[i].hv.push_back(h);
        }
    }

    report.algorithms = std::move(algos);
    return report;
}

void write_metrics_report(const std::string& path, const MetricsReport& report) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write metrics report: " + path);
    out << metrics_report_json(report);
}

void write_report_data(const std::string& out_dir, const PointSet& set,
                       const PointSet& quartile_set, const ScalingBounds& bounds,
                       std::size_t bins) {
    if (set.records.empty() || quartile_set.records.empty())
        throw std::runtime_error("report: empty point set");
    fs::create_directories(out_dir);

    static const char* names[9] = {"m1", "m2", "m3", "m4", "m5", "m6", "m7", "m8", "dwell_ms"};
    for (std::size_t k = 0; k < 9; ++k) {
        std::vector<double> values;
        values.reserve(set.records.size());
        for (const auto& r : set.records)
            values.push_back(k < 8 ? r.margins[k] : r.dwell_ms);
        const double lo = *std::min_element(values.begin(), values.end());
        const double hi = *std::max_element(values.begin(), values.end());
        const auto counts = histogram(values, bins, lo, hi);
        std::ofstream out((fs::path(out_dir) / ("hist_" + std::string(names[k]) + ".csv")).string());
        out << "bin_lo,bin_hi,count\n";
        const double width = (hi - lo) / static_cast<double>(bins);
        for (std::size_t b = 0; b < counts.size(); ++b)
            out << format_g17(lo + width * static_cast<double>(b)) << ','
                << format_g17(b + 1 == counts.size() ? hi : lo + width * static_cast<double>(b + 1))
                << ',' << counts[b] << '\n';
    }

    std::ofstream out((fs::path(out_dir) / "quartiles.csv").string());
    out << "objective,min,q1,median,q3,max\n";
    for (std::size_t k = 0; k < 9; ++k) {
        std::vector<double> values;
        values.reserve(quartile_set.records.size());
        for (const auto& r : quartile_set.records)
            values.push_back(bounds.scale(r.minimized())[k]);
        const auto q = quartiles(std::move(values));
        out << names[k];
        for (double v : q) out << ',' << format_g17(v);
        out << '\n';
    }
}

}  // namespace pribench
