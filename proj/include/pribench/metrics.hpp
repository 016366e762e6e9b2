#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pribench/random.hpp"

namespace pribench {

// Per-objective extrema of the reference best set; scaling maps
// [bmin_i, bmax_i] to [0, 1]. A degenerate coordinate scales to 0.
struct ScalingBounds {
    std::vector<double> bmin;
    std::vector<double> bmax;

    static ScalingBounds from_set(const std::vector<std::vector<double>>& objectives);
    std::vector<double> scale(std::span<const double> f) const;
};

struct HvEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
};

// Monte Carlo hypervolume with reference point c*(1,...,1) on scaled points.
HvEstimate hypervolume_mc(const std::vector<std::vector<double>>& scaled, double c,
                          std::uint64_t samples, RandomStream& rng);

// One frozen sample set shared across several point sets, so comparisons at a
// given reference point use identical randomness (and the best-set estimate
// provably upper-bounds every contributing set's estimate).
class HvSampleSet {
public:
    HvSampleSet(std::size_t n_objectives, double c, std::uint64_t samples, RandomStream& rng);
    HvEstimate estimate(const std::vector<std::vector<double>>& scaled) const;
    double reference() const { return c_; }

private:
    std::size_t m_;
    double c_;
    std::uint64_t samples_;
    std::vector<double> data_;  // samples_ rows of m_ coordinates
};

// Exact union-of-boxes hypervolume via coordinate-compression sweep.
// Oracle regime: M <= 4 and small sets.
double hypervolume_exact(const std::vector<std::vector<double>>& scaled, double c);

// Mean scaled distance from each point of P to its nearest point of B.
double gd(const std::vector<std::vector<double>>& p, const std::vector<std::vector<double>>& b,
          const ScalingBounds& bounds);
// IGD(P, B) = GD(B, P); single code path.
double igd(const std::vector<std::vector<double>>& p, const std::vector<std::vector<double>>& b,
           const ScalingBounds& bounds);

struct Contribution {
    std::size_t size = 0;
    std::size_t survivors = 0;
    double ratio = 0.0;
};

// Points of P that remain non-dominated against the merged best set.
Contribution contribution(const std::vector<std::vector<double>>& p,
                          const std::vector<std::vector<double>>& best);

// Histogram counts of `values` over [lo, hi] split into `bins` equal cells;
// the top edge belongs to the last bin.
std::vector<std::size_t> histogram(const std::vector<double>& values, std::size_t bins,
                                   double lo, double hi);

// (min, q1, median, q3, max) with linearly interpolated quartiles.
std::array<double, 5> quartiles(std::vector<double> values);

struct AlgoMetrics {
    std::string name;
    std::size_t size = 0;
    std::size_t survivors = 0;
    double survivor_ratio = 0.0;
    struct Hv {
        double c = 0.0;
        double value = 0.0;
        double std_error = 0.0;
        double ratio_vs_best = 0.0;
    };
    std::vector<Hv> hv;
    double gd = 0.0;
    double igd = 0.0;
};

struct MetricsReport {
    std::vector<AlgoMetrics> algorithms;
    AlgoMetrics best;
    std::uint64_t mc_samples = 0;
    std::uint64_t mc_seed = 0;
    std::string model_hash;
};

std::string metrics_report_json(const MetricsReport& report);

}  // namespace pribench
