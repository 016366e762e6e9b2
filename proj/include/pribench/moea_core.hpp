#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "pribench/random.hpp"

namespace pribench {

struct VariationConfig {
    double sbx_eta = 20.0;
    double sbx_prob = 1.0;
    double pm_eta = 20.0;
    double pm_prob = -1.0;  // < 0 means 1/D, resolved at run time

    void validate() const;  // throws std::invalid_argument
};

struct Individual {
    std::vector<double> decision;    // continuous, pre-quantization
    std::vector<double> objectives;  // minimization view
    std::uint64_t eval_index = 0;
};

// Pareto dominance, minimization convention.
bool dominates(std::span<const double> a, std::span<const double> b);

// Deb-style fast non-dominated sort; returns index fronts (exhaustive,
// disjoint, front 0 = non-dominated set).
std::vector<std::vector<std::size_t>> fast_nondominated_sort(
    const std::vector<std::vector<double>>& objectives);

// Crowding distance within one front. Boundary points get +inf; a degenerate
// objective (zero spread) contributes nothing. Ties in objective value keep
// stable input order.
std::vector<double> crowding_distance(const std::vector<std::vector<double>>& front);

// Simulated binary crossover; children clipped to [lo, hi].
void sbx_crossover(const std::vector<double>& p1, const std::vector<double>& p2,
                   const VariationConfig& cfg, double lo, double hi, RandomStream& rng,
                   std::vector<double>& c1, std::vector<double>& c2);

// Bounded polynomial mutation, per-variable probability cfg.pm_prob.
void polynomial_mutation(std::vector<double>& x, const VariationConfig& cfg,
                         double lo, double hi, RandomStream& rng);

struct Problem {
    std::size_t dim = 10;
    std::size_t n_objectives = 9;
    double lower = 500.0;
    double upper = 1500.0;
    std::function<std::vector<double>(const std::vector<double>&)> eval;
};

// Called once per evaluation, before any selection sees the point.
using Recorder = std::function<void(const std::vector<double>& decision,
                                    const std::vector<double>& objectives,
                                    std::uint64_t eval_index)>;

// Environmental-selection strategy plugged into the generic loop.
class AlgorithmStepper {
public:
    virtual ~AlgorithmStepper() = default;

    // Build reference/target sets, check configuration. Throws on mismatch so
    // errors surface at startup, not mid-run.
    virtual void configure(std::size_t popsize, std::size_t n_objectives);

    virtual std::vector<Individual> select(std::vector<Individual> parents,
                                           std::vector<Individual> offspring,
                                           RandomStream& rng) = 0;

    // Mating keys, lower is better. Default: (non-domination rank, -crowding).
    virtual std::vector<std::pair<double, double>> mating_keys(
        const std::vector<Individual>& pop) const;

protected:
    std::size_t popsize_ = 0;
    std::size_t n_obj_ = 0;
};

// Generic generational loop: uniform initial population, binary-tournament
// mating, SBX + polynomial mutation, stepper selection. Consumes exactly
// `budget` evaluations (the last generation is truncated if needed) and
// forwards each one to the recorder.
std::vector<Individual> run_algorithm(AlgorithmStepper& stepper, const Problem& problem,
                                      std::size_t popsize, std::uint64_t budget,
                                      const VariationConfig& variation, RandomStream& rng,
                                      const Recorder& recorder);

}  // namespace pribench
