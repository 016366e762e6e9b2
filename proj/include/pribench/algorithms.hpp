#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pribench/moea_core.hpp"

namespace pribench {

// Per-algorithm hyperparameters; the selection strategies read what they need.
struct AlgorithmParams {
    double ibea_kappa = 0.05;     // indicator scaling factor
    int grea_divisions = 10;      // grid divisions per objective
    double theta = 5.0;           // penalty of the theta-dominance aggregate
    unsigned ref_outer_divisions = 2;  // two-layer simplex reference set
    unsigned ref_inner_divisions = 2;
    double ref_inner_shrink = 0.5;
    int msops_targets = 100;      // total target vectors (half direct, half reciprocal)
    double vads_power = 100.0;    // vector-angle score exponent

    void validate() const;
};

// All compositions of `divisions` into m parts, scaled by 1/divisions:
// C(divisions + m - 1, m - 1) simplex points, every one summing to 1.
std::vector<std::vector<double>> das_dennis(std::size_t m, unsigned divisions);

// Outer layer plus an inner layer shrunk toward the simplex centroid.
std::vector<std::vector<double>> two_layer_reference_points(std::size_t m, unsigned outer,
                                                            unsigned inner, double shrink);

// MSOPS-II target vectors: evenly subsampled simplex directions plus their
// normalized reciprocals.
std::vector<std::vector<double>> msops_targets(std::size_t m, std::size_t count);

// Additive epsilon indicator I_eps+(a, b) = max_i (a_i - b_i).
double epsilon_indicator(std::span<const double> a, std::span<const double> b);

// Per-generation grid over the objective space (grid-based selection).
struct GridSpec {
    std::vector<double> lb;     // grid lower boundary per objective
    std::vector<double> width;  // hyperbox width per objective
    int divisions = 10;

    static GridSpec build(const std::vector<std::vector<double>>& objectives, int divisions);
    std::vector<int> coords(std::span<const double> f) const;
};

// Ideal point and hyperplane intercepts used for adaptive normalization
// (extreme points via achievement scalarizing, fallback to per-objective
// spread when the intercept system is singular).
struct Normalization {
    std::vector<double> ideal;
    std::vector<double> intercepts;

    std::vector<double> apply(std::span<const double> f) const;
};

Normalization compute_normalization(const std::vector<std::vector<double>>& objectives);

// Distance from f to the ray through the origin along w, and the projection
// length onto that ray.
double perpendicular_distance(std::span<const double> f, std::span<const double> w);
double projection_length(std::span<const double> f, std::span<const double> w);

// Fronts under theta-dominance: solutions cluster to their nearest reference
// direction and rank within the cluster by d1 + theta*d2.
std::vector<std::vector<std::size_t>> theta_fronts(
    const std::vector<std::vector<double>>& normalized,
    const std::vector<std::vector<double>>& refs, double theta);

// Canonical algorithm identifiers accepted by make_stepper.
const std::vector<std::string>& algorithm_names();

std::unique_ptr<AlgorithmStepper> make_stepper(const std::string& name,
                                               const AlgorithmParams& params);

}  // namespace pribench
