#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "pribench/algorithms.hpp"
#include "oracles.hpp"

using namespace pribench;

namespace {

std::uint64_t binomial(unsigned n, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Problem test_problem(std::size_t dim, std::size_t m) {
    Problem p;
    p.dim = dim;
    p.n_objectives = m;
    p.lower = 0.0;
    p.upper = 1.0;
    // DTLZ2-style: points trade off along a sphere octant
    p.eval = [dim, m](const std::vector<double>& x) {
        double g = 0.0;
        for (std::size_t i = m - 1; i < dim; ++i) g += (x[i] - 0.5) * (x[i] - 0.5);
        std::vector<double> f(m, 1.0 + g);
        constexpr double half_pi = 1.5707963267948966;
        for (std::size_t k = 0; k < m; ++k) {
            for (std::size_t i = 0; i + k + 1 < m; ++i) f[k] *= std::cos(half_pi * x[i]);
            if (k > 0) f[k] *= std::sin(half_pi * x[m - 1 - k]);
        }
        return f;
    };
    return p;
}

}  // namespace

TEST_CASE("das-dennis simplex lattice") {
    for (unsigned m : {2u, 3u, 9u}) {
        for (unsigned h : {1u, 2u, 3u}) {
            const auto pts = das_dennis(m, h);
            CHECK(pts.size() == binomial(h + m - 1, m - 1));
            for (const auto& p : pts) {
                CHECK(std::accumulate(p.begin(), p.end(), 0.0) == doctest::Approx(1.0));
                for (double v : p) CHECK(v >= -1e-12);
            }
            // no duplicates
            std::set<std::vector<double>> uniq(pts.begin(), pts.end());
            CHECK(uniq.size() == pts.size());
        }
    }
}

TEST_CASE("two-layer reference set has 90 directions for nine objectives") {
    const auto refs = two_layer_reference_points(9, 2, 2, 0.5);
    CHECK(refs.size() == 90);
    for (const auto& r : refs)
        CHECK(std::accumulate(r.begin(), r.end(), 0.0) == doctest::Approx(1.0));
    // the inner layer is strictly interior: no zero coordinate
    std::size_t interior = 0;
    for (const auto& r : refs)
        if (*std::min_element(r.begin(), r.end()) > 1e-12) ++interior;
    CHECK(interior >= 45);
}

TEST_CASE("msops target set: half simplex directions, half normalized reciprocals") {
    const auto t = msops_targets(9, 100);
    REQUIRE(t.size() == 100);
    for (std::size_t i = 0; i < 50; ++i)
        CHECK(std::accumulate(t[i].begin(), t[i].end(), 0.0) == doctest::Approx(1.0));
    for (std::size_t i = 50; i < 100; ++i) {
        CHECK(std::accumulate(t[i].begin(), t[i].end(), 0.0) == doctest::Approx(1.0));
        // reciprocal of the paired direct target, renormalized
        const auto& base = t[i - 50];
        double s = 0.0;
        for (double v : base) s += 1.0 / std::max(v, 1e-6);
        for (std::size_t k = 0; k < 9; ++k)
            CHECK(t[i][k] ==
                  doctest::Approx((1.0 / std::max(base[k], 1e-6)) / s).epsilon(1e-9));
    }
}

TEST_CASE("additive epsilon indicator") {
    const std::vector<double> a{0.2, 0.6}, b{0.4, 0.3};
    CHECK(epsilon_indicator(a, b) == doctest::Approx(0.3));
    CHECK(epsilon_indicator(b, a) == doctest::Approx(0.2));
    CHECK(epsilon_indicator(a, a) == doctest::Approx(0.0));
}

TEST_CASE("grid specification and coordinates") {
    const std::vector<std::vector<double>> pts{{0.0, 10.0}, {1.0, 20.0}, {0.5, 12.0}};
    const auto grid = GridSpec::build(pts, 10);
    for (const auto& p : pts) {
        const auto c = grid.coords(p);
        for (int v : c) {
            CHECK(v >= 0);
            CHECK(v <= 10);
        }
    }
    // grid ordering respects objective ordering per axis
    CHECK(grid.coords(pts[0])[0] <= grid.coords(pts[2])[0]);
    CHECK(grid.coords(pts[2])[1] <= grid.coords(pts[1])[1]);
}

TEST_CASE("adaptive normalization maps a clean simplex to the unit range") {
    // extreme points are the axis unit vectors shifted by an ideal offset
    std::vector<std::vector<double>> objs{{1.2, 0.2, 0.2}, {0.2, 1.2, 0.2}, {0.2, 0.2, 1.2},
                                          {0.5, 0.5, 0.5}};
    const auto norm = compute_normalization(objs);
    for (std::size_t k = 0; k < 3; ++k) CHECK(norm.ideal[k] == doctest::Approx(0.2));
    const auto n0 = norm.apply(objs[0]);
    CHECK(n0[0] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(n0[1] == doctest::Approx(0.0).epsilon(1e-6));
    // degenerate set: fallback keeps values finite
    const auto norm2 = compute_normalization({{1.0, 1.0}, {1.0, 1.0}});
    const auto n2 = norm2.apply(std::vector<double>{1.0, 1.0});
    for (double v : n2) CHECK(std::isfinite(v));
}

TEST_CASE("perpendicular distance and projection") {
    const std::vector<double> w{1.0, 0.0};
    const std::vector<double> f{3.0, 4.0};
    CHECK(perpendicular_distance(f, w) == doctest::Approx(4.0));
    CHECK(projection_length(f, w) == doctest::Approx(3.0));
    const std::vector<double> diag{1.0, 1.0};
    CHECK(perpendicular_distance(diag, diag) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("theta fronts cluster and rank") {
    const std::vector<std::vector<double>> refs{{1.0, 0.0}, {0.0, 1.0}};
    const std::vector<std::vector<double>> pts{
        {0.5, 0.01}, {0.9, 0.02}, {0.01, 0.5}, {0.02, 0.9}};
    const auto fronts = theta_fronts(pts, refs, 5.0);
    REQUIRE(fronts.size() >= 2);
    // each cluster's best lands in front 0
    std::vector<std::size_t> f0 = fronts[0];
    std::sort(f0.begin(), f0.end());
    CHECK(f0 == std::vector<std::size_t>{0, 2});
}

TEST_CASE("stepper factory") {
    AlgorithmParams ap;
    CHECK(algorithm_names().size() == 6);
    for (const auto& name : algorithm_names()) CHECK(make_stepper(name, ap) != nullptr);
    CHECK_THROWS_AS(make_stepper("spea2", ap), std::invalid_argument);
}

TEST_CASE("every algorithm runs, preserves popsize and is deterministic") {
    AlgorithmParams ap;
    VariationConfig var;
    const Problem prob = test_problem(7, 3);
    for (const auto& name : algorithm_names()) {
        CAPTURE(name);
        std::vector<std::vector<double>> final1, final2;
        for (auto* sink : {&final1, &final2}) {
            auto stepper = make_stepper(name, ap);
            RandomStream rng(31);
            std::uint64_t evals = 0;
            auto pop = run_algorithm(*stepper, prob, 20, 600, var, rng,
                                     [&](const auto&, const auto&, std::uint64_t) { ++evals; });
            CHECK(evals == 600);
            CHECK(pop.size() == 20);
            for (const auto& ind : pop) {
                for (double v : ind.decision) {
                    CHECK(v >= 0.0);
                    CHECK(v <= 1.0);
                }
                for (double f : ind.objectives) CHECK(std::isfinite(f));
                sink->push_back(ind.objectives);
            }
        }
        CHECK(final1 == final2);
    }
}

TEST_CASE("every algorithm improves over the initial population") {
    AlgorithmParams ap;
    VariationConfig var;
    const Problem prob = test_problem(7, 3);
    for (const auto& name : algorithm_names()) {
        CAPTURE(name);
        auto stepper = make_stepper(name, ap);
        RandomStream rng(17);
        double init_best = 1e300, final_best = 1e300;
        std::uint64_t seen = 0;
        auto pop = run_algorithm(*stepper, prob, 20, 1000, var, rng,
                                 [&](const auto&, const auto& f, std::uint64_t) {
                                     double s = 0.0;
                                     for (double v : f) s += v * v;
                                     if (seen++ < 20) init_best = std::min(init_best, s);
                                 });
        for (const auto& ind : pop) {
            double s = 0.0;
            for (double v : ind.objectives) s += v * v;
            final_best = std::min(final_best, s);
        }
        CHECK(final_best <= init_best);
    }
}
