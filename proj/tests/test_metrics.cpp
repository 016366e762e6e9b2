#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "pribench/metrics.hpp"
#include "oracles.hpp"

using namespace pribench;

namespace {

std::vector<std::vector<double>> random_points(std::size_t n, std::size_t m, RandomStream& rng) {
    std::vector<std::vector<double>> pts(n, std::vector<double>(m));
    for (auto& p : pts)
        for (auto& v : p) v = rng.uniform();
    return pts;
}

}  // namespace

TEST_CASE("scaling bounds map the set onto the unit box") {
    const std::vector<std::vector<double>> objs{{-10.0, 3.0, 5.0}, {0.0, 7.0, 5.0}};
    const auto b = ScalingBounds::from_set(objs);
    const auto s0 = b.scale(objs[0]);
    CHECK(s0[0] == doctest::Approx(0.0));
    CHECK(s0[1] == doctest::Approx(0.0));
    CHECK(s0[2] == doctest::Approx(0.0));  // degenerate coordinate maps to 0
    const auto s1 = b.scale(objs[1]);
    CHECK(s1[0] == doctest::Approx(1.0));
    CHECK(s1[1] == doctest::Approx(1.0));
    const auto mid = b.scale(std::vector<double>{-5.0, 5.0, 5.0});
    CHECK(mid[0] == doctest::Approx(0.5));
    CHECK_THROWS_AS(ScalingBounds::from_set({}), std::invalid_argument);
}

TEST_CASE("exact hypervolume: two overlapping boxes give 0.3125") {
    const std::vector<std::vector<double>> pts{{0.25, 0.75}, {0.75, 0.25}};
    CHECK(hypervolume_exact(pts, 1.0) == doctest::Approx(0.3125).epsilon(1e-15));
    // single point hand cases
    CHECK(hypervolume_exact({{0.5, 0.5}}, 1.0) == doctest::Approx(0.25));
    CHECK(hypervolume_exact({{0.5, 0.5, 0.5}}, 1.0) == doctest::Approx(0.125));
    // dominated point adds nothing
    CHECK(hypervolume_exact({{0.25, 0.75}, {0.75, 0.25}, {0.8, 0.8}}, 1.0) ==
          doctest::Approx(0.3125));
    // points at or beyond the reference contribute nothing
    CHECK(hypervolume_exact({{1.0, 0.0}}, 1.0) == doctest::Approx(0.0));
    CHECK(hypervolume_exact({}, 1.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS(hypervolume_exact({{0.1, 0.1, 0.1, 0.1, 0.1}}, 1.0), std::invalid_argument);
}

TEST_CASE("monte-carlo hypervolume agrees with the exact sweep in 3-D") {
    RandomStream setgen(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto pts = random_points(8, 3, setgen);
        const double exact = hypervolume_exact(pts, 1.0);
        RandomStream rng(1000 + trial);
        const auto est = hypervolume_mc(pts, 1.0, 200000, rng);
        CHECK(std::fabs(est.value - exact) <= 3.0 * est.std_error + 1e-12);
    }
}

TEST_CASE("monte-carlo hypervolume of the 9-D corner point") {
    const std::vector<std::vector<double>> pts{std::vector<double>(9, 0.5)};
    const double truth = std::pow(0.5, 9.0);
    int inside = 0;
    for (int trial = 0; trial < 100; ++trial) {
        RandomStream rng(trial);
        const auto est = hypervolume_mc(pts, 1.0, 100000, rng);
        if (std::fabs(est.value - truth) <= 3.0 * est.std_error) ++inside;
    }
    CHECK(inside >= 99);
}

TEST_CASE("shared sample sets preserve set-inclusion ordering") {
    RandomStream setgen(8);
    const auto big = random_points(40, 9, setgen);
    const std::vector<std::vector<double>> small(big.begin(), big.begin() + 10);
    for (double c : {0.9, 1.0, 1.1}) {
        RandomStream rng(55);
        HvSampleSet samples(9, c, 50000, rng);
        CHECK(samples.estimate(big).value >= samples.estimate(small).value);
    }
}

TEST_CASE("gd and igd identities") {
    RandomStream rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = random_points(30, 9, rng);
        const auto b = random_points(40, 9, rng);
        const auto bounds = ScalingBounds::from_set(b);
        CHECK(gd(b, b, bounds) == 0.0);
        CHECK(igd(b, b, bounds) == 0.0);
        // bit-exact by construction: one code path
        CHECK(igd(p, b, bounds) == gd(b, p, bounds));
    }
    // hand case: single point at scaled distance 0.5 in one coordinate
    ScalingBounds unit;
    unit.bmin = {0.0, 0.0};
    unit.bmax = {1.0, 1.0};
    CHECK(gd({{0.5, 0.0}}, {{0.0, 0.0}}, unit) == doctest::Approx(0.5));
}

TEST_CASE("contribution counts survivors against the best set") {
    const std::vector<std::vector<double>> best{{0.0, 1.0}, {1.0, 0.0}};
    const std::vector<std::vector<double>> p{{0.0, 1.0}, {0.5, 0.5}, {1.0, 1.0}};
    const auto c = contribution(p, best);
    CHECK(c.size == 3);
    CHECK(c.survivors == 2);  // (1,1) dominated by both best points
    CHECK(c.ratio == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("histogram and quartiles hand cases") {
    // half-open bins [0,0.5) [0.5,1]; the top edge belongs to the last bin
    const auto h = histogram({0.0, 0.1, 0.5, 1.0, 1.0}, 2, 0.0, 1.0);
    CHECK(h == std::vector<std::size_t>{2, 3});
    const auto q = quartiles({0.0, 1.0, 2.0});
    CHECK(q[0] == doctest::Approx(0.0));
    CHECK(q[1] == doctest::Approx(0.5));
    CHECK(q[2] == doctest::Approx(1.0));
    CHECK(q[3] == doctest::Approx(1.5));
    CHECK(q[4] == doctest::Approx(2.0));
    CHECK_THROWS_AS(quartiles({}), std::invalid_argument);
}

TEST_CASE("metrics report serializes to parseable structured text") {
    MetricsReport r;
    r.mc_samples = 1000;
    r.mc_seed = 7;
    r.model_hash = "abc";
    AlgoMetrics a;
    a.name = "nsga2";
    a.size = 10;
    a.survivors = 5;
    a.survivor_ratio = 0.5;
    a.hv.push_back({1.0, 0.25, 0.01, 0.9});
    r.algorithms.push_back(a);
    r.best.name = "best";
    const auto text = metrics_report_json(r);
    const auto j = nlohmann::json::parse(text);
    CHECK(j["mc_samples"] == 1000);
    CHECK(j["algorithms"][0]["name"] == "nsga2");
    CHECK(j["algorithms"][0]["hypervolume"][0]["ratio_vs_best"] == doctest::Approx(0.9));
    CHECK(j["best"]["name"] == "best");
}
