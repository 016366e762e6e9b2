#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "pribench/archive.hpp"
#include "pribench/config_io.hpp"
#include "pribench/random.hpp"
#include "oracles.hpp"

using namespace pribench;
namespace fs = std::filesystem;

namespace {

std::vector<std::vector<double>> random_points(std::size_t n, std::size_t m, RandomStream& rng) {
    std::vector<std::vector<double>> pts(n, std::vector<double>(m));
    for (auto& p : pts)
        for (auto& v : p) v = rng.uniform();
    return pts;
}

EvaluationRecord make_record(const std::vector<double>& obj, std::uint64_t eval_index,
                             int first_pri = 600) {
    EvaluationRecord r;
    r.run = 0;
    r.algo = "synthetic";
    r.eval_index = eval_index;
    r.decision = {first_pri, 700, 800, 900};
    for (std::size_t k = 0; k < 8; ++k) r.margins[k] = -obj[k];
    r.dwell_ms = obj[8];
    return r;
}

PointSet make_set(const std::vector<std::vector<double>>& objs, const std::string& hash = "h",
                  int base_pri = 500) {
    PointSet s;
    s.model_hash = hash;
    for (std::size_t i = 0; i < objs.size(); ++i)
        s.records.push_back(make_record(objs[i], i, base_pri + static_cast<int>(i)));
    return s;
}

fs::path tmp_dir() {
    const auto dir = fs::temp_directory_path() / "pribench_archive_test";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("nd filters agree with each other and with brute force") {
    RandomStream rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const auto pts = random_points(500, 9, rng);
        const auto scan = nd_indices_scan(pts);
        const auto dnc = nd_indices_dnc(pts);
        CHECK(scan == dnc);
        CHECK(scan == oracles::brute_front(pts));
    }
    // duplicates are all non-dominated (no strict improvement anywhere)
    const std::vector<std::vector<double>> dup{{1.0, 2.0}, {1.0, 2.0}};
    CHECK(nd_indices_scan(dup).size() == 2);
    CHECK(nd_indices_dnc(dup).size() == 2);
}

TEST_CASE("nd_filter is idempotent and removes dominated records") {
    RandomStream rng(14);
    auto s = make_set(random_points(300, 9, rng));
    const auto once = nd_filter(s);
    CHECK(once.nd_filtered);
    const auto twice = nd_filter(once);
    REQUIRE(twice.records.size() == once.records.size());
    for (std::size_t i = 0; i < once.records.size(); ++i)
        CHECK(twice.records[i].minimized() == once.records[i].minimized());
    // no dominated pair remains
    const auto objs = once.objectives();
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t j = 0; j < objs.size(); ++j)
            if (i != j) CHECK_FALSE(dominates(objs[i], objs[j]));
}

TEST_CASE("merge_best unions, deduplicates and refuses mixed models") {
    RandomStream rng(15);
    auto a = nd_filter(make_set(random_points(100, 9, rng), "h", 500));
    auto b = nd_filter(make_set(random_points(100, 9, rng), "h", 700));

    const auto only_a = merge_best({a});
    CHECK(only_a.records.size() == a.records.size());

    const auto ab = merge_best({a, b});
    const auto ba = merge_best({b, a});
    CHECK(ab.records.size() == ba.records.size());
    CHECK(ab.records.size() <= a.records.size() + b.records.size());

    // order independence as a set of decision vectors
    auto decisions = [](const PointSet& s) {
        std::vector<std::vector<int>> d;
        for (const auto& r : s.records) d.push_back(r.decision);
        std::sort(d.begin(), d.end());
        return d;
    };
    CHECK(decisions(ab) == decisions(ba));

    // duplicate decision vectors collapse before filtering
    const auto aa = merge_best({a, a});
    CHECK(aa.records.size() == a.records.size());

    b.model_hash = "other";
    CHECK_THROWS_AS(merge_best({a, b}), IncompatibleInputs);
    CHECK_THROWS_AS(merge_best({}), std::invalid_argument);
}

TEST_CASE("every merged-set member either survives or is dominated") {
    RandomStream rng(16);
    auto a = nd_filter(make_set(random_points(200, 9, rng), "h", 500));
    auto b = nd_filter(make_set(random_points(200, 9, rng), "h", 800));
    const auto best = merge_best({a, b});
    const auto best_objs = best.objectives();
    for (const auto* s : {&a, &b}) {
        for (const auto& r : s->records) {
            const auto f = r.minimized();
            bool in_best = false, dominated = false;
            for (const auto& g : best_objs) {
                if (g == f) in_best = true;
                if (dominates(g, f)) dominated = true;
            }
            CHECK((in_best || dominated));
        }
    }
}

TEST_CASE("realistic and dwell filters commute") {
    RadarParams params;
    RandomStream rng(17);
    PointSet s;
    s.model_hash = "h";
    for (int i = 0; i < 200; ++i) {
        EvaluationRecord r;
        r.run = 0;
        r.algo = "synthetic";
        r.eval_index = static_cast<std::uint64_t>(i);
        r.decision = {600, 700, 800, 900};
        for (auto& m : r.margins) m = rng.uniform(-1.0, 10.0);
        r.dwell_ms = rng.uniform(40.0, 60.0);
        s.records.push_back(r);
    }
    const auto rw = dwell_window_filter(realistic_filter(s, params), 45.4, 46.5);
    const auto wr = realistic_filter(dwell_window_filter(s, 45.4, 46.5), params);
    REQUIRE(rw.records.size() == wr.records.size());
    for (std::size_t i = 0; i < rw.records.size(); ++i)
        CHECK(rw.records[i].eval_index == wr.records[i].eval_index);
    for (const auto& r : rw.records) {
        CHECK(r.dwell_ms >= 45.4);
        CHECK(r.dwell_ms <= 46.5);
        ObjectiveVector v;
        v.margins = r.margins;
        v.dwell_ms = r.dwell_ms;
        CHECK(is_realistic(v, params));
    }
    CHECK(dwell_window_filter(s, 0.0, 1e300).records.size() == s.records.size());
    CHECK(dwell_window_filter(s, 0.0, 1.0).records.empty());
    CHECK_THROWS_AS(dwell_window_filter(s, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("closest_point matches a linear-scan oracle and breaks ties by eval index") {
    RandomStream rng(18);
    const auto objs = random_points(100, 9, rng);
    auto s = make_set(objs);
    const auto bounds = ScalingBounds::from_set(objs);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> q(9);
        for (auto& v : q) v = rng.uniform();
        const auto [idx, dist] = closest_point(s, q, bounds);
        // oracle
        std::size_t best = 0;
        double best_d = 1e300;
        for (std::size_t i = 0; i < objs.size(); ++i) {
            const auto sf = bounds.scale(objs[i]);
            const auto sq = bounds.scale(q);
            double acc = 0.0;
            for (std::size_t k = 0; k < 9; ++k) acc += (sf[k] - sq[k]) * (sf[k] - sq[k]);
            if (std::sqrt(acc) < best_d) {
                best_d = std::sqrt(acc);
                best = i;
            }
        }
        CHECK(idx == best);
        CHECK(dist == doctest::Approx(best_d));
    }
    // member query has distance zero
    const auto [self_idx, self_dist] = closest_point(s, objs[42], bounds);
    CHECK(self_idx == 42);
    CHECK(self_dist == doctest::Approx(0.0));
    // tie-break: duplicate objective vectors, later eval_index loses
    auto t = make_set({objs[0], objs[0]});
    t.records[0].eval_index = 9;
    t.records[1].eval_index = 2;
    CHECK(closest_point(t, objs[0], bounds).first == 1);
}

TEST_CASE("log files round-trip bit-exactly") {
    RandomStream rng(19);
    std::vector<EvaluationRecord> records;
    for (int i = 0; i < 50; ++i) {
        std::vector<double> obj(9);
        for (auto& v : obj) v = rng.uniform(-1000.0, 1000.0) / 3.0;
        records.push_back(make_record(obj, static_cast<std::uint64_t>(i)));
    }
    const auto path = (tmp_dir() / "roundtrip.csv").string();
    write_log(path, records, "deadbeef", 77);
    const auto back = read_log(path);
    REQUIRE(back.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(back[i].run == records[i].run);
        CHECK(back[i].algo == records[i].algo);
        CHECK(back[i].eval_index == records[i].eval_index);
        CHECK(back[i].decision == records[i].decision);
        for (std::size_t k = 0; k < 8; ++k) CHECK(back[i].margins[k] == records[i].margins[k]);
        CHECK(back[i].dwell_ms == records[i].dwell_ms);
    }
}

TEST_CASE("point-set files keep metadata and records") {
    RandomStream rng(20);
    auto s = nd_filter(make_set(random_points(60, 9, rng), "cafe1234"));
    s.provenance = {"runA.csv", "runB.csv"};
    const auto path = (tmp_dir() / "set.points").string();
    write_point_set(path, s);
    const auto back = read_point_set(path);
    CHECK(back.model_hash == "cafe1234");
    CHECK(back.nd_filtered == s.nd_filtered);
    CHECK(back.provenance == s.provenance);
    REQUIRE(back.records.size() == s.records.size());
    for (std::size_t i = 0; i < s.records.size(); ++i) {
        CHECK(back.records[i].decision == s.records[i].decision);
        CHECK(back.records[i].minimized() == s.records[i].minimized());
    }
}

TEST_CASE("external import evaluates published schedules") {
    RadarParams params;
    EvaluationConfig cfg;
    const auto dir = tmp_dir();

    SUBCASE("tenth-microsecond units") {
        const auto path = (dir / "xs.txt").string();
        std::ofstream(path) << "# units: 0.1us\n510 570 630 660 690 780 900 960\n";
        const auto s = import_external(path, params, cfg);
        REQUIRE(s.records.size() == 1);
        CHECK(s.records[0].decision ==
              std::vector<int>{510, 570, 630, 660, 690, 780, 900, 960});
        CHECK(std::fabs(s.records[0].dwell_ms - 46.5) < 0.1);
        CHECK(s.model_hash == model_config_hash(params, cfg));
    }

    SUBCASE("microsecond units scale up") {
        const auto path = (dir / "xa_us.txt").string();
        std::ofstream(path) << "# units: us\n51.0, 53.0, 59.0, 62.0, 69.0, 72.0, 91.0, 94.0\n";
        const auto s = import_external(path, params, cfg);
        REQUIRE(s.records.size() == 1);
        CHECK(s.records[0].decision ==
              std::vector<int>{510, 530, 590, 620, 690, 720, 910, 940});
        CHECK(std::fabs(s.records[0].dwell_ms - 45.4) < 0.1);
    }

    SUBCASE("errors carry line numbers") {
        const auto p1 = (dir / "no_units.txt").string();
        std::ofstream(p1) << "510 570 630 660\n";
        CHECK_THROWS_WITH_AS(import_external(p1, params, cfg),
                             doctest::Contains("line 1"), std::runtime_error);

        const auto p2 = (dir / "bad_row.txt").string();
        std::ofstream(p2) << "# units: 0.1us\n510 570 abc 660\n";
        CHECK_THROWS_WITH_AS(import_external(p2, params, cfg),
                             doctest::Contains("line 2"), std::runtime_error);

        const auto p3 = (dir / "wrong_units.txt").string();
        std::ofstream(p3) << "# units: 0.1us\n51 57 63 66\n";
        CHECK_THROWS_AS(import_external(p3, params, cfg), std::runtime_error);
    }
}

TEST_CASE("export then import is lossless for evaluated schedules") {
    RadarParams params;
    EvaluationConfig cfg;
    const auto dir = tmp_dir();
    const auto src = (dir / "mix.txt").string();
    std::ofstream(src) << "# units: 0.1us\n510 570 630 660 690 780 900 960\n"
                       << "510 530 590 620 690 720 910 940\n";
    const auto s = import_external(src, params, cfg);
    const auto out = (dir / "mix.points").string();
    write_point_set(out, s);
    const auto back = read_point_set(out);
    REQUIRE(back.records.size() == s.records.size());
    for (std::size_t i = 0; i < s.records.size(); ++i) {
        CHECK(back.records[i].decision == s.records[i].decision);
        CHECK(back.records[i].minimized() == s.records[i].minimized());
    }
}

TEST_CASE("model config hash is stable and configuration-sensitive") {
    RadarParams params;
    EvaluationConfig cfg;
    const auto h1 = model_config_hash(params, cfg);
    const auto h2 = model_config_hash(params, cfg);
    CHECK(h1 == h2);
    CHECK(h1.size() == 16);
    EvaluationConfig cfg2 = cfg;
    cfg2.notch_bins = 4;
    CHECK(model_config_hash(params, cfg2) != h1);
    RadarParams p2 = params;
    p2.duty_cycle = 0.2;
    CHECK(model_config_hash(p2, cfg) != h1);
}

TEST_CASE("g17 formatting round-trips doubles exactly") {
    RandomStream rng(23);
    for (int i = 0; i < 1000; ++i) {
        const double v = (rng.uniform() - 0.5) * std::pow(10.0, rng.uniform(-10.0, 10.0));
        CHECK(std::stod(format_g17(v)) == v);
    }
    CHECK(std::stod(format_g17(0.1)) == 0.1);
}
