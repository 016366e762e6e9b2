#include "pribench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "pribench/moea_core.hpp"

namespace pribench {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ScalingBounds ScalingBounds::from_set(const std::vector<std::vector<double>>& objectives) {
    if (objectives.empty()) throw std::invalid_argument("ScalingBounds: empty set");
    const std::size_t m = objectives[0].size();
    ScalingBounds b;
    b.bmin.assign(m, kInf);
    b.bmax.assign(m, -kInf);
    for (const auto& f : objectives) {
        if (f.size() != m) throw std::invalid_argument("ScalingBounds: inconsistent dimensions");
        for (std::size_t k = 0; k < m; ++k) {
            b.bmin[k] = std::min(b.bmin[k], f[k]);
            b.bmax[k] = std::max(b.bmax[k], f[k]);
        }
    }
    return b;
}

std::vector<double> ScalingBounds::scale(std::span<const double> f) const {
    if (f.size() != bmin.size()) throw std::invalid_argument("ScalingBounds: dimension mismatch");
    std::vector<double> out(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
        const double spread = bmax[k] - bmin[k];
        out[k] = spread > 0.0 ? (f[k] - bmin[k]) / spread : 0.0;
    }
    return out;
}

namespace {

bool sample_dominated(const std::vector<std::vector<double>>& points, const double* s,
                      std::size_t m) {
    for (const auto& p : points) {
        bool dom = true;
        for (std::size_t k = 0; k < m; ++k) {
            if (p[k] > s[k]) {
                dom = false;
                break;
            }
        }
        if (dom) return true;
    }
    return false;
}

std::vector<std::vector<double>> filter_below(const std::vector<std::vector<double>>& points,
                                              double c) {
    std::vector<std::vector<double>> kept;
    for (const auto& p : points) {
        bool below = true;
        for (double v : p)
            if (v >= c) {
                below = false;
                break;
            }
        if (below) kept.push_back(p);
    }
    return kept;
}

}  // namespace

HvEstimate hypervolume_mc(const std::vector<std::vector<double>>& scaled, double c,
                          std::uint64_t samples, RandomStream& rng) {
    if (!(c > 0.0)) throw std::invalid_argument("hypervolume_mc: reference multiplier must be positive");
    if (samples == 0) throw std::invalid_argument("hypervolume_mc: need at least one sample");
    if (scaled.empty()) return {0.0, 0.0, samples};
    const std::size_t m = scaled[0].size();
    const auto points = filter_below(scaled, c);
    std::uint64_t hits = 0;
    std::vector<double> s(m);
    for (std::uint64_t i = 0; i < samples; ++i) {
        for (std::size_t k = 0; k < m; ++k) s[k] = rng.uniform(0.0, c);
        if (!points.empty() && sample_dominated(points, s.data(), m)) ++hits;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    const double vol = std::pow(c, static_cast<double>(m));
    return {vol * p, vol * std::sqrt(p * (1.0 - p) / static_cast<double>(samples)), samples};
}

HvSampleSet::HvSampleSet(std::size_t n_objectives, double c, std::uint64_t samples,
                         RandomStream& rng)
    : m_(n_objectives), c_(c), samples_(samples) {
    if (!(c > 0.0) || samples == 0 || n_objectives == 0)
        throw std::invalid_argument("HvSampleSet: bad configuration");
    data_.resize(samples_ * m_);
    for (double& v : data_) v = rng.uniform(0.0, c);
}

HvEstimate HvSampleSet::estimate(const std::vector<std::vector<double>>& scaled) const {
    const auto points = filter_below(scaled, c_);
    std::uint64_t hits = 0;
    if (!points.empty()) {
        for (std::uint64_t i = 0; i < samples_; ++i)
            if (sample_dominated(points, data_.data() + i * m_, m_)) ++hits;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(samples_);
    const double vol = std::pow(c_, static_cast<double>(m_));
    return {vol * p, vol * std::sqrt(p * (1.0 - p) / static_cast<double>(samples_)), samples_};
}

double hypervolume_exact(const std::vector<std::vector<double>>& scaled, double c) {
    if (scaled.empty()) return 0.0;
    const std::size_t m = scaled[0].size();
    if (m > 4)
        throw std::invalid_argument("hypervolume_exact: supported only for up to 4 objectives");
    const auto points = filter_below(scaled, c);
    if (points.empty()) return 0.0;

    // breakpoints per dimension: point coordinates plus the reference
    std::vector<std::vector<double>> cuts(m);
    for (std::size_t k = 0; k < m; ++k) {
        for (const auto& p : points) cuts[k].push_back(p[k]);
        cuts[k].push_back(c);
        std::sort(cuts[k].begin(), cuts[k].end());
        cuts[k].erase(std::unique(cuts[k].begin(), cuts[k].end()), cuts[k].end());
    }

    std::vector<std::size_t> idx(m, 0);
    double volume = 0.0;
    while (true) {
        double cell = 1.0;
        bool valid = true;
        std::vector<double> corner(m);
        for (std::size_t k = 0; k < m; ++k) {
            if (idx[k] + 1 >= cuts[k].size()) {
                valid = false;
                break;
            }
            corner[k] = cuts[k][idx[k]];
            cell *= cuts[k][idx[k] + 1] - cuts[k][idx[k]];
        }
        if (valid && sample_dominated(points, corner.data(), m)) volume += cell;
        // advance the multi-index
        std::size_t k = 0;
        while (k < m) {
            if (++idx[k] + 1 < cuts[k].size()) break;
            idx[k] = 0;
            ++k;
        }
        if (k == m) break;
    }
    return volume;
}

double gd(const std::vector<std::vector<double>>& p, const std::vector<std::vector<double>>& b,
          const ScalingBounds& bounds) {
    if (p.empty() || b.empty()) throw std::invalid_argument("gd: empty point set");
    std::vector<std::vector<double>> sb;
    sb.reserve(b.size());
    for (const auto& f : b) sb.push_back(bounds.scale(f));
    double total = 0.0;
    for (const auto& f : p) {
        const auto sf = bounds.scale(f);
        double best = kInf;
        for (const auto& g : sb) {
            double acc = 0.0;
            for (std::size_t k = 0; k < sf.size(); ++k) {
                const double d = sf[k] - g[k];
                acc += d * d;
                if (acc >= best) break;
            }
            best = std::min(best, acc);
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(p.size());
}

double igd(const std::vector<std::vector<double>>& p, const std::vector<std::vector<double>>& b,
           const ScalingBounds& bounds) {
    return gd(b, p, bounds);
}

Contribution contribution(const std::vector<std::vector<double>>& p,
                          const std::vector<std::vector<double>>& best) {
    Contribution c;
    c.size = p.size();
    for (const auto& f : p) {
        bool dominated = false;
        for (const auto& g : best) {
            if (dominates(g, f)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) ++c.survivors;
    }
    c.ratio = c.size > 0 ? static_cast<double>(c.survivors) / static_cast<double>(c.size) : 0.0;
    return c;
}

std::vector<std::size_t> histogram(const std::vector<double>& values, std::size_t bins,
                                   double lo, double hi) {
    if (bins == 0 || !(hi > lo)) throw std::invalid_argument("histogram: bad bin layout");
    std::vector<std::size_t> counts(bins, 0);
    for (double v : values) {
        if (v < lo || v > hi) continue;
        auto b = static_cast<std::size_t>((v - lo) / (hi - lo) * static_cast<double>(bins));
        if (b >= bins) b = bins - 1;
        ++counts[b];
    }
    return counts;
}

std::array<double, 5> quartiles(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("quartiles: empty input");
    std::sort(values.begin(), values.end());
    auto at = [&](double q) {
        const double pos = q * static_cast<double>(values.size() - 1);
        const auto i = static_cast<std::size_t>(std::floor(pos));
        const double frac = pos - static_cast<double>(i);
        if (i + 1 >= values.size()) return values.back();
        return values[i] * (1.0 - frac) + values[i + 1] * frac;
    };
    return {values.front(), at(0.25), at(0.5), at(0.75), values.back()};
}

std::string metrics_report_json(const MetricsReport& report) {
    nlohmann::json j;
    j["mc_samples"] = report.mc_samples;
    j["mc_seed"] = report.mc_seed;
    j["model_hash"] = report.model_hash;
    auto algo_json = [](const AlgoMetrics& a) {
        nlohmann::json e;
        e["name"] = a.name;
        e["size"] = a.size;
        e["survivors"] = a.survivors;
        e["survivor_ratio"] = a.survivor_ratio;
        e["gd"] = a.gd;
        e["igd"] = a.igd;
        e["hypervolume"] = nlohmann::json::array();
        for (const auto& h : a.hv) {
            nlohmann::json hj;
            hj["c"] = h.c;
            hj["value"] = h.value;
            hj["std_error"] = h.std_error;
            hj["ratio_vs_best"] = h.ratio_vs_best;
            e["hypervolume"].push_back(hj);
        }
        return e;
    };
    j["best"] = algo_json(report.best);
    j["algorithms"] = nlohmann::json::array();
    for (const auto& a : report.algorithms) j["algorithms"].push_back(algo_json(a));
    return j.dump(2) + "\n";
}

}  // namespace pribench
