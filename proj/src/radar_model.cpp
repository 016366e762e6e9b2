#include "pribench/radar_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pribench {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double median_of(std::vector<double> v) {
    const std::size_t n = v.size();
    if (n == 0) throw std::invalid_argument("median of empty set");
    std::sort(v.begin(), v.end());
    if (n % 2 == 1) return v[n / 2];
    return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double kth_smallest(std::vector<double>& scratch, int k) {
    std::nth_element(scratch.begin(), scratch.begin() + (k - 1), scratch.end());
    return scratch[static_cast<std::size_t>(k - 1)];
}

}  // namespace

void RadarParams::validate() const {
    if (!(pri_min_s > 0.0 && pri_min_s < pri_max_s))
        throw std::invalid_argument("RadarParams: need 0 < pri_min < pri_max");
    if (!(pri_quantum_s > 0.0 && compressed_pulsewidth_s > 0.0 && recovery_time_s > 0.0))
        throw std::invalid_argument("RadarParams: times must be positive");
    if (!(range_resolution_m > 0.0 && max_range_m > 0.0 && max_velocity_mps > 0.0))
        throw std::invalid_argument("RadarParams: lengths and speeds must be positive");
    if (!(duty_cycle > 0.0 && duty_cycle < 1.0))
        throw std::invalid_argument("RadarParams: duty cycle must be in (0,1)");
    if (coincidence < 2)
        throw std::invalid_argument("RadarParams: coincidence must be >= 2");
    if (fft_size < 1 || max_dwell_s <= 0.0 || speed_of_light_mps <= 0.0)
        throw std::invalid_argument("RadarParams: invalid fft size, dwell budget or c");
}

void EvaluationConfig::validate() const {
    if (range_cell_stride < 1)
        throw std::invalid_argument("EvaluationConfig: range_cell_stride must be >= 1");
    if (!(velocity_grid_step_mps > 0.0))
        throw std::invalid_argument("EvaluationConfig: velocity_grid_step must be positive");
    if (notch_bins < 1 || target_extent_cells < 1)
        throw std::invalid_argument("EvaluationConfig: notch_bins and target_extent_cells must be >= 1");
    if (range_tolerance_cap_m < 0.0 || velocity_tolerance_cap_mps < 0.0)
        throw std::invalid_argument("EvaluationConfig: tolerance caps must be >= 0");
    if (min_range_m < 0.0 || min_velocity_mps < 0.0)
        throw std::invalid_argument("EvaluationConfig: evaluation floor must be >= 0");
}

PriVector PriVector::quantize(const std::vector<double>& x) {
    const int d = static_cast<int>(x.size());
    if (d < kMinPriDim || d > kMaxPriDim)
        throw std::invalid_argument("PriVector: dimension must be in [4, 12]");
    std::vector<int> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]))
            throw std::invalid_argument("PriVector: entries must be finite");
        // round half up
        const int v = static_cast<int>(std::floor(x[i] + 0.5));
        g[i] = std::clamp(v, kPriLoTenthUs, kPriHiTenthUs);
    }
    return PriVector(std::move(g));
}

PriVector PriVector::from_grid(std::vector<int> tenth_us) {
    const int d = static_cast<int>(tenth_us.size());
    if (d < kMinPriDim || d > kMaxPriDim)
        throw std::invalid_argument("PriVector: dimension must be in [4, 12]");
    for (int v : tenth_us)
        if (v < kPriLoTenthUs || v > kPriHiTenthUs)
            throw std::invalid_argument("PriVector: entries must be in [500, 1500]");
    return PriVector(std::move(tenth_us));
}

FoldModuli fold_moduli(const PriVector& x, const RadarParams& params) {
    FoldModuli fm;
    fm.range_m.reserve(static_cast<std::size_t>(x.dim()));
    fm.velocity_mps.reserve(static_cast<std::size_t>(x.dim()));
    for (int n = 1; n <= x.dim(); ++n) {
        const double pri = x.seconds(n - 1);
        fm.range_m.push_back(params.speed_of_light_mps * pri / 2.0);
        fm.velocity_mps.push_back(params.wavelength_m(n) / (2.0 * pri));
    }
    return fm;
}

double dwell_time_s(const PriVector& x, const RadarParams& params) {
    const double round_trip = 2.0 * params.max_range_m / params.speed_of_light_mps;
    double dwell = 0.0;
    for (int i = 0; i < x.dim(); ++i) {
        const double pri = x.seconds(i);
        const double charge_pulses = std::ceil(round_trip / pri);
        dwell += (params.fft_size + charge_pulses) * pri;
    }
    return dwell;
}

double folded_distance(double a, double b, double modulus) {
    if (!(modulus > 0.0))
        throw std::invalid_argument("folded_distance: modulus must be positive");
    const double d = std::fmod(std::fabs(a - b), modulus);
    return std::min(d, modulus - d);
}

double decodability_tolerance(const std::vector<double>& moduli, double true_pos,
                              double lo, double hi, double grid_step, double extent,
                              double cap, int coincidence) {
    if (static_cast<int>(moduli.size()) < coincidence)
        throw std::invalid_argument("decodability_tolerance: need at least `coincidence` moduli");
    if (!(grid_step > 0.0))
        throw std::invalid_argument("decodability_tolerance: grid step must be positive");
    if (true_pos < lo || true_pos > hi)
        throw std::invalid_argument("decodability_tolerance: true position outside domain");

    // the epsilon keeps an exact multiple of the step from losing its last
    // cell to floating-point rounding
    const auto n_cells = static_cast<long>(std::floor((hi - lo) / grid_step + 1e-9)) + 1;
    std::vector<double> residuals(moduli.size());
    double best = cap;
    for (long j = 0; j < n_cells; ++j) {
        const double g = lo + static_cast<double>(j) * grid_step;
        if (std::fabs(g - true_pos) <= extent) continue;
        for (std::size_t i = 0; i < moduli.size(); ++i)
            residuals[i] = folded_distance(g, true_pos, moduli[i]);
        best = std::min(best, kth_smallest(residuals, coincidence));
    }
    return best;
}

std::vector<double> decodability_all_cells(const std::vector<double>& moduli,
                                           std::size_t n_cells, double step,
                                           int extent_cells, double cap,
                                           int coincidence) {
    if (static_cast<int>(moduli.size()) < coincidence)
        throw std::invalid_argument("decodability_all_cells: need at least `coincidence` moduli");
    if (!(step > 0.0) || n_cells == 0)
        throw std::invalid_argument("decodability_all_cells: bad grid");

    // Folded residuals depend on the offset |g - p| only, so the ghost
    // activation level is one value per offset k*step; a prefix minimum then
    // gives each cell the best ghost within its domain window.
    std::vector<double> prefix(n_cells, cap);
    std::vector<double> residuals(moduli.size());
    double running = cap;
    for (std::size_t k = 1; k < n_cells; ++k) {
        if (static_cast<int>(k) > extent_cells) {
            const double delta = static_cast<double>(k) * step;
            for (std::size_t i = 0; i < moduli.size(); ++i)
                residuals[i] = folded_distance(delta, 0.0, moduli[i]);
            running = std::min(running, kth_smallest(residuals, coincidence));
        }
        prefix[k] = running;
    }
    std::vector<double> out(n_cells);
    for (std::size_t i = 0; i < n_cells; ++i)
        out[i] = std::min(prefix[i], prefix[n_cells - 1 - i]);
    return out;
}

std::vector<std::pair<double, double>> blind_intervals(double pri_s, int prf_index,
                                                       BlindDomain domain,
                                                       const RadarParams& params,
                                                       const EvaluationConfig& config) {
    if (!(pri_s > 0.0))
        throw std::invalid_argument("blind_intervals: PRI must be positive");
    std::vector<std::pair<double, double>> iv;
    if (domain == BlindDomain::Range) {
        const double scale = params.speed_of_light_mps / 2.0;  // fast time -> range
        const double lo_t = -params.compressed_pulsewidth_s;
        const double hi_t = params.duty_cycle * pri_s + params.recovery_time_s;
        for (int k = 0;; ++k) {
            const double lo_r = (k * pri_s + lo_t) * scale;
            const double hi_r = (k * pri_s + hi_t) * scale;
            if (lo_r > params.max_range_m) break;
            if (hi_r < 0.0) continue;
            iv.emplace_back(std::max(0.0, lo_r), std::min(params.max_range_m, hi_r));
        }
    } else {
        const double vu = params.wavelength_m(prf_index) / (2.0 * pri_s);
        const double w = config.notch_bins * vu / params.fft_size;
        const double vmax = params.max_velocity_mps;
        const auto jmax = static_cast<long>(std::ceil((vmax + w) / vu));
        for (long j = -jmax; j <= jmax; ++j) {
            const double lo = static_cast<double>(j) * vu - w;
            const double hi = static_cast<double>(j) * vu + w;
            if (hi < -vmax || lo > vmax) continue;
            iv.emplace_back(std::max(-vmax, lo), std::min(vmax, hi));
        }
    }
    std::sort(iv.begin(), iv.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& [lo, hi] : iv) {
        if (!merged.empty() && lo <= merged.back().second)
            merged.back().second = std::max(merged.back().second, hi);
        else
            merged.emplace_back(lo, hi);
    }
    return merged;
}

double interval_clearance(const std::vector<std::pair<double, double>>& intervals, double p) {
    if (intervals.empty()) return kInf;
    // first interval starting after p
    auto it = std::upper_bound(intervals.begin(), intervals.end(), p,
                               [](double v, const std::pair<double, double>& iv) { return v < iv.first; });
    double clearance = kInf;
    if (it != intervals.end()) clearance = std::min(clearance, it->first - p);
    if (it != intervals.begin()) {
        const auto& prev = *(it - 1);
        if (p <= prev.second) return 0.0;  // inside
        clearance = std::min(clearance, p - prev.second);
    }
    return clearance;
}

double blindness_tolerance(const std::vector<double>& clearances, int coincidence) {
    if (static_cast<int>(clearances.size()) < coincidence)
        throw std::invalid_argument("blindness_tolerance: need at least `coincidence` clearances");
    std::vector<double> scratch(clearances);
    std::nth_element(scratch.begin(), scratch.begin() + (coincidence - 1), scratch.end(),
                     std::greater<double>());
    return scratch[static_cast<std::size_t>(coincidence - 1)];
}

ObjectiveVector evaluate(const PriVector& x, const RadarParams& params,
                         const EvaluationConfig& config) {
    params.validate();
    config.validate();
    const int d = x.dim();
    if (d < params.coincidence)
        throw std::invalid_argument("evaluate: fewer PRIs than the coincidence requirement");
    const FoldModuli fm = fold_moduli(x, params);

    // --- range grid: decimated 75 m cell centres, full grid as ghost
    //     candidates, statistics over cells past the evaluation floor
    const double rstep = params.range_resolution_m * config.range_cell_stride;
    std::vector<double> rpos;
    for (long j = 0;; j += config.range_cell_stride) {
        const double p = (static_cast<double>(j) + 0.5) * params.range_resolution_m;
        if (p >= params.max_range_m) break;
        rpos.push_back(p);
    }
    const std::size_t n_r = rpos.size();
    std::size_t first_r = 0;
    while (first_r < n_r && rpos[first_r] < config.min_range_m) ++first_r;
    if (first_r >= n_r)
        throw std::invalid_argument("evaluate: range grid has no cells past min_range");

    const double rcap = config.range_tolerance_cap_m > 0.0
                            ? config.range_tolerance_cap_m
                            : 0.5 * *std::min_element(fm.range_m.begin(), fm.range_m.end());
    const std::vector<double> rdec_all = decodability_all_cells(
        fm.range_m, n_r, rstep, config.target_extent_cells, rcap, params.coincidence);

    std::vector<std::vector<std::pair<double, double>>> riv(static_cast<std::size_t>(d));
    for (int n = 1; n <= d; ++n)
        riv[static_cast<std::size_t>(n - 1)] =
            blind_intervals(x.seconds(n - 1), n, BlindDomain::Range, params, config);

    std::vector<double> rdec, rblind, clear(static_cast<std::size_t>(d));
    rdec.reserve(n_r - first_r);
    rblind.reserve(n_r - first_r);
    for (std::size_t i = first_r; i < n_r; ++i) {
        rdec.push_back(rdec_all[i]);
        for (std::size_t n = 0; n < static_cast<std::size_t>(d); ++n)
            clear[n] = interval_clearance(riv[n], rpos[i]);
        rblind.push_back(std::min(rcap, blindness_tolerance(clear, params.coincidence)));
    }

    // --- velocity grid over [-vmax, vmax]
    const double vstep = config.velocity_grid_step_mps;
    const double vmax = params.max_velocity_mps;
    const auto n_v = static_cast<std::size_t>(std::floor(2.0 * vmax / vstep)) + 1;
    const double vcap =
        config.velocity_tolerance_cap_mps > 0.0
            ? config.velocity_tolerance_cap_mps
            : 0.5 * *std::min_element(fm.velocity_mps.begin(), fm.velocity_mps.end());
    const std::vector<double> vdec_all = decodability_all_cells(
        fm.velocity_mps, n_v, vstep, config.target_extent_cells, vcap, params.coincidence);

    std::vector<std::vector<std::pair<double, double>>> viv(static_cast<std::size_t>(d));
    for (int n = 1; n <= d; ++n)
        viv[static_cast<std::size_t>(n - 1)] =
            blind_intervals(x.seconds(n - 1), n, BlindDomain::Velocity, params, config);

    std::vector<double> vdec, vblind;
    bool any_v = false;
    for (std::size_t j = 0; j < n_v; ++j) {
        const double v = -vmax + static_cast<double>(j) * vstep;
        if (std::fabs(v) < config.min_velocity_mps) continue;
        any_v = true;
        vdec.push_back(vdec_all[j]);
        for (std::size_t n = 0; n < static_cast<std::size_t>(d); ++n)
            clear[n] = interval_clearance(viv[n], v);
        vblind.push_back(std::min(vcap, blindness_tolerance(clear, params.coincidence)));
    }
    if (!any_v)
        throw std::invalid_argument("evaluate: velocity grid has no cells past min_velocity");

    ObjectiveVector out;
    out.margins[0] = median_of(rdec);
    out.margins[1] = median_of(vdec);
    out.margins[2] = median_of(rblind);
    out.margins[3] = median_of(vblind);
    out.margins[4] = *std::min_element(rdec.begin(), rdec.end());
    out.margins[5] = *std::min_element(vdec.begin(), vdec.end());
    out.margins[6] = *std::min_element(rblind.begin(), rblind.end());
    out.margins[7] = *std::min_element(vblind.begin(), vblind.end());
    out.dwell_ms = dwell_time_s(x, params) * 1.0e3;
    return out;
}

ObjectiveVector evaluate_raw(const std::vector<double>& x, const RadarParams& params,
                             const EvaluationConfig& config) {
    return evaluate(PriVector::quantize(x), params, config);
}

bool is_realistic(const ObjectiveVector& v, const RadarParams& params) {
    for (double m : v.margins)
        if (!(m > 0.0)) return false;
    return v.dwell_ms < params.max_dwell_s * 1.0e3;
}

}  // namespace pribench
