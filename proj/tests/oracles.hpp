#pragma once

// Independent brute-force reference implementations used only by tests.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace oracles {

// O(n^2) non-dominated filter, minimization. Deliberately avoids the library's
// dominance helper.
inline std::vector<std::size_t> brute_front(const std::vector<std::vector<double>>& objs) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < objs.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < objs.size() && !dominated; ++j) {
            if (i == j) continue;
            bool all_le = true, any_lt = false;
            for (std::size_t k = 0; k < objs[i].size(); ++k) {
                if (objs[j][k] > objs[i][k]) all_le = false;
                if (objs[j][k] < objs[i][k]) any_lt = true;
            }
            dominated = all_le && any_lt;
        }
        if (!dominated) out.push_back(i);
    }
    return out;
}

inline double folded(double a, double b, double modulus) {
    const double d = std::fmod(std::fabs(a - b), modulus);
    return std::min(d, modulus - d);
}

// Epsilon-scan decodability oracle: smallest measurement error eps (scanned
// over every realizable residual value) at which some ghost cell collects at
// least `coincidence` folded matches, capped at `cap`.
inline double eps_scan_decodability(const std::vector<double>& moduli, double true_pos,
                                    double lo, double hi, double step, double extent,
                                    double cap, int coincidence) {
    std::vector<double> ghosts;
    // same grid convention as the library: exact multiples of the step keep
    // their last cell despite rounding
    const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (long j = 0; j < n; ++j) {
        const double g = lo + static_cast<double>(j) * step;
        if (std::fabs(g - true_pos) > extent) ghosts.push_back(g);
    }
    std::vector<double> candidates{cap};
    for (double g : ghosts)
        for (double m : moduli) candidates.push_back(folded(g, true_pos, m));
    std::sort(candidates.begin(), candidates.end());
    for (double eps : candidates) {
        if (eps > cap) break;
        for (double g : ghosts) {
            int hits = 0;
            for (double m : moduli)
                if (folded(g, true_pos, m) <= eps) ++hits;
            if (hits >= coincidence) return eps;
        }
    }
    return cap;
}

// Delta-scan blindness oracle: largest clearance value delta such that at
// least `coincidence` channels stay clear of blindness up to delta.
inline double delta_scan_blindness(const std::vector<double>& clearances, int coincidence) {
    std::vector<double> sorted(clearances);
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    double best = 0.0;
    for (double delta : sorted) {
        std::size_t cnt = 0;
        for (double c : clearances)
            if (c >= delta) ++cnt;
        if (cnt >= static_cast<std::size_t>(coincidence)) best = std::max(best, delta);
    }
    return best;
}

}  // namespace oracles
