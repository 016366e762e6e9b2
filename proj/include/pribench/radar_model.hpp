#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace pribench {

// Physical and waveform parameters of the medium-PRF radar model.
// Defaults reproduce the published characteristics table exactly.
struct RadarParams {
    double base_carrier_hz = 1.0e10;  // PRF n transmits at base - n * carrier_step
    double carrier_step_hz = 3.0e7;   // frequency hop per PRF, so PRF 1 sits at 9.97 GHz
    double pri_min_s = 50.0e-6;
    double pri_max_s = 150.0e-6;
    double pri_quantum_s = 0.1e-6;
    double compressed_pulsewidth_s = 0.5e-6;
    double recovery_time_s = 1.0e-6;
    double range_resolution_m = 75.0;
    int fft_size = 64;
    double duty_cycle = 0.10;
    double max_dwell_s = 50.0e-3;
    double max_velocity_mps = 1500.0;  // symmetric search interval
    double max_range_m = 185200.0;
    int coincidence = 3;  // M-of-N decode requirement
    double speed_of_light_mps = 299792458.0;

    // Wavelength of the n-th PRF, n = 1..D.
    double wavelength_m(int prf_index) const {
        return speed_of_light_mps / (base_carrier_hz - prf_index * carrier_step_hz);
    }

    void validate() const;  // throws std::invalid_argument
};

// Discretization knobs for the objective evaluation. The original model's
// cell granularity is unpublished, so all of it lives here and is recorded
// in every output file through the model config hash.
struct EvaluationConfig {
    int range_cell_stride = 10;          // decimation of the 75 m range grid
    double velocity_grid_step_mps = 5.0; // grid over the +/- max velocity interval
    int notch_bins = 3;                  // mainbeam clutter notch half-width, FFT bins
    int target_extent_cells = 1;         // ghost exclusion window around the true cell
    double range_tolerance_cap_m = 0.0;      // 0 = half the smallest range fold modulus
    double velocity_tolerance_cap_mps = 0.0; // 0 = half the smallest velocity fold modulus
    // Statistics exclude cells that are blind for every PRI by construction:
    // the k=0 eclipse region in range and the j=0 clutter notch in velocity.
    double min_range_m = 2500.0;
    double min_velocity_mps = 25.0;

    void validate() const;
};

inline constexpr int kMinPriDim = 4;
inline constexpr int kMaxPriDim = 12;
inline constexpr int kPriLoTenthUs = 500;
inline constexpr int kPriHiTenthUs = 1500;

// A vector of D PRIs quantized to the 0.1 us grid, each in [500, 1500]
// tenth-microsecond units.
class PriVector {
public:
    // Round half up to the grid, then clamp to [500, 1500].
    static PriVector quantize(const std::vector<double>& x);
    static PriVector from_grid(std::vector<int> tenth_us);

    int dim() const { return static_cast<int>(pris_.size()); }
    int operator[](int i) const { return pris_[static_cast<std::size_t>(i)]; }
    double seconds(int i) const { return pris_[static_cast<std::size_t>(i)] * 1.0e-7; }
    const std::vector<int>& grid() const { return pris_; }

    friend bool operator==(const PriVector& a, const PriVector& b) { return a.pris_ == b.pris_; }

private:
    explicit PriVector(std::vector<int> pris) : pris_(std::move(pris)) {}
    std::vector<int> pris_;
};

// The nine objective values. Margins m1..m8 are the raw maximized tolerances
// (range in meters, velocity in m/s); the minimization view negates them and
// appends the dwell time.
struct ObjectiveVector {
    std::array<double, 8> margins{};  // m1..m4 medians, m5..m8 minima
    double dwell_ms = 0.0;

    std::array<double, 9> minimized() const {
        return {-margins[0], -margins[1], -margins[2], -margins[3],
                -margins[4], -margins[5], -margins[6], -margins[7], dwell_ms};
    }
};

// Ambiguous (fold) moduli per PRF: R_u(n) = c*x_n/2, V_u(n) = lambda_n/(2*x_n).
struct FoldModuli {
    std::vector<double> range_m;
    std::vector<double> velocity_mps;
};

FoldModuli fold_moduli(const PriVector& x, const RadarParams& params);

// Total transmission time: per burst, fft_size pulses plus the space-charging
// wait (round trip from max range) rounded up to whole PRIs.
double dwell_time_s(const PriVector& x, const RadarParams& params);

// Circular distance: min(d, modulus - d) with d = |a - b| mod modulus.
double folded_distance(double a, double b, double modulus);

// Smallest measurement error at which a ghost cell becomes a coincidence-of-k
// match of the true target's folded measurements. Candidate cells g run from
// lo to hi in grid_step increments; cells with |g - true_pos| <= extent are
// excluded. Returns cap when no ghost candidate exists.
double decodability_tolerance(const std::vector<double>& moduli, double true_pos,
                              double lo, double hi, double grid_step, double extent,
                              double cap, int coincidence = 3);

// Decodability tolerance for every cell of a uniform grid (positions
// origin + i*step serve as both true cells and ghost candidates). Equivalent
// to calling decodability_tolerance per cell; shares the per-offset residual
// table so it is O(cells * D) instead of O(cells^2 * D).
std::vector<double> decodability_all_cells(const std::vector<double>& moduli,
                                           std::size_t n_cells, double step,
                                           int extent_cells, double cap,
                                           int coincidence = 3);

enum class BlindDomain { Range, Velocity };

// Disjoint sorted blind intervals for one PRF within the search domain.
// Range: eclipse window per fold (pre-pulse margin + transmit + recovery).
// Velocity: mainbeam clutter notch per Doppler fold.
std::vector<std::pair<double, double>> blind_intervals(double pri_s, int prf_index,
                                                       BlindDomain domain,
                                                       const RadarParams& params,
                                                       const EvaluationConfig& config);

// Distance from p to the nearest blind interval (0 inside one, +inf if none).
double interval_clearance(const std::vector<std::pair<double, double>>& intervals, double p);

// Clutter patch growth at which fewer than `coincidence` PRFs stay clear:
// the coincidence-th largest clearance.
double blindness_tolerance(const std::vector<double>& clearances, int coincidence = 3);

// Full 9-objective evaluation. Pure function of the quantized PRI vector and
// the two configs.
ObjectiveVector evaluate(const PriVector& x, const RadarParams& params,
                         const EvaluationConfig& config);

// Convenience entry point for continuous decision vectors (quantizes first).
ObjectiveVector evaluate_raw(const std::vector<double>& x, const RadarParams& params,
                             const EvaluationConfig& config);

// All eight margins strictly positive and dwell under the budget.
bool is_realistic(const ObjectiveVector& v, const RadarParams& params);

}  // namespace pribench
