#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pribench/metrics.hpp"
#include "pribench/radar_model.hpp"

namespace pribench {

// Point sets evaluated under different model configurations are not
// comparable; mixing them is a hard error (CLI exit code 3).
class IncompatibleInputs : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EvaluationRecord {
    std::uint32_t run = 0;
    std::string algo;
    std::uint64_t eval_index = 0;
    std::vector<int> decision;  // quantized, tenth-microsecond integers
    std::array<double, 8> margins{};
    double dwell_ms = 0.0;

    std::vector<double> minimized() const {
        return {-margins[0], -margins[1], -margins[2], -margins[3],
                -margins[4], -margins[5], -margins[6], -margins[7], dwell_ms};
    }
};

struct PointSet {
    std::vector<EvaluationRecord> records;
    std::string model_hash;
    std::vector<std::string> provenance;
    bool nd_filtered = false;

    std::vector<std::vector<double>> objectives() const;
};

// Indices of the non-dominated subset, stable input order.
// Production path: lexicographic-sort divide and conquer. The sequential
// scan is the cross-check fallback; both must agree.
std::vector<std::size_t> nd_indices_dnc(const std::vector<std::vector<double>>& objectives);
std::vector<std::size_t> nd_indices_scan(const std::vector<std::vector<double>>& objectives);

PointSet nd_filter(const PointSet& s);

// Union of the inputs deduplicated by quantized decision vector, then
// ND-filtered. Throws IncompatibleInputs on model hash mismatch.
PointSet merge_best(const std::vector<PointSet>& sets);

PointSet realistic_filter(const PointSet& s, const RadarParams& params);
PointSet dwell_window_filter(const PointSet& s, double lo_ms, double hi_ms);

// Record minimizing the scaled objective-space Euclidean distance to the
// query; ties go to the lowest eval_index. Returns (record index, distance).
std::pair<std::size_t, double> closest_point(const PointSet& s,
                                             const std::vector<double>& objective_query,
                                             const ScalingBounds& bounds);

// --- files -----------------------------------------------------------------

// Evaluation log: '#'-prefixed metadata, then
// run,algo,eval,x1..xD,m1..m8,dwell_ms with integer decisions and
// 17-significant-digit objective values.
void write_log(const std::string& path, const std::vector<EvaluationRecord>& records,
               const std::string& model_hash, std::uint64_t seed);
std::vector<EvaluationRecord> read_log(const std::string& path);

// Point-set file: metadata block (hash, units, provenance, ND flag) plus the
// same record rows. Export-then-import is bit-exact.
void write_point_set(const std::string& path, const PointSet& s);
PointSet read_point_set(const std::string& path);

// External PRI lists: '# units: 0.1us' (or 'us') header, one PRI vector per
// row, whitespace- or comma-separated. Rows are evaluated under the given
// model to produce full records.
PointSet import_external(const std::string& path, const RadarParams& params,
                         const EvaluationConfig& config);

// FNV-1a over the canonical parameter serialization.
std::string model_config_hash(const RadarParams& params, const EvaluationConfig& config);

std::string format_g17(double v);

}  // namespace pribench
