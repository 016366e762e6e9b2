#include "pribench/archive.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "pribench/config_io.hpp"
#include "pribench/moea_core.hpp"

namespace pribench {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(line.substr(start));
            break;
        }
        parts.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Lexicographic order of objective vectors; a dominating point always sorts
// before the point it dominates.
std::vector<std::size_t> lex_order(const std::vector<std::vector<double>>& objs) {
    std::vector<std::size_t> order(objs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (objs[a] != objs[b]) return objs[a] < objs[b];
        return a < b;
    });
    return order;
}

// Sequential front of points given in lex order: each point needs checking
// only against already-kept points.
std::vector<std::size_t> front_of_sorted(const std::vector<std::vector<double>>& objs,
                                         const std::vector<std::size_t>& sorted) {
    std::vector<std::size_t> kept;
    for (std::size_t idx : sorted) {
        bool dominated = false;
        for (std::size_t k : kept) {
            if (dominates(objs[k], objs[idx])) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(idx);
    }
    return kept;
}

std::vector<std::size_t> dnc_front(const std::vector<std::vector<double>>& objs,
                                   const std::vector<std::size_t>& sorted) {
    if (sorted.size() <= 128) return front_of_sorted(objs, sorted);
    const std::size_t mid = sorted.size() / 2;
    const auto lo = dnc_front(objs, {sorted.begin(), sorted.begin() + mid});
    const auto hi = dnc_front(objs, {sorted.begin() + mid, sorted.end()});
    std::vector<std::size_t> out = lo;
    for (std::size_t idx : hi) {
        bool dominated = false;
        for (std::size_t k : lo) {
            if (dominates(objs[k], objs[idx])) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(idx);
    }
    return out;
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

void write_header_row(std::ostream& out, std::size_t dim) {
    out << "run,algo,eval";
    for (std::size_t i = 1; i <= dim; ++i) out << ",x" << i;
    for (std::size_t i = 1; i <= 8; ++i) out << ",m" << i;
    out << ",dwell_ms\n";
}

void write_record_row(std::ostream& out, const EvaluationRecord& r) {
    out << r.run << ',' << r.algo << ',' << r.eval_index;
    for (int x : r.decision) out << ',' << x;
    for (double m : r.margins) out << ',' << format_g17(m);
    out << ',' << format_g17(r.dwell_ms) << '\n';
}

EvaluationRecord parse_record_row(const std::string& line, std::size_t line_no) {
    const auto parts = split(line, ',');
    if (parts.size() < 3 + 1 + 9)
        throw std::runtime_error("line " + std::to_string(line_no) + ": too few columns");
    const std::size_t dim = parts.size() - 12;
    EvaluationRecord r;
    try {
        r.run = static_cast<std::uint32_t>(std::stoul(parts[0]));
        r.algo = parts[1];
        r.eval_index = std::stoull(parts[2]);
        r.decision.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) r.decision[i] = std::stoi(parts[3 + i]);
        for (std::size_t i = 0; i < 8; ++i) r.margins[i] = std::stod(parts[3 + dim + i]);
        r.dwell_ms = std::stod(parts[11 + dim]);
    } catch (const std::exception&) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": malformed record");
    }
    return r;
}

}  // namespace

std::vector<std::vector<double>> PointSet::objectives() const {
    std::vector<std::vector<double>> objs;
    objs.reserve(records.size());
    for (const auto& r : records) objs.push_back(r.minimized());
    return objs;
}

std::vector<std::size_t> nd_indices_scan(const std::vector<std::vector<double>>& objectives) {
    auto kept = front_of_sorted(objectives, lex_order(objectives));
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::vector<std::size_t> nd_indices_dnc(const std::vector<std::vector<double>>& objectives) {
    auto kept = dnc_front(objectives, lex_order(objectives));
    std::sort(kept.begin(), kept.end());
    return kept;
}

PointSet nd_filter(const PointSet& s) {
    PointSet out;
    out.model_hash = s.model_hash;
    out.provenance = s.provenance;
    out.nd_filtered = true;
    if (s.records.empty()) return out;
    const auto kept = nd_indices_dnc(s.objectives());
    out.records.reserve(kept.size());
    for (std::size_t idx : kept) out.records.push_back(s.records[idx]);
    return out;
}

PointSet merge_best(const std::vector<PointSet>& sets) {
    if (sets.empty()) throw std::invalid_argument("merge_best: no input sets");
    for (const auto& s : sets)
        if (s.model_hash != sets.front().model_hash)
            throw IncompatibleInputs("merge_best: model config hashes differ");
    PointSet merged;
    merged.model_hash = sets.front().model_hash;
    std::map<std::vector<int>, std::size_t> seen;  // decision vector -> record
    for (const auto& s : sets) {
        for (const auto& src : s.provenance) merged.provenance.push_back(src);
        for (const auto& r : s.records)
            if (seen.emplace(r.decision, merged.records.size()).second)
                merged.records.push_back(r);
    }
    return nd_filter(merged);
}

PointSet realistic_filter(const PointSet& s, const RadarParams& params) {
    PointSet out;
    out.model_hash = s.model_hash;
    out.provenance = s.provenance;
    out.nd_filtered = s.nd_filtered;
    for (const auto& r : s.records) {
        ObjectiveVector v;
        v.margins = r.margins;
        v.dwell_ms = r.dwell_ms;
        if (is_realistic(v, params)) out.records.push_back(r);
    }
    return out;
}

PointSet dwell_window_filter(const PointSet& s, double lo_ms, double hi_ms) {
    if (lo_ms > hi_ms) throw std::invalid_argument("dwell_window_filter: empty window bounds");
    PointSet out;
    out.model_hash = s.model_hash;
    out.provenance = s.provenance;
    out.nd_filtered = s.nd_filtered;
    for (const auto& r : s.records)
        if (r.dwell_ms >= lo_ms && r.dwell_ms <= hi_ms) out.records.push_back(r);
    return out;
}

std::pair<std::size_t, double> closest_point(const PointSet& s,
                                             const std::vector<double>& objective_query,
                                             const ScalingBounds& bounds) {
    if (s.records.empty()) throw std::invalid_argument("closest_point: empty set");
    const auto sq = bounds.scale(objective_query);
    std::size_t best = 0;
    double best_d = kInf;
    for (std::size_t i = 0; i < s.records.size(); ++i) {
        const auto sf = bounds.scale(s.records[i].minimized());
        double acc = 0.0;
        for (std::size_t k = 0; k < sf.size(); ++k) {
            const double d = sf[k] - sq[k];
            acc += d * d;
        }
        const double dist = std::sqrt(acc);
        if (dist < best_d ||
            (dist == best_d && s.records[i].eval_index < s.records[best].eval_index)) {
            best = i;
            best_d = dist;
        }
    }
    return {best, best_d};
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_log(const std::string& path, const std::vector<EvaluationRecord>& records,
               const std::string& model_hash, std::uint64_t seed) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write log file: " + path);
    out << "# pribench-log v1\n";
    out << "# model_hash: " << model_hash << '\n';
    out << "# seed: " << seed << '\n';
    const std::size_t dim = records.empty() ? 0 : records.front().decision.size();
    write_header_row(out, dim);
    for (const auto& r : records) write_record_row(out, r);
}

std::vector<EvaluationRecord> read_log(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open log file: " + path);
    std::vector<EvaluationRecord> records;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;  // column header
            continue;
        }
        records.push_back(parse_record_row(t, line_no));
    }
    return records;
}

void write_point_set(const std::string& path, const PointSet& s) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write point-set file: " + path);
    out << "# pribench-pointset v1\n";
    out << "# model_hash: " << s.model_hash << '\n';
    out << "# units: 0.1us\n";
    out << "# nd_filtered: " << (s.nd_filtered ? 1 : 0) << '\n';
    if (!s.provenance.empty()) {
        out << "# provenance:";
        for (const auto& p : s.provenance) out << ' ' << p;
        out << '\n';
    }
    const std::size_t dim = s.records.empty() ? 0 : s.records.front().decision.size();
    write_header_row(out, dim);
    for (const auto& r : s.records) write_record_row(out, r);
}

PointSet read_point_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open point-set file: " + path);
    PointSet s;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            if (t.find("model_hash:") != std::string::npos)
                s.model_hash = trim(t.substr(t.find("model_hash:") + 11));
            else if (t.find("nd_filtered:") != std::string::npos)
                s.nd_filtered = trim(t.substr(t.find("nd_filtered:") + 12)) == "1";
            else if (t.find("provenance:") != std::string::npos) {
                std::istringstream ss(t.substr(t.find("provenance:") + 11));
                std::string tok;
                while (ss >> tok) s.provenance.push_back(tok);
            }
            continue;
        }
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        s.records.push_back(parse_record_row(t, line_no));
    }
    return s;
}

PointSet import_external(const std::string& path, const RadarParams& params,
                         const EvaluationConfig& config) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open external file: " + path);
    PointSet s;
    s.model_hash = model_config_hash(params, config);
    s.provenance.push_back(path);
    double unit_scale = 0.0;  // multiplier to tenth-microseconds
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            const auto pos = t.find("units");
            if (pos != std::string::npos) {
                std::string u = trim(t.substr(pos + 5));
                if (!u.empty() && u[0] == ':') u = trim(u.substr(1));
                if (u == "0.1us")
                    unit_scale = 1.0;
                else if (u == "us")
                    unit_scale = 10.0;
                else
                    throw std::runtime_error("line " + std::to_string(line_no) +
                                             ": unknown units '" + u + "' (expected 0.1us or us)");
            }
            continue;
        }
        if (unit_scale == 0.0)
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": data before a '# units:' declaration");
        std::replace(t.begin(), t.end(), ',', ' ');
        std::istringstream ss(t);
        std::vector<double> values;
        double v;
        while (ss >> v) values.push_back(v * unit_scale);
        if (!ss.eof())
            throw std::runtime_error("line " + std::to_string(line_no) + ": malformed PRI row");
        if (values.size() < kMinPriDim || values.size() > kMaxPriDim)
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": PRI count outside [4, 12]");
        for (double x : values)
            if (x < kPriLoTenthUs - 0.5 || x > kPriHiTenthUs + 0.5)
                throw std::runtime_error("line " + std::to_string(line_no) +
                                         ": PRI outside [500, 1500] tenth-us; check units header");
        const PriVector pri = PriVector::quantize(values);
        const ObjectiveVector obj = evaluate(pri, params, config);
        EvaluationRecord r;
        r.run = 0;
        r.algo = "external";
        r.eval_index = s.records.size();
        r.decision = pri.grid();
        r.margins = obj.margins;
        r.dwell_ms = obj.dwell_ms;
        s.records.push_back(std::move(r));
    }
    return s;
}

std::string model_config_hash(const RadarParams& params, const EvaluationConfig& config) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(model_json(params, config))));
    return buf;
}

}  // namespace pribench
