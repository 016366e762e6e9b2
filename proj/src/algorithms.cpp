#include "pribench/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pribench {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::vector<double>> objectives_of(const std::vector<Individual>& pop) {
    std::vector<std::vector<double>> objs;
    objs.reserve(pop.size());
    for (const auto& ind : pop) objs.push_back(ind.objectives);
    return objs;
}

std::vector<Individual> merge_populations(std::vector<Individual> a, std::vector<Individual> b) {
    a.reserve(a.size() + b.size());
    for (auto& ind : b) a.push_back(std::move(ind));
    return a;
}

// Min-max normalization over the current generation; degenerate coordinates
// map to 0.
std::vector<std::vector<double>> unit_normalize(const std::vector<std::vector<double>>& objs) {
    const std::size_t m = objs[0].size();
    std::vector<double> lo(m, kInf), hi(m, -kInf);
    for (const auto& f : objs)
        for (std::size_t k = 0; k < m; ++k) {
            lo[k] = std::min(lo[k], f[k]);
            hi[k] = std::max(hi[k], f[k]);
        }
    std::vector<std::vector<double>> out(objs.size(), std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < objs.size(); ++i)
        for (std::size_t k = 0; k < m; ++k) {
            const double spread = hi[k] - lo[k];
            out[i][k] = spread > 0.0 ? (objs[i][k] - lo[k]) / spread : 0.0;
        }
    return out;
}

// Solve A x = b in place, partial pivoting. Returns false when singular.
bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>& x) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
        if (std::fabs(a[pivot][col]) < 1e-12) return false;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    x.assign(n, 0.0);
    for (std::size_t r = n; r-- > 0;) {
        double acc = b[r];
        for (std::size_t c = r + 1; c < n; ++c) acc -= a[r][c] * x[c];
        x[r] = acc / a[r][r];
    }
    return true;
}

void das_dennis_recurse(std::size_t m, unsigned remaining, unsigned divisions,
                        std::vector<double>& current,
                        std::vector<std::vector<double>>& out) {
    if (current.size() + 1 == m) {
        current.push_back(static_cast<double>(remaining) / divisions);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (unsigned k = 0; k <= remaining; ++k) {
        current.push_back(static_cast<double>(k) / divisions);
        das_dennis_recurse(m, remaining - k, divisions, current, out);
        current.pop_back();
    }
}

}  // namespace

void AlgorithmParams::validate() const {
    if (!(ibea_kappa > 0.0)) throw std::invalid_argument("AlgorithmParams: kappa must be positive");
    if (grea_divisions < 2) throw std::invalid_argument("AlgorithmParams: divisions must be >= 2");
    if (theta < 0.0) throw std::invalid_argument("AlgorithmParams: theta must be >= 0");
    if (ref_outer_divisions < 1 || ref_inner_divisions < 1)
        throw std::invalid_argument("AlgorithmParams: reference divisions must be >= 1");
    if (!(ref_inner_shrink > 0.0 && ref_inner_shrink < 1.0))
        throw std::invalid_argument("AlgorithmParams: inner shrink must be in (0,1)");
    if (msops_targets < 2) throw std::invalid_argument("AlgorithmParams: need at least 2 targets");
    if (!(vads_power > 0.0)) throw std::invalid_argument("AlgorithmParams: vads power must be positive");
}

std::vector<std::vector<double>> das_dennis(std::size_t m, unsigned divisions) {
    if (m < 2 || divisions < 1)
        throw std::invalid_argument("das_dennis: need m >= 2 and divisions >= 1");
    std::vector<std::vector<double>> out;
    std::vector<double> current;
    das_dennis_recurse(m, divisions, divisions, current, out);
    return out;
}

std::vector<std::vector<double>> two_layer_reference_points(std::size_t m, unsigned outer,
                                                            unsigned inner, double shrink) {
    auto refs = das_dennis(m, outer);
    const double center = (1.0 - shrink) / static_cast<double>(m);
    for (const auto& p : das_dennis(m, inner)) {
        std::vector<double> q(m);
        for (std::size_t k = 0; k < m; ++k) q[k] = shrink * p[k] + center;
        refs.push_back(std::move(q));
    }
    return refs;
}

std::vector<std::vector<double>> msops_targets(std::size_t m, std::size_t count) {
    if (m < 2 || count < 2) throw std::invalid_argument("msops_targets: need m >= 2, count >= 2");
    const std::size_t direct = (count + 1) / 2;
    unsigned h = 1;
    while (das_dennis(m, h).size() < direct) ++h;
    const auto base = das_dennis(m, h);
    std::vector<std::vector<double>> targets;
    targets.reserve(count);
    for (std::size_t i = 0; i < direct; ++i)
        targets.push_back(base[i * base.size() / direct]);
    for (std::size_t i = 0; targets.size() < count; ++i) {
        std::vector<double> r(m);
        double sum = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            r[k] = 1.0 / std::max(targets[i][k], 1e-6);
            sum += r[k];
        }
        for (double& v : r) v /= sum;
        targets.push_back(std::move(r));
    }
    return targets;
}

double epsilon_indicator(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("epsilon_indicator: vectors differ in length");
    double eps = -kInf;
    for (std::size_t i = 0; i < a.size(); ++i) eps = std::max(eps, a[i] - b[i]);
    return eps;
}

GridSpec GridSpec::build(const std::vector<std::vector<double>>& objectives, int divisions) {
    if (objectives.empty()) throw std::invalid_argument("GridSpec: empty set");
    if (divisions < 2) throw std::invalid_argument("GridSpec: divisions must be >= 2");
    const std::size_t m = objectives[0].size();
    GridSpec g;
    g.divisions = divisions;
    g.lb.resize(m);
    g.width.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        double mn = kInf, mx = -kInf;
        for (const auto& f : objectives) {
            mn = std::min(mn, f[k]);
            mx = std::max(mx, f[k]);
        }
        const double spread = mx - mn;
        g.lb[k] = mn - spread / (2.0 * divisions);
        g.width[k] = (spread + spread / divisions) / divisions;
    }
    return g;
}

std::vector<int> GridSpec::coords(std::span<const double> f) const {
    std::vector<int> c(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (!(width[k] > 0.0)) {
            c[k] = 0;  // degenerate objective: everyone shares cell 0
            continue;
        }
        const int raw = static_cast<int>(std::floor((f[k] - lb[k]) / width[k]));
        c[k] = std::clamp(raw, 0, divisions - 1);
    }
    return c;
}

std::vector<double> Normalization::apply(std::span<const double> f) const {
    std::vector<double> out(f.size());
    for (std::size_t k = 0; k < f.size(); ++k) out[k] = (f[k] - ideal[k]) / intercepts[k];
    return out;
}

Normalization compute_normalization(const std::vector<std::vector<double>>& objectives) {
    if (objectives.empty()) throw std::invalid_argument("compute_normalization: empty set");
    const std::size_t m = objectives[0].size();
    Normalization norm;
    norm.ideal.assign(m, kInf);
    for (const auto& f : objectives)
        for (std::size_t k = 0; k < m; ++k) norm.ideal[k] = std::min(norm.ideal[k], f[k]);

    // Extreme point per axis via achievement scalarizing function.
    std::vector<std::vector<double>> extremes(m);
    for (std::size_t axis = 0; axis < m; ++axis) {
        double best = kInf;
        std::size_t best_idx = 0;
        for (std::size_t i = 0; i < objectives.size(); ++i) {
            double asf = -kInf;
            for (std::size_t k = 0; k < m; ++k) {
                const double w = (k == axis) ? 1.0 : 1e-6;
                asf = std::max(asf, (objectives[i][k] - norm.ideal[k]) / w);
            }
            if (asf < best) {
                best = asf;
                best_idx = i;
            }
        }
        extremes[axis].resize(m);
        for (std::size_t k = 0; k < m; ++k)
            extremes[axis][k] = objectives[best_idx][k] - norm.ideal[k];
    }

    std::vector<double> coeff;
    bool ok = solve_linear(extremes, std::vector<double>(m, 1.0), coeff);
    norm.intercepts.assign(m, 0.0);
    if (ok) {
        for (std::size_t k = 0; k < m; ++k) {
            const double a = coeff[k];
            if (!(a > 1e-10) || !std::isfinite(a)) {
                ok = false;
                break;
            }
            norm.intercepts[k] = 1.0 / a;
        }
    }
    if (!ok) {
        for (std::size_t k = 0; k < m; ++k) {
            double mx = 0.0;
            for (const auto& f : objectives) mx = std::max(mx, f[k] - norm.ideal[k]);
            norm.intercepts[k] = mx > 1e-10 ? mx : 1.0;
        }
    }
    return norm;
}

double perpendicular_distance(std::span<const double> f, std::span<const double> w) {
    double dot = 0.0, wn = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        dot += f[k] * w[k];
        wn += w[k] * w[k];
    }
    const double t = dot / wn;
    double d2 = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        const double r = f[k] - t * w[k];
        d2 += r * r;
    }
    return std::sqrt(std::max(0.0, d2));
}

double projection_length(std::span<const double> f, std::span<const double> w) {
    double dot = 0.0, wn = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        dot += f[k] * w[k];
        wn += w[k] * w[k];
    }
    return dot / std::sqrt(wn);
}

std::vector<std::vector<std::size_t>> theta_fronts(
    const std::vector<std::vector<double>>& normalized,
    const std::vector<std::vector<double>>& refs, double theta) {
    if (refs.empty()) throw std::invalid_argument("theta_fronts: no reference directions");
    std::vector<std::vector<std::pair<double, std::size_t>>> clusters(refs.size());
    for (std::size_t i = 0; i < normalized.size(); ++i) {
        double best_d2 = kInf;
        std::size_t best_r = 0;
        for (std::size_t r = 0; r < refs.size(); ++r) {
            const double d2 = perpendicular_distance(normalized[i], refs[r]);
            if (d2 < best_d2) {
                best_d2 = d2;
                best_r = r;
            }
        }
        const double d1 = projection_length(normalized[i], refs[best_r]);
        clusters[best_r].emplace_back(d1 + theta * best_d2, i);
    }
    std::vector<std::vector<std::size_t>> fronts;
    for (auto& cl : clusters) {
        std::sort(cl.begin(), cl.end());
        for (std::size_t rank = 0; rank < cl.size(); ++rank) {
            if (fronts.size() <= rank) fronts.emplace_back();
            fronts[rank].push_back(cl[rank].second);
        }
    }
    for (auto& fr : fronts) std::sort(fr.begin(), fr.end());
    return fronts;
}

// ---------------------------------------------------------------------------
// Steppers

namespace {

class Nsga2Stepper final : public AlgorithmStepper {
public:
    std::vector<Individual> select(std::vector<Individual> parents,
                                   std::vector<Individual> offspring, RandomStream&) override {
        auto all = merge_populations(std::move(parents), std::move(offspring));
        const auto objs = objectives_of(all);
        const auto fronts = fast_nondominated_sort(objs);
        std::vector<Individual> next;
        next.reserve(popsize_);
        for (const auto& front : fronts) {
            if (next.size() + front.size() <= popsize_) {
                for (std::size_t idx : front) next.push_back(std::move(all[idx]));
                if (next.size() == popsize_) break;
                continue;
            }
            std::vector<std::vector<double>> front_objs;
            front_objs.reserve(front.size());
            for (std::size_t idx : front) front_objs.push_back(objs[idx]);
            const auto cd = crowding_distance(front_objs);
            std::vector<std::size_t> order(front.size());
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                if (cd[a] != cd[b]) return cd[a] > cd[b];
                return front[a] < front[b];
            });
            for (std::size_t i = 0; next.size() < popsize_; ++i)
                next.push_back(std::move(all[front[order[i]]]));
            break;
        }
        return next;
    }
};

class Nsga3Stepper final : public AlgorithmStepper {
public:
    explicit Nsga3Stepper(const AlgorithmParams& p) : params_(p) {}

    void configure(std::size_t popsize, std::size_t n_objectives) override {
        AlgorithmStepper::configure(popsize, n_objectives);
        refs_ = two_layer_reference_points(n_objectives, params_.ref_outer_divisions,
                                           params_.ref_inner_divisions, params_.ref_inner_shrink);
        if (refs_.empty()) throw std::invalid_argument("nsga3: empty reference set");
    }

    std::vector<Individual> select(std::vector<Individual> parents,
                                   std::vector<Individual> offspring,
                                   RandomStream& rng) override {
        auto all = merge_populations(std::move(parents), std::move(offspring));
        const auto objs = objectives_of(all);
        const auto fronts = fast_nondominated_sort(objs);

        std::vector<std::size_t> chosen;   // indices of whole accepted fronts
        std::vector<std::size_t> last;     // critical front
        std::vector<std::size_t> pool;     // chosen + last, used for normalization
        for (const auto& front : fronts) {
            if (chosen.size() + front.size() <= popsize_) {
                chosen.insert(chosen.end(), front.begin(), front.end());
                pool.insert(pool.end(), front.begin(), front.end());
                if (chosen.size() == popsize_) break;
            } else {
                last = front;
                pool.insert(pool.end(), front.begin(), front.end());
                break;
            }
        }
        if (chosen.size() == popsize_) {
            std::vector<Individual> next;
            next.reserve(popsize_);
            for (std::size_t idx : chosen) next.push_back(std::move(all[idx]));
            return next;
        }

        std::vector<std::vector<double>> pool_objs;
        pool_objs.reserve(pool.size());
        for (std::size_t idx : pool) pool_objs.push_back(objs[idx]);
        const auto norm = compute_normalization(pool_objs);

        // associate every pool member to its nearest reference direction
        std::vector<std::size_t> niche_of(all.size(), 0);
        std::vector<double> dist_of(all.size(), 0.0);
        for (std::size_t idx : pool) {
            const auto nf = norm.apply(objs[idx]);
            double best = kInf;
            std::size_t best_r = 0;
            for (std::size_t r = 0; r < refs_.size(); ++r) {
                const double d = perpendicular_distance(nf, refs_[r]);
                if (d < best) {
                    best = d;
                    best_r = r;
                }
            }
            niche_of[idx] = best_r;
            dist_of[idx] = best;
        }

        std::vector<std::size_t> rho(refs_.size(), 0);
        for (std::size_t idx : chosen) ++rho[niche_of[idx]];
        std::vector<std::vector<std::size_t>> candidates(refs_.size());
        for (std::size_t idx : last) candidates[niche_of[idx]].push_back(idx);

        std::vector<bool> active(refs_.size(), true);
        std::size_t need = popsize_ - chosen.size();
        while (need > 0) {
            std::size_t min_rho = SIZE_MAX;
            for (std::size_t r = 0; r < refs_.size(); ++r)
                if (active[r]) min_rho = std::min(min_rho, rho[r]);
            std::vector<std::size_t> ties;
            for (std::size_t r = 0; r < refs_.size(); ++r)
                if (active[r] && rho[r] == min_rho) ties.push_back(r);
            const std::size_t j = ties[rng.uniform_int(ties.size())];
            auto& cand = candidates[j];
            if (cand.empty()) {
                active[j] = false;
                continue;
            }
            std::size_t pick_pos;
            if (rho[j] == 0) {
                pick_pos = 0;
                for (std::size_t i = 1; i < cand.size(); ++i)
                    if (dist_of[cand[i]] < dist_of[cand[pick_pos]]) pick_pos = i;
            } else {
                pick_pos = static_cast<std::size_t>(rng.uniform_int(cand.size()));
            }
            chosen.push_back(cand[pick_pos]);
            cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(pick_pos));
            ++rho[j];
            --need;
        }

        std::vector<Individual> next;
        next.reserve(popsize_);
        for (std::size_t idx : chosen) next.push_back(std::move(all[idx]));
        return next;
    }

private:
    AlgorithmParams params_;
    std::vector<std::vector<double>> refs_;
};

class GreaStepper final : public AlgorithmStepper {
public:
    explicit GreaStepper(const AlgorithmParams& p) : params_(p) {}

    std::vector<Individual> select(std::vector<Individual> parents,
                                   std::vector<Individual> offspring, RandomStream&) override {
        auto all = merge_populations(std::move(parents), std::move(offspring));
        const auto objs = objectives_of(all);
        const auto fronts = fast_nondominated_sort(objs);
        std::vector<Individual> next;
        next.reserve(popsize_);
        for (const auto& front : fronts) {
            if (next.size() + front.size() <= popsize_) {
                for (std::size_t idx : front) next.push_back(std::move(all[idx]));
                if (next.size() == popsize_) break;
                continue;
            }
            const auto picked = truncate_grid(front, objs, popsize_ - next.size());
            for (std::size_t idx : picked) next.push_back(std::move(all[idx]));
            break;
        }
        return next;
    }

private:
    // Grid-based truncation of the critical front: repeatedly take the best
    // by (grid rank, grid crowding, distance to own cell corner), then punish
    // the neighborhood of the pick.
    std::vector<std::size_t> truncate_grid(const std::vector<std::size_t>& front,
                                           const std::vector<std::vector<double>>& objs,
                                           std::size_t quota) const {
        const std::size_t n = front.size();
        const auto m = static_cast<double>(n_obj_);
        std::vector<std::vector<double>> front_objs;
        front_objs.reserve(n);
        for (std::size_t idx : front) front_objs.push_back(objs[idx]);
        const auto grid = GridSpec::build(front_objs, params_.grea_divisions);

        std::vector<std::vector<int>> coords(n);
        std::vector<double> gr(n, 0.0), gcd(n, 0.0), gcpd(n, 0.0), pd(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            coords[i] = grid.coords(front_objs[i]);
            double acc = 0.0;
            for (std::size_t k = 0; k < coords[i].size(); ++k) {
                gr[i] += coords[i][k];
                if (grid.width[k] > 0.0) {
                    const double corner = grid.lb[k] + coords[i][k] * grid.width[k];
                    const double r = (front_objs[i][k] - corner) / grid.width[k];
                    acc += r * r;
                }
            }
            gcpd[i] = std::sqrt(acc);
        }

        auto grid_difference = [&](std::size_t a, std::size_t b) {
            int diff = 0;
            for (std::size_t k = 0; k < coords[a].size(); ++k)
                diff += std::abs(coords[a][k] - coords[b][k]);
            return static_cast<double>(diff);
        };
        auto grid_dominates = [&](std::size_t a, std::size_t b) {
            bool strict = false;
            for (std::size_t k = 0; k < coords[a].size(); ++k) {
                if (coords[a][k] > coords[b][k]) return false;
                if (coords[a][k] < coords[b][k]) strict = true;
            }
            return strict;
        };

        std::vector<bool> taken(n, false);
        std::vector<std::size_t> picked;
        picked.reserve(quota);
        while (picked.size() < quota) {
            std::size_t best = SIZE_MAX;
            for (std::size_t i = 0; i < n; ++i) {
                if (taken[i]) continue;
                if (best == SIZE_MAX ||
                    std::tie(gr[i], gcd[i], gcpd[i]) < std::tie(gr[best], gcd[best], gcpd[best]))
                    best = i;
            }
            taken[best] = true;
            picked.push_back(front[best]);
            for (std::size_t i = 0; i < n; ++i) {
                if (taken[i]) continue;
                const double diff = grid_difference(best, i);
                if (diff == 0.0) {
                    gr[i] += m;
                } else if (grid_dominates(best, i)) {
                    gr[i] += m + 2.0;
                } else if (diff < m && m - diff > pd[i]) {
                    gr[i] += (m - diff) - pd[i];
                    pd[i] = m - diff;
                }
                if (diff < m) gcd[i] += m - diff;
            }
        }
        return picked;
    }

    AlgorithmParams params_;
};

class ThetaDeaStepper final : public AlgorithmStepper {
public:
    explicit ThetaDeaStepper(const AlgorithmParams& p) : params_(p) {}

    void configure(std::size_t popsize, std::size_t n_objectives) override {
        AlgorithmStepper::configure(popsize, n_objectives);
        refs_ = two_layer_reference_points(n_objectives, params_.ref_outer_divisions,
                                           params_.ref_inner_divisions, params_.ref_inner_shrink);
        if (refs_.empty()) throw std::invalid_argument("theta-dea: empty reference set");
    }

    std::vector<Individual> select(std::vector<Individual> parents,
                                   std::vector<Individual> offspring,
                                   RandomStream& rng) override {
        auto all = merge_populations(std::move(parents), std::move(offspring));
        const auto objs = objectives_of(all);
        const auto norm = compute_normalization(objs);
        std::vector<std::vector<double>> normalized;
        normalized.reserve(objs.size());
        for (const auto& f : objs) normalized.push_back(norm.apply(f));
        const auto fronts = theta_fronts(normalized, refs_, params_.theta);

        std::vector<Individual> next;
        next.reserve(popsize_);
        for (const auto& front : fronts) {
            if (next.size() + front.size() <= popsize_) {
                for (std::size_t idx : front) next.push_back(std::move(all[idx]));
                if (next.size() == popsize_) break;
                continue;
            }
            std::vector<std::size_t> shuffled = front;
            rng.shuffle(shuffled);
            for (std::size_t i = 0; next.size() < popsize_; ++i)
                next.push_back(std::move(all[shuffled[i]]));
            break;
        }
        return next;
    }

private:
    AlgorithmParams params_;
    std::vector<std::vector<double>> refs_;
};

class IbeaStepper final : public AlgorithmStepper {
public:
    explicit IbeaStepper(const AlgorithmParams& p) : params_(p) {}

    std::vector<Individual> select(std::vector<Individual> parents,
                                   std::vector<Individual> offspring, RandomStream&) override {
        auto all = merge_populations(std::move(parents), std::move(offspring));
        const auto normalized = unit_normalize(objectives_of(all));
        const std::size_t n = all.size();

        std::vector<double> indicator(n * n, 0.0);
        double scale = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                const double v = epsilon_indicator(normalized[i], normalized[j]);
                indicator[i * n + j] = v;
                scale = std::max(scale, std::fabs(v));
            }
        if (!(scale > 0.0)) scale = 1.0;  // all points identical
        const double denom = params_.ibea_kappa * scale;

        std::vector<double> fitness(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) fitness[i] -= std::exp(-indicator[j * n + i] / denom);

        std::vector<bool> alive(n, true);
        for (std::size_t removed = 0; removed < n - popsize_; ++removed) {
            std::size_t worst = SIZE_MAX;
            for (std::size_t i = 0; i < n; ++i)
                if (alive[i] && (worst == SIZE_MAX || fitness[i] < fitness[worst])) worst = i;
            alive[worst] = false;
            for (std::size_t i = 0; i < n; ++i)
                if (alive[i]) fitness[i] += std::exp(-indicator[worst * n + i] / denom);
        }

        std::vector<Individual> next;
        next.reserve(popsize_);
        for (std::size_t i = 0; i < n; ++i)
            if (alive[i]) next.push_back(std::move(all[i]));
        return next;
    }

    std::vector<std::pair<double, double>> mating_keys(
        const std::vector<Individual>& pop) const override {
        const auto normalized = unit_normalize(objectives_of(pop));
        const std::size_t n = pop.size();
        double scale = 0.0;
        std::vector<double> indicator(n * n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                const double v = epsilon_indicator(normalized[i], normalized[j]);
                indicator[i * n + j] = v;
                scale = std::max(scale, std::fabs(v));
            }
        if (!(scale > 0.0)) scale = 1.0;
        const double denom = params_.ibea_kappa * scale;
        std::vector<std::pair<double, double>> keys(n, {0.0, 0.0});
        for (std::size_t i = 0; i < n; ++i) {
            double f = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) f -= std::exp(-indicator[j * n + i] / denom);
            keys[i].first = -f;  // larger fitness is better
        }
        return keys;
    }

private:
    AlgorithmParams params_;
};

class Msops2Stepper final : public AlgorithmStepper {
public:
    explicit Msops2Stepper(const AlgorithmParams& p) : params_(p) {}

    void configure(std::size_t popsize, std::size_t n_objectives) override {
        AlgorithmStepper::configure(popsize, n_objectives);
        targets_ = msops_targets(n_objectives, static_cast<std::size_t>(params_.msops_targets));
    }

    std::vector<Individual> select(std::vector<Individual> parents,
                                   std::vector<Individual> offspring, RandomStream&) override {
        auto all = merge_populations(std::move(parents), std::move(offspring));
        const auto normalized = unit_normalize(objectives_of(all));
        const std::size_t n = all.size();
        const std::size_t t = targets_.size();

        // Two score columns per target: weighted min-max and vector-angle
        // (log form, same ordering, no overflow).
        std::vector<std::vector<double>> scores(2 * t, std::vector<double>(n, 0.0));
        for (std::size_t j = 0; j < t; ++j) {
            const auto& tv = targets_[j];
            double tn = 0.0;
            for (double v : tv) tn += v * v;
            tn = std::sqrt(tn);
            for (std::size_t i = 0; i < n; ++i) {
                const auto& f = normalized[i];
                double minmax = -kInf, fn = 0.0, dot = 0.0;
                for (std::size_t k = 0; k < f.size(); ++k) {
                    minmax = std::max(minmax, f[k] / std::max(tv[k], 1e-6));
                    fn += f[k] * f[k];
                    dot += f[k] * tv[k];
                }
                fn = std::sqrt(fn);
                scores[2 * j][i] = minmax;
                if (fn > 0.0) {
                    const double cosang = std::max(dot / (fn * tn), 1e-6);
                    scores[2 * j + 1][i] = std::log(fn) - params_.vads_power * std::log(cosang);
                } else {
                    scores[2 * j + 1][i] = -kInf;  // the ideal point beats every target
                }
            }
        }

        // Column-wise ranks, then each solution's sorted rank vector compared
        // lexicographically (best ranks first).
        std::vector<std::vector<std::size_t>> ranks(n, std::vector<std::size_t>(2 * t, 0));
        std::vector<std::size_t> order(n);
        for (std::size_t col = 0; col < 2 * t; ++col) {
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                if (scores[col][a] != scores[col][b]) return scores[col][a] < scores[col][b];
                return a < b;
            });
            for (std::size_t pos = 0; pos < n; ++pos) ranks[order[pos]][col] = pos;
        }
        for (auto& r : ranks) std::sort(r.begin(), r.end());

        std::vector<std::size_t> sel(n);
        std::iota(sel.begin(), sel.end(), 0);
        std::sort(sel.begin(), sel.end(), [&](std::size_t a, std::size_t b) {
            if (ranks[a] != ranks[b]) return ranks[a] < ranks[b];
            return a < b;
        });
        sel.resize(popsize_);
        std::sort(sel.begin(), sel.end());

        std::vector<Individual> next;
        next.reserve(popsize_);
        for (std::size_t idx : sel) next.push_back(std::move(all[idx]));
        return next;
    }

private:
    AlgorithmParams params_;
    std::vector<std::vector<double>> targets_;
};

}  // namespace

const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names = {"nsga2",  "nsga3", "ibea",
                                                   "grea", "msops2", "theta-dea"};
    return names;
}

std::unique_ptr<AlgorithmStepper> make_stepper(const std::string& name,
                                               const AlgorithmParams& params) {
    params.validate();
    if (name == "nsga2") return std::make_unique<Nsga2Stepper>();
    if (name == "nsga3") return std::make_unique<Nsga3Stepper>(params);
    if (name == "ibea") return std::make_unique<IbeaStepper>(params);
    if (name == "grea") return std::make_unique<GreaStepper>(params);
    if (name == "msops2") return std::make_unique<Msops2Stepper>(params);
    if (name == "theta-dea") return std::make_unique<ThetaDeaStepper>(params);
    throw std::invalid_argument("unknown algorithm: " + name);
}

}  // namespace pribench
