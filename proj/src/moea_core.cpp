#include "pribench/moea_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pribench {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void VariationConfig::validate() const {
    if (!(sbx_prob >= 0.0 && sbx_prob <= 1.0))
        throw std::invalid_argument("VariationConfig: sbx_prob must be in [0,1]");
    if (pm_prob >= 0.0 && pm_prob > 1.0)
        throw std::invalid_argument("VariationConfig: pm_prob must be in [0,1]");
    if (!(sbx_eta > 0.0 && pm_eta > 0.0))
        throw std::invalid_argument("VariationConfig: distribution indices must be positive");
}

bool dominates(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominates: objective vectors differ in length");
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

std::vector<std::vector<std::size_t>> fast_nondominated_sort(
    const std::vector<std::vector<double>>& objectives) {
    const std::size_t n = objectives.size();
    if (n == 0) throw std::invalid_argument("fast_nondominated_sort: empty input");
    std::vector<std::vector<std::size_t>> dominated_by(n);
    std::vector<std::size_t> count(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(objectives[i], objectives[j])) {
                dominated_by[i].push_back(j);
                ++count[j];
            } else if (dominates(objectives[j], objectives[i])) {
                dominated_by[j].push_back(i);
                ++count[i];
            }
        }
    }
    std::vector<std::vector<std::size_t>> fronts;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i)
        if (count[i] == 0) current.push_back(i);
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t i : current)
            for (std::size_t j : dominated_by[i])
                if (--count[j] == 0) next.push_back(j);
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

std::vector<double> crowding_distance(const std::vector<std::vector<double>>& front) {
    const std::size_t n = front.size();
    std::vector<double> dist(n, 0.0);
    if (n == 0) return dist;
    if (n <= 2) {
        std::fill(dist.begin(), dist.end(), kInf);
        return dist;
    }
    const std::size_t m = front[0].size();
    std::vector<std::size_t> idx(n);
    for (std::size_t k = 0; k < m; ++k) {
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return front[a][k] < front[b][k]; });
        dist[idx.front()] = kInf;
        dist[idx.back()] = kInf;
        const double spread = front[idx.back()][k] - front[idx.front()][k];
        if (!(spread > 0.0)) continue;
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (dist[idx[i]] == kInf) continue;
            dist[idx[i]] += (front[idx[i + 1]][k] - front[idx[i - 1]][k]) / spread;
        }
    }
    return dist;
}

void sbx_crossover(const std::vector<double>& p1, const std::vector<double>& p2,
                   const VariationConfig& cfg, double lo, double hi, RandomStream& rng,
                   std::vector<double>& c1, std::vector<double>& c2) {
    if (p1.size() != p2.size())
        throw std::invalid_argument("sbx_crossover: parent dimensions differ");
    c1 = p1;
    c2 = p2;
    if (!(rng.uniform() < cfg.sbx_prob)) return;
    for (std::size_t i = 0; i < p1.size(); ++i) {
        if (!(rng.uniform() < 0.5)) continue;
        const double u = rng.uniform();
        const double exponent = 1.0 / (cfg.sbx_eta + 1.0);
        const double beta = u <= 0.5 ? std::pow(2.0 * u, exponent)
                                     : std::pow(1.0 / (2.0 * (1.0 - u)), exponent);
        const double a = 0.5 * ((1.0 + beta) * p1[i] + (1.0 - beta) * p2[i]);
        const double b = 0.5 * ((1.0 - beta) * p1[i] + (1.0 + beta) * p2[i]);
        c1[i] = std::clamp(a, lo, hi);
        c2[i] = std::clamp(b, lo, hi);
    }
}

void polynomial_mutation(std::vector<double>& x, const VariationConfig& cfg,
                         double lo, double hi, RandomStream& rng) {
    const double span = hi - lo;
    for (double& v : x) {
        if (!(rng.uniform() < cfg.pm_prob)) continue;
        const double u = rng.uniform();
        const double d1 = (v - lo) / span;
        const double d2 = (hi - v) / span;
        const double exponent = 1.0 / (cfg.pm_eta + 1.0);
        double dq;
        if (u < 0.5) {
            const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - d1, cfg.pm_eta + 1.0);
            dq = std::pow(val, exponent) - 1.0;
        } else {
            const double val =
                2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - d2, cfg.pm_eta + 1.0);
            dq = 1.0 - std::pow(val, exponent);
        }
        v = std::clamp(v + dq * span, lo, hi);
    }
}

void AlgorithmStepper::configure(std::size_t popsize, std::size_t n_objectives) {
    if (popsize == 0 || n_objectives == 0)
        throw std::invalid_argument("AlgorithmStepper: popsize and objectives must be positive");
    popsize_ = popsize;
    n_obj_ = n_objectives;
}

std::vector<std::pair<double, double>> AlgorithmStepper::mating_keys(
    const std::vector<Individual>& pop) const {
    std::vector<std::vector<double>> objs;
    objs.reserve(pop.size());
    for (const auto& ind : pop) objs.push_back(ind.objectives);
    const auto fronts = fast_nondominated_sort(objs);
    std::vector<std::pair<double, double>> keys(pop.size());
    for (std::size_t r = 0; r < fronts.size(); ++r) {
        std::vector<std::vector<double>> front_objs;
        front_objs.reserve(fronts[r].size());
        for (std::size_t idx : fronts[r]) front_objs.push_back(objs[idx]);
        const auto cd = crowding_distance(front_objs);
        for (std::size_t i = 0; i < fronts[r].size(); ++i)
            keys[fronts[r][i]] = {static_cast<double>(r), -cd[i]};
    }
    return keys;
}

namespace {

std::size_t tournament(const std::vector<std::pair<double, double>>& keys, RandomStream& rng) {
    const std::size_t i = rng.uniform_int(keys.size());
    const std::size_t j = rng.uniform_int(keys.size());
    if (keys[i] < keys[j]) return i;
    if (keys[j] < keys[i]) return j;
    return rng.uniform() < 0.5 ? i : j;
}

}  // namespace

std::vector<Individual> run_algorithm(AlgorithmStepper& stepper, const Problem& problem,
                                      std::size_t popsize, std::uint64_t budget,
                                      const VariationConfig& variation, RandomStream& rng,
                                      const Recorder& recorder) {
    if (budget < popsize)
        throw std::invalid_argument("run_algorithm: budget must be at least popsize");
    if (!problem.eval) throw std::invalid_argument("run_algorithm: problem has no evaluator");
    VariationConfig vc = variation;
    if (vc.pm_prob < 0.0) vc.pm_prob = 1.0 / static_cast<double>(problem.dim);
    vc.validate();
    stepper.configure(popsize, problem.n_objectives);

    std::uint64_t evals = 0;
    auto evaluate_one = [&](std::vector<double> decision) {
        Individual ind;
        ind.decision = std::move(decision);
        ind.objectives = problem.eval(ind.decision);
        ind.eval_index = evals++;
        if (recorder) recorder(ind.decision, ind.objectives, ind.eval_index);
        return ind;
    };

    std::vector<Individual> pop;
    pop.reserve(popsize);
    for (std::size_t i = 0; i < popsize; ++i) {
        std::vector<double> dec(problem.dim);
        for (double& v : dec) v = rng.uniform(problem.lower, problem.upper);
        pop.push_back(evaluate_one(std::move(dec)));
    }

    std::vector<double> c1, c2;
    while (evals < budget) {
        const auto want = static_cast<std::size_t>(
            std::min<std::uint64_t>(popsize, budget - evals));
        const auto keys = stepper.mating_keys(pop);
        std::vector<Individual> offspring;
        offspring.reserve(want);
        while (offspring.size() < want) {
            const Individual& pa = pop[tournament(keys, rng)];
            const Individual& pb = pop[tournament(keys, rng)];
            sbx_crossover(pa.decision, pb.decision, vc, problem.lower, problem.upper, rng, c1, c2);
            polynomial_mutation(c1, vc, problem.lower, problem.upper, rng);
            polynomial_mutation(c2, vc, problem.lower, problem.upper, rng);
            offspring.push_back(evaluate_one(c1));
            if (offspring.size() < want) offspring.push_back(evaluate_one(c2));
        }
        pop = stepper.select(std::move(pop), std::move(offspring), rng);
        if (pop.size() != popsize)
            throw std::logic_error("run_algorithm: stepper changed the population size");
    }
    return pop;
}

}  // namespace pribench
