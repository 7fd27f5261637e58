#include "tclp/objectives.hpp"

#include "tclp/errors.hpp"
#include "tclp/geometry.hpp"
#include "tclp/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace tclp {

namespace {

// Voronoi walk pays off once each demand point would otherwise scan many
// columns.
constexpr std::size_t kVoronoiMinCenters = 16;
constexpr std::size_t kVoronoiMinPointsPerCenter = 8;

std::vector<std::uint32_t> assign_linear(const Instance& instance, const Solution& solution) {
    const auto centers = solution.centers();
    std::vector<std::uint32_t> assignment(instance.n());
    for (std::size_t i = 0; i < instance.n(); ++i) {
        const auto row = instance.row(i);
        std::uint32_t best = centers[0];
        double best_d = row[best];
        for (std::size_t c = 1; c < centers.size(); ++c) {
            const double d = row[centers[c]];
            if (d < best_d) { // centers ascend, so ties keep the smaller id
                best = centers[c];
                best_d = d;
            }
        }
        assignment[i] = best;
    }
    return assignment;
}

std::vector<std::uint32_t> assign_voronoi(const Instance& instance, const Solution& solution) {
    const auto centers = solution.centers();
    std::vector<Point> positions;
    positions.reserve(centers.size());
    for (std::uint32_t c : centers) {
        positions.push_back(instance.sites()[c].position);
    }
    const VoronoiIndex index(std::move(positions));

    std::vector<std::uint32_t> assignment(instance.n());
    std::size_t start = 0;
    for (std::size_t i = 0; i < instance.n(); ++i) {
        const auto row = instance.row(i);
        // Local indices follow ascending site ids, so the index tie-break
        // matches the smallest-site-id rule.
        start = index.nearest_by([&](std::size_t local) { return row[centers[local]]; }, start);
        assignment[i] = centers[start];
    }
    return assignment;
}

} // namespace

double weighted_mean(std::span<const DemandPoint> demand, std::span<const double> distances,
                     std::int64_t total_weight) {
    double sum = 0.0;
    double compensation = 0.0;
    for (std::size_t i = 0; i < demand.size(); ++i) {
        const double term = static_cast<double>(demand[i].weight) * distances[i];
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term)) {
            compensation += (sum - t) + term;
        } else {
            compensation += (term - t) + sum;
        }
        sum = t;
    }
    return (sum + compensation) / static_cast<double>(total_weight);
}

Evaluation evaluate_assignment(const Instance& instance, const Solution& solution,
                               std::vector<std::uint32_t> assignment) {
    const auto centers = solution.centers();
    Evaluation out;
    out.workloads.assign(centers.size(), 0);
    std::vector<double> travelled(instance.n());
    for (std::size_t i = 0; i < instance.n(); ++i) {
        const std::uint32_t site = assignment[i];
        const std::size_t slot = solution.position_of(site);
        out.workloads[slot] += instance.demand()[i].weight;
        travelled[i] = instance.distance(i, site);
    }
    const auto [lo, hi] = std::minmax_element(out.workloads.begin(), out.workloads.end());
    out.u = *hi;
    out.l = *lo;
    out.f1 = out.u - out.l;
    out.f2 = weighted_mean(instance.demand(), travelled, instance.total_weight());
    out.assignment = std::move(assignment);
    return out;
}

Evaluation evaluate(const Instance& instance, const Solution& solution, AssignStrategy strategy) {
    validate_solution(instance, solution);
    const bool euclidean = instance.metric() == Metric::EuclideanFromCoords;
    if (strategy == AssignStrategy::Voronoi && !euclidean) {
        throw ParameterError("Voronoi assignment requires a Euclidean instance");
    }
    if (strategy == AssignStrategy::Auto) {
        const std::size_t k = solution.size();
        strategy = euclidean && k >= kVoronoiMinCenters && instance.n() >= kVoronoiMinPointsPerCenter * k
                       ? AssignStrategy::Voronoi
                       : AssignStrategy::LinearScan;
    }
    auto assignment = strategy == AssignStrategy::Voronoi ? assign_voronoi(instance, solution)
                                                          : assign_linear(instance, solution);
    return evaluate_assignment(instance, solution, std::move(assignment));
}

ObjectiveEvaluator::ObjectiveEvaluator(const Instance& instance)
    : instance_(&instance), assigned_(instance.n()), travelled_(instance.n()), load_(instance.m(), 0) {}

ObjectivePair ObjectiveEvaluator::evaluate(std::span<const std::uint32_t> centers,
                                           std::vector<std::uint32_t>* assignment) {
    const Instance& inst = *instance_;
    for (std::size_t i = 0; i < inst.n(); ++i) {
        const auto row = inst.row(i);
        std::uint32_t best = centers[0];
        double best_d = row[best];
        for (std::size_t c = 1; c < centers.size(); ++c) {
            const double d = row[centers[c]];
            if (d < best_d) {
                best = centers[c];
                best_d = d;
            }
        }
        assigned_[i] = best;
        travelled_[i] = best_d;
    }
    return finish(centers, assignment);
}

ObjectivePair ObjectiveEvaluator::exchange(std::span<const std::uint32_t> child,
                                           std::span<const std::uint32_t> parent_assignment,
                                           std::uint32_t removed, std::uint32_t added,
                                           std::vector<std::uint32_t>* assignment) {
    const Instance& inst = *instance_;
    for (std::size_t i = 0; i < inst.n(); ++i) {
        const auto row = inst.row(i);
        const std::uint32_t current = parent_assignment[i];
        if (current == removed) {
            std::uint32_t best = child[0];
            double best_d = row[best];
            for (std::size_t c = 1; c < child.size(); ++c) {
                const double d = row[child[c]];
                if (d < best_d) {
                    best = child[c];
                    best_d = d;
                }
            }
            assigned_[i] = best;
            travelled_[i] = best_d;
        } else {
            const double d_current = row[current];
            const double d_added = row[added];
            if (d_added < d_current || (d_added == d_current && added < current)) {
                assigned_[i] = added;
                travelled_[i] = d_added;
            } else {
                assigned_[i] = current;
                travelled_[i] = d_current;
            }
        }
    }
    return finish(child, assignment);
}

ObjectivePair ObjectiveEvaluator::finish(std::span<const std::uint32_t> centers,
                                         std::vector<std::uint32_t>* assignment) {
    const Instance& inst = *instance_;
    for (std::uint32_t c : centers) {
        load_[c] = 0;
    }
    const auto demand = inst.demand();
    for (std::size_t i = 0; i < inst.n(); ++i) {
        load_[assigned_[i]] += demand[i].weight;
    }
    std::int64_t hi = load_[centers[0]];
    std::int64_t lo = hi;
    for (std::uint32_t c : centers) {
        hi = std::max(hi, load_[c]);
        lo = std::min(lo, load_[c]);
    }
    if (assignment != nullptr) {
        assignment->assign(assigned_.begin(), assigned_.end());
    }
    return {hi - lo, weighted_mean(demand, travelled_, inst.total_weight())};
}

std::vector<Evaluation> evaluate_batch(const Instance& instance, std::span<const Solution> solutions,
                                       std::size_t threads) {
    std::vector<Evaluation> out(solutions.size());
    parallel_for(solutions.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t s = begin; s < end; ++s) {
            out[s] = evaluate(instance, solutions[s]);
        }
    });
    return out;
}

} // namespace tclp
