#pragma once

#include "tclp/instance.hpp"
#include "tclp/pareto.hpp"
#include "tclp/solution.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tclp {

// Closest-center allocation of a solution and its two objectives.
struct Evaluation {
    std::vector<std::uint32_t> assignment; // demand point -> opened site id
    std::vector<std::int64_t> workloads;   // aligned with Solution::centers()
    std::int64_t u = 0;                    // max workload
    std::int64_t l = 0;                    // min workload
    std::int64_t f1 = 0;                   // u - l
    double f2 = 0.0;                       // weighted mean travel distance

    ObjectivePair objectives() const { return {f1, f2}; }

    friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

enum class AssignStrategy {
    Auto,       // Voronoi walk for larger Euclidean solutions, otherwise scan
    LinearScan, // scan the k opened columns of the distance matrix
    Voronoi,    // Delaunay walk over the opened centers (Euclidean only)
};

// Every demand point goes to its closest opened center by the instance's
// distances, ties to the smaller site id. Throws ParameterError when the
// solution does not fit the instance, or when Voronoi is requested for an
// explicit-matrix instance.
Evaluation evaluate(const Instance& instance, const Solution& solution,
                    AssignStrategy strategy = AssignStrategy::Auto);

// Workloads, F1 and F2 for a precomputed assignment. F2 uses compensated
// summation in demand-point order.
Evaluation evaluate_assignment(const Instance& instance, const Solution& solution,
                               std::vector<std::uint32_t> assignment);

// Element-wise evaluate(); runs on up to `threads` workers (0 = default
// worker count, see parallel.hpp). Output order matches input order.
std::vector<Evaluation> evaluate_batch(const Instance& instance, std::span<const Solution> solutions,
                                       std::size_t threads = 0);

// Allocation-free objective evaluation for solver inner loops. Produces
// exactly the objectives evaluate() reports (same assignment rule, same
// summation). Not thread-safe; use one per worker.
class ObjectiveEvaluator {
public:
    explicit ObjectiveEvaluator(const Instance& instance);

    // Full linear scan over the opened columns. `centers` ascending.
    ObjectivePair evaluate(std::span<const std::uint32_t> centers,
                           std::vector<std::uint32_t>* assignment = nullptr);

    // Objectives of `child`, which is `parent_assignment`'s solution with
    // site `removed` swapped for site `added`. Only the points served by
    // `removed` are rescanned; every other point compares its current
    // center against `added`.
    ObjectivePair exchange(std::span<const std::uint32_t> child, std::span<const std::uint32_t> parent_assignment,
                           std::uint32_t removed, std::uint32_t added,
                           std::vector<std::uint32_t>* assignment = nullptr);

private:
    ObjectivePair finish(std::span<const std::uint32_t> centers, std::vector<std::uint32_t>* assignment);

    const Instance* instance_;
    std::vector<std::uint32_t> assigned_;
    std::vector<double> travelled_;
    std::vector<std::int64_t> load_; // indexed by site id
};

// (1 / sum w) * sum_i w_i * d_i with Neumaier summation.
double weighted_mean(std::span<const DemandPoint> demand, std::span<const double> distances,
                     std::int64_t total_weight);

} // namespace tclp
