#pragma once

#include "tclp/instance.hpp"
#include "tclp/pareto.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tclp {

// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// The k-subset of [0, m) at lexicographic rank `rank` (ascending indices).
std::vector<std::uint32_t> unrank_subset(std::uint64_t rank, std::size_t m, std::size_t k);

// Advances `subset` to its lexicographic successor; false after the last.
bool next_subset(std::span<std::uint32_t> subset, std::size_t m);

struct ExactOptions {
    std::uint64_t cap = 5'000'000; // max C(m, k) the enumeration accepts
    std::size_t threads = 0;       // 0 = default_thread_count()
};

// Exact Pareto set by evaluating every k-subset. Duplicate objective pairs
// with distinct center sets are all kept. Throws SizeError when C(m, k)
// exceeds options.cap.
ParetoArchive pareto_bruteforce(const Instance& instance, const ExactOptions& options = {});

struct F2Bounds {
    double left = 0.0;  // every point served by its closest site (k = m)
    double right = 0.0; // best single open center (k = 1)
};

F2Bounds f2_bounds(const Instance& instance);

// Evenly spaced epsilon values left + i (right - left) / (h - 1).
class EpsilonSchedule {
public:
    // Throws ParameterError unless left <= right and h >= 1 (h = 1 requires
    // left == right or yields just `right`).
    EpsilonSchedule(double left, double right, std::size_t h);
    static EpsilonSchedule from_bounds(const F2Bounds& bounds, std::size_t h) {
        return {bounds.left, bounds.right, h};
    }

    double left() const { return left_; }
    double right() const { return right_; }
    std::span<const double> values() const { return values_; }

private:
    double left_;
    double right_;
    std::vector<double> values_;
};

struct EpsilonOutcome {
    double epsilon = 0.0;
    std::optional<ParetoEntry> optimum; // empty when no solution meets F2 <= epsilon
};

struct EpsilonResult {
    ParetoArchive archive;                // non-dominated union of the optima
    std::vector<EpsilonOutcome> outcomes; // one per schedule value, same order
};

// For every epsilon: min F1 subject to F2 <= epsilon, ties by smaller F2
// then lexicographic center set, found by enumeration. Throws SizeError
// when C(m, k) exceeds options.cap.
EpsilonResult epsilon_constraint_exact(const Instance& instance, const EpsilonSchedule& schedule,
                                       const ExactOptions& options = {});

} // namespace tclp
