#include "tclp/exact.hpp"

#include "tclp/errors.hpp"
#include "tclp/objectives.hpp"
#include "tclp/parallel.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <string>

namespace tclp {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(result);
}

std::vector<std::uint32_t> unrank_subset(std::uint64_t rank, std::size_t m, std::size_t k) {
    std::vector<std::uint32_t> out;
    out.reserve(k);
    std::uint32_t next = 0;
    for (std::size_t slot = 0; slot < k; ++slot) {
        for (;; ++next) {
            const std::uint64_t with_next = binomial(m - next - 1, k - slot - 1);
            if (rank < with_next) {
                break;
            }
            rank -= with_next;
        }
        out.push_back(next++);
    }
    return out;
}

bool next_subset(std::span<std::uint32_t> subset, std::size_t m) {
    const std::size_t k = subset.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (subset[i] < m - k + i) {
            ++subset[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

namespace {

std::uint64_t checked_count(const Instance& instance, const ExactOptions& options) {
    const std::uint64_t total = binomial(instance.m(), instance.k());
    if (total > options.cap) {
        throw SizeError("enumeration needs C(" + std::to_string(instance.m()) + "," + std::to_string(instance.k()) +
                        ")=" + std::to_string(total) + " evaluations, cap is " + std::to_string(options.cap));
    }
    return total;
}

// Calls visit(rank, subset, objectives) for every subset, split over workers
// by contiguous rank ranges. One `State` per range, created by make_state.
template <typename MakeState, typename Visit>
auto enumerate(const Instance& instance, const ExactOptions& options, MakeState make_state, Visit visit) {
    const std::uint64_t total = checked_count(instance, options);
    std::size_t workers = options.threads == 0 ? default_thread_count() : options.threads;
    const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(std::max<std::size_t>(workers, 1), total));
    using State = decltype(make_state());
    std::vector<State> states;
    states.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        states.push_back(make_state());
    }
    parallel_for(chunks, workers, [&](std::size_t begin, std::size_t end) {
        ObjectiveEvaluator evaluator(instance);
        for (std::size_t c = begin; c < end; ++c) {
            const std::uint64_t lo = total * c / chunks;
            const std::uint64_t hi = total * (c + 1) / chunks;
            if (lo == hi) {
                continue;
            }
            auto subset = unrank_subset(lo, instance.m(), instance.k());
            for (std::uint64_t rank = lo; rank < hi; ++rank) {
                const ObjectivePair obj = evaluator.evaluate(subset);
                visit(states[c], rank, subset, obj);
                next_subset(subset, instance.m());
            }
        }
    });
    return states;
}

bool dominated_by_any(const ParetoArchive& archive, const ObjectivePair& obj) {
    for (const auto& e : archive.entries()) {
        if (dominates(e.objectives, obj)) {
            return true;
        }
    }
    return false;
}

} // namespace

ParetoArchive pareto_bruteforce(const Instance& instance, const ExactOptions& options) {
    auto partial = enumerate(
        instance, options, [] { return ParetoArchive{}; },
        [](ParetoArchive& archive, std::uint64_t, std::span<const std::uint32_t> subset, const ObjectivePair& obj) {
            if (!dominated_by_any(archive, obj)) {
                archive.insert({Solution({subset.begin(), subset.end()}), obj});
            }
        });
    ParetoArchive result;
    for (const auto& archive : partial) {
        result.merge(archive);
    }
    return result;
}

F2Bounds f2_bounds(const Instance& instance) {
    const std::size_t n = instance.n();
    const std::size_t m = instance.m();
    std::vector<double> closest(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = instance.row(i);
        closest[i] = *std::min_element(row.begin(), row.end());
    }
    F2Bounds out;
    out.left = weighted_mean(instance.demand(), closest, instance.total_weight());

    std::vector<double> column(n);
    out.right = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            column[i] = instance.distance(i, j);
        }
        out.right = std::min(out.right, weighted_mean(instance.demand(), column, instance.total_weight()));
    }
    return out;
}

EpsilonSchedule::EpsilonSchedule(double left, double right, std::size_t h) : left_(left), right_(right) {
    if (!(left <= right)) {
        throw ParameterError("epsilon schedule needs left <= right");
    }
    if (h < 1) {
        throw ParameterError("epsilon schedule needs h >= 1");
    }
    if (h == 1) {
        values_.push_back(right);
        return;
    }
    const double step = (right - left) / static_cast<double>(h - 1);
    for (std::size_t i = 0; i < h; ++i) {
        values_.push_back(left + static_cast<double>(i) * step);
    }
    values_.back() = right;
}

namespace {

struct Best {
    bool found = false;
    std::int64_t f1 = 0;
    double f2 = 0.0;
    std::uint64_t rank = 0; // lexicographic rank doubles as the center-set tie-break

    bool worse_than(std::int64_t of1, double of2, std::uint64_t orank) const {
        if (!found) {
            return true;
        }
        if (of1 != f1) {
            return of1 < f1;
        }
        if (of2 != f2) {
            return of2 < f2;
        }
        return orank < rank;
    }
};

} // namespace

EpsilonResult epsilon_constraint_exact(const Instance& instance, const EpsilonSchedule& schedule,
                                       const ExactOptions& options) {
    const auto eps = schedule.values();
    const std::size_t h = eps.size();
    auto partial = enumerate(
        instance, options, [h] { return std::vector<Best>(h); },
        [&](std::vector<Best>& best, std::uint64_t rank, std::span<const std::uint32_t>, const ObjectivePair& obj) {
            for (std::size_t e = 0; e < h; ++e) {
                if (obj.f2 <= eps[e] && best[e].worse_than(obj.f1, obj.f2, rank)) {
                    best[e] = {true, obj.f1, obj.f2, rank};
                }
            }
        });

    std::vector<Best> merged(h);
    for (const auto& part : partial) {
        for (std::size_t e = 0; e < h; ++e) {
            if (part[e].found && merged[e].worse_than(part[e].f1, part[e].f2, part[e].rank)) {
                merged[e] = part[e];
            }
        }
    }

    EpsilonResult result;
    for (std::size_t e = 0; e < h; ++e) {
        EpsilonOutcome outcome{eps[e], std::nullopt};
        if (merged[e].found) {
            outcome.optimum = ParetoEntry{Solution(unrank_subset(merged[e].rank, instance.m(), instance.k())),
                                          {merged[e].f1, merged[e].f2}};
            result.archive.insert(*outcome.optimum);
        }
        result.outcomes.push_back(std::move(outcome));
    }
    return result;
}

} // namespace tclp
