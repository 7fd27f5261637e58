#include "tclp/tcla.hpp"

#include "tclp/errors.hpp"
#include "tclp/exact.hpp"
#include "tclp/objectives.hpp"
#include "tclp/parallel.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace tclp {

namespace {

struct Member {
    Solution solution;
    ObjectivePair objectives;
    std::vector<std::uint32_t> assignment;
};

struct Child {
    Solution solution;
    std::uint32_t parent = 0; // index into the current population
    std::uint32_t removed = 0;
    std::uint32_t added = 0;
    ObjectivePair objectives;
};

struct SolutionPtrHash {
    std::size_t operator()(const Solution* s) const { return s->hash(); }
};
struct SolutionPtrEq {
    bool operator()(const Solution* a, const Solution* b) const { return *a == *b; }
};

// Sites adjacent to `chosen` that are not open in `solution`.
void free_neighbours(const Solution& solution, const VoronoiIndex& sites, std::uint32_t chosen,
                     std::vector<std::uint32_t>& out) {
    out.clear();
    for (std::uint32_t q : sites.neighbors(chosen)) {
        if (!solution.contains(q)) {
            out.push_back(q);
        }
    }
}

GenerationStats stats_of(const std::vector<Member>& population, std::size_t front_size) {
    GenerationStats s;
    s.min_f1 = std::numeric_limits<std::int64_t>::max();
    s.min_f2 = std::numeric_limits<double>::infinity();
    for (const auto& member : population) {
        s.min_f1 = std::min(s.min_f1, member.objectives.f1);
        s.min_f2 = std::min(s.min_f2, member.objectives.f2);
    }
    s.front_size = front_size;
    return s;
}

} // namespace

VoronoiIndex site_index(const Instance& instance) {
    std::vector<Point> points;
    points.reserve(instance.m());
    for (const auto& site : instance.sites()) {
        points.push_back(site.position);
    }
    return VoronoiIndex(std::move(points));
}

ResolvedSize resolve_size(const Instance& instance, const TclaParams& params) {
    const std::uint64_t feasible = binomial(instance.m(), instance.k());
    ResolvedSize size;
    if (params.auto_size) {
        const std::size_t c = std::min(instance.k(), instance.m() - instance.k());
        const std::uint64_t wanted = std::max<std::uint64_t>(2 * c * instance.m(), 2);
        size.population_size = static_cast<std::size_t>(std::min(wanted, feasible));
        size.generations = std::max<std::size_t>(c * size.population_size, 1);
    } else {
        size.population_size = params.population_size;
        size.generations = params.generations;
    }
    if (params.generation_cap > 0) {
        size.generations = std::min(size.generations, params.generation_cap);
    }

    const std::size_t n_pop = size.population_size;
    if (n_pop < 2 && !(n_pop == 1 && feasible == 1)) {
        throw ParameterError("population size must be >= 2");
    }
    if (size.generations < 1) {
        throw ParameterError("generation count must be >= 1");
    }
    if (n_pop > feasible) {
        throw ParameterError("population size " + std::to_string(n_pop) + " exceeds the " +
                             std::to_string(feasible) + " distinct solutions C(" + std::to_string(instance.m()) +
                             "," + std::to_string(instance.k()) + ")");
    }
    return size;
}

std::optional<Solution> voronoi_exchange(const Solution& solution, const VoronoiIndex& sites, std::uint32_t chosen,
                                         Rng& rng) {
    const std::size_t position = solution.position_of(chosen);
    if (position == solution.size()) {
        throw ParameterError("voronoi_exchange: site " + std::to_string(chosen) + " is not an opened center");
    }
    std::vector<std::uint32_t> options;
    free_neighbours(solution, sites, chosen, options);
    if (options.empty()) {
        return std::nullopt;
    }
    const std::uint32_t pick = options[rng.below(options.size())];
    return solution.exchanged(position, pick);
}

std::vector<Solution> reproduce(const Solution& solution, const VoronoiIndex& sites, Rng& rng) {
    std::vector<Solution> children;
    for (std::uint32_t center : solution.centers()) {
        auto child = voronoi_exchange(solution, sites, center, rng);
        if (child && std::find(children.begin(), children.end(), *child) == children.end()) {
            children.push_back(std::move(*child));
        }
    }
    return children;
}

std::vector<ParetoEntry> first_front(const TclaRun& run) {
    std::vector<ObjectivePair> objectives;
    objectives.reserve(run.final_population.size());
    for (const auto& entry : run.final_population) {
        objectives.push_back(entry.objectives);
    }
    std::vector<ParetoEntry> front;
    if (objectives.empty()) {
        return front;
    }
    const auto fronts = nondominated_fronts(objectives);
    for (std::size_t idx : fronts.front()) {
        front.push_back(run.final_population[idx]);
    }
    std::sort(front.begin(), front.end(), [](const ParetoEntry& a, const ParetoEntry& b) {
        if (a.objectives.f1 != b.objectives.f1) {
            return a.objectives.f1 < b.objectives.f1;
        }
        if (a.objectives.f2 != b.objectives.f2) {
            return a.objectives.f2 < b.objectives.f2;
        }
        return a.solution < b.solution;
    });
    return front;
}

TclaRun run_tcla(const Instance& instance, const TclaParams& params) {
    const ResolvedSize size = resolve_size(instance, params);
    const std::size_t pop_size = size.population_size;
    const std::size_t m = instance.m();
    const std::size_t k = instance.k();
    const VoronoiIndex sites = site_index(instance);
    Rng rng(params.seed);

    TclaRun run;
    run.seed = params.seed;
    run.population_size = pop_size;
    run.generations = size.generations;

    // Initial population: distinct uniform k-subsets.
    std::vector<Member> population;
    population.reserve(pop_size);
    {
        std::vector<std::uint32_t> pool(m);
        std::iota(pool.begin(), pool.end(), 0u);
        std::unordered_set<Solution, SolutionHash> seen;
        while (population.size() < pop_size) {
            for (std::size_t i = 0; i < k; ++i) {
                const std::size_t j = i + static_cast<std::size_t>(rng.below(m - i));
                std::swap(pool[i], pool[j]);
            }
            Solution candidate(std::vector<std::uint32_t>(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k)));
            if (seen.insert(candidate).second) {
                population.push_back({std::move(candidate), {}, {}});
            }
        }
    }
    parallel_for(population.size(), params.threads, [&](std::size_t begin, std::size_t end) {
        ObjectiveEvaluator evaluator(instance);
        for (std::size_t p = begin; p < end; ++p) {
            population[p].objectives = evaluator.evaluate(population[p].solution.centers(), &population[p].assignment);
        }
    });
    run.evaluations += population.size();

    std::unordered_map<Solution, ObjectivePair, SolutionHash> memo;
    for (const auto& member : population) {
        memo.emplace(member.solution, member.objectives);
    }

    if (params.record_history) {
        std::vector<ObjectivePair> objs;
        for (const auto& member : population) {
            objs.push_back(member.objectives);
        }
        run.history.push_back(stats_of(population, nondominated_fronts(objs).front().size()));
    }

    std::vector<Child> children;
    std::vector<std::uint32_t> options;
    std::vector<std::size_t> pending;
    std::vector<ObjectivePair> merged;
    for (std::size_t generation = 0; generation < size.generations; ++generation) {
        // Reproduction: k exchange attempts per member, serial RNG order.
        children.clear();
        children.reserve(pop_size * k);
        std::unordered_set<const Solution*, SolutionPtrHash, SolutionPtrEq> seen;
        seen.reserve(pop_size * (k + 1));
        for (const auto& member : population) {
            seen.insert(&member.solution);
        }
        for (std::size_t p = 0; p < population.size(); ++p) {
            const Solution& parent = population[p].solution;
            for (std::size_t pos = 0; pos < k; ++pos) {
                const std::uint32_t removed = parent.centers()[pos];
                free_neighbours(parent, sites, removed, options);
                if (options.empty()) {
                    continue;
                }
                const std::uint32_t added = options[rng.below(options.size())];
                Solution child = parent.exchanged(pos, added);
                if (seen.contains(&child)) {
                    continue;
                }
                children.push_back({std::move(child), static_cast<std::uint32_t>(p), removed, added, {}});
                seen.insert(&children.back().solution);
            }
        }

        // Evaluation, with cached objectives for previously seen sets.
        pending.clear();
        for (std::size_t c = 0; c < children.size(); ++c) {
            if (auto it = memo.find(children[c].solution); it != memo.end()) {
                children[c].objectives = it->second;
            } else {
                pending.push_back(c);
            }
        }
        parallel_for(pending.size(), params.threads, [&](std::size_t begin, std::size_t end) {
            ObjectiveEvaluator evaluator(instance);
            for (std::size_t q = begin; q < end; ++q) {
                Child& child = children[pending[q]];
                child.objectives = evaluator.exchange(child.solution.centers(), population[child.parent].assignment,
                                                      child.removed, child.added);
            }
        });
        run.evaluations += pending.size();
        for (std::size_t c : pending) {
            if (memo.size() >= params.memo_capacity) {
                memo.clear();
            }
            memo.emplace(children[c].solution, children[c].objectives);
        }

        // Environmental selection over children followed by the population.
        const std::size_t child_count = children.size();
        merged.clear();
        for (const auto& child : children) {
            merged.push_back(child.objectives);
        }
        for (const auto& member : population) {
            merged.push_back(member.objectives);
        }
        auto solution_of = [&](std::size_t idx) -> const Solution& {
            return idx < child_count ? children[idx].solution : population[idx - child_count].solution;
        };

        const auto fronts = nondominated_fronts(merged);
        std::vector<std::size_t> chosen;
        chosen.reserve(pop_size);
        std::size_t front_size = 0;
        if (fronts.front().size() > pop_size) {
            std::vector<ParetoEntry> entries;
            entries.reserve(fronts.front().size());
            for (std::size_t idx : fronts.front()) {
                entries.push_back({solution_of(idx), merged[idx]});
            }
            for (std::size_t pick : crowding_select(entries, pop_size)) {
                chosen.push_back(fronts.front()[pick]);
            }
            front_size = pop_size;
        } else {
            front_size = fronts.front().size();
            for (const auto& front : fronts) {
                const std::size_t room = pop_size - chosen.size();
                if (front.size() <= room) {
                    chosen.insert(chosen.end(), front.begin(), front.end());
                } else {
                    std::vector<std::size_t> draw = front;
                    for (std::size_t i = 0; i < room; ++i) {
                        const std::size_t j = i + static_cast<std::size_t>(rng.below(draw.size() - i));
                        std::swap(draw[i], draw[j]);
                    }
                    chosen.insert(chosen.end(), draw.begin(), draw.begin() + static_cast<std::ptrdiff_t>(room));
                }
                if (chosen.size() == pop_size) {
                    break;
                }
            }
        }

        std::vector<Member> next(chosen.size());
        std::vector<std::size_t> from_children;
        for (std::size_t s = 0; s < chosen.size(); ++s) {
            if (chosen[s] < child_count) {
                from_children.push_back(s);
            }
        }
        parallel_for(from_children.size(), params.threads, [&](std::size_t begin, std::size_t end) {
            ObjectiveEvaluator evaluator(instance);
            for (std::size_t q = begin; q < end; ++q) {
                const std::size_t s = from_children[q];
                Child& child = children[chosen[s]];
                next[s].objectives = child.objectives;
                evaluator.exchange(child.solution.centers(), population[child.parent].assignment, child.removed,
                                   child.added, &next[s].assignment);
            }
        });
        for (std::size_t s = 0; s < chosen.size(); ++s) {
            if (chosen[s] < child_count) {
                next[s].solution = std::move(children[chosen[s]].solution);
            } else {
                next[s] = std::move(population[chosen[s] - child_count]);
            }
        }
        population = std::move(next);

        if (params.record_history) {
            run.history.push_back(stats_of(population, front_size));
        }
    }

    run.final_population.reserve(population.size());
    for (auto& member : population) {
        run.final_population.push_back({std::move(member.solution), member.objectives});
    }
    return run;
}

} // namespace tclp
