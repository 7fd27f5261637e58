#pragma once

#include "tclp/geometry.hpp"
#include "tclp/instance.hpp"
#include "tclp/pareto.hpp"
#include "tclp/rng.hpp"
#include "tclp/solution.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace tclp {

struct TclaParams {
    // With auto_size, N = 2cm and T = cN for c = min(k, m - k); N is clamped
    // to C(m, k) and T to at least 1. Otherwise population_size and
    // generations are used as given.
    bool auto_size = true;
    std::size_t population_size = 0;
    std::size_t generations = 0;
    // Upper bound on T after sizing (0 = none).
    std::size_t generation_cap = 0;
    std::uint64_t seed = 0;
    bool record_history = true;
    std::size_t threads = 0;                 // evaluation workers, 0 = default
    std::size_t memo_capacity = 1u << 18;    // cached evaluations; cleared when full
};

struct ResolvedSize {
    std::size_t population_size = 0;
    std::size_t generations = 0;
};

// Effective N and T. Throws ParameterError when N < 2 (unless only one
// solution exists), T < 1, or N > C(m, k).
ResolvedSize resolve_size(const Instance& instance, const TclaParams& params);

struct GenerationStats {
    std::int64_t min_f1 = 0;
    double min_f2 = 0.0;
    std::size_t front_size = 0; // first-front members in the population
};

struct TclaRun {
    std::vector<ParetoEntry> final_population;
    // history[0] describes the initial population, history[t] the
    // population after generation t.
    std::vector<GenerationStats> history;
    std::uint64_t seed = 0;
    std::size_t population_size = 0;
    std::size_t generations = 0;
    std::size_t evaluations = 0; // objective evaluations actually computed
};

// Members of the first non-dominated front of the final population,
// ordered by (f1, f2, center set).
std::vector<ParetoEntry> first_front(const TclaRun& run);

// Replaces `chosen` (an opened site) by a uniformly drawn Voronoi neighbour
// over all candidate sites that is not already open. Empty when every
// neighbour is open. Throws ParameterError if `chosen` is not in the
// solution.
std::optional<Solution> voronoi_exchange(const Solution& solution, const VoronoiIndex& sites,
                                         std::uint32_t chosen, Rng& rng);

// One exchange attempt per opened center, in center order; failed attempts
// and repeated children are dropped.
std::vector<Solution> reproduce(const Solution& solution, const VoronoiIndex& sites, Rng& rng);

// Test Center Location Algorithm: random initial population, Voronoi
// exchange reproduction, duplicate removal, non-dominated environmental
// selection with extreme-preserving crowding. Deterministic for a given
// instance and params.
TclaRun run_tcla(const Instance& instance, const TclaParams& params);

// Voronoi index over the instance's candidate sites.
VoronoiIndex site_index(const Instance& instance);

} // namespace tclp
