#pragma once

#include "tclp/solution.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tclp {

// A point (F1, F2) in objective space. Both objectives are minimised.
struct ObjectivePair {
    std::int64_t f1 = 0;
    double f2 = 0.0;

    friend bool operator==(const ObjectivePair&, const ObjectivePair&) = default;
};

// Strict Pareto dominance: no worse in both, strictly better in one.
// Equal pairs do not dominate each other.
constexpr bool dominates(const ObjectivePair& a, const ObjectivePair& b) {
    return a.f1 <= b.f1 && a.f2 <= b.f2 && (a.f1 < b.f1 || a.f2 < b.f2);
}

struct ParetoEntry {
    Solution solution;
    ObjectivePair objectives;

    friend bool operator==(const ParetoEntry&, const ParetoEntry&) = default;
};

// Partition into successive non-dominated fronts. Each input index appears
// in exactly one front; indices inside a front are ascending.
// O(N log N) via sweep over (f1, f2) order with a binary search per point.
std::vector<std::vector<std::size_t>> nondominated_fronts(std::span<const ObjectivePair> points);

// Diversity-preserving truncation of a mutually non-dominated set to
// exactly `target` entries; returns the chosen indices into `entries` in
// selection order.
//
// The min-F1 and min-F2 entries are always chosen first (ties by the other
// objective, then by center set). The remaining slots go to the entries
// whose empty bounding box in min-max normalised objective space is
// largest: along the F1-sorted sequence, the box of an entry spans from its
// left neighbour to its right neighbour, and its area is the product of the
// two normalised gaps. An axis with zero range contributes a factor of 1.
// Entries sharing an objective pair with an earlier entry get area 0.
// Equal areas are resolved greedily in favour of the entry farthest
// (normalised Euclidean) from everything already chosen, then by F1-sorted
// position.
//
// Throws ParameterError unless target >= 2 and entries.size() > target.
std::vector<std::size_t> crowding_select(std::span<const ParetoEntry> entries, std::size_t target);

// Set of mutually non-dominated entries with pairwise distinct center sets.
// Equal objective pairs with different center sets are all kept.
class ParetoArchive {
public:
    // Adds the candidate unless an entry dominates it or has the same center
    // set; drops entries the candidate dominates. Returns whether it was
    // added.
    bool insert(ParetoEntry candidate);

    // Merges every entry of `other`.
    void merge(const ParetoArchive& other);

    std::span<const ParetoEntry> entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    // Entries ordered by (f1, f2, center set); independent of insertion order.
    std::vector<ParetoEntry> sorted() const;

private:
    std::vector<ParetoEntry> entries_;
};

} // namespace tclp
