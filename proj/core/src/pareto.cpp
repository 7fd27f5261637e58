#include "tclp/pareto.hpp"

#include "tclp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace tclp {

std::vector<std::vector<std::size_t>> nondominated_fronts(std::span<const ObjectivePair> points) {
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& pa = points[a];
        const auto& pb = points[b];
        if (pa.f1 != pb.f1) {
            return pa.f1 < pb.f1;
        }
        if (pa.f2 != pb.f2) {
            return pa.f2 < pb.f2;
        }
        return a < b;
    });

    // Sweeping in (f1, f2) order, the last point added to a front has the
    // smallest f2 in it, so it alone decides whether the front dominates a
    // later point. Domination by front r implies domination by every
    // earlier front, which makes the search monotone.
    std::vector<std::vector<std::size_t>> fronts;
    std::vector<ObjectivePair> tails;
    for (std::size_t idx : order) {
        const ObjectivePair& p = points[idx];
        auto dominated_by = [&](std::size_t r) {
            const ObjectivePair& t = tails[r];
            return t.f2 < p.f2 || (t.f2 == p.f2 && t.f1 < p.f1);
        };
        std::size_t lo = 0;
        std::size_t hi = fronts.size();
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo) / 2;
            if (dominated_by(mid)) {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        if (lo == fronts.size()) {
            fronts.emplace_back();
            tails.push_back(p);
        }
        fronts[lo].push_back(idx);
        tails[lo] = p;
    }
    for (auto& front : fronts) {
        std::sort(front.begin(), front.end());
    }
    return fronts;
}

std::vector<std::size_t> crowding_select(std::span<const ParetoEntry> entries, std::size_t target) {
    if (target < 2) {
        throw ParameterError("crowding_select: target must be >= 2");
    }
    if (entries.size() <= target) {
        throw ParameterError("crowding_select: " + std::to_string(entries.size()) +
                             " entries do not exceed target " + std::to_string(target));
    }

    const std::size_t count = entries.size();
    auto obj = [&](std::size_t i) -> const ObjectivePair& { return entries[i].objectives; };

    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (obj(a).f1 != obj(b).f1) {
            return obj(a).f1 < obj(b).f1;
        }
        if (obj(a).f2 != obj(b).f2) {
            return obj(a).f2 < obj(b).f2;
        }
        return entries[a].solution < entries[b].solution;
    });

    auto f2_first = [&](std::size_t a, std::size_t b) {
        if (obj(a).f2 != obj(b).f2) {
            return obj(a).f2 < obj(b).f2;
        }
        if (obj(a).f1 != obj(b).f1) {
            return obj(a).f1 < obj(b).f1;
        }
        return entries[a].solution < entries[b].solution;
    };
    const std::size_t min_f1 = order.front();
    // Best by (f2, f1, solution); when that is min_f1 itself (all pairs
    // equal), the runner-up.
    std::size_t min_f2 = count;
    for (std::size_t i = 0; i < count; ++i) {
        if (min_f2 == count || f2_first(i, min_f2)) {
            min_f2 = i;
        }
    }
    if (min_f2 == min_f1) {
        min_f2 = count;
        for (std::size_t i = 0; i < count; ++i) {
            if (i != min_f1 && (min_f2 == count || f2_first(i, min_f2))) {
                min_f2 = i;
            }
        }
    }

    std::int64_t f1_lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t f1_hi = std::numeric_limits<std::int64_t>::min();
    double f2_lo = std::numeric_limits<double>::infinity();
    double f2_hi = -std::numeric_limits<double>::infinity();
    for (const auto& e : entries) {
        f1_lo = std::min(f1_lo, e.objectives.f1);
        f1_hi = std::max(f1_hi, e.objectives.f1);
        f2_lo = std::min(f2_lo, e.objectives.f2);
        f2_hi = std::max(f2_hi, e.objectives.f2);
    }
    const double f1_range = static_cast<double>(f1_hi - f1_lo);
    const double f2_range = f2_hi - f2_lo;
    auto norm1 = [&](std::size_t i) {
        return f1_range > 0.0 ? static_cast<double>(obj(i).f1 - f1_lo) / f1_range : 0.0;
    };
    auto norm2 = [&](std::size_t i) { return f2_range > 0.0 ? (obj(i).f2 - f2_lo) / f2_range : 0.0; };

    // Groups of equal objective pairs along the F1-sorted sequence; only the
    // first member of a group gets a box.
    std::vector<std::size_t> group_start; // positions in `order`
    for (std::size_t pos = 0; pos < count; ++pos) {
        if (pos == 0 || !(obj(order[pos]) == obj(order[pos - 1]))) {
            group_start.push_back(pos);
        }
    }
    std::vector<double> area(count, 0.0);
    std::vector<std::size_t> position(count);
    for (std::size_t pos = 0; pos < count; ++pos) {
        position[order[pos]] = pos;
    }
    for (std::size_t g = 1; g + 1 < group_start.size(); ++g) {
        const std::size_t prev = order[group_start[g - 1]];
        const std::size_t here = order[group_start[g]];
        const std::size_t next = order[group_start[g + 1]];
        const double width = f1_range > 0.0 ? norm1(next) - norm1(prev) : 1.0;
        const double height = f2_range > 0.0 ? std::abs(norm2(prev) - norm2(next)) : 1.0;
        area[here] = width * height;
    }

    std::vector<std::size_t> selected{min_f1, min_f2};
    std::vector<std::size_t> candidates;
    candidates.reserve(count - 2);
    for (std::size_t pos = 0; pos < count; ++pos) {
        const std::size_t i = order[pos];
        if (i != min_f1 && i != min_f2) {
            candidates.push_back(i);
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](std::size_t a, std::size_t b) { return area[a] > area[b]; });

    auto distance_to_selected = [&](std::size_t i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t s : selected) {
            const double d1 = norm1(i) - norm1(s);
            const double d2 = norm2(i) - norm2(s);
            best = std::min(best, d1 * d1 + d2 * d2);
        }
        return best;
    };

    std::size_t cursor = 0;
    while (selected.size() < target) {
        std::size_t tie_end = cursor + 1;
        while (tie_end < candidates.size() && area[candidates[tie_end]] == area[candidates[cursor]]) {
            ++tie_end;
        }
        const std::size_t slots = target - selected.size();
        if (tie_end - cursor <= slots) {
            selected.insert(selected.end(), candidates.begin() + cursor, candidates.begin() + tie_end);
            cursor = tie_end;
            continue;
        }
        // Too many equal boxes: fill greedily by spread.
        std::vector<std::size_t> pool(candidates.begin() + cursor, candidates.begin() + tie_end);
        std::vector<double> spread(pool.size());
        for (std::size_t p = 0; p < pool.size(); ++p) {
            spread[p] = distance_to_selected(pool[p]);
        }
        std::vector<bool> taken(pool.size(), false);
        for (std::size_t s = 0; s < slots; ++s) {
            std::size_t pick = pool.size();
            for (std::size_t p = 0; p < pool.size(); ++p) {
                if (taken[p]) {
                    continue;
                }
                if (pick == pool.size() || spread[p] > spread[pick] ||
                    (spread[p] == spread[pick] && position[pool[p]] < position[pool[pick]])) {
                    pick = p;
                }
            }
            taken[pick] = true;
            selected.push_back(pool[pick]);
            for (std::size_t p = 0; p < pool.size(); ++p) {
                if (!taken[p]) {
                    const double d1 = norm1(pool[p]) - norm1(pool[pick]);
                    const double d2 = norm2(pool[p]) - norm2(pool[pick]);
                    spread[p] = std::min(spread[p], d1 * d1 + d2 * d2);
                }
            }
        }
    }
    return selected;
}

bool ParetoArchive::insert(ParetoEntry candidate) {
    for (const auto& e : entries_) {
        if (dominates(e.objectives, candidate.objectives) || e.solution == candidate.solution) {
            return false;
        }
    }
    std::erase_if(entries_, [&](const ParetoEntry& e) { return dominates(candidate.objectives, e.objectives); });
    entries_.push_back(std::move(candidate));
    return true;
}

void ParetoArchive::merge(const ParetoArchive& other) {
    for (const auto& e : other.entries_) {
        insert(e);
    }
}

std::vector<ParetoEntry> ParetoArchive::sorted() const {
    std::vector<ParetoEntry> out = entries_;
    std::sort(out.begin(), out.end(), [](const ParetoEntry& a, const ParetoEntry& b) {
        if (a.objectives.f1 != b.objectives.f1) {
            return a.objectives.f1 < b.objectives.f1;
        }
        if (a.objectives.f2 != b.objectives.f2) {
            return a.objectives.f2 < b.objectives.f2;
        }
        return a.solution < b.solution;
    });
    return out;
}

} // namespace tclp
