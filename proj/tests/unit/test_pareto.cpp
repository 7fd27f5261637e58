#include "oracles.hpp"

#include "tclp/errors.hpp"
#include "tclp/pareto.hpp"
#include "tclp/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace tclp;

namespace {

std::vector<ObjectivePair> random_pairs(std::size_t count, Rng& rng, std::int64_t f1_max = 20, int f2_levels = 0) {
    std::vector<ObjectivePair> pts;
    for (std::size_t i = 0; i < count; ++i) {
        const double f2 = f2_levels > 0 ? static_cast<double>(rng.below(static_cast<std::uint64_t>(f2_levels)))
                                        : rng.unit() * 100.0;
        pts.push_back({rng.between(0, f1_max), f2});
    }
    return pts;
}

// Mutually non-dominated pairs with distinct f1 values.
std::vector<ParetoEntry> random_front(std::size_t count, Rng& rng) {
    std::set<std::int64_t> f1s;
    while (f1s.size() < count) {
        f1s.insert(rng.between(0, 10'000));
    }
    std::vector<double> f2s;
    for (std::size_t i = 0; i < count; ++i) {
        f2s.push_back(rng.unit() * 1000.0);
    }
    std::sort(f2s.begin(), f2s.end(), std::greater<>());
    std::vector<ParetoEntry> out;
    std::size_t idx = 0;
    for (std::int64_t f1 : f1s) {
        out.push_back({Solution({static_cast<std::uint32_t>(idx)}), {f1, f2s[idx]}});
        ++idx;
    }
    rng.shuffle(std::span<ParetoEntry>(out));
    return out;
}

// Straightforward statement of the selection rule for inputs without
// equal areas: extremes, then largest normalised neighbour-gap products.
std::set<std::size_t> reference_crowding(const std::vector<ParetoEntry>& entries, std::size_t target) {
    std::vector<std::size_t> order(entries.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return entries[a].objectives.f1 < entries[b].objectives.f1; });
    const double f1_min = static_cast<double>(entries[order.front()].objectives.f1);
    const double f1_max = static_cast<double>(entries[order.back()].objectives.f1);
    double f2_min = 1e300;
    double f2_max = -1e300;
    for (const auto& e : entries) {
        f2_min = std::min(f2_min, e.objectives.f2);
        f2_max = std::max(f2_max, e.objectives.f2);
    }
    std::set<std::size_t> chosen{order.front(), order.back()};
    std::vector<std::pair<double, std::size_t>> boxes;
    for (std::size_t p = 1; p + 1 < order.size(); ++p) {
        const auto& l = entries[order[p - 1]].objectives;
        const auto& r = entries[order[p + 1]].objectives;
        const double w = (static_cast<double>(r.f1) - static_cast<double>(l.f1)) / (f1_max - f1_min);
        const double h = (l.f2 - r.f2) / (f2_max - f2_min);
        boxes.push_back({w * h, order[p]});
    }
    std::sort(boxes.begin(), boxes.end(), std::greater<>());
    for (std::size_t i = 0; chosen.size() < target; ++i) {
        chosen.insert(boxes[i].second);
    }
    return chosen;
}

} // namespace

TEST_CASE("dominance examples") {
    CHECK(dominates({1, 1}, {2, 2}));
    CHECK_FALSE(dominates({1, 3}, {3, 1}));
    CHECK_FALSE(dominates({3, 1}, {1, 3}));
    CHECK_FALSE(dominates({2, 2}, {2, 2}));
    CHECK(dominates({2, 1}, {2, 2}));
    CHECK(dominates({1, 2}, {2, 2}));
}

TEST_CASE("dominance is a strict partial order") {
    Rng rng(1);
    const auto pts = random_pairs(60, rng, 5, 5);
    for (const auto& a : pts) {
        CHECK_FALSE(dominates(a, a));
        for (const auto& b : pts) {
            if (dominates(a, b)) {
                CHECK_FALSE(dominates(b, a));
            }
            for (const auto& c : pts) {
                if (dominates(a, b) && dominates(b, c)) {
                    REQUIRE(dominates(a, c));
                }
            }
        }
    }
}

TEST_CASE("front examples") {
    const std::vector<ObjectivePair> incomparable{{1, 3}, {3, 1}, {2, 2}};
    CHECK(nondominated_fronts(incomparable) == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
    const std::vector<ObjectivePair> chain{{1, 1}, {2, 2}, {3, 3}};
    CHECK(nondominated_fronts(chain) == std::vector<std::vector<std::size_t>>{{0}, {1}, {2}});
    CHECK(nondominated_fronts(std::vector<ObjectivePair>{}).empty());
    const std::vector<ObjectivePair> equal{{2, 2}, {2, 2}, {1, 5}};
    CHECK(nondominated_fronts(equal) == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
}

TEST_CASE("fronts agree with the quadratic peeling oracle") {
    Rng rng(2);
    for (int round = 0; round < 50; ++round) {
        // Alternate between continuous f2 and heavily tied values.
        const auto pts = random_pairs(200, rng, round % 2 ? 10 : 1000, round % 2 ? 8 : 0);
        const auto fronts = nondominated_fronts(pts);
        auto expect = oracle::fronts(pts);
        for (auto& f : expect) {
            std::sort(f.begin(), f.end());
        }
        REQUIRE(fronts == expect);
        // Structural properties.
        std::vector<int> seen(pts.size(), 0);
        for (std::size_t r = 0; r < fronts.size(); ++r) {
            for (std::size_t a : fronts[r]) {
                ++seen[a];
                for (std::size_t b : fronts[r]) {
                    CHECK_FALSE(dominates(pts[a], pts[b]));
                }
                if (r > 0) {
                    CHECK(std::any_of(fronts[r - 1].begin(), fronts[r - 1].end(),
                                      [&](std::size_t p) { return dominates(pts[p], pts[a]); }));
                }
            }
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    }
}

TEST_CASE("crowding keeps the extremes") {
    const std::vector<ParetoEntry> three{
        {Solution({0}), {1, 9.0}}, {Solution({1}), {5, 5.0}}, {Solution({2}), {9, 1.0}}};
    auto sel = crowding_select(three, 2);
    std::sort(sel.begin(), sel.end());
    CHECK(sel == std::vector<std::size_t>{0, 2});
}

TEST_CASE("crowding on evenly spaced collinear entries picks the middle") {
    std::vector<ParetoEntry> line;
    for (std::uint32_t i = 0; i < 5; ++i) {
        line.push_back({Solution({i}), {static_cast<std::int64_t>(i), 4.0 - i}});
    }
    auto sel = crowding_select(line, 3);
    std::sort(sel.begin(), sel.end());
    CHECK(sel == std::vector<std::size_t>{0, 2, 4});
    auto sel4 = crowding_select(line, 4);
    CHECK(sel4.size() == 4);
    CHECK(std::count(sel4.begin(), sel4.end(), 0) == 1);
    CHECK(std::count(sel4.begin(), sel4.end(), 4) == 1);
}

TEST_CASE("crowding equals the reference rule on random fronts") {
    Rng rng(3);
    for (int round = 0; round < 100; ++round) {
        const auto entries = random_front(40, rng);
        const auto sel = crowding_select(entries, 10);
        REQUIRE(sel.size() == 10);
        const std::set<std::size_t> got(sel.begin(), sel.end());
        REQUIRE(got.size() == 10);
        CHECK(got == reference_crowding(entries, 10));
    }
}

TEST_CASE("crowding handles duplicate pairs and flat axes") {
    std::vector<ParetoEntry> dup{{Solution({0}), {0, 5.0}}, {Solution({1}), {3, 2.0}}, {Solution({2}), {3, 2.0}},
                                 {Solution({3}), {6, 0.0}}};
    auto sel = crowding_select(dup, 3);
    REQUIRE(sel.size() == 3);
    std::sort(sel.begin(), sel.end());
    CHECK(sel.front() == 0);
    CHECK(sel.back() == 3);

    // All pairs equal: both slots filled, result size exact.
    std::vector<ParetoEntry> same;
    for (std::uint32_t i = 0; i < 5; ++i) {
        same.push_back({Solution({i}), {2, 2.0}});
    }
    auto s2 = crowding_select(same, 3);
    CHECK(std::set<std::size_t>(s2.begin(), s2.end()).size() == 3);
    CHECK(s2[0] == 0); // min-F1 tie resolved by center set
    CHECK(s2[1] == 1);
}

TEST_CASE("crowding is deterministic and rejects bad targets") {
    Rng rng(4);
    const auto entries = random_front(12, rng);
    CHECK(crowding_select(entries, 5) == crowding_select(entries, 5));
    CHECK_THROWS_AS(crowding_select(entries, 1), ParameterError);
    CHECK_THROWS_AS(crowding_select(entries, 12), ParameterError);
    CHECK_THROWS_AS(crowding_select(entries, 13), ParameterError);
}

TEST_CASE("archive examples") {
    ParetoArchive archive;
    CHECK(archive.insert({Solution({0}), {3, 3.0}}));
    ParetoArchive one;
    one.insert({Solution({0}), {1, 1.0}});
    CHECK_FALSE(one.insert({Solution({1}), {2, 2.0}}));
    CHECK(one.size() == 1);
    // Same objective pair, different deployment: kept.
    CHECK(one.insert({Solution({2}), {1, 1.0}}));
    // Same deployment again: rejected.
    CHECK_FALSE(one.insert({Solution({2}), {1, 1.0}}));
    CHECK(one.size() == 2);
    // Dominating candidate evicts.
    CHECK(one.insert({Solution({3}), {0, 0.5}}));
    CHECK(one.size() == 1);
}

TEST_CASE("archive of a stream equals the quadratic filter and ignores order") {
    Rng rng(5);
    for (int round = 0; round < 10; ++round) {
        std::vector<ParetoEntry> stream;
        const auto pts = random_pairs(500, rng, 30, round % 2 ? 12 : 0);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            stream.push_back({Solution({static_cast<std::uint32_t>(i)}), pts[i]});
        }
        ParetoArchive archive;
        for (const auto& e : stream) {
            archive.insert(e);
        }
        std::set<std::uint32_t> got;
        for (const auto& e : archive.entries()) {
            got.insert(e.solution.centers()[0]);
        }
        std::set<std::uint32_t> expect;
        for (std::size_t i : oracle::nondominated(pts)) {
            expect.insert(static_cast<std::uint32_t>(i));
        }
        REQUIRE(got == expect);

        rng.shuffle(std::span<ParetoEntry>(stream));
        ParetoArchive shuffled;
        for (const auto& e : stream) {
            shuffled.insert(e);
        }
        CHECK(shuffled.sorted() == archive.sorted());

        ParetoArchive merged;
        merged.merge(archive);
        merged.merge(shuffled);
        CHECK(merged.sorted() == archive.sorted());
    }
}
