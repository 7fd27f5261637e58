#include "oracles.hpp"

#include "tclp/errors.hpp"
#include "tclp/geometry.hpp"
#include "tclp/predicates.hpp"
#include "tclp/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using namespace tclp;

namespace {

std::vector<Point> random_points(std::size_t count, std::uint64_t seed, double w = 1500.0, double h = 1000.0) {
    Rng rng(seed);
    std::vector<Point> pts;
    while (pts.size() < count) {
        const Point p{rng.unit() * w, rng.unit() * h};
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) {
            pts.push_back(p);
        }
    }
    return pts;
}

std::set<oracle::Edge> edges_of(const VoronoiIndex& index) {
    std::set<oracle::Edge> out;
    for (std::uint32_t a = 0; a < index.size(); ++a) {
        for (std::uint32_t b : index.neighbors(a)) {
            out.insert({std::min(a, b), std::max(a, b)});
        }
    }
    return out;
}

void check_adjacency_shape(const VoronoiIndex& index) {
    std::size_t directed = 0;
    for (std::uint32_t a = 0; a < index.size(); ++a) {
        const auto nb = index.neighbors(a);
        directed += nb.size();
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
        for (std::uint32_t b : nb) {
            CHECK(b != a);
            const auto back = index.neighbors(b);
            CHECK(std::binary_search(back.begin(), back.end(), a));
        }
        if (index.size() >= 2) {
            CHECK_FALSE(nb.empty());
        }
    }
    CHECK(directed <= 6 * index.size());
    if (index.size() >= 3) {
        CHECK(index.edge_count() <= 3 * index.size() - 6 + (index.triangles().empty() ? 6 : 0));
    }
}

} // namespace

TEST_CASE("predicates resolve near-degenerate input exactly") {
    // Nearly collinear points where naive double evaluation is unreliable.
    const Point a{0.5, 0.5};
    const Point b{12.0, 12.0};
    const Point c{24.0, 24.0};
    CHECK(predicates::orient(a, b, c) == 0);
    const Point c_up{24.0, std::nextafter(24.0, 25.0)};
    CHECK(predicates::orient(a, b, c_up) > 0);
    const Point c_down{24.0, std::nextafter(24.0, 23.0)};
    CHECK(predicates::orient(a, b, c_down) < 0);

    // Cocircular: the four corners of a square.
    CHECK(predicates::incircle({0, 0}, {1, 0}, {1, 1}, {0, 1}) == 0);
    CHECK(predicates::incircle({0, 0}, {1, 0}, {1, 1}, {0.5, 0.5}) > 0);
    CHECK(predicates::incircle({0, 0}, {1, 0}, {1, 1}, {2, 2}) < 0);
    CHECK(predicates::incircle({0, 0}, {1, 0}, {1, 1}, {std::nextafter(0.0, 1.0), 1}) > 0);

    Rng rng(17);
    for (int t = 0; t < 2000; ++t) {
        const Point p{rng.unit(), rng.unit()};
        const Point q{rng.unit(), rng.unit()};
        const Point r{rng.unit(), rng.unit()};
        const Point s{rng.unit(), rng.unit()};
        REQUIRE(predicates::orient(p, q, r) == oracle::sign_orient(p, q, r));
        if (oracle::sign_orient(p, q, r) > 0) {
            REQUIRE(predicates::incircle(p, q, r, s) == oracle::inside_circle(p, q, r, s));
        }
    }
}

TEST_CASE("unit square corners") {
    const VoronoiIndex index({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    check_adjacency_shape(index);
    for (std::uint32_t s = 0; s < 4; ++s) {
        const auto nb = index.neighbors(s);
        CHECK(nb.size() >= 2);
        CHECK(nb.size() <= 3);
    }
    CHECK(index.edge_count() == 5); // four sides plus one diagonal
    CHECK(index.triangles().size() == 2);
}

TEST_CASE("two points are each other's only neighbour") {
    const VoronoiIndex index({{3, 4}, {-1, 2}});
    REQUIRE(index.neighbors(0).size() == 1);
    CHECK(index.neighbors(0)[0] == 1);
    REQUIRE(index.neighbors(1).size() == 1);
    CHECK(index.neighbors(1)[0] == 0);
}

TEST_CASE("single point has no neighbours") {
    const VoronoiIndex index({{3, 4}});
    CHECK(index.neighbors(0).empty());
    CHECK(index.nearest({100, -7}) == 0);
}

TEST_CASE("collinear points form a path along the line") {
    const VoronoiIndex index({{2, 2}, {0, 0}, {3, 3}, {1, 1}});
    check_adjacency_shape(index);
    CHECK(edges_of(index) == std::set<oracle::Edge>{{1, 3}, {0, 3}, {0, 2}});
    CHECK(index.triangles().empty());
}

TEST_CASE("construction and lookup errors") {
    CHECK_THROWS_AS(VoronoiIndex(std::vector<Point>{}), ParameterError);
    CHECK_THROWS_AS(VoronoiIndex({{1, 1}, {2, 2}, {1, 1}}), ParameterError);
    const VoronoiIndex index({{0, 0}, {1, 0}});
    CHECK_THROWS_AS(index.neighbors(2), ParameterError);
}

TEST_CASE("adjacency equals the empty-circumcircle oracle") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto pts = random_points(50, seed);
        const VoronoiIndex index(pts);
        check_adjacency_shape(index);
        CHECK(edges_of(index) == oracle::delaunay_edges(pts));
    }
}

TEST_CASE("grid with many cocircular quadruples stays consistent") {
    std::vector<Point> pts;
    for (int x = 0; x < 6; ++x) {
        for (int y = 0; y < 5; ++y) {
            pts.push_back({static_cast<double>(x), static_cast<double>(y)});
        }
    }
    const VoronoiIndex index(pts);
    check_adjacency_shape(index);
    // Every oracle edge (empty open circle) must be present; with
    // cocircular ties the oracle also lists both diagonals of each cell.
    const auto edges = edges_of(index);
    const auto oracle_edges = oracle::delaunay_edges(pts);
    for (const auto& e : edges) {
        CHECK(oracle_edges.count(e) == 1);
    }
    // A triangulation of a 6x5 grid has 2*(5*4) triangles.
    CHECK(index.triangles().size() == 40);
}

TEST_CASE("adjacency is invariant under input permutation") {
    const auto pts = random_points(40, 77);
    const VoronoiIndex base(pts);
    std::vector<std::uint32_t> perm(pts.size());
    std::iota(perm.begin(), perm.end(), 0u);
    Rng rng(5);
    rng.shuffle(std::span<std::uint32_t>(perm));
    std::vector<Point> shuffled(pts.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        shuffled[i] = pts[perm[i]];
    }
    const VoronoiIndex other(shuffled);
    std::set<oracle::Edge> mapped;
    for (const auto& [a, b] : edges_of(other)) {
        mapped.insert({std::min(perm[a], perm[b]), std::max(perm[a], perm[b])});
    }
    CHECK(mapped == edges_of(base));

    // Same for the degenerate grid, where ties decide the diagonals.
    std::vector<Point> grid;
    for (int x = 0; x < 4; ++x) {
        for (int y = 0; y < 4; ++y) {
            grid.push_back({static_cast<double>(x), static_cast<double>(y)});
        }
    }
    std::vector<std::uint32_t> gperm(grid.size());
    std::iota(gperm.begin(), gperm.end(), 0u);
    rng.shuffle(std::span<std::uint32_t>(gperm));
    std::vector<Point> gshuffled(grid.size());
    for (std::size_t i = 0; i < gperm.size(); ++i) {
        gshuffled[i] = grid[gperm[i]];
    }
    std::set<oracle::Edge> gmapped;
    for (const auto& [a, b] : edges_of(VoronoiIndex(gshuffled))) {
        gmapped.insert({std::min(gperm[a], gperm[b]), std::max(gperm[a], gperm[b])});
    }
    CHECK(gmapped == edges_of(VoronoiIndex(grid)));
}

TEST_CASE("nearest: coincident and tied queries") {
    const std::vector<Point> sites{{0, 0}, {10, 0}, {5, 8}, {3, 3}, {10, 10}};
    const VoronoiIndex index(sites);
    CHECK(index.nearest({3, 3}) == 3);
    // (10,5) is equidistant from sites 1 and 4.
    CHECK(index.nearest({10, 5}) == 1);
    const VoronoiIndex square({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(square.nearest({0.5, 0.5}) == 0);
    CHECK(square.nearest({1.0, 0.5}) == 1);
    CHECK(square.nearest({0.5, 1.0}) == 2);
}

TEST_CASE("nearest agrees with a linear scan") {
    const auto sites = random_points(100, 11);
    const VoronoiIndex index(sites);
    Rng rng(12);
    for (int q = 0; q < 5000; ++q) {
        const Point p{rng.unit() * 1700.0 - 100.0, rng.unit() * 1200.0 - 100.0};
        REQUIRE(index.nearest(p) == oracle::nearest_linear(sites, p));
    }
    // Queries exactly on sites and on midpoints between neighbours.
    for (std::uint32_t a = 0; a < sites.size(); ++a) {
        CHECK(index.nearest(sites[a]) == a);
        for (std::uint32_t b : index.neighbors(a)) {
            const Point mid{(sites[a].x + sites[b].x) / 2, (sites[a].y + sites[b].y) / 2};
            REQUIRE(index.nearest(mid) == oracle::nearest_linear(sites, mid));
        }
    }
}

TEST_CASE("nearest on a grid with exact ties") {
    std::vector<Point> sites;
    for (int x = 0; x < 5; ++x) {
        for (int y = 0; y < 5; ++y) {
            sites.push_back({static_cast<double>(2 * x), static_cast<double>(2 * y)});
        }
    }
    const VoronoiIndex index(sites);
    for (int x = -1; x <= 9; ++x) {
        for (int y = -1; y <= 9; ++y) {
            const Point q{static_cast<double>(x), static_cast<double>(y)};
            REQUIRE(index.nearest(q) == oracle::nearest_linear(sites, q));
        }
    }
}

TEST_CASE("nearest_by uses caller distances and start site") {
    const auto sites = random_points(30, 4);
    const VoronoiIndex index(sites);
    const Point q{700, 400};
    const std::size_t expect = oracle::nearest_linear(sites, q);
    for (std::size_t start = 0; start < sites.size(); ++start) {
        CHECK(index.nearest_by([&](std::size_t j) { return euclidean(sites[j], q); }, start) == expect);
    }
}
