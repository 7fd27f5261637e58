#pragma once

#include "tclp/point.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tclp {

// Delaunay triangulation of a planar point set, exposed as Voronoi-neighbor
// adjacency plus a nearest-site query.
//
// Construction is incremental (Bowyer-Watson with a symbolic point at
// infinity) over exact orientation/incircle predicates. Points are inserted
// in lexicographic (x, y) order, so cocircular ties resolve the same way for
// every permutation of the input. With fewer than three points, or when all
// points are collinear, the adjacency is the path through the points in
// their order along the line.
class VoronoiIndex {
public:
    using Triangle = std::array<std::uint32_t, 3>; // counter-clockwise

    // Throws ParameterError on an empty set or duplicate coordinates.
    explicit VoronoiIndex(std::vector<Point> points);

    std::size_t size() const { return points_.size(); }
    std::span<const Point> points() const { return points_; }

    // Voronoi neighbors of `site`, ascending. Throws ParameterError when out
    // of range.
    std::span<const std::uint32_t> neighbors(std::size_t site) const;

    // Undirected Delaunay edge count.
    std::size_t edge_count() const { return flat_.size() / 2; }

    // Finite Delaunay triangles; empty in the collinear/small fallback.
    std::span<const Triangle> triangles() const { return triangles_; }

    // Site closest to `query` under euclidean(); ties go to the smaller
    // index.
    std::size_t nearest(const Point& query) const;

    // Same walk with caller-provided distances: dist(j) is the distance from
    // the query to site j. Used with stored distance matrices so that the
    // result matches a linear scan over the very same values.
    //
    // The greedy descent over Delaunay edges reaches a site at minimal
    // distance; a final sweep over the neighbourhood within a relative
    // 1e-9 band absorbs rounding and resolves exact ties by index.
    template <typename DistanceFn>
    std::size_t nearest_by(DistanceFn&& dist, std::size_t start = 0) const;

private:
    void build();
    void build_path(std::span<const std::uint32_t> order);
    void set_adjacency(std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

    std::vector<Point> points_;
    std::vector<std::uint32_t> offsets_; // CSR over flat_
    std::vector<std::uint32_t> flat_;
    std::vector<Triangle> triangles_;
};

template <typename DistanceFn>
std::size_t VoronoiIndex::nearest_by(DistanceFn&& dist, std::size_t start) const {
    std::size_t current = start;
    double current_d = dist(current);
    for (;;) {
        std::size_t best = current;
        double best_d = current_d;
        for (std::uint32_t u : neighbors(current)) {
            const double d = dist(u);
            if (d < best_d || (d == best_d && u < best)) {
                best = u;
                best_d = d;
            }
        }
        if (best == current) {
            break;
        }
        current = best;
        current_d = best_d;
    }

    const double band = current_d + current_d * 1e-9 + 1e-300;
    std::vector<std::uint32_t> frontier{static_cast<std::uint32_t>(current)};
    std::vector<std::uint32_t> visited{static_cast<std::uint32_t>(current)};
    std::size_t best = current;
    double best_d = current_d;
    while (!frontier.empty()) {
        const std::uint32_t v = frontier.back();
        frontier.pop_back();
        for (std::uint32_t u : neighbors(v)) {
            bool seen = false;
            for (std::uint32_t w : visited) {
                if (w == u) {
                    seen = true;
                    break;
                }
            }
            if (seen) {
                continue;
            }
            const double d = dist(u);
            if (d > band) {
                continue;
            }
            visited.push_back(u);
            frontier.push_back(u);
            if (d < best_d || (d == best_d && u < best)) {
                best = u;
                best_d = d;
            }
        }
    }
    return best;
}

} // namespace tclp
