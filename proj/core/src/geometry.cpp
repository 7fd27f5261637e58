#include "tclp/geometry.hpp"

#include "tclp/errors.hpp"
#include "tclp/predicates.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace tclp {

namespace {

constexpr std::int64_t kInfinite = -1;

// Triangle over point ids; a ghost triangle carries kInfinite in slot 2 and
// stands for the unbounded region to the left of its edge v[0] -> v[1].
struct Face {
    std::array<std::int64_t, 3> v;

    bool ghost() const { return v[2] == kInfinite; }
};

Face make_face(std::int64_t a, std::int64_t b, std::int64_t c) {
    // Rotate so the point at infinity, if any, sits last.
    if (a == kInfinite) {
        return {{b, c, a}};
    }
    if (b == kInfinite) {
        return {{c, a, b}};
    }
    return {{a, b, c}};
}

// p collinear with a and b: strictly between them?
bool strictly_between(const Point& a, const Point& b, const Point& p) {
    const auto& lo = std::min(a, b);
    const auto& hi = std::max(a, b);
    return lo < p && p < hi;
}

} // namespace

VoronoiIndex::VoronoiIndex(std::vector<Point> points) : points_(std::move(points)) {
    if (points_.empty()) {
        throw ParameterError("VoronoiIndex needs at least one point");
    }
    if (points_.size() > std::size_t{0xffffffffu}) {
        throw ParameterError("VoronoiIndex: too many points");
    }
    build();
}

std::span<const std::uint32_t> VoronoiIndex::neighbors(std::size_t site) const {
    if (site >= points_.size()) {
        throw ParameterError("VoronoiIndex::neighbors: site " + std::to_string(site) +
                             " out of range [0, " + std::to_string(points_.size()) + ")");
    }
    return {flat_.data() + offsets_[site], flat_.data() + offsets_[site + 1]};
}

std::size_t VoronoiIndex::nearest(const Point& query) const {
    return nearest_by([&](std::size_t j) { return euclidean(points_[j], query); });
}

void VoronoiIndex::set_adjacency(std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> directed;
    directed.reserve(edges.size() * 2);
    for (auto [a, b] : edges) {
        directed.emplace_back(a, b);
        directed.emplace_back(b, a);
    }
    std::sort(directed.begin(), directed.end());
    directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

    offsets_.assign(points_.size() + 1, 0);
    for (auto [a, b] : directed) {
        ++offsets_[a + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    flat_.resize(directed.size());
    for (std::size_t i = 0; i < directed.size(); ++i) {
        flat_[i] = directed[i].second; // already grouped by source, ascending targets
    }
}

void VoronoiIndex::build_path(std::span<const std::uint32_t> order) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::size_t i = 1; i < order.size(); ++i) {
        edges.emplace_back(order[i - 1], order[i]);
    }
    set_adjacency(std::move(edges));
}

void VoronoiIndex::build() {
    const auto count = static_cast<std::uint32_t>(points_.size());
    std::vector<std::uint32_t> order(count);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return points_[a] < points_[b] || (points_[a] == points_[b] && a < b);
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (points_[order[i - 1]] == points_[order[i]]) {
            throw ParameterError("VoronoiIndex: duplicate point at index " + std::to_string(order[i]));
        }
    }

    if (count < 3) {
        build_path(order);
        return;
    }

    const std::uint32_t a = order[0];
    const std::uint32_t b = order[1];
    std::size_t third = 2;
    while (third < order.size() && predicates::orient(points_[a], points_[b], points_[order[third]]) == 0) {
        ++third;
    }
    if (third == order.size()) {
        build_path(order); // all collinear; lexicographic order follows the line
        return;
    }

    std::vector<Face> faces;
    {
        std::int64_t v0 = a, v1 = b, v2 = order[third];
        if (predicates::orient(points_[v0], points_[v1], points_[v2]) < 0) {
            std::swap(v1, v2);
        }
        faces.push_back({{v0, v1, v2}});
        faces.push_back(make_face(v1, v0, kInfinite));
        faces.push_back(make_face(v2, v1, kInfinite));
        faces.push_back(make_face(v0, v2, kInfinite));
    }

    std::vector<std::pair<std::int64_t, std::int64_t>> cavity_edges;
    std::vector<Face> kept;
    for (std::size_t pos = 2; pos < order.size(); ++pos) {
        if (pos == third) {
            continue;
        }
        const std::int64_t pid = order[pos];
        const Point& p = points_[pid];

        cavity_edges.clear();
        kept.clear();
        for (const Face& f : faces) {
            bool conflict = false;
            if (f.ghost()) {
                const Point& fa = points_[f.v[0]];
                const Point& fb = points_[f.v[1]];
                const int o = predicates::orient(fa, fb, p);
                conflict = o > 0 || (o == 0 && strictly_between(fa, fb, p));
            } else {
                conflict = predicates::incircle(points_[f.v[0]], points_[f.v[1]], points_[f.v[2]], p) > 0;
            }
            if (conflict) {
                cavity_edges.emplace_back(f.v[0], f.v[1]);
                cavity_edges.emplace_back(f.v[1], f.v[2]);
                cavity_edges.emplace_back(f.v[2], f.v[0]);
            } else {
                kept.push_back(f);
            }
        }

        std::sort(cavity_edges.begin(), cavity_edges.end());
        for (auto [u, v] : cavity_edges) {
            if (std::binary_search(cavity_edges.begin(), cavity_edges.end(), std::make_pair(v, u))) {
                continue; // interior edge of the cavity
            }
            kept.push_back(make_face(u, v, pid));
        }
        faces.swap(kept);
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (const Face& f : faces) {
        if (f.ghost()) {
            continue;
        }
        Triangle t{static_cast<std::uint32_t>(f.v[0]), static_cast<std::uint32_t>(f.v[1]),
                   static_cast<std::uint32_t>(f.v[2])};
        std::rotate(t.begin(), std::min_element(t.begin(), t.end()), t.end());
        triangles_.push_back(t);
        for (int e = 0; e < 3; ++e) {
            const std::uint32_t u = t[e];
            const std::uint32_t v = t[(e + 1) % 3];
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    std::sort(triangles_.begin(), triangles_.end());
    set_adjacency(std::move(edges));
}

} // namespace tclp
