#pragma once

// Independent reference implementations used as test oracles. They trade
// speed for obviousness and share no code with the library beyond the
// plain data types.

#include "tclp/instance.hpp"
#include "tclp/pareto.hpp"
#include "tclp/point.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

inline int sign_orient(const tclp::Point& a, const tclp::Point& b, const tclp::Point& c) {
    const mpq_class ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    const mpq_class det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    return sgn(det);
}

// > 0 when d is strictly inside the circle through a, b, c (any orientation).
inline int inside_circle(const tclp::Point& a, const tclp::Point& b, const tclp::Point& c, const tclp::Point& d) {
    const mpq_class adx = mpq_class(a.x) - d.x, ady = mpq_class(a.y) - d.y;
    const mpq_class bdx = mpq_class(b.x) - d.x, bdy = mpq_class(b.y) - d.y;
    const mpq_class cdx = mpq_class(c.x) - d.x, cdy = mpq_class(c.y) - d.y;
    const mpq_class alift = adx * adx + ady * ady;
    const mpq_class blift = bdx * bdx + bdy * bdy;
    const mpq_class clift = cdx * cdx + cdy * cdy;
    const mpq_class det = adx * (bdy * clift - cdy * blift) - ady * (bdx * clift - cdx * blift) +
                          alift * (bdx * cdy - cdx * bdy);
    return sgn(det) * sign_orient(a, b, c);
}

// Edges of all triangles whose open circumcircle holds no other point.
// O(n^4); meant for general-position inputs of a few dozen points.
inline std::set<Edge> delaunay_edges(const std::vector<tclp::Point>& pts) {
    std::set<Edge> edges;
    const auto n = static_cast<std::uint32_t>(pts.size());
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = a + 1; b < n; ++b) {
            for (std::uint32_t c = b + 1; c < n; ++c) {
                if (sign_orient(pts[a], pts[b], pts[c]) == 0) {
                    continue;
                }
                bool empty = true;
                for (std::uint32_t d = 0; d < n && empty; ++d) {
                    if (d != a && d != b && d != c && inside_circle(pts[a], pts[b], pts[c], pts[d]) > 0) {
                        empty = false;
                    }
                }
                if (empty) {
                    edges.insert({a, b});
                    edges.insert({a, c});
                    edges.insert({b, c});
                }
            }
        }
    }
    return edges;
}

inline std::size_t nearest_linear(const std::vector<tclp::Point>& sites, const tclp::Point& q) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < sites.size(); ++j) {
        const double d = tclp::euclidean(sites[j], q);
        if (d < best_d) {
            best = j;
            best_d = d;
        }
    }
    return best;
}

inline bool dominated(const tclp::ObjectivePair& a, const tclp::ObjectivePair& b) {
    // does a dominate b
    return (a.f1 <= b.f1 && a.f2 <= b.f2) && (a.f1 < b.f1 || a.f2 < b.f2);
}

// Indices of points no other point dominates.
inline std::vector<std::size_t> nondominated(const std::vector<tclp::ObjectivePair>& pts) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool dom = false;
        for (std::size_t j = 0; j < pts.size() && !dom; ++j) {
            dom = dominated(pts[j], pts[i]);
        }
        if (!dom) {
            out.push_back(i);
        }
    }
    return out;
}

// Repeated peeling with the quadratic filter.
inline std::vector<std::vector<std::size_t>> fronts(const std::vector<tclp::ObjectivePair>& pts) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> remaining(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        remaining[i] = i;
    }
    while (!remaining.empty()) {
        std::vector<std::size_t> front;
        std::vector<std::size_t> rest;
        for (std::size_t i : remaining) {
            bool dom = false;
            for (std::size_t j : remaining) {
                if (dominated(pts[j], pts[i])) {
                    dom = true;
                    break;
                }
            }
            (dom ? rest : front).push_back(i);
        }
        out.push_back(front);
        remaining = rest;
    }
    return out;
}

// All k-subsets of [0, m) in reverse lexicographic order.
inline std::vector<std::vector<std::uint32_t>> subsets_reversed(std::uint32_t m, std::uint32_t k) {
    std::vector<std::vector<std::uint32_t>> all;
    std::vector<std::uint32_t> cur;
    auto rec = [&](auto&& self, std::uint32_t start) -> void {
        if (cur.size() == k) {
            all.push_back(cur);
            return;
        }
        for (std::uint32_t j = start; j < m; ++j) {
            cur.push_back(j);
            self(self, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::reverse(all.begin(), all.end());
    return all;
}

// Objectives by direct definition: closest open center by the matrix with
// smallest-id ties, plain long double summation.
inline tclp::ObjectivePair objectives(const tclp::Instance& inst, const std::vector<std::uint32_t>& centers) {
    std::vector<std::int64_t> load(inst.m(), 0);
    long double travel = 0.0L;
    for (std::size_t i = 0; i < inst.n(); ++i) {
        std::uint32_t best = centers.front();
        for (std::uint32_t c : centers) {
            if (inst.distance(i, c) < inst.distance(i, best) ||
                (inst.distance(i, c) == inst.distance(i, best) && c < best)) {
                best = c;
            }
        }
        load[best] += inst.demand()[i].weight;
        travel += static_cast<long double>(inst.demand()[i].weight) * inst.distance(i, best);
    }
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    for (std::uint32_t c : centers) {
        hi = std::max(hi, load[c]);
        lo = std::min(lo, load[c]);
    }
    std::int64_t total = 0;
    for (const auto& d : inst.demand()) {
        total += d.weight;
    }
    return {hi - lo, static_cast<double>(travel / static_cast<long double>(total))};
}

inline bool close(double a, double b, double rel = 1e-9) {
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

} // namespace oracle
