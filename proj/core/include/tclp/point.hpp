#pragma once

#include <cmath>
#include <compare>

namespace tclp {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

// Every Euclidean distance in the library goes through this function so that
// stored matrices and on-the-fly queries round identically.
inline double euclidean(const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

} // namespace tclp
