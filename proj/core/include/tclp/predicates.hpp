#pragma once

#include "tclp/point.hpp"

namespace tclp::predicates {

// Sign of the signed area of (a, b, c): > 0 counter-clockwise, < 0 clockwise,
// 0 collinear. Exact: a floating-point filter falls back to rational
// arithmetic when the filter cannot certify the sign.
int orient(const Point& a, const Point& b, const Point& c);

// For counter-clockwise (a, b, c): > 0 if d lies strictly inside their
// circumcircle, < 0 strictly outside, 0 on it. Exact.
int incircle(const Point& a, const Point& b, const Point& c, const Point& d);

} // namespace tclp::predicates
