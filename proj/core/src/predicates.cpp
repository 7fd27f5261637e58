#include "tclp/predicates.hpp"

#include <gmpxx.h>

#include <cmath>
#include <limits>

namespace tclp::predicates {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon() / 2.0;
// Static error bounds for the straightforward double evaluation
// (Shewchuk, "Adaptive Precision Floating-Point Arithmetic").
constexpr double kOrientBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIncircleBound = (10.0 + 96.0 * kEps) * kEps;

int sign(const mpq_class& v) { return sgn(v); }

int orient_exact(const Point& a, const Point& b, const Point& c) {
    const mpq_class acx = mpq_class(a.x) - c.x;
    const mpq_class bcx = mpq_class(b.x) - c.x;
    const mpq_class acy = mpq_class(a.y) - c.y;
    const mpq_class bcy = mpq_class(b.y) - c.y;
    return sign(acx * bcy - acy * bcx);
}

int incircle_exact(const Point& a, const Point& b, const Point& c, const Point& d) {
    const mpq_class adx = mpq_class(a.x) - d.x, ady = mpq_class(a.y) - d.y;
    const mpq_class bdx = mpq_class(b.x) - d.x, bdy = mpq_class(b.y) - d.y;
    const mpq_class cdx = mpq_class(c.x) - d.x, cdy = mpq_class(c.y) - d.y;
    const mpq_class alift = adx * adx + ady * ady;
    const mpq_class blift = bdx * bdx + bdy * bdy;
    const mpq_class clift = cdx * cdx + cdy * cdy;
    const mpq_class det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
                          clift * (adx * bdy - bdx * ady);
    return sign(det);
}

} // namespace

int orient(const Point& a, const Point& b, const Point& c) {
    const double left = (a.x - c.x) * (b.y - c.y);
    const double right = (a.y - c.y) * (b.x - c.x);
    const double det = left - right;
    const double bound = kOrientBound * (std::abs(left) + std::abs(right));
    if (det > bound) {
        return 1;
    }
    if (-det > bound) {
        return -1;
    }
    return orient_exact(a, b, c);
}

int incircle(const Point& a, const Point& b, const Point& c, const Point& d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;

    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double alift = adx * adx + ady * ady;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double blift = bdx * bdx + bdy * bdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;
    const double clift = cdx * cdx + cdy * cdy;

    const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
    const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                             (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                             (std::abs(adxbdy) + std::abs(bdxady)) * clift;
    const double bound = kIncircleBound * permanent;
    if (det > bound) {
        return 1;
    }
    if (-det > bound) {
        return -1;
    }
    return incircle_exact(a, b, c, d);
}

} // namespace tclp::predicates
