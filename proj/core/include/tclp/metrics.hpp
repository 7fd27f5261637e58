#pragma once

#include "tclp/pareto.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace tclp {

struct CoverageResult {
    double value = 0.0;                     // |dominated_indices| / |B|
    std::vector<std::size_t> dominated_indices; // ascending indices into B
};

// Set coverage: the fraction of `b` dominated (strictly) by some member of
// `a`. Throws ParameterError when `b` is empty.
CoverageResult scm(std::span<const ObjectivePair> a, std::span<const ObjectivePair> b);

// Fractional improvements in F1 (alpha) and F2 (beta) that the members of
// `b` would need to escape domination by `a`.
struct AlphaBeta {
    double alpha = 0.0;
    double beta = 0.0;

    friend bool operator==(const AlphaBeta&, const AlphaBeta&) = default;
};

// For a dominating pair (a, b) the smallest alpha with
// F1(a) >= (1 - alpha) F1(b) is max(0, 1 - F1(a)/F1(b)) (0 when F1(b) = 0),
// and likewise beta for F2. Each dominated b takes the coordinate-wise
// minimum over its dominators; the set value is the coordinate-wise maximum
// over dominated b. (0, 0) when nothing in `b` is dominated.
// Throws ParameterError when either set is empty.
AlphaBeta alpha_beta(std::span<const ObjectivePair> a, std::span<const ObjectivePair> b);

} // namespace tclp
