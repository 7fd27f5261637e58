#include "tclp/metrics.hpp"

#include "tclp/errors.hpp"

#include <algorithm>
#include <limits>

namespace tclp {

namespace {

double needed(double from_a, double from_b) {
    if (from_b <= 0.0) {
        return 0.0;
    }
    return std::max(0.0, 1.0 - from_a / from_b);
}

} // namespace

CoverageResult scm(std::span<const ObjectivePair> a, std::span<const ObjectivePair> b) {
    if (b.empty()) {
        throw ParameterError("scm: the covered set must not be empty");
    }
    CoverageResult out;
    for (std::size_t j = 0; j < b.size(); ++j) {
        const bool covered = std::any_of(a.begin(), a.end(), [&](const ObjectivePair& p) { return dominates(p, b[j]); });
        if (covered) {
            out.dominated_indices.push_back(j);
        }
    }
    out.value = static_cast<double>(out.dominated_indices.size()) / static_cast<double>(b.size());
    return out;
}

AlphaBeta alpha_beta(std::span<const ObjectivePair> a, std::span<const ObjectivePair> b) {
    if (a.empty() || b.empty()) {
        throw ParameterError("alpha_beta: both sets must be non-empty");
    }
    AlphaBeta out;
    for (const ObjectivePair& q : b) {
        double alpha = std::numeric_limits<double>::infinity();
        double beta = std::numeric_limits<double>::infinity();
        bool dominated = false;
        for (const ObjectivePair& p : a) {
            if (!dominates(p, q)) {
                continue;
            }
            dominated = true;
            alpha = std::min(alpha, needed(static_cast<double>(p.f1), static_cast<double>(q.f1)));
            beta = std::min(beta, needed(p.f2, q.f2));
        }
        if (dominated) {
            out.alpha = std::max(out.alpha, alpha);
            out.beta = std::max(out.beta, beta);
        }
    }
    return out;
}

} // namespace tclp
