#include "tclp/solution.hpp"

#include "tclp/errors.hpp"
#include "tclp/instance.hpp"

#include <algorithm>

namespace tclp {

Solution::Solution(std::vector<std::uint32_t> centers) : centers_(std::move(centers)) {
    std::sort(centers_.begin(), centers_.end());
    if (std::adjacent_find(centers_.begin(), centers_.end()) != centers_.end()) {
        throw ParameterError("solution lists a center more than once");
    }
}

bool Solution::contains(std::uint32_t site) const {
    return std::binary_search(centers_.begin(), centers_.end(), site);
}

std::size_t Solution::position_of(std::uint32_t site) const {
    auto it = std::lower_bound(centers_.begin(), centers_.end(), site);
    if (it == centers_.end() || *it != site) {
        return centers_.size();
    }
    return static_cast<std::size_t>(it - centers_.begin());
}

Solution Solution::exchanged(std::size_t position, std::uint32_t site) const {
    Solution out;
    out.centers_.reserve(centers_.size());
    // Single pass merge: drop centers_[position], insert `site` in order.
    bool placed = false;
    for (std::size_t i = 0; i < centers_.size(); ++i) {
        if (i == position) {
            continue;
        }
        if (!placed && site < centers_[i]) {
            out.centers_.push_back(site);
            placed = true;
        }
        out.centers_.push_back(centers_[i]);
    }
    if (!placed) {
        out.centers_.push_back(site);
    }
    return out;
}

std::size_t Solution::hash() const {
    // FNV-1a over the index sequence.
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t c : centers_) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

void validate_solution(const Instance& instance, const Solution& solution) {
    if (solution.size() != instance.k()) {
        throw ParameterError("solution opens " + std::to_string(solution.size()) + " centers, instance needs k=" +
                             std::to_string(instance.k()));
    }
    if (!solution.centers().empty() && solution.centers().back() >= instance.m()) {
        throw ParameterError("solution references site " + std::to_string(solution.centers().back()) +
                             " but m=" + std::to_string(instance.m()));
    }
}

std::string format_centers(const Solution& solution) {
    std::string out;
    for (std::size_t i = 0; i < solution.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += std::to_string(solution.centers()[i]);
    }
    return out;
}

} // namespace tclp
