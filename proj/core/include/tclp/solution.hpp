#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace tclp {

class Instance;

// A set of opened candidate sites, kept sorted ascending so that equal sets
// compare equal and hash equally.
class Solution {
public:
    Solution() = default;
    // Sorts the input; throws ParameterError on repeated indices.
    explicit Solution(std::vector<std::uint32_t> centers);

    std::span<const std::uint32_t> centers() const { return centers_; }
    std::size_t size() const { return centers_.size(); }
    bool contains(std::uint32_t site) const;
    // Position of `site` in centers(), or size() if absent.
    std::size_t position_of(std::uint32_t site) const;

    // Copy with centers()[position] replaced by `site` (re-sorted).
    Solution exchanged(std::size_t position, std::uint32_t site) const;

    friend bool operator==(const Solution&, const Solution&) = default;
    friend auto operator<=>(const Solution&, const Solution&) = default;

    std::size_t hash() const;

private:
    std::vector<std::uint32_t> centers_;
};

struct SolutionHash {
    std::size_t operator()(const Solution& s) const { return s.hash(); }
};

// Throws ParameterError unless |centers| = k and every index is < m.
void validate_solution(const Instance& instance, const Solution& solution);

// "0,3,7"
std::string format_centers(const Solution& solution);

} // namespace tclp
