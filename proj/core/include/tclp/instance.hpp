#pragma once

#include "tclp/point.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tclp {

struct DemandPoint {
    Point position;
    std::int64_t weight = 1; // person count, >= 1

    friend bool operator==(const DemandPoint&, const DemandPoint&) = default;
};

struct CandidateSite {
    Point position;

    friend bool operator==(const CandidateSite&, const CandidateSite&) = default;
};

enum class Metric {
    EuclideanFromCoords, // distances derived from positions
    ExplicitMatrix,      // arbitrary non-negative cost matrix
};

// A TCLP instance: n weighted demand points, m candidate sites, the n x m
// distance matrix and the number k of centers to open. Indices into
// demand() and sites() are the point/site ids.
//
// Immutable once built; the factories validate every invariant and throw
// ParameterError on violation.
class Instance {
public:
    static Instance euclidean(std::vector<DemandPoint> demand, std::vector<CandidateSite> sites,
                              std::size_t k);
    // distances is row-major n x m.
    static Instance with_matrix(std::vector<DemandPoint> demand, std::vector<CandidateSite> sites,
                                std::vector<double> distances, std::size_t k);

    std::size_t n() const { return demand_.size(); }
    std::size_t m() const { return sites_.size(); }
    std::size_t k() const { return k_; }
    Metric metric() const { return metric_; }

    std::span<const DemandPoint> demand() const { return demand_; }
    std::span<const CandidateSite> sites() const { return sites_; }

    double distance(std::size_t i, std::size_t j) const { return distances_[i * sites_.size() + j]; }
    // Row i of the distance matrix (length m).
    std::span<const double> row(std::size_t i) const {
        return {distances_.data() + i * sites_.size(), sites_.size()};
    }
    std::span<const double> distances() const { return distances_; }

    std::int64_t total_weight() const { return total_weight_; }

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    Instance() = default;
    void validate();

    std::vector<DemandPoint> demand_;
    std::vector<CandidateSite> sites_;
    std::vector<double> distances_;
    std::size_t k_ = 0;
    Metric metric_ = Metric::EuclideanFromCoords;
    std::int64_t total_weight_ = 0;
};

inline std::int64_t total_weight(const Instance& instance) { return instance.total_weight(); }

struct GeneratorParams {
    std::size_t n = 100;
    std::size_t m = 25;
    std::size_t k = 5;
    double width = 1500.0;
    double height = 1000.0;
    std::int64_t weight_lo = 10;
    std::int64_t weight_hi = 100;
    std::uint64_t seed = 0;
};

// Uniform positions in [0,width] x [0,height], uniform integer weights in
// [weight_lo, weight_hi], Euclidean distances. Duplicate site positions are
// resampled. Same params => identical instance.
Instance generate_random(const GeneratorParams& params);

// JSON instance file:
//   {"version":1,"n":..,"m":..,"k":..,"metric":"euclidean"|"matrix",
//    "demand":[{"x":..,"y":..,"w":..}...],"sites":[{"x":..,"y":..}...],
//    "distances":[[..m..]...n rows]}   (distances only for "matrix")
// Throws InputError with field context on malformed input.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::filesystem::path& path);

// Canonical serialization (sorted keys, round-trip precision reals).
std::string to_json(const Instance& instance);
void save_instance(const Instance& instance, const std::filesystem::path& path);

// Hex SHA-256 of to_json(instance). Binds result files to their instance.
std::string instance_hash(const Instance& instance);

} // namespace tclp
