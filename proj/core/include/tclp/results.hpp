#pragma once

#include "tclp/metrics.hpp"
#include "tclp/pareto.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tclp {

// Results CSV: header "center_ids;f1;f2", one row per solution, center ids
// comma-joined ascending, ';' separators, LF line endings, f2 printed with
// round-trip precision.
std::string format_results_csv(std::span<const ParetoEntry> entries);
void write_results_csv(std::span<const ParetoEntry> entries, const std::filesystem::path& path);
// Throws InputError with the offending line number.
std::vector<ParetoEntry> parse_results_csv(std::string_view text);
std::vector<ParetoEntry> read_results_csv(const std::filesystem::path& path);

struct RunParams {
    std::optional<std::uint64_t> population_size;
    std::optional<std::uint64_t> generations;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> h;
    std::optional<std::uint64_t> cap;
    std::optional<bool> auto_size;

    friend bool operator==(const RunParams&, const RunParams&) = default;
};

struct RunMetadata {
    std::string instance_hash;
    std::string solver;
    RunParams params;
    double wall_time_s = 0.0;
    std::uint64_t solution_count = 0;

    friend bool operator==(const RunMetadata&, const RunMetadata&) = default;
};

std::string format_metadata_json(const RunMetadata& meta);
void write_metadata(const RunMetadata& meta, const std::filesystem::path& path);
RunMetadata parse_metadata_json(std::string_view text);
RunMetadata read_metadata(const std::filesystem::path& path);

// "results.csv" -> "results.meta.json"
std::filesystem::path metadata_path_for(const std::filesystem::path& csv_path);

// One comparison row between solution sets A and B.
struct Comparison {
    std::size_t size_a = 0;
    std::size_t size_b = 0;
    double scm_ab = 0.0; // scm(A, B)
    double scm_ba = 0.0; // scm(B, A)
    AlphaBeta ab_ab;     // alphabeta(A, B)
    AlphaBeta ab_ba;     // alphabeta(B, A)
    double time_a = 0.0;
    double time_b = 0.0;
};

Comparison compare_sets(std::span<const ParetoEntry> a, std::span<const ParetoEntry> b, double time_a = 0.0,
                        double time_b = 0.0);

// Header plus one row with columns #A, #B, scm(A,B), scm(B,A),
// ab(A,B) and ab(B,A) as percentages, t(A), t(B); ';'-separated.
std::string format_comparison(const Comparison& row, std::string_view label_a, std::string_view label_b);

std::vector<ObjectivePair> objectives_of(std::span<const ParetoEntry> entries);

} // namespace tclp
