#pragma once

#include "tclp/instance.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tclp {

enum class IlpObjective { F1, F2 };

enum class RowSense { LessEqual, Equal, GreaterEqual };

// Binary-variable TCLP formulation with closest-center big-M rows.
//
// Variables, in this order: x_i_j (n*m, binary; point i served by site j),
// y_j (m, binary; site j opened), u and l (continuous, >= 0).
//   card:          sum_j y_j = k
//   link_i_j:      x_i_j - y_j <= 0
//   assign_i:      sum_j x_i_j = 1
//   upper_j:       u - sum_i w_i x_i_j >= 0
//   lower_j:       l - sum_i w_i x_i_j + W y_j <= W          (W = sum w_i)
//   closest_i_j:   sum_j' d_ij' x_i_j' + (M - d_ij) y_j <= M  (M = max d_ij)
//   eps (optional, F1 objective only): F2 expression <= epsilon
// Objective F1 = u - l; objective F2 = sum_ij (w_i d_ij / W) x_i_j.
struct IlpModel {
    struct Row {
        std::string name;
        std::vector<std::pair<std::size_t, double>> terms; // (variable, coefficient)
        RowSense sense = RowSense::LessEqual;
        double rhs = 0.0;
    };

    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t k = 0;
    double big_m = 0.0;
    std::int64_t total_weight = 0;
    IlpObjective objective = IlpObjective::F1;
    std::optional<double> epsilon;

    std::vector<std::string> names;
    std::vector<bool> binary;
    std::vector<std::pair<std::size_t, double>> objective_terms;
    std::vector<Row> rows;

    std::size_t x(std::size_t i, std::size_t j) const { return i * m + j; }
    std::size_t y(std::size_t j) const { return n * m + j; }
    std::size_t u() const { return n * m + m; }
    std::size_t l() const { return n * m + m + 1; }
    std::size_t variable_count() const { return names.size(); }
};

// Throws ParameterError if an epsilon is supplied with the F2 objective.
IlpModel build_ilp(const Instance& instance, IlpObjective objective, std::optional<double> epsilon = std::nullopt);

// CPLEX LP text, preceded by backslash comment lines recording the instance
// hash, n, m, k, objective, epsilon and the variable naming scheme.
std::string to_lp_format(const IlpModel& model, const std::string& instance_hash);

// build_ilp + to_lp_format, written to `path`. Throws InputError on I/O
// failure.
void export_ilp(const Instance& instance, IlpObjective objective, std::optional<double> epsilon,
                const std::filesystem::path& path);

} // namespace tclp
