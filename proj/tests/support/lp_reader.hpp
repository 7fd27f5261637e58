#pragma once

// Minimal reader for the CPLEX LP subset the exporter writes, plus an
// exhaustive feasibility check over all binary assignments. Used only as a
// test oracle for the ILP export.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lp {

struct Term {
    std::string var;
    double coef = 0.0;
};

struct Row {
    std::string name;
    std::vector<Term> terms;
    std::string sense; // "<=", ">=", "="
    double rhs = 0.0;
};

struct Model {
    std::map<std::string, std::string> header; // "\ key: value" comment lines
    std::vector<Term> objective;
    std::vector<Row> rows;
    std::vector<std::string> binaries;
    std::map<std::string, double> lower_bounds;
};

// Throws std::runtime_error on anything outside the supported subset.
Model parse(const std::string& text);

double value_of(const std::vector<Term>& terms, const std::map<std::string, double>& values);

// For a full assignment of the binaries, decides whether the continuous
// variables (each row may contain at most one) can be set so that every row
// holds within `tol` (absolute), and returns the objective-minimizing
// values when they can.
std::optional<std::map<std::string, double>> complete(const Model& model,
                                                      const std::map<std::string, double>& binaries,
                                                      double tol);

} // namespace lp
