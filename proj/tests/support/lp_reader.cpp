#include "lp_reader.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lp {

namespace {

bool is_number(const std::string& tok) {
    if (tok.empty()) {
        return false;
    }
    char* end = nullptr;
    std::strtod(tok.c_str(), &end);
    return end == tok.c_str() + tok.size();
}

// Parses "[-] [coef] var [+|- [coef] var]..." from tokens[pos..stop).
std::vector<Term> parse_terms(const std::vector<std::string>& tokens, std::size_t pos, std::size_t stop) {
    std::vector<Term> terms;
    double sign = 1.0;
    double coef = 1.0;
    bool have_coef = false;
    for (; pos < stop; ++pos) {
        const std::string& tok = tokens[pos];
        if (tok == "+" || tok == "-") {
            sign = tok == "-" ? -1.0 : 1.0;
        } else if (is_number(tok)) {
            if (have_coef) {
                throw std::runtime_error("two coefficients in a row near '" + tok + "'");
            }
            coef = std::strtod(tok.c_str(), nullptr);
            have_coef = true;
        } else {
            terms.push_back({tok, sign * coef});
            sign = 1.0;
            coef = 1.0;
            have_coef = false;
        }
    }
    if (have_coef) {
        throw std::runtime_error("dangling coefficient");
    }
    return terms;
}

std::vector<std::string> split(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) {
        out.push_back(tok);
    }
    return out;
}

} // namespace

Model parse(const std::string& text) {
    Model model;
    std::istringstream in(text);
    std::string line;
    std::string section;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '\\') {
            const auto colon = line.find(':');
            if (colon != std::string::npos) {
                std::string key = line.substr(1, colon - 1);
                key.erase(0, key.find_first_not_of(' '));
                std::string value = line.substr(colon + 1);
                value.erase(0, value.find_first_not_of(' '));
                model.header[key] = value;
            }
            continue;
        }
        const auto tokens = split(line);
        if (tokens.empty()) {
            continue;
        }
        if (tokens.size() <= 2 && (tokens[0] == "Minimize" || tokens[0] == "Subject" || tokens[0] == "Bounds" ||
                                   tokens[0] == "Binaries" || tokens[0] == "End")) {
            section = tokens[0];
            continue;
        }
        if (section == "Minimize") {
            if (tokens[0].back() != ':') {
                throw std::runtime_error("objective without label");
            }
            model.objective = parse_terms(tokens, 1, tokens.size());
        } else if (section == "Subject") {
            if (tokens.size() < 4 || tokens[0].back() != ':') {
                throw std::runtime_error("bad row: " + line);
            }
            Row row;
            row.name = tokens[0].substr(0, tokens[0].size() - 1);
            const std::string& sense = tokens[tokens.size() - 2];
            if (sense != "<=" && sense != ">=" && sense != "=") {
                throw std::runtime_error("bad sense in: " + line);
            }
            row.sense = sense;
            row.rhs = std::strtod(tokens.back().c_str(), nullptr);
            row.terms = parse_terms(tokens, 1, tokens.size() - 2);
            model.rows.push_back(std::move(row));
        } else if (section == "Bounds") {
            if (tokens.size() != 3 || tokens[1] != ">=") {
                throw std::runtime_error("unsupported bound: " + line);
            }
            model.lower_bounds[tokens[0]] = std::strtod(tokens[2].c_str(), nullptr);
        } else if (section == "Binaries") {
            model.binaries.insert(model.binaries.end(), tokens.begin(), tokens.end());
        } else {
            throw std::runtime_error("text outside any section: " + line);
        }
    }
    if (section != "End") {
        throw std::runtime_error("missing End");
    }
    return model;
}

double value_of(const std::vector<Term>& terms, const std::map<std::string, double>& values) {
    long double sum = 0.0L;
    for (const auto& t : terms) {
        sum += static_cast<long double>(t.coef) * values.at(t.var);
    }
    return static_cast<double>(sum);
}

std::optional<std::map<std::string, double>> complete(const Model& model,
                                                      const std::map<std::string, double>& binaries,
                                                      double tol) {
    std::map<std::string, double> lo;
    std::map<std::string, double> hi;
    for (const auto& [var, bound] : model.lower_bounds) {
        lo[var] = bound;
        hi[var] = std::numeric_limits<double>::infinity();
    }
    for (const auto& row : model.rows) {
        long double fixed = 0.0L;
        const Term* free_term = nullptr;
        for (const auto& t : row.terms) {
            if (auto it = binaries.find(t.var); it != binaries.end()) {
                fixed += static_cast<long double>(t.coef) * it->second;
            } else {
                if (free_term) {
                    throw std::runtime_error("row " + row.name + " has two continuous variables");
                }
                free_term = &t;
            }
        }
        const double rest = static_cast<double>(static_cast<long double>(row.rhs) - fixed);
        if (!free_term) {
            const bool ok = row.sense == "<=" ? rest >= -tol : row.sense == ">=" ? rest <= tol : std::abs(rest) <= tol;
            if (!ok) {
                return std::nullopt;
            }
            continue;
        }
        // coef * v  (sense)  rest
        const double bound = rest / free_term->coef;
        const bool flips = free_term->coef < 0;
        auto tighten_hi = [&] { hi[free_term->var] = std::min(hi[free_term->var], bound); };
        auto tighten_lo = [&] { lo[free_term->var] = std::max(lo[free_term->var], bound); };
        if (!lo.count(free_term->var)) {
            lo[free_term->var] = -std::numeric_limits<double>::infinity();
            hi[free_term->var] = std::numeric_limits<double>::infinity();
        }
        if (row.sense == "=") {
            tighten_hi();
            tighten_lo();
        } else if ((row.sense == "<=") != flips) {
            tighten_hi();
        } else {
            tighten_lo();
        }
    }
    std::map<std::string, double> values = binaries;
    for (const auto& [var, low] : lo) {
        if (low > hi[var] + tol) {
            return std::nullopt;
        }
        // Minimize: push each continuous variable toward the side its
        // objective coefficient prefers.
        double coef = 0.0;
        for (const auto& t : model.objective) {
            if (t.var == var) {
                coef += t.coef;
            }
        }
        values[var] = coef >= 0.0 ? low : hi[var];
        if (!std::isfinite(values[var])) {
            values[var] = std::isfinite(low) ? low : hi[var];
        }
    }
    return values;
}

} // namespace lp
