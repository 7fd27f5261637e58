#include "tclp/ilp.hpp"

#include "tclp/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tclp {

namespace {

std::string number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

IlpModel build_ilp(const Instance& instance, IlpObjective objective, std::optional<double> epsilon) {
    if (epsilon && objective != IlpObjective::F1) {
        throw ParameterError("an epsilon bound on F2 only applies with the F1 objective");
    }
    IlpModel model;
    const std::size_t n = instance.n();
    const std::size_t m = instance.m();
    model.n = n;
    model.m = m;
    model.k = instance.k();
    model.objective = objective;
    model.epsilon = epsilon;
    model.total_weight = instance.total_weight();
    const auto dist = instance.distances();
    model.big_m = *std::max_element(dist.begin(), dist.end());

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            model.names.push_back("x_" + std::to_string(i) + "_" + std::to_string(j));
            model.binary.push_back(true);
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        model.names.push_back("y_" + std::to_string(j));
        model.binary.push_back(true);
    }
    model.names.emplace_back("u");
    model.binary.push_back(false);
    model.names.emplace_back("l");
    model.binary.push_back(false);

    const auto W = static_cast<double>(model.total_weight);
    auto weight = [&](std::size_t i) { return static_cast<double>(instance.demand()[i].weight); };

    std::vector<std::pair<std::size_t, double>> f2_terms;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            f2_terms.emplace_back(model.x(i, j), weight(i) * instance.distance(i, j) / W);
        }
    }
    if (objective == IlpObjective::F1) {
        model.objective_terms = {{model.u(), 1.0}, {model.l(), -1.0}};
    } else {
        model.objective_terms = f2_terms;
    }

    using Row = IlpModel::Row;
    {
        Row card{"card", {}, RowSense::Equal, static_cast<double>(model.k)};
        for (std::size_t j = 0; j < m; ++j) {
            card.terms.emplace_back(model.y(j), 1.0);
        }
        model.rows.push_back(std::move(card));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            model.rows.push_back({"link_" + std::to_string(i) + "_" + std::to_string(j),
                                  {{model.x(i, j), 1.0}, {model.y(j), -1.0}},
                                  RowSense::LessEqual,
                                  0.0});
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        Row row{"assign_" + std::to_string(i), {}, RowSense::Equal, 1.0};
        for (std::size_t j = 0; j < m; ++j) {
            row.terms.emplace_back(model.x(i, j), 1.0);
        }
        model.rows.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < m; ++j) {
        Row row{"upper_" + std::to_string(j), {{model.u(), 1.0}}, RowSense::GreaterEqual, 0.0};
        for (std::size_t i = 0; i < n; ++i) {
            row.terms.emplace_back(model.x(i, j), -weight(i));
        }
        model.rows.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < m; ++j) {
        Row row{"lower_" + std::to_string(j), {{model.l(), 1.0}}, RowSense::LessEqual, W};
        for (std::size_t i = 0; i < n; ++i) {
            row.terms.emplace_back(model.x(i, j), -weight(i));
        }
        row.terms.emplace_back(model.y(j), W);
        model.rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            Row row{"closest_" + std::to_string(i) + "_" + std::to_string(j), {}, RowSense::LessEqual, model.big_m};
            for (std::size_t jj = 0; jj < m; ++jj) {
                row.terms.emplace_back(model.x(i, jj), instance.distance(i, jj));
            }
            row.terms.emplace_back(model.y(j), model.big_m - instance.distance(i, j));
            model.rows.push_back(std::move(row));
        }
    }
    if (epsilon) {
        model.rows.push_back({"eps", f2_terms, RowSense::LessEqual, *epsilon});
    }
    return model;
}

namespace {

void write_terms(std::ostream& out, const IlpModel& model, const std::vector<std::pair<std::size_t, double>>& terms) {
    bool first = true;
    for (const auto& [var, coef] : terms) {
        if (coef == 0.0) {
            continue;
        }
        if (first) {
            out << (coef < 0 ? "- " : "");
        } else {
            out << (coef < 0 ? " - " : " + ");
        }
        const double mag = coef < 0 ? -coef : coef;
        if (mag != 1.0) {
            out << number(mag) << ' ';
        }
        out << model.names[var];
        first = false;
    }
    if (first) {
        out << "0 " << model.names.front();
    }
}

} // namespace

std::string to_lp_format(const IlpModel& model, const std::string& instance_hash) {
    std::ostringstream out;
    out << "\\ Test center location model (CPLEX LP format)\n";
    out << "\\ instance_hash: " << instance_hash << '\n';
    out << "\\ n: " << model.n << '\n';
    out << "\\ m: " << model.m << '\n';
    out << "\\ k: " << model.k << '\n';
    out << "\\ objective: " << (model.objective == IlpObjective::F1 ? "F1" : "F2") << '\n';
    out << "\\ epsilon: " << (model.epsilon ? number(*model.epsilon) : std::string("none")) << '\n';
    out << "\\ big_M: " << number(model.big_m) << '\n';
    out << "\\ variables: x_i_j = 1 iff demand point i is served by site j; y_j = 1 iff site j is opened;\n";
    out << "\\            u / l = max / min workload over opened sites (continuous)\n";
    out << "Minimize\n obj: ";
    write_terms(out, model, model.objective_terms);
    out << "\nSubject To\n";
    for (const auto& row : model.rows) {
        out << ' ' << row.name << ": ";
        write_terms(out, model, row.terms);
        switch (row.sense) {
        case RowSense::LessEqual:
            out << " <= ";
            break;
        case RowSense::Equal:
            out << " = ";
            break;
        case RowSense::GreaterEqual:
            out << " >= ";
            break;
        }
        out << number(row.rhs) << '\n';
    }
    out << "Bounds\n";
    out << " u >= 0\n";
    out << " l >= 0\n";
    out << "Binaries\n";
    for (std::size_t v = 0; v < model.variable_count(); ++v) {
        if (model.binary[v]) {
            out << ' ' << model.names[v] << '\n';
        }
    }
    out << "End\n";
    return out.str();
}

void export_ilp(const Instance& instance, IlpObjective objective, std::optional<double> epsilon,
                const std::filesystem::path& path) {
    const IlpModel model = build_ilp(instance, objective, epsilon);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InputError("cannot write model file '" + path.string() + "'");
    }
    out << to_lp_format(model, instance_hash(instance));
    if (!out) {
        throw InputError("write failed for '" + path.string() + "'");
    }
}

} // namespace tclp
