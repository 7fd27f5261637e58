// tclp: generate instances, run the solvers, compare result sets, plot them
// and export the ILP model.

#include "tclp/errors.hpp"
#include "tclp/exact.hpp"
#include "tclp/ilp.hpp"
#include "tclp/instance.hpp"
#include "tclp/objectives.hpp"
#include "tclp/results.hpp"
#include "tclp/svg.hpp"
#include "tclp/tcla.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitCap = 4;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void write_text(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text)) {
        throw tclp::InputError("cannot write '" + path + "'");
    }
}

struct GenArgs {
    tclp::GeneratorParams params;
    std::string out;
};

struct SolveArgs {
    std::string instance;
    std::string solver;
    std::uint64_t seed = 0;
    std::size_t population = 0;
    std::size_t generations = 0;
    std::size_t generation_cap = 0;
    std::size_t h = 10;
    std::uint64_t cap = tclp::ExactOptions{}.cap;
    std::size_t threads = 0;
    std::string out;
    std::string meta;
};

struct CompareArgs {
    std::string a;
    std::string b;
    std::string label_a = "A";
    std::string label_b = "B";
    std::string out;
};

struct PlotArgs {
    std::vector<std::string> csvs;
    std::vector<std::string> names;
    std::string out;
    std::string instance;
    std::size_t row = 0;
    std::string instance_out;
};

struct IlpArgs {
    std::string instance;
    std::string objective = "f1";
    std::optional<double> epsilon;
    std::string out;
};

int run_gen(const GenArgs& args) {
    const tclp::Instance inst = tclp::generate_random(args.params);
    tclp::save_instance(inst, args.out);
    std::cout << "instance (" << inst.n() << "," << inst.m() << "," << inst.k() << ") total weight "
              << inst.total_weight() << " -> " << args.out << "\n"
              << "hash " << tclp::instance_hash(inst) << "\n";
    return 0;
}

int run_solve(const SolveArgs& args) {
    const tclp::Instance inst = tclp::load_instance(args.instance);
    tclp::RunMetadata meta;
    meta.instance_hash = tclp::instance_hash(inst);
    meta.solver = args.solver;

    std::vector<tclp::ParetoEntry> rows;
    const auto start = Clock::now();
    if (args.solver == "tcla") {
        tclp::TclaParams params;
        params.auto_size = args.population == 0 && args.generations == 0;
        params.population_size = args.population;
        params.generations = args.generations;
        params.generation_cap = args.generation_cap;
        params.seed = args.seed;
        params.threads = args.threads;
        params.record_history = false;
        if (!params.auto_size && (args.population == 0 || args.generations == 0)) {
            throw tclp::ParameterError("--N and --T must be given together");
        }
        const tclp::TclaRun run = tclp::run_tcla(inst, params);
        rows = tclp::first_front(run);
        meta.params.population_size = run.population_size;
        meta.params.generations = run.generations;
        meta.params.seed = args.seed;
        meta.params.auto_size = params.auto_size;
    } else if (args.solver == "exact") {
        const tclp::ParetoArchive archive = tclp::pareto_bruteforce(inst, {args.cap, args.threads});
        rows = archive.sorted();
        meta.params.cap = args.cap;
    } else {
        const auto schedule = tclp::EpsilonSchedule::from_bounds(tclp::f2_bounds(inst), args.h);
        const tclp::EpsilonResult result = tclp::epsilon_constraint_exact(inst, schedule, {args.cap, args.threads});
        for (const auto& outcome : result.outcomes) {
            if (outcome.optimum) {
                std::printf("eps %.6f -> f1 %lld f2 %.6f [%s]\n", outcome.epsilon,
                            static_cast<long long>(outcome.optimum->objectives.f1), outcome.optimum->objectives.f2,
                            tclp::format_centers(outcome.optimum->solution).c_str());
            } else {
                std::printf("eps %.6f -> infeasible\n", outcome.epsilon);
            }
        }
        rows = result.archive.sorted();
        meta.params.h = args.h;
        meta.params.cap = args.cap;
    }
    meta.wall_time_s = seconds_since(start);
    meta.solution_count = rows.size();

    tclp::write_results_csv(rows, args.out);
    const std::string meta_path = args.meta.empty() ? tclp::metadata_path_for(args.out).string() : args.meta;
    tclp::write_metadata(meta, meta_path);
    std::printf("%s: %zu solutions in %.3f s -> %s\n", args.solver.c_str(), rows.size(), meta.wall_time_s,
                args.out.c_str());
    return 0;
}

int run_compare(const CompareArgs& args) {
    const auto a = tclp::read_results_csv(args.a);
    const auto b = tclp::read_results_csv(args.b);
    const auto meta_a = tclp::read_metadata(tclp::metadata_path_for(args.a));
    const auto meta_b = tclp::read_metadata(tclp::metadata_path_for(args.b));
    if (meta_a.instance_hash != meta_b.instance_hash) {
        throw tclp::InputError("results come from different instances (" + meta_a.instance_hash.substr(0, 12) +
                               " vs " + meta_b.instance_hash.substr(0, 12) + ")");
    }
    if (a.empty() || b.empty()) {
        throw tclp::InputError("cannot compare an empty result set");
    }
    const auto row = tclp::compare_sets(a, b, meta_a.wall_time_s, meta_b.wall_time_s);
    const std::string table = tclp::format_comparison(row, args.label_a, args.label_b);
    std::cout << table;
    if (!args.out.empty()) {
        write_text(table, args.out);
    }
    return 0;
}

int run_plot(const PlotArgs& args) {
    if (!args.names.empty() && args.names.size() != args.csvs.size()) {
        throw tclp::ParameterError("--name must be given once per CSV");
    }
    std::vector<tclp::PlotSeries> series;
    std::vector<std::vector<tclp::ParetoEntry>> sets;
    for (std::size_t i = 0; i < args.csvs.size(); ++i) {
        const std::filesystem::path path = args.csvs[i];
        auto rows = tclp::read_results_csv(path);
        if (rows.empty()) {
            throw tclp::InputError(path.string() + ": no solutions to plot");
        }
        std::string name;
        if (!args.names.empty()) {
            name = args.names[i];
        } else if (std::filesystem::exists(tclp::metadata_path_for(path))) {
            name = tclp::read_metadata(tclp::metadata_path_for(path)).solver;
        } else {
            name = path.stem().string();
        }
        series.push_back({name, tclp::objectives_of(rows)});
        sets.push_back(std::move(rows));
    }
    write_text(tclp::objective_plot_svg(series), args.out);
    std::printf("plot -> %s\n", args.out.c_str());

    if (!args.instance_out.empty()) {
        if (args.instance.empty()) {
            throw tclp::ParameterError("--instance-out needs --instance");
        }
        const tclp::Instance inst = tclp::load_instance(args.instance);
        if (args.row >= sets.front().size()) {
            throw tclp::ParameterError("--row " + std::to_string(args.row) + " out of range");
        }
        write_text(tclp::instance_plot_svg(inst, sets.front()[args.row].solution), args.instance_out);
        std::printf("instance drawing -> %s\n", args.instance_out.c_str());
    }
    return 0;
}

int run_export(const IlpArgs& args) {
    const tclp::Instance inst = tclp::load_instance(args.instance);
    const auto objective = args.objective == "f1" ? tclp::IlpObjective::F1 : tclp::IlpObjective::F2;
    tclp::export_ilp(inst, objective, args.epsilon, args.out);
    std::printf("ILP (%s) -> %s\n", args.objective.c_str(), args.out.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bi-objective test center location: generator, solvers and reporting"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
    gen_cmd->add_option("--n", gen.params.n, "Demand points")->required();
    gen_cmd->add_option("--m", gen.params.m, "Candidate sites")->required();
    gen_cmd->add_option("--k", gen.params.k, "Centers to open")->required();
    gen_cmd->add_option("--width", gen.params.width, "Box width")->capture_default_str();
    gen_cmd->add_option("--height", gen.params.height, "Box height")->capture_default_str();
    gen_cmd->add_option("--wmin", gen.params.weight_lo, "Smallest demand weight")->capture_default_str();
    gen_cmd->add_option("--wmax", gen.params.weight_hi, "Largest demand weight")->capture_default_str();
    gen_cmd->add_option("--seed", gen.params.seed, "Random seed")->capture_default_str();
    gen_cmd->add_option("--out", gen.out, "Instance JSON to write")->required();

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Run a solver and write results CSV plus metadata");
    solve_cmd->set_help_flag("--help", "Print this help message and exit"); // -h would clash with --h
    solve_cmd->add_option("instance", solve.instance, "Instance JSON")->required();
    solve_cmd->add_option("--solver", solve.solver, "tcla, exact or eps")
        ->required()
        ->check(CLI::IsMember({"tcla", "exact", "eps"}));
    solve_cmd->add_option("--seed", solve.seed, "TCLA seed")->capture_default_str();
    solve_cmd->add_option("--N", solve.population, "TCLA population size (with --T; default auto)");
    solve_cmd->add_option("--T", solve.generations, "TCLA generations (with --N; default auto)");
    solve_cmd->add_option("--T-cap", solve.generation_cap, "Upper bound on TCLA generations");
    solve_cmd->add_option("--h", solve.h, "Number of epsilon values")->capture_default_str();
    solve_cmd->add_option("--cap", solve.cap, "Largest C(m,k) the exact solvers enumerate")->capture_default_str();
    solve_cmd->add_option("--threads", solve.threads, "Worker threads (default TCLP_THREADS or all cores)");
    solve_cmd->add_option("--out", solve.out, "Results CSV")->required();
    solve_cmd->add_option("--meta", solve.meta, "Metadata JSON (default <out stem>.meta.json)");

    CompareArgs compare;
    auto* compare_cmd = app.add_subcommand("compare", "Coverage and alpha-beta metrics between two result sets");
    compare_cmd->add_option("a", compare.a, "Results CSV A")->required();
    compare_cmd->add_option("b", compare.b, "Results CSV B")->required();
    compare_cmd->add_option("--label-a", compare.label_a)->capture_default_str();
    compare_cmd->add_option("--label-b", compare.label_b)->capture_default_str();
    compare_cmd->add_option("--out", compare.out, "Also write the table here");

    PlotArgs plot;
    auto* plot_cmd = app.add_subcommand("plot", "SVG scatter of result sets in objective space");
    plot_cmd->add_option("csv", plot.csvs, "Results CSVs")->required();
    plot_cmd->add_option("--name", plot.names, "Series names, one per CSV");
    plot_cmd->add_option("--out", plot.out, "SVG to write")->required();
    plot_cmd->add_option("--instance", plot.instance, "Instance JSON for the instance drawing");
    plot_cmd->add_option("--row", plot.row, "Row of the first CSV to draw")->capture_default_str();
    plot_cmd->add_option("--instance-out", plot.instance_out, "SVG with centers, demand and Voronoi edges");

    IlpArgs ilp;
    auto* ilp_cmd = app.add_subcommand("export-ilp", "Write the ILP model in CPLEX LP format");
    ilp_cmd->add_option("instance", ilp.instance, "Instance JSON")->required();
    ilp_cmd->add_option("--objective", ilp.objective, "f1 or f2")
        ->capture_default_str()
        ->check(CLI::IsMember({"f1", "f2"}));
    ilp_cmd->add_option("--epsilon", ilp.epsilon, "Add the F2 <= epsilon row (f1 objective only)");
    ilp_cmd->add_option("--out", ilp.out, "LP file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) {
            return run_gen(gen);
        }
        if (solve_cmd->parsed()) {
            return run_solve(solve);
        }
        if (compare_cmd->parsed()) {
            return run_compare(compare);
        }
        if (plot_cmd->parsed()) {
            return run_plot(plot);
        }
        return run_export(ilp);
    } catch (const tclp::SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const tclp::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const tclp::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
