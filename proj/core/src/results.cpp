#include "tclp/results.hpp"

#include "tclp/errors.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace tclp {

namespace {

using json = nlohmann::json;

std::string real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& text, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InputError("cannot write '" + path.string() + "'");
    }
    out << text;
    if (!out) {
        throw InputError("write failed for '" + path.string() + "'");
    }
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
    if (text.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

bool parse_real(std::string_view text, double& out) {
    // from_chars for double is not available on every toolchain we target.
    if (text.empty()) {
        return false;
    }
    const std::string copy(text);
    char* end = nullptr;
    out = std::strtod(copy.c_str(), &end);
    return end == copy.c_str() + copy.size();
}

} // namespace

std::string format_results_csv(std::span<const ParetoEntry> entries) {
    std::string out = "center_ids;f1;f2\n";
    for (const auto& e : entries) {
        out += format_centers(e.solution);
        out += ';';
        out += std::to_string(e.objectives.f1);
        out += ';';
        out += real(e.objectives.f2);
        out += '\n';
    }
    return out;
}

void write_results_csv(std::span<const ParetoEntry> entries, const std::filesystem::path& path) {
    spill(format_results_csv(entries), path);
}

std::vector<ParetoEntry> parse_results_csv(std::string_view text) {
    std::vector<ParetoEntry> out;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            continue;
        }
        auto fail = [&](const std::string& what) {
            throw InputError("results CSV line " + std::to_string(line_no) + ": " + what);
        };
        if (!header_seen) {
            if (line != "center_ids;f1;f2") {
                fail("expected header 'center_ids;f1;f2'");
            }
            header_seen = true;
            continue;
        }
        const std::size_t s1 = line.find(';');
        const std::size_t s2 = s1 == std::string_view::npos ? s1 : line.find(';', s1 + 1);
        if (s2 == std::string_view::npos || line.find(';', s2 + 1) != std::string_view::npos) {
            fail("expected three ';'-separated fields");
        }
        const std::string_view ids = line.substr(0, s1);
        std::vector<std::uint32_t> centers;
        std::size_t start = 0;
        while (start <= ids.size()) {
            const std::size_t comma = ids.find(',', start);
            const std::string_view token = ids.substr(start, comma == std::string_view::npos ? ids.npos : comma - start);
            std::uint32_t id = 0;
            if (!parse_number(token, id)) {
                fail("bad center id '" + std::string(token) + "'");
            }
            centers.push_back(id);
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        ParetoEntry entry;
        try {
            entry.solution = Solution(std::move(centers));
        } catch (const ParameterError& e) {
            fail(e.what());
        }
        if (!parse_number(line.substr(s1 + 1, s2 - s1 - 1), entry.objectives.f1)) {
            fail("bad f1");
        }
        if (!parse_real(line.substr(s2 + 1), entry.objectives.f2)) {
            fail("bad f2");
        }
        out.push_back(std::move(entry));
    }
    if (!header_seen) {
        throw InputError("results CSV: missing header");
    }
    return out;
}

std::vector<ParetoEntry> read_results_csv(const std::filesystem::path& path) {
    try {
        return parse_results_csv(slurp(path));
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

std::string format_metadata_json(const RunMetadata& meta) {
    json params = json::object();
    if (meta.params.population_size) {
        params["N"] = *meta.params.population_size;
    }
    if (meta.params.generations) {
        params["T"] = *meta.params.generations;
    }
    if (meta.params.seed) {
        params["seed"] = *meta.params.seed;
    }
    if (meta.params.h) {
        params["h"] = *meta.params.h;
    }
    if (meta.params.cap) {
        params["cap"] = *meta.params.cap;
    }
    if (meta.params.auto_size) {
        params["auto_size"] = *meta.params.auto_size;
    }
    json doc = {
        {"instance_hash", meta.instance_hash}, {"solver", meta.solver},         {"params", params},
        {"wall_time_s", meta.wall_time_s},     {"solution_count", meta.solution_count},
    };
    return doc.dump(2) + "\n";
}

void write_metadata(const RunMetadata& meta, const std::filesystem::path& path) {
    spill(format_metadata_json(meta), path);
}

RunMetadata parse_metadata_json(std::string_view text) {
    RunMetadata meta;
    try {
        const json doc = json::parse(text);
        meta.instance_hash = doc.at("instance_hash").get<std::string>();
        meta.solver = doc.at("solver").get<std::string>();
        meta.wall_time_s = doc.at("wall_time_s").get<double>();
        meta.solution_count = doc.at("solution_count").get<std::uint64_t>();
        const json& params = doc.at("params");
        auto opt = [&](const char* key, std::optional<std::uint64_t>& slot) {
            if (params.contains(key)) {
                slot = params.at(key).get<std::uint64_t>();
            }
        };
        opt("N", meta.params.population_size);
        opt("T", meta.params.generations);
        opt("seed", meta.params.seed);
        opt("h", meta.params.h);
        opt("cap", meta.params.cap);
        if (params.contains("auto_size")) {
            meta.params.auto_size = params.at("auto_size").get<bool>();
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("run metadata: ") + e.what());
    }
    return meta;
}

RunMetadata read_metadata(const std::filesystem::path& path) {
    try {
        return parse_metadata_json(slurp(path));
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

std::filesystem::path metadata_path_for(const std::filesystem::path& csv_path) {
    std::filesystem::path out = csv_path;
    out.replace_extension(".meta.json");
    return out;
}

std::vector<ObjectivePair> objectives_of(std::span<const ParetoEntry> entries) {
    std::vector<ObjectivePair> out;
    out.reserve(entries.size());
    for (const auto& e : entries) {
        out.push_back(e.objectives);
    }
    return out;
}

Comparison compare_sets(std::span<const ParetoEntry> a, std::span<const ParetoEntry> b, double time_a, double time_b) {
    const auto oa = objectives_of(a);
    const auto ob = objectives_of(b);
    Comparison row;
    row.size_a = a.size();
    row.size_b = b.size();
    row.scm_ab = scm(oa, ob).value;
    row.scm_ba = scm(ob, oa).value;
    row.ab_ab = alpha_beta(oa, ob);
    row.ab_ba = alpha_beta(ob, oa);
    row.time_a = time_a;
    row.time_b = time_b;
    return row;
}

std::string format_comparison(const Comparison& row, std::string_view label_a, std::string_view label_b) {
    const std::string A(label_a);
    const std::string B(label_b);
    auto pct = [](const AlphaBeta& ab) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "(%.2f,%.2f)", ab.alpha * 100.0, ab.beta * 100.0);
        return std::string(buf);
    };
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3g", v);
        return std::string(buf);
    };
    auto secs = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return std::string(buf);
    };
    std::string out = "#" + A + ";#" + B + ";scm(" + A + "," + B + ");scm(" + B + "," + A + ");ab(" + A + "," + B +
                      ");ab(" + B + "," + A + ");t(" + A + ");t(" + B + ")\n";
    out += std::to_string(row.size_a) + ";" + std::to_string(row.size_b) + ";" + num(row.scm_ab) + ";" +
           num(row.scm_ba) + ";" + pct(row.ab_ab) + ";" + pct(row.ab_ba) + ";" + secs(row.time_a) + ";" +
           secs(row.time_b) + "\n";
    return out;
}

} // namespace tclp
