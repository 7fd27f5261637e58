#include "tclp/instance.hpp"

#include "tclp/errors.hpp"
#include "tclp/rng.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace tclp {

namespace {

using json = nlohmann::json;

std::vector<double> euclidean_matrix(std::span<const DemandPoint> demand,
                                     std::span<const CandidateSite> sites) {
    std::vector<double> d;
    d.reserve(demand.size() * sites.size());
    for (const auto& p : demand) {
        for (const auto& q : sites) {
            d.push_back(euclidean(p.position, q.position));
        }
    }
    return d;
}

} // namespace

Instance Instance::euclidean(std::vector<DemandPoint> demand, std::vector<CandidateSite> sites,
                             std::size_t k) {
    Instance inst;
    inst.distances_ = euclidean_matrix(demand, sites);
    inst.demand_ = std::move(demand);
    inst.sites_ = std::move(sites);
    inst.k_ = k;
    inst.metric_ = Metric::EuclideanFromCoords;
    inst.validate();
    return inst;
}

Instance Instance::with_matrix(std::vector<DemandPoint> demand, std::vector<CandidateSite> sites,
                               std::vector<double> distances, std::size_t k) {
    Instance inst;
    inst.demand_ = std::move(demand);
    inst.sites_ = std::move(sites);
    inst.distances_ = std::move(distances);
    inst.k_ = k;
    inst.metric_ = Metric::ExplicitMatrix;
    inst.validate();
    return inst;
}

void Instance::validate() {
    if (demand_.empty()) {
        throw ParameterError("instance needs at least one demand point");
    }
    if (sites_.empty()) {
        throw ParameterError("instance needs at least one candidate site");
    }
    if (k_ < 1 || k_ > sites_.size()) {
        throw ParameterError("k must lie in [1, m]; got k=" + std::to_string(k_) +
                             " with m=" + std::to_string(sites_.size()));
    }
    if (distances_.size() != demand_.size() * sites_.size()) {
        throw ParameterError("distance matrix has " + std::to_string(distances_.size()) +
                             " entries, expected n*m=" +
                             std::to_string(demand_.size() * sites_.size()));
    }
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < demand_.size(); ++i) {
        const auto& p = demand_[i];
        if (p.weight < 1) {
            throw ParameterError("demand[" + std::to_string(i) + "].w must be >= 1");
        }
        if (!std::isfinite(p.position.x) || !std::isfinite(p.position.y)) {
            throw ParameterError("demand[" + std::to_string(i) + "] has a non-finite coordinate");
        }
        sum += p.weight;
    }
    std::set<Point> seen;
    for (std::size_t j = 0; j < sites_.size(); ++j) {
        const auto& q = sites_[j].position;
        if (!std::isfinite(q.x) || !std::isfinite(q.y)) {
            throw ParameterError("sites[" + std::to_string(j) + "] has a non-finite coordinate");
        }
        if (!seen.insert(q).second) {
            throw ParameterError("sites[" + std::to_string(j) + "] duplicates an earlier site position");
        }
    }
    for (std::size_t idx = 0; idx < distances_.size(); ++idx) {
        const double d = distances_[idx];
        if (!(d >= 0.0) || !std::isfinite(d)) {
            throw ParameterError("distances[" + std::to_string(idx / sites_.size()) + "][" +
                                 std::to_string(idx % sites_.size()) +
                                 "] must be a finite non-negative number");
        }
    }
    total_weight_ = sum;
}

Instance generate_random(const GeneratorParams& params) {
    if (params.n < 1) {
        throw ParameterError("n must be >= 1");
    }
    if (params.k < 1 || params.k > params.m) {
        throw ParameterError("k must lie in [1, m]");
    }
    if (params.weight_lo > params.weight_hi || params.weight_lo < 1) {
        throw ParameterError("weights need 1 <= weight_lo <= weight_hi");
    }
    if (!(params.width > 0.0) || !(params.height > 0.0)) {
        throw ParameterError("width and height must be positive");
    }

    Rng rng(params.seed);
    auto draw_point = [&] {
        const double x = rng.unit() * params.width;
        const double y = rng.unit() * params.height;
        return Point{x, y};
    };

    std::vector<DemandPoint> demand;
    demand.reserve(params.n);
    for (std::size_t i = 0; i < params.n; ++i) {
        const Point p = draw_point();
        const auto w = rng.between(params.weight_lo, params.weight_hi);
        demand.push_back({p, w});
    }

    std::vector<CandidateSite> sites;
    sites.reserve(params.m);
    std::set<Point> used;
    while (sites.size() < params.m) {
        const Point q = draw_point();
        if (used.insert(q).second) {
            sites.push_back({q});
        }
    }
    return Instance::euclidean(std::move(demand), std::move(sites), params.k);
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InputError("instance file: " + where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail(where, std::string("missing field '") + key + "'");
    }
    return *it;
}

double real_field(const json& obj, const char* key, const std::string& where) {
    const json& v = field(obj, key, where);
    if (!v.is_number()) {
        fail(where + "." + key, "expected a number");
    }
    return v.get<double>();
}

std::size_t count_field(const json& obj, const char* key) {
    const json& v = field(obj, key, "$");
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        fail(std::string("$.") + key, "expected a non-negative integer");
    }
    return v.get<std::size_t>();
}

} // namespace

Instance parse_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("instance file: malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        fail("$", "expected a JSON object");
    }
    const json& version = field(doc, "version", "$");
    if (!version.is_number_integer() || version.get<int>() != 1) {
        fail("$.version", "unsupported version (expected 1)");
    }
    const std::size_t n = count_field(doc, "n");
    const std::size_t m = count_field(doc, "m");
    const std::size_t k = count_field(doc, "k");

    const json& metric_v = field(doc, "metric", "$");
    if (!metric_v.is_string()) {
        fail("$.metric", "expected \"euclidean\" or \"matrix\"");
    }
    const auto metric_s = metric_v.get<std::string>();
    if (metric_s != "euclidean" && metric_s != "matrix") {
        fail("$.metric", "expected \"euclidean\" or \"matrix\", got \"" + metric_s + "\"");
    }

    const json& demand_v = field(doc, "demand", "$");
    if (!demand_v.is_array()) {
        fail("$.demand", "expected an array");
    }
    if (demand_v.size() != n) {
        fail("$.demand", "dimension mismatch: n=" + std::to_string(n) + " but " +
                             std::to_string(demand_v.size()) + " rows listed");
    }
    std::vector<DemandPoint> demand;
    demand.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string where = "$.demand[" + std::to_string(i) + "]";
        const json& row = demand_v[i];
        if (!row.is_object()) {
            fail(where, "expected an object {x,y,w}");
        }
        const double x = real_field(row, "x", where);
        const double y = real_field(row, "y", where);
        const json& w = field(row, "w", where);
        if (!w.is_number_integer() || w.get<std::int64_t>() < 1) {
            fail(where + ".w", "weight must be an integer >= 1");
        }
        demand.push_back({{x, y}, w.get<std::int64_t>()});
    }

    const json& sites_v = field(doc, "sites", "$");
    if (!sites_v.is_array()) {
        fail("$.sites", "expected an array");
    }
    if (sites_v.size() != m) {
        fail("$.sites", "dimension mismatch: m=" + std::to_string(m) + " but " +
                            std::to_string(sites_v.size()) + " rows listed");
    }
    std::vector<CandidateSite> sites;
    sites.reserve(m);
    std::set<Point> seen;
    for (std::size_t j = 0; j < m; ++j) {
        const std::string where = "$.sites[" + std::to_string(j) + "]";
        const json& row = sites_v[j];
        if (!row.is_object()) {
            fail(where, "expected an object {x,y}");
        }
        const Point q{real_field(row, "x", where), real_field(row, "y", where)};
        if (!seen.insert(q).second) {
            fail(where, "duplicate site position");
        }
        sites.push_back({q});
    }

    if (m == 0 || k < 1 || k > m) {
        fail("$.k", "k out of range: k=" + std::to_string(k) + ", m=" + std::to_string(m));
    }
    if (n == 0) {
        fail("$.n", "at least one demand point is required");
    }

    auto build = [&]() -> Instance {
        if (metric_s == "euclidean") {
            if (doc.contains("distances")) {
                fail("$.distances", "not allowed with metric \"euclidean\"");
            }
            return Instance::euclidean(std::move(demand), std::move(sites), k);
        }
        const json& dist_v = field(doc, "distances", "$");
        if (!dist_v.is_array()) {
            fail("$.distances", "expected an array");
        }
        std::vector<double> distances;
        distances.reserve(n * m);
        // Nested rows are canonical; a flat row-major array is also accepted.
        const bool flat = dist_v.size() == n * m && (n * m == 0 || !dist_v[0].is_array());
        if (flat) {
            for (std::size_t idx = 0; idx < dist_v.size(); ++idx) {
                const json& d = dist_v[idx];
                const std::string where = "$.distances[" + std::to_string(idx) + "]";
                if (!d.is_number()) {
                    fail(where, "expected a number");
                }
                if (d.get<double>() < 0.0) {
                    fail(where, "negative distance");
                }
                distances.push_back(d.get<double>());
            }
        } else {
            if (dist_v.size() != n) {
                fail("$.distances", "dimension mismatch: expected " + std::to_string(n) + " rows, got " +
                                        std::to_string(dist_v.size()));
            }
            for (std::size_t i = 0; i < n; ++i) {
                const json& row = dist_v[i];
                const std::string where = "$.distances[" + std::to_string(i) + "]";
                if (!row.is_array() || row.size() != m) {
                    fail(where, "dimension mismatch: expected a row of " + std::to_string(m) + " numbers");
                }
                for (std::size_t j = 0; j < m; ++j) {
                    const std::string cell = where + "[" + std::to_string(j) + "]";
                    if (!row[j].is_number()) {
                        fail(cell, "expected a number");
                    }
                    const double d = row[j].get<double>();
                    if (d < 0.0) {
                        fail(cell, "negative distance");
                    }
                    distances.push_back(d);
                }
            }
        }
        return Instance::with_matrix(std::move(demand), std::move(sites), std::move(distances), k);
    };

    try {
        return build();
    } catch (const ParameterError& e) {
        throw InputError(std::string("instance file: ") + e.what());
    }
}

Instance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open instance file '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string to_json(const Instance& instance) {
    json doc;
    doc["version"] = 1;
    doc["n"] = instance.n();
    doc["m"] = instance.m();
    doc["k"] = instance.k();
    doc["metric"] = instance.metric() == Metric::EuclideanFromCoords ? "euclidean" : "matrix";
    json demand = json::array();
    for (const auto& p : instance.demand()) {
        demand.push_back({{"x", p.position.x}, {"y", p.position.y}, {"w", p.weight}});
    }
    doc["demand"] = std::move(demand);
    json sites = json::array();
    for (const auto& q : instance.sites()) {
        sites.push_back({{"x", q.position.x}, {"y", q.position.y}});
    }
    doc["sites"] = std::move(sites);
    if (instance.metric() == Metric::ExplicitMatrix) {
        json rows = json::array();
        for (std::size_t i = 0; i < instance.n(); ++i) {
            const auto r = instance.row(i);
            rows.push_back(std::vector<double>(r.begin(), r.end()));
        }
        doc["distances"] = std::move(rows);
    }
    return doc.dump();
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InputError("cannot write instance file '" + path.string() + "'");
    }
    out << to_json(instance) << '\n';
    if (!out) {
        throw InputError("write failed for '" + path.string() + "'");
    }
}

std::string instance_hash(const Instance& instance) {
    const std::string canonical = to_json(instance);
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    EVP_Digest(canonical.data(), canonical.size(), digest.data(), &length, EVP_sha256(), nullptr);
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(length * 2);
    for (unsigned int i = 0; i < length; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

} // namespace tclp
