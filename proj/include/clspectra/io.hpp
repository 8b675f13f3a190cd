#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "clspectra/degree_sequence.hpp"
#include "clspectra/graph_sample.hpp"
#include "clspectra/spectra.hpp"

namespace clspectra {

inline constexpr const char* kVersion = "0.1.0";

// FNV-1a over the canonical config string; embedded in every artifact.
inline std::uint64_t config_hash(const std::string& canonical) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Provenance block every output file carries.
inline nlohmann::json meta_block(const std::string& canonical_config, std::uint64_t seed,
                                 const std::string& normalization) {
    return {{"tool", "clspectra"},
            {"version", kVersion},
            {"config_hash", config_hash(canonical_config)},
            {"seed", seed},
            {"rng", Rng::id()},
            {"normalization", normalization}};
}

inline nlohmann::json to_json(const DegreeSequence& ds) {
    nlohmann::json j{{"n", ds.n},       {"w", ds.w},
                     {"rho", ds.rho},   {"w_max", ds.w_max},
                     {"w_min", ds.w_min}, {"d2avg", ds.d2avg},
                     {"model", to_string(ds.params.model)}};
    switch (ds.params.model) {
        case Model::constant: j["p"] = ds.params.p; break;
        case Model::exponential:
            j["delta"] = ds.params.exp.delta;
            j["alpha"] = ds.params.exp.alpha;
            j["grid"] = ds.params.exp.sampling == ExpSampling::quantile_grid;
            j["seed"] = ds.params.seed;
            break;
        case Model::power_law:
            j["beta"] = ds.params.pl.beta;
            j["delta"] = ds.params.pl.delta;
            j["davg"] = ds.params.pl.davg;
            break;
        case Model::custom: break;
    }
    return j;
}

inline DegreeSequence degree_sequence_from_json(const nlohmann::json& j) {
    std::vector<double> w = j.at("w").get<std::vector<double>>();
    DegreeSequence ds = from_weights(std::move(w));
    std::string model = j.value("model", "custom");
    if (model == "constant") {
        ds.params.model = Model::constant;
        ds.params.p = j.value("p", 0.0);
    } else if (model == "exponential") {
        ds.params.model = Model::exponential;
        ds.params.exp.delta = j.value("delta", 0.0);
        ds.params.exp.alpha = j.value("alpha", 0.0);
        ds.params.exp.sampling =
            j.value("grid", false) ? ExpSampling::quantile_grid : ExpSampling::uniform_random;
        ds.params.seed = j.value("seed", std::uint64_t{0});
    } else if (model == "power_law") {
        ds.params.model = Model::power_law;
        ds.params.pl.beta = j.value("beta", 0.0);
        ds.params.pl.delta = j.value("delta", 0.0);
        ds.params.pl.davg = j.value("davg", 0.0);
    }
    return ds;
}

inline DegreeSequence load_degree_sequence_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    nlohmann::json j;
    in >> j;
    return degree_sequence_from_json(j);
}

// Edge-list dump: fixed first header line, then a second header line
// embedding the degree sequence so centralized matrices can be rebuilt
// from the file alone.
inline void save_edges(const AdjacencySample& s, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << "# clspectra-graph v1 n=" << s.n << " seed=" << s.seed << " rng=" << s.rng_id << "\n";
    nlohmann::json wj{{"rho", s.rho}, {"w", s.w}};
    out << "# seq " << wj.dump() << "\n";
    for (auto [i, j] : s.edges) out << i << " " << j << "\n";
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

inline AdjacencySample load_edges(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line) || line.rfind("# clspectra-graph v1", 0) != 0)
        throw std::runtime_error("not a clspectra-graph v1 file: " + path.string());
    AdjacencySample s;
    {
        std::istringstream hdr(line.substr(std::string("# clspectra-graph v1").size()));
        std::string tok;
        while (hdr >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) continue;
            std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "n") s.n = std::stoull(val);
            if (key == "seed") s.seed = std::stoull(val);
            if (key == "rng") s.rng_id = val;
        }
    }
    if (s.n == 0) throw std::runtime_error("missing n in graph header");
    bool have_seq = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind("# seq ", 0) == 0) {
                nlohmann::json wj = nlohmann::json::parse(line.substr(6));
                s.rho = wj.at("rho").get<double>();
                s.w = wj.at("w").get<std::vector<double>>();
                have_seq = true;
            }
            continue;
        }
        std::istringstream ls(line);
        std::uint32_t i, j;
        if (!(ls >> i >> j)) throw std::runtime_error("bad edge line: " + line);
        if (i > j || j >= s.n) throw std::runtime_error("edge out of order or range: " + line);
        s.edges.emplace_back(i, j);
    }
    if (!have_seq)
        throw std::runtime_error("graph file lacks the '# seq' header line: " + path.string());
    if (s.w.size() != s.n) throw std::runtime_error("degree sequence length mismatch");
    double nn = static_cast<double>(s.n);
    s.norm = std::sqrt(nn * s.rho);
    s.mean_coef = std::sqrt(nn) * s.rho * std::sqrt(s.rho);
    return s;
}

inline nlohmann::json to_json(const MomentReport& rep) {
    nlohmann::json j{{"k_max", rep.k_max},
                     {"moments", rep.moments},
                     {"matrix_kind", to_string(rep.kind)},
                     {"method", to_string(rep.method)}};
    if (rep.method == MomentMethod::hutchinson) {
        j["std_errors"] = rep.std_errors;
        j["probes"] = rep.probes;
        j["probe_seed"] = rep.probe_seed;
    }
    return j;
}

} // namespace clspectra
