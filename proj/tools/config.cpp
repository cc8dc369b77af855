// Copyright 2026 The mpfkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "config.hpp"

#include <fstream>
#include <set>

namespace mpfkit::cli {

using nlohmann::json;

namespace {

const std::set<std::string> kKnownKeys{
    "hamiltonian", "p", "J", "k_list", "tau_grid", "eps", "t", "N", "nu", "d", "range", "eps_sweep",
    "n_sweep", "g_sweep", "norm_mode", "dense_cap", "q_max", "seed", "out"};

template <typename T>
T read(const json &doc, const std::string &key, const std::string &what) {
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception &) {
        throw ConfigError("\"" + key + "\" must be " + what);
    }
}

double read_positive(const json &doc, const std::string &key) {
    const auto v = read<double>(doc, key, "a number");
    if (!(v > 0)) {
        throw ConfigError("\"" + key + "\" must be positive");
    }
    return v;
}

std::vector<double> read_positive_list(const json &doc, const std::string &key) {
    if (!doc.at(key).is_array() || doc.at(key).empty()) {
        throw ConfigError("\"" + key + "\" must be a nonempty array of positive numbers");
    }
    std::vector<double> out;
    for (const auto &item : doc.at(key)) {
        if (!item.is_number() || !(item.get<double>() > 0)) {
            throw ConfigError("\"" + key + "\" must be a nonempty array of positive numbers");
        }
        out.push_back(item.get<double>());
    }
    return out;
}

}  // namespace

json ExperimentConfig::to_json() const {
    json doc;
    doc["hamiltonian"] = hamiltonian;
    doc["p"] = p;
    doc["J"] = J;
    doc["k_list"] = k_list;
    doc["tau_grid"] = {{"lo", tau_grid.lo}, {"hi", tau_grid.hi}, {"count", tau_grid.count}};
    doc["eps"] = eps;
    doc["t"] = t;
    doc["N"] = n_formula ? json(*n_formula) : json(nullptr);
    doc["nu"] = nu;
    doc["d"] = d;
    doc["range"] = range;
    doc["eps_sweep"] = eps_sweep;
    doc["n_sweep"] = n_sweep;
    doc["g_sweep"] = g_sweep ? json{{"exponent", g_sweep->exponent}, {"sizes", g_sweep->sizes}} : json(nullptr);
    doc["norm_mode"] = norm_mode == NormMode::exact_dense ? "exact" : "one-norm";
    doc["dense_cap"] = dense_cap;
    doc["q_max"] = q_max;
    doc["seed"] = seed;
    doc["out"] = out.string();
    return doc;
}

ExperimentConfig parse_config(const json &doc) {
    if (!doc.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    for (const auto &[key, value] : doc.items()) {
        if (!kKnownKeys.count(key)) {
            throw ConfigError("unknown config key \"" + key + "\"");
        }
    }
    ExperimentConfig c;
    if (doc.contains("hamiltonian")) {
        const auto &h = doc["hamiltonian"];
        if (!h.is_string() && !h.is_object()) {
            throw ConfigError("\"hamiltonian\" must be a file path, a family object or an inline document");
        }
        c.hamiltonian = h;
    }
    if (doc.contains("p")) {
        c.p = read<int>(doc, "p", "an integer");
        if (c.p != 1 && c.p != 2 && (c.p < 4 || c.p % 2 != 0)) {
            throw ConfigError("\"p\" must be 1, 2 or an even integer >= 4");
        }
    }
    if (doc.contains("J")) {
        const auto J = read<long long>(doc, "J", "an integer");
        if (J < 1) {
            throw ConfigError("\"J\" must be at least 1");
        }
        c.J = std::size_t(J);
    }
    if (doc.contains("k_list") && !doc["k_list"].is_null()) {
        c.k_list = read<std::vector<int>>(doc, "k_list", "an array of positive integers");
    }
    if (doc.contains("tau_grid")) {
        const auto &g = doc["tau_grid"];
        if (!g.is_object()) {
            throw ConfigError("\"tau_grid\" must be an object {lo, hi, count}");
        }
        if (g.contains("lo")) c.tau_grid.lo = read_positive(g, "lo");
        if (g.contains("hi")) c.tau_grid.hi = read_positive(g, "hi");
        if (g.contains("count")) c.tau_grid.count = read<std::size_t>(g, "count", "a positive integer");
        if (c.tau_grid.hi <= c.tau_grid.lo || c.tau_grid.count < 3) {
            throw ConfigError("\"tau_grid\" needs lo < hi and count >= 3");
        }
    }
    if (doc.contains("eps")) c.eps = read_positive(doc, "eps");
    if (doc.contains("t")) c.t = read_positive(doc, "t");
    if (doc.contains("N") && !doc["N"].is_null()) c.n_formula = read_positive(doc, "N");
    if (doc.contains("nu")) c.nu = read<double>(doc, "nu", "a number");
    if (doc.contains("d")) c.d = read_positive(doc, "d");
    if (doc.contains("range")) c.range = read<std::string>(doc, "range", "\"finite\" or \"long-range\"");
    if (doc.contains("eps_sweep")) c.eps_sweep = read_positive_list(doc, "eps_sweep");
    if (doc.contains("n_sweep")) c.n_sweep = read_positive_list(doc, "n_sweep");
    if (doc.contains("g_sweep") && !doc["g_sweep"].is_null()) {
        const auto &g = doc["g_sweep"];
        if (!g.is_object()) {
            throw ConfigError("\"g_sweep\" must be an object {exponent, sizes}");
        }
        GSweep sweep;
        if (g.contains("exponent")) sweep.exponent = read_positive(g, "exponent");
        if (g.contains("sizes")) sweep.sizes = read<std::vector<std::size_t>>(g, "sizes", "an array of sizes");
        if (sweep.sizes.size() < 3) {
            throw ConfigError("\"g_sweep.sizes\" needs at least 3 entries");
        }
        c.g_sweep = sweep;
    }
    if (doc.contains("norm_mode")) {
        try {
            c.norm_mode = parse_norm_mode(read<std::string>(doc, "norm_mode", "\"exact\" or \"one-norm\""));
        } catch (const std::invalid_argument &e) {
            throw ConfigError(e.what());
        }
    }
    if (doc.contains("dense_cap")) c.dense_cap = read<std::size_t>(doc, "dense_cap", "a positive integer");
    if (doc.contains("q_max")) {
        c.q_max = read<int>(doc, "q_max", "an integer");
        if (c.q_max < 2) {
            throw ConfigError("\"q_max\" must be at least 2");
        }
    }
    if (doc.contains("seed")) c.seed = read<std::uint64_t>(doc, "seed", "a nonnegative integer");
    if (doc.contains("out")) c.out = read<std::string>(doc, "out", "a directory path");
    return c;
}

ExperimentConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ConfigError("config file " + path.string() + " is not valid JSON: " + e.what());
    }
    return parse_config(doc);
}

HamiltonianSpec resolve_hamiltonian(const ExperimentConfig &config) {
    const auto &h = config.hamiltonian;
    try {
        if (h.is_string()) {
            return load_spec_file(h.get<std::string>());
        }
        if (h.contains("terms")) {
            return load_spec(h);
        }
        const auto family = read<std::string>(h, "family", "\"heisenberg\" or \"long_range\"");
        const auto n = read<std::size_t>(h, "n", "a site count");
        if (family == "heisenberg") {
            return heisenberg_chain(
                n, h.value("coupling", 1.0), h.value("field", 0.0), h.value("open_boundary", true));
        }
        if (family == "long_range") {
            return long_range_chain(n, read<double>(h, "exponent", "a positive number"), h.value("base", 1.0));
        }
        throw ConfigError("unknown Hamiltonian family \"" + family + "\"");
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("hamiltonian: ") + e.what());
    } catch (const json::exception &e) {
        throw ConfigError(std::string("hamiltonian: ") + e.what());
    }
}

MpfSpec resolve_mpf(const ExperimentConfig &config) {
    try {
        return config.k_list.empty() ? make_mpf_linear_scheme(config.p, config.J) : make_mpf(config.p, config.k_list);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("multi-product formula: ") + e.what());
    }
}

}  // namespace mpfkit::cli
