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

#include "mpfkit/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

#include "mpfkit/fit.hpp"

namespace mpfkit {

using nlohmann::json;

HamiltonianSpec::HamiltonianSpec(std::size_t n_sites, std::vector<HamiltonianTerm> terms, std::string name)
    : n_sites_(n_sites), terms_(std::move(terms)), name_(std::move(name)) {
    if (n_sites_ == 0) {
        throw std::invalid_argument("Hamiltonian needs at least one site");
    }
    if (terms_.empty()) {
        throw std::invalid_argument("Hamiltonian needs at least one term");
    }
    std::set<PauliString> seen;
    std::vector<double> per_site(n_sites_, 0.0);
    for (const auto &t : terms_) {
        if (t.string.n_sites() != n_sites_) {
            throw std::invalid_argument(
                "term " + t.string.str() + " has " + std::to_string(t.string.n_sites()) + " sites, expected " +
                std::to_string(n_sites_));
        }
        if (!std::isfinite(t.coeff)) {
            throw std::invalid_argument("term " + t.string.str() + " has a non-finite coefficient");
        }
        if (!seen.insert(t.string).second) {
            throw std::invalid_argument("duplicate term " + t.string.str());
        }
        gamma_count_ = std::max(gamma_count_, t.group + 1);
        k_ = std::max(k_, t.string.weight());
        total_one_norm_ += std::abs(t.coeff);
        for (auto site : t.string.support()) {
            per_site[site] += std::abs(t.coeff);
        }
    }
    g_ = *std::max_element(per_site.begin(), per_site.end());

    std::vector<std::vector<const HamiltonianTerm *>> by_group(gamma_count_);
    for (const auto &t : terms_) {
        by_group[t.group].push_back(&t);
    }
    for (std::size_t gamma = 0; gamma < gamma_count_; gamma++) {
        if (by_group[gamma].empty()) {
            throw std::invalid_argument(
                "group " + std::to_string(gamma + 1) + " is empty (labels must cover 1.." +
                std::to_string(gamma_count_) + ")");
        }
        const auto &members = by_group[gamma];
        for (std::size_t a = 0; a < members.size() && !non_commuting_groups_; a++) {
            for (std::size_t b = a + 1; b < members.size(); b++) {
                if (!members[a]->string.commutes_with(members[b]->string)) {
                    non_commuting_groups_ = true;
                    break;
                }
            }
        }
    }
}

bool HamiltonianSpec::groups_mutually_commute() const {
    for (std::size_t a = 0; a < terms_.size(); a++) {
        for (std::size_t b = a + 1; b < terms_.size(); b++) {
            if (terms_[a].group != terms_[b].group && !terms_[a].string.commutes_with(terms_[b].string)) {
                return false;
            }
        }
    }
    return !non_commuting_groups_;
}

PauliSum HamiltonianSpec::group_sum(std::size_t gamma) const {
    if (gamma >= gamma_count_) {
        throw std::invalid_argument("group index out of range");
    }
    PauliSum out(n_sites_);
    for (const auto &t : terms_) {
        if (t.group == gamma) {
            out.add(t.string, t.coeff);
        }
    }
    return out;
}

std::vector<PauliSum> HamiltonianSpec::group_sums() const {
    std::vector<PauliSum> out(gamma_count_, PauliSum(n_sites_));
    for (const auto &t : terms_) {
        out[t.group].add(t.string, t.coeff);
    }
    return out;
}

PauliSum HamiltonianSpec::full_sum() const {
    PauliSum out(n_sites_);
    for (const auto &t : terms_) {
        out.add(t.string, t.coeff);
    }
    return out;
}

json HamiltonianSpec::to_json() const {
    json doc;
    doc["n_sites"] = n_sites_;
    doc["terms"] = json::array();
    for (const auto &t : terms_) {
        doc["terms"].push_back({{"pauli", t.string.str()}, {"coeff", t.coeff}, {"group", t.group + 1}});
    }
    return doc;
}

HamiltonianSpec load_spec(const json &doc) {
    if (!doc.is_object()) {
        throw std::invalid_argument("Hamiltonian document must be an object");
    }
    if (!doc.contains("n_sites") || !doc["n_sites"].is_number_integer() || doc["n_sites"].get<long long>() < 1) {
        throw std::invalid_argument("\"n_sites\" must be a positive integer");
    }
    if (!doc.contains("terms") || !doc["terms"].is_array() || doc["terms"].empty()) {
        throw std::invalid_argument("\"terms\" must be a nonempty array");
    }
    const auto n = std::size_t(doc["n_sites"].get<long long>());
    std::vector<HamiltonianTerm> terms;
    std::size_t index = 0;
    for (const auto &item : doc["terms"]) {
        const std::string where = "terms[" + std::to_string(index++) + "]";
        if (!item.is_object()) {
            throw std::invalid_argument(where + " must be an object");
        }
        if (!item.contains("pauli") || !item["pauli"].is_string()) {
            throw std::invalid_argument(where + ".pauli must be a string");
        }
        if (!item.contains("coeff") || !item["coeff"].is_number()) {
            throw std::invalid_argument(where + ".coeff must be a number");
        }
        if (!item.contains("group") || !item["group"].is_number_integer() || item["group"].get<long long>() < 1) {
            throw std::invalid_argument(where + ".group must be an integer >= 1");
        }
        const auto text = item["pauli"].get<std::string>();
        if (text.size() != n) {
            throw std::invalid_argument(
                where + ".pauli has length " + std::to_string(text.size()) + ", expected n_sites = " + std::to_string(n));
        }
        PauliString s;
        try {
            s = PauliString::parse(text);
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument(where + ".pauli: " + e.what());
        }
        terms.push_back({s, item["coeff"].get<double>(), std::size_t(item["group"].get<long long>() - 1)});
    }
    return HamiltonianSpec(n, std::move(terms), "document");
}

HamiltonianSpec load_spec_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open Hamiltonian file " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument("Hamiltonian file " + path.string() + " is not valid JSON: " + e.what());
    }
    return load_spec(doc);
}

HamiltonianSpec heisenberg_chain(std::size_t n, double coupling, double field, bool open_boundary) {
    if (n < 2) {
        throw std::invalid_argument("Heisenberg chain needs n >= 2");
    }
    struct Bond {
        std::size_t a, b;
        int kind;  // 0 even, 1 odd, 2 wrap
    };
    std::vector<Bond> bonds;
    for (std::size_t i = 0; i + 1 < n; i++) {
        bonds.push_back({i, i + 1, int(i % 2)});
    }
    if (!open_boundary && n > 2) {
        // the wrap bond touches site 0, so it only joins the odd group when n is even
        bonds.push_back({n - 1, 0, n % 2 == 0 ? 1 : 2});
    }

    std::vector<std::pair<PauliString, int>> raw;  // (string, kind) with kind 3 = field
    if (coupling != 0.0) {
        for (const auto &bond : bonds) {
            for (char p : {'X', 'Y', 'Z'}) {
                PauliString s(n);
                s.set(bond.a, p);
                s.set(bond.b, p);
                raw.emplace_back(s, bond.kind);
            }
        }
    }
    if (field != 0.0) {
        for (std::size_t i = 0; i < n; i++) {
            raw.emplace_back(PauliString::single(n, i, 'Z'), 3);
        }
    }
    if (raw.empty()) {
        throw std::invalid_argument("Heisenberg chain with zero coupling and zero field has no terms");
    }
    // collapse empty kinds into consecutive group labels
    std::array<long, 4> label{-1, -1, -1, -1};
    std::size_t next = 0;
    for (int kind = 0; kind < 4; kind++) {
        if (std::any_of(raw.begin(), raw.end(), [&](const auto &r) { return r.second == kind; })) {
            label[std::size_t(kind)] = long(next++);
        }
    }
    std::vector<HamiltonianTerm> terms;
    for (const auto &[s, kind] : raw) {
        terms.push_back({s, kind == 3 ? field : coupling, std::size_t(label[std::size_t(kind)])});
    }
    return HamiltonianSpec(n, std::move(terms), "heisenberg");
}

HamiltonianSpec long_range_chain(std::size_t n, double exponent, double base) {
    if (n < 2) {
        throw std::invalid_argument("long-range chain needs n >= 2");
    }
    if (!(exponent > 0)) {
        throw std::invalid_argument("long-range exponent must be positive");
    }
    if (base == 0.0) {
        throw std::invalid_argument("long-range base coupling must be nonzero");
    }
    std::vector<HamiltonianTerm> terms;
    terms.reserve(n * (n - 1) / 2);
    for (std::size_t d = 1; d < n; d++) {
        const double coeff = base / std::pow(double(d), exponent);
        for (std::size_t i = 0; i + d < n; i++) {
            PauliString s(n);
            s.set(i, 'Z');
            s.set(i + d, 'Z');
            terms.push_back({std::move(s), coeff, d - 1});
        }
    }
    return HamiltonianSpec(n, std::move(terms), "long_range");
}

GScalingReport g_scaling_report(const FamilyGenerator &family, std::span<const std::size_t> sizes) {
    if (sizes.size() < 3) {
        throw std::invalid_argument("g_scaling_report needs at least 3 sizes for a slope fit");
    }
    GScalingReport report;
    std::vector<double> log_n, log_g, g_values;
    for (auto n : sizes) {
        double g = family(n).extensiveness();
        report.rows.push_back({n, g});
        log_n.push_back(std::log(double(n)));
        log_g.push_back(std::log(g));
        g_values.push_back(g);
    }
    double mean_g = 0;
    for (double g : g_values) {
        mean_g += g;
    }
    mean_g /= double(g_values.size());

    auto power = fit_linear(log_n, log_g);
    report.loglog_slope = power.slope;
    double ss = 0;
    for (std::size_t k = 0; k < g_values.size(); k++) {
        double predicted = std::exp(power.intercept + power.slope * log_n[k]);
        ss += (g_values[k] - predicted) * (g_values[k] - predicted);
    }
    report.power_fit_relative_residual = std::sqrt(ss / double(g_values.size())) / mean_g;

    auto logfit = fit_linear(log_n, g_values);
    report.log_fit_slope = logfit.slope;
    report.log_fit_relative_residual = logfit.rms_residual / mean_g;

    if (std::abs(report.loglog_slope) < 0.1) {
        report.regime = "constant";
    } else if (report.log_fit_relative_residual < report.power_fit_relative_residual) {
        report.regime = "logarithmic";
    } else {
        report.regime = "power";
    }
    return report;
}

}  // namespace mpfkit
