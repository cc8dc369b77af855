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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "mpfkit/errors.hpp"
#include "mpfkit/trotter.hpp"

using namespace mpfkit;
using namespace mpfkit::cli;

namespace {

struct Overrides {
    std::string config_path;
    std::optional<std::string> out;
    std::optional<std::string> norm_mode;
    std::optional<std::size_t> dense_cap;
    std::optional<int> q_max;
    std::optional<int> p;
    std::optional<std::size_t> J;
    std::vector<int> k_list;
    std::vector<double> tau_grid;
    std::optional<double> eps;
    std::optional<double> t;
    std::optional<double> n;
    std::optional<double> nu;
    std::optional<std::string> range;
};

ExperimentConfig resolve(const Overrides &o) {
    nlohmann::json doc = nlohmann::json::object();
    if (!o.config_path.empty()) {
        doc = load_config(o.config_path).to_json();
    }
    if (o.out) doc["out"] = *o.out;
    if (o.norm_mode) doc["norm_mode"] = *o.norm_mode;
    if (o.dense_cap) doc["dense_cap"] = *o.dense_cap;
    if (o.q_max) doc["q_max"] = *o.q_max;
    if (o.p) doc["p"] = *o.p;
    if (o.J) doc["J"] = *o.J;
    if (!o.k_list.empty()) doc["k_list"] = o.k_list;
    if (!o.tau_grid.empty()) {
        if (o.tau_grid.size() != 3) {
            throw ConfigError("--tau-grid takes LO HI COUNT");
        }
        doc["tau_grid"] = {{"lo", o.tau_grid[0]}, {"hi", o.tau_grid[1]}, {"count", std::size_t(o.tau_grid[2])}};
    }
    if (o.eps) doc["eps"] = *o.eps;
    if (o.t) doc["t"] = *o.t;
    if (o.n) doc["N"] = *o.n;
    if (o.nu) doc["nu"] = *o.nu;
    if (o.range) doc["range"] = *o.range;
    return parse_config(doc);
}

// Formula-only calculators: no Hamiltonian, output on stdout.
struct FormulaArgs {
    double n = 4;
    double g = 1;
    double k = 2;
    double t = 1;
    double eps = 1e-3;
    int p = 2;
    std::size_t J = 2;
    std::vector<int> k_list;
    std::size_t gamma = 2;
    double nu = 0;
    double d = 1;
    std::string range = "finite";
};

void add_formula_options(CLI::App *cmd, FormulaArgs &a) {
    cmd->add_option("--N", a.n, "system size")->check(CLI::PositiveNumber);
    cmd->add_option("--g", a.g, "extensiveness")->check(CLI::PositiveNumber);
    cmd->add_option("--k", a.k, "locality")->check(CLI::PositiveNumber);
    cmd->add_option("--t", a.t, "evolution time")->check(CLI::PositiveNumber);
    cmd->add_option("--eps", a.eps, "target accuracy")->check(CLI::PositiveNumber);
    cmd->add_option("--p", a.p, "base product-formula order");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Multi-product formula error and cost analysis"};
    app.require_subcommand(1);
    Overrides o;
    app.add_option("--config", o.config_path, "experiment config (JSON)");
    app.add_option("--out", o.out, "output directory");
    app.add_option("--norm-mode", o.norm_mode, "exact or one-norm");
    app.add_option("--dense-cap", o.dense_cap, "largest site count for dense evaluation");
    app.add_option("--qmax", o.q_max, "highest BCH / commutator order");

    auto add_formula_flags = [&](CLI::App *cmd) {
        cmd->add_option("--p", o.p, "base product-formula order");
        cmd->add_option("--J", o.J, "number of Trotter step counts");
        cmd->add_option("--k-list", o.k_list, "explicit step counts")->delimiter(',');
    };
    auto *order = app.add_subcommand("verify-order", "slope fits for the product and multi-product formulas");
    add_formula_flags(order);
    order->add_option("--tau-grid", o.tau_grid, "LO,HI,COUNT")->delimiter(',')->expected(3);
    auto *bounds = app.add_subcommand("verify-bounds", "inequality suite with margins");
    add_formula_flags(bounds);
    bounds->add_option("--eps", o.eps, "target accuracy");
    auto *cost = app.add_subcommand("cost", "Trotter number report, query-cost table and sweeps");
    add_formula_flags(cost);
    cost->add_option("--eps", o.eps, "target accuracy");
    cost->add_option("--t", o.t, "evolution time");
    cost->add_option("--N", o.n, "formulaic system size");
    auto *table1 = app.add_subcommand("table1", "query-cost comparison table");
    table1->add_option("--p", o.p, "base product-formula order");
    table1->add_option("--eps", o.eps, "target accuracy");
    table1->add_option("--t", o.t, "evolution time");
    table1->add_option("--N", o.n, "formulaic system size");
    table1->add_option("--nu", o.nu, "interaction decay exponent");
    table1->add_option("--range", o.range, "finite or long-range");
    auto *phi = app.add_subcommand("phi", "BCH coefficients with norms and bounds");
    phi->add_option("--p", o.p, "base product-formula order");
    auto *alpha = app.add_subcommand("alpha", "nested commutator table and mu witness");
    add_formula_flags(alpha);
    alpha->add_option("--eps", o.eps, "target accuracy");

    FormulaArgs fa;
    auto *formulas = app.add_subcommand("bounds", "formula-only calculators");
    formulas->require_subcommand(1);
    auto *report_cmd = formulas->add_subcommand("report", "BoundReport JSON on stdout");
    add_formula_options(report_cmd, fa);
    report_cmd->add_option("--J", fa.J, "number of Trotter step counts");
    report_cmd->add_option("--k-list", fa.k_list, "explicit step counts")->delimiter(',');
    report_cmd->add_option("--gamma", fa.gamma, "number of Hamiltonian groups");
    auto *table_cmd = formulas->add_subcommand("table1", "query-cost table CSV on stdout");
    add_formula_options(table_cmd, fa);
    table_cmd->add_option("--nu", fa.nu, "interaction decay exponent");
    table_cmd->add_option("--d", fa.d, "lattice dimension");
    table_cmd->add_option("--range", fa.range, "finite or long-range");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kConfigError;
    }

    try {
        if (report_cmd->parsed()) {
            auto mpf = fa.k_list.empty() ? make_mpf_linear_scheme(fa.p, fa.J) : make_mpf(fa.p, fa.k_list);
            CostInputs in;
            in.n = fa.n;
            in.k = fa.k;
            in.g = fa.g;
            in.t = fa.t;
            in.eps = fa.eps;
            in.p = fa.p;
            in.c_p = build_plan(fa.gamma, fa.p).c_p;
            in.m = mpf.m;
            in.c_norm = mpf.c_norm;
            in.k_norm = mpf.k_norm;
            auto report = bound_report(in, fa.gamma, mpf.J());
            std::cout << report.to_json().dump(2) << '\n';
            const auto &s = report.step_check;
            return s.first_holds && s.second_holds && s.time_condition_holds ? kPass : kViolation;
        }
        if (table_cmd->parsed()) {
            Table1Inputs in;
            in.n = fa.n;
            in.g = fa.g;
            in.k = fa.k;
            in.t = fa.t;
            in.eps = fa.eps;
            in.p = fa.p;
            in.nu = fa.nu;
            in.d = fa.d;
            in.range = parse_range_class(fa.range);
            std::cout << table1_csv(table1_costs(in));
            return kPass;
        }

        const auto config = resolve(o);
        echo_config(config);
        if (order->parsed()) return cmd_verify_order(config, std::cout);
        if (bounds->parsed()) return cmd_verify_bounds(config, std::cout);
        if (cost->parsed()) return cmd_cost(config, std::cout);
        if (table1->parsed()) return cmd_table1(config, std::cout);
        if (phi->parsed()) return cmd_phi(config, std::cout);
        if (alpha->parsed()) return cmd_alpha(config, std::cout);
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const DenseCapExceeded &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const BudgetExceeded &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::invalid_argument &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    }
    return kConfigError;
}
