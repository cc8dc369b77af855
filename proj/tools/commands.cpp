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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "mpfkit/bch.hpp"
#include "mpfkit/commutators.hpp"
#include "mpfkit/errors.hpp"
#include "mpfkit/fit.hpp"

namespace mpfkit::cli {

using nlohmann::json;

namespace {

std::filesystem::path output_path(const ExperimentConfig &config, const std::string &name) {
    std::filesystem::create_directories(config.out);
    return config.out / name;
}

void write_json(const ExperimentConfig &config, const std::string &name, const json &doc) {
    std::ofstream out(output_path(config, name));
    out << doc.dump(2) << '\n';
}

class CsvWriter {
   public:
    CsvWriter(const ExperimentConfig &config, const std::string &name, const std::vector<std::string> &header)
        : out_(output_path(config, name)) {
        out_ << std::setprecision(17);
        for (std::size_t i = 0; i < header.size(); i++) {
            out_ << (i ? "," : "") << header[i];
        }
        out_ << '\n';
    }

    template <typename... Fields>
    void row(const Fields &...fields) {
        std::size_t i = 0;
        ((out_ << (i++ ? "," : "") << fields), ...);
        out_ << '\n';
    }

   private:
    std::ofstream out_;
};

json spec_summary(const HamiltonianSpec &spec) {
    return {{"name", spec.name()},
            {"n_sites", spec.n_sites()},
            {"terms", spec.terms().size()},
            {"gamma_count", spec.gamma_count()},
            {"k", spec.locality()},
            {"g", spec.extensiveness()},
            {"one_norm", spec.total_one_norm()}};
}

json mpf_summary(const MpfSpec &mpf) {
    return {{"p", mpf.p}, {"k", mpf.k}, {"c", mpf.c}, {"m", mpf.m}, {"k_norm", mpf.k_norm}, {"c_norm", mpf.c_norm}};
}

json slope_verdict(const SlopeFit &fit, double threshold, bool &pass) {
    json doc{{"threshold", threshold}, {"points_used", fit.points_used}};
    if (fit.exact) {
        doc["slope"] = nullptr;
        doc["verdict"] = "exact";
        return doc;
    }
    doc["slope"] = fit.slope;
    const bool ok = fit.slope >= threshold;
    doc["verdict"] = ok ? "pass" : "fail";
    pass = pass && ok;
    return doc;
}

bool mpf_applicable(const ExperimentConfig &config) {
    return config.p >= 2 && config.p % 2 == 0;
}

// ---- bound checks ----

struct CheckRow {
    std::string check;
    int q = 0;
    int position = 0;
    std::optional<double> tau;
    double lhs = 0;
    double rhs = 0;
    std::string status;
    std::string note;
};

CheckRow compare(std::string check, int q, double lhs, double rhs, std::string note = "") {
    CheckRow row;
    row.check = std::move(check);
    row.q = q;
    row.lhs = lhs;
    row.rhs = rhs;
    row.status = lhs <= rhs * (1 + 1e-12) ? "pass" : "fail";
    row.note = std::move(note);
    return row;
}

CheckRow untestable(std::string check, int q, std::string reason) {
    CheckRow row;
    row.check = std::move(check);
    row.q = q;
    row.status = "untestable";
    row.note = std::move(reason);
    return row;
}

// Random Hermitian operator with a few low-weight terms, used as the inserted operator.
PauliSum seeded_operator(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> site(0, n - 1);
    std::uniform_int_distribution<int> letter(0, 2);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    const char paulis[] = {'X', 'Y', 'Z'};
    PauliSum op(n);
    for (int term = 0; term < 3; term++) {
        PauliString s(n);
        s.set(site(rng), paulis[letter(rng)]);
        s.set(site(rng), paulis[letter(rng)]);
        op.accumulate(s, coeff(rng));
    }
    op.prune();
    if (op.empty()) {
        op.add(PauliString::single(n, 0, 'Z'), 1.0);
    }
    return op;
}

void commutator_rows(const ExperimentConfig &config, const HamiltonianSpec &spec, std::vector<CheckRow> &rows) {
    const bool exact = config.norm_mode == NormMode::exact_dense;
    const std::string note = exact ? "" : "certified one-norm value";
    for (int q = 2; q <= config.q_max; q++) {
        try {
            const double alpha = alpha_com(spec, q, config.norm_mode, config.dense_cap);
            rows.push_back(compare("alpha_factorial_bound", q, alpha, alpha_bound_factorial(spec, q), note));
            rows.push_back(compare("alpha_one_norm_bound", q, alpha, alpha_bound_one_norm(spec, q), note));
        } catch (const BudgetExceeded &e) {
            rows.push_back(untestable("alpha_bounds", q, e.what()));
        }
    }
}

void phi_rows(
    const ExperimentConfig &config, const HamiltonianSpec &spec, const ProductFormulaPlan &plan,
    std::vector<CheckRow> &rows) {
    const bool exact = config.norm_mode == NormMode::exact_dense;
    BchOptions options{config.q_max, config.dense_cap, exact};
    for (int q = 2; q <= config.q_max; q++) {
        BchCoefficient c;
        try {
            c = compute_phi(plan, spec, q, options);
        } catch (const BudgetExceeded &e) {
            rows.push_back(untestable("phi_norm_bound", q, e.what()));
            continue;
        }
        const double norm = c.norm_exact ? *c.norm_exact : c.op.one_norm();
        const std::string note = c.norm_exact ? "" : "certified one-norm value";
        if (q <= plan.order) {
            rows.push_back(compare("phi_vanishes", q, norm, 1e-10, note));
        }
        rows.push_back(compare("phi_norm_bound", q, norm, c.norm_bound, note));
        rows.push_back(compare("phi_locality", q, double(c.locality), double(q) * double(spec.locality())));
        rows.push_back(compare("phi_extensiveness", q, c.extensiveness, phi_extensiveness_bound(plan, spec, q)));
    }
}

void insertion_rows(const ExperimentConfig &config, const HamiltonianSpec &spec, std::vector<CheckRow> &rows) {
    const auto op = seeded_operator(spec.n_sites(), config.seed);
    const std::string note =
        config.norm_mode == NormMode::exact_dense ? "" : "certified one-norm value";
    for (int q = 1; q <= std::min(4, config.q_max); q++) {
        for (int pos = 1; pos <= q; pos++) {
            auto report = inserted_commutator_check(spec, op, q, pos, config.norm_mode, config.dense_cap);
            auto row = compare("inserted_operator", q, report.lhs, report.bound, note);
            row.position = pos;
            rows.push_back(row);
        }
    }
}

void truncation_rows(
    const ExperimentConfig &config, const HamiltonianSpec &spec, const ProductFormulaPlan &plan,
    std::vector<CheckRow> &rows) {
    if (config.norm_mode != NormMode::exact_dense) {
        rows.push_back(untestable("bch_truncation", 0, "dense checks are disabled in one-norm mode"));
        return;
    }
    auto report = verify_truncation(plan, spec, config.eps, config.q_max, config.dense_cap);
    if (!report.testable) {
        rows.push_back(untestable("bch_truncation", report.p0, report.reason));
        return;
    }
    for (const auto &s : report.samples) {
        auto row = compare("bch_truncation", report.p0, s.error, config.eps);
        row.tau = s.tau;
        rows.push_back(row);
    }
}

void mpf_rows(
    const ExperimentConfig &config, const HamiltonianSpec &spec, const ProductFormulaPlan &plan,
    std::vector<CheckRow> &rows) {
    if (config.norm_mode != NormMode::exact_dense) {
        rows.push_back(untestable("mpf_error_bound", 0, "dense checks are disabled in one-norm mode"));
        return;
    }
    if (!mpf_applicable(config)) {
        rows.push_back(untestable("mpf_error_bound", 0, "multi-product formulas need an even base order"));
        return;
    }
    if (!(config.eps < 1)) {
        rows.push_back(untestable("mpf_error_bound", 0, "the error bound is stated for eps < 1"));
        return;
    }
    const auto mpf = resolve_mpf(config);
    const double n = double(spec.n_sites());
    const double k = double(spec.locality());
    const double g = spec.extensiveness();
    const int p0 = truncation_order(n, config.eps);
    MuResult mu;
    try {
        auto table = commutator_table(spec, config.p + 1, std::max(config.p + 1, p0), true, config.dense_cap);
        mu = mu_truncated(table, config.p, mpf.m, p0);
    } catch (const BudgetExceeded &e) {
        rows.push_back(untestable("mpf_error_bound", p0, e.what()));
        return;
    }
    std::ostringstream witness;
    witness << "witness q=" << mu.q << " n=" << mu.n << (mu.converged ? "" : ", not converged in n");
    rows.push_back(compare("mu_closed_form", p0, mu.value, mu_closed_form_bound(n, config.eps, config.p, k, g),
                           witness.str()));
    const double tau_max = mpf_time_condition(n, config.eps, plan.c_p, k, g, mu.value);
    DenseModel model(spec, config.dense_cap);
    for (double tau : {tau_max, tau_max / 2, tau_max / 4, tau_max / 10}) {
        auto bound = mpf_error_bound(tau, mpf.c_norm, mpf.k_norm, plan.c_p, mu.value, mpf.m, config.eps, tau_max);
        auto row = compare("mpf_error_bound", p0, mpf_error(mpf, plan, model, tau), bound.value);
        row.tau = tau;
        rows.push_back(row);
    }
}

CostInputs cost_inputs(const ExperimentConfig &config, const HamiltonianSpec &spec, const MpfSpec &mpf, int c_p) {
    CostInputs in;
    in.n = config.n_formula.value_or(double(spec.n_sites()));
    in.k = double(spec.locality());
    in.g = spec.extensiveness();
    in.t = config.t;
    in.eps = config.eps;
    in.p = config.p;
    in.c_p = c_p;
    in.m = mpf.m;
    in.c_norm = mpf.c_norm;
    in.k_norm = mpf.k_norm;
    return in;
}

CostInputs with_mpf(CostInputs in, const MpfSpec &mpf) {
    in.m = mpf.m;
    in.c_norm = mpf.c_norm;
    in.k_norm = mpf.k_norm;
    return in;
}

}  // namespace

void echo_config(const ExperimentConfig &config) {
    write_json(config, "config.json", config.to_json());
}

int cmd_verify_order(const ExperimentConfig &config, std::ostream &log) {
    const auto spec = resolve_hamiltonian(config);
    const DenseModel model(spec, config.dense_cap);
    const auto plan = build_plan(spec, config.p);
    std::optional<MpfSpec> mpf;
    if (mpf_applicable(config)) {
        mpf = resolve_mpf(config);
    }
    const auto grid = geometric_grid(config.tau_grid.lo, config.tau_grid.hi, config.tau_grid.count);

    std::vector<double> trotter, combined;
    CsvWriter csv(config, "order.csv", {"tau", "trotter_error", "mpf_error"});
    for (double tau : grid) {
        trotter.push_back(trotter_error(plan, model, tau));
        if (mpf) {
            combined.push_back(mpf_error(*mpf, plan, model, tau));
            csv.row(tau, trotter.back(), combined.back());
        } else {
            csv.row(tau, trotter.back(), "");
        }
    }

    bool pass = true;
    json report;
    report["hamiltonian"] = spec_summary(spec);
    report["trotter"] = slope_verdict(fit_loglog(grid, trotter), config.p + 0.8, pass);
    report["trotter"]["p"] = config.p;
    if (mpf) {
        report["mpf"] = mpf_summary(*mpf);
        report["mpf"]["fit"] = slope_verdict(fit_loglog(grid, combined), mpf->m + 0.8, pass);
    } else {
        report["mpf"] = nullptr;
    }
    report["pass"] = pass;
    write_json(config, "order.json", report);
    log << "trotter p=" << config.p << ": " << report["trotter"]["verdict"].get<std::string>();
    if (mpf) {
        log << ", mpf m=" << mpf->m << ": " << report["mpf"]["fit"]["verdict"].get<std::string>();
    }
    log << '\n';
    return pass ? kPass : kViolation;
}

int cmd_verify_bounds(const ExperimentConfig &config, std::ostream &log) {
    const auto spec = resolve_hamiltonian(config);
    const auto plan = build_plan(spec, config.p);
    std::vector<CheckRow> rows;
    commutator_rows(config, spec, rows);
    phi_rows(config, spec, plan, rows);
    insertion_rows(config, spec, rows);
    truncation_rows(config, spec, plan, rows);
    mpf_rows(config, spec, plan, rows);

    json doc;
    doc["hamiltonian"] = spec_summary(spec);
    doc["norm_mode"] = config.norm_mode == NormMode::exact_dense ? "exact" : "one-norm";
    doc["rows"] = json::array();
    std::map<std::string, int> counts{{"pass", 0}, {"fail", 0}, {"untestable", 0}};
    CsvWriter csv(config, "bounds.csv", {"check", "q", "position", "tau", "lhs", "rhs", "margin", "status", "note"});
    for (const auto &row : rows) {
        counts[row.status]++;
        const bool tested = row.status != "untestable";
        json item{{"check", row.check}, {"q", row.q}, {"status", row.status}, {"note", row.note}};
        item["position"] = row.position ? json(row.position) : json(nullptr);
        item["tau"] = row.tau ? json(*row.tau) : json(nullptr);
        item["lhs"] = tested ? json(row.lhs) : json(nullptr);
        item["rhs"] = tested ? json(row.rhs) : json(nullptr);
        item["margin"] = tested ? json(row.rhs - row.lhs) : json(nullptr);
        doc["rows"].push_back(item);
        std::ostringstream tau, lhs, rhs, margin;
        tau << std::setprecision(17);
        lhs << std::setprecision(17);
        rhs << std::setprecision(17);
        margin << std::setprecision(17);
        if (row.tau) tau << *row.tau;
        if (tested) {
            lhs << row.lhs;
            rhs << row.rhs;
            margin << row.rhs - row.lhs;
        }
        csv.row(row.check, row.q, row.position, tau.str(), lhs.str(), rhs.str(), margin.str(), row.status,
                "\"" + row.note + "\"");
    }
    doc["summary"] = counts;
    write_json(config, "bounds.json", doc);
    log << counts["pass"] << " pass, " << counts["fail"] << " fail, " << counts["untestable"] << " untestable\n";
    return counts["fail"] == 0 ? kPass : kViolation;
}

int cmd_cost(const ExperimentConfig &config, std::ostream &log) {
    const auto spec = resolve_hamiltonian(config);
    const auto plan = build_plan(spec, config.p);
    if (!mpf_applicable(config)) {
        throw ConfigError("cost reports need an even base order p");
    }
    const auto mpf = resolve_mpf(config);
    const auto in = cost_inputs(config, spec, mpf, plan.c_p);
    const auto report = bound_report(in, spec.gamma_count(), mpf.J());
    json doc = report.to_json();
    doc["hamiltonian"] = spec_summary(spec);
    doc["mpf"] = mpf_summary(mpf);

    {
        std::ofstream table(output_path(config, "table1.csv"));
        table << table1_csv(report.table1);
    }

    // step-condition candidates: exact values where affordable, then the two bounds out to q = 60
    const bool exact = config.norm_mode == NormMode::exact_dense;
    auto candidates = step_condition_candidates(spec, 2, config.q_max, exact, config.dense_cap);
    auto tail = step_condition_candidates(spec, config.q_max + 1, 60, false);
    candidates.insert(candidates.end(), tail.begin(), tail.end());
    CsvWriter diagnostics(config, "diagnostics.csv", {"q", "from_factorial_bound", "from_one_norm_bound", "from_exact"});
    for (const auto &row : candidates) {
        std::ostringstream ex;
        ex << std::setprecision(17);
        if (row.from_exact) ex << *row.from_exact;
        diagnostics.row(row.q, row.from_factorial_bound, row.from_one_norm_bound, ex.str());
    }
    doc["diagnostics_file"] = "diagnostics.csv";

    // accuracy sweep with m chosen from the accuracy, rounded up to an even order
    std::vector<double> inv_eps, log_inv_eps, rs;
    CsvWriter eps_csv(config, "eps_sweep.csv", {"eps", "m", "J", "r1", "r2", "r"});
    for (double eps : config.eps_sweep) {
        auto point = in;
        point.eps = eps;
        const int m = select_m(point.n, point.g, point.t, eps);
        const auto scheme = make_mpf_linear_scheme(config.p, std::size_t((m + 1) / 2));
        point = with_mpf(point, scheme);
        const auto r = trotter_number(point);
        eps_csv.row(eps, scheme.m, scheme.J(), r.r1, r.r2, r.r);
        inv_eps.push_back(1 / eps);
        log_inv_eps.push_back(std::log(1 / eps));
        rs.push_back(double(r.r));
    }
    if (rs.size() >= 2) {
        doc["eps_sweep"]["power_exponent"] = fit_loglog(inv_eps, rs).slope;
        const bool loggable = std::all_of(log_inv_eps.begin(), log_inv_eps.end(), [](double v) { return v > 0; });
        doc["eps_sweep"]["polylog_exponent"] = loggable ? json(fit_loglog(log_inv_eps, rs).slope) : json(nullptr);
    }

    std::vector<double> ns, rn;
    bool first_dominates = true;
    CsvWriter n_csv(config, "n_sweep.csv", {"N", "r1", "r2", "r"});
    for (double n : config.n_sweep) {
        auto point = in;
        point.n = n;
        const auto r = trotter_number(point);
        n_csv.row(n, r.r1, r.r2, r.r);
        first_dominates = first_dominates && r.r1 > r.r2;
        ns.push_back(n);
        rn.push_back(double(r.r));
    }
    if (rn.size() >= 2) {
        doc["n_sweep"] = {{"slope", fit_loglog(ns, rn).slope},
                          {"expected_first_term_slope", 1.0 / (config.p + 1)},
                          {"first_term_dominates", first_dominates}};
    }

    if (config.g_sweep) {
        const auto exponent = config.g_sweep->exponent;
        auto g = g_scaling_report(
            [exponent](std::size_t n) { return long_range_chain(n, exponent); }, config.g_sweep->sizes);
        CsvWriter g_csv(config, "g_sweep.csv", {"n", "g"});
        for (const auto &row : g.rows) {
            g_csv.row(row.n, row.g);
        }
        doc["g_sweep"] = {{"exponent", exponent},
                          {"loglog_slope", g.loglog_slope},
                          {"log_fit_slope", g.log_fit_slope},
                          {"regime", g.regime}};
    }
    write_json(config, "report.json", doc);

    const auto &s = report.step_check;
    const bool consistent = s.first_holds && s.second_holds && s.time_condition_holds;
    log << "r = " << report.r.r << " (r1 " << report.r.r1 << ", r2 " << report.r.r2 << "), step conditions "
        << (consistent ? "hold" : "violated") << '\n';
    return consistent ? kPass : kViolation;
}

int cmd_table1(const ExperimentConfig &config, std::ostream &log) {
    const auto spec = resolve_hamiltonian(config);
    Table1Inputs in;
    in.n = config.n_formula.value_or(double(spec.n_sites()));
    in.g = spec.extensiveness();
    in.k = double(spec.locality());
    in.t = config.t;
    in.eps = config.eps;
    in.p = config.p;
    in.nu = config.nu;
    in.d = config.d;
    try {
        in.range = parse_range_class(config.range);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    const auto csv = table1_csv(table1_costs(in));
    std::ofstream(output_path(config, "table1.csv")) << csv;
    log << csv;
    return kPass;
}

int cmd_phi(const ExperimentConfig &config, std::ostream &log) {
    const auto spec = resolve_hamiltonian(config);
    const auto plan = build_plan(spec, config.p);
    BchOptions options{config.q_max, config.dense_cap, config.norm_mode == NormMode::exact_dense};
    CsvWriter csv(
        config, "phi.csv",
        {"q", "norm_exact", "norm_bound", "one_norm", "locality", "locality_bound", "extensiveness",
         "extensiveness_bound"});
    json doc;
    doc["hamiltonian"] = spec_summary(spec);
    doc["p"] = config.p;
    doc["phi"] = json::array();
    for (int q = 2; q <= config.q_max; q++) {
        const auto c = compute_phi(plan, spec, q, options);
        std::ostringstream exact;
        exact << std::setprecision(17);
        if (c.norm_exact) exact << *c.norm_exact;
        const double ext_bound = phi_extensiveness_bound(plan, spec, q);
        csv.row(q, exact.str(), c.norm_bound, c.op.one_norm(), c.locality, std::size_t(q) * spec.locality(),
                c.extensiveness, ext_bound);
        json terms = json::object();
        for (const auto &[s, v] : c.op.terms()) {
            terms[s.str()] = {v.real(), v.imag()};
        }
        doc["phi"].push_back({{"q", q},
                              {"norm_exact", c.norm_exact ? json(*c.norm_exact) : json(nullptr)},
                              {"norm_bound", c.norm_bound},
                              {"terms", terms}});
        log << "q=" << q << " terms=" << c.op.size() << " norm_bound=" << c.norm_bound << '\n';
    }
    write_json(config, "phi.json", doc);
    return kPass;
}

int cmd_alpha(const ExperimentConfig &config, std::ostream &log) {
    const auto spec = resolve_hamiltonian(config);
    const bool exact = config.norm_mode == NormMode::exact_dense;
    const auto table = commutator_table(spec, 2, config.q_max, exact, config.dense_cap);
    CsvWriter csv(config, "alpha.csv", {"q", "alpha_exact", "alpha_one_norm", "bound_factorial", "bound_one_norm"});
    for (int q = table.q_min; q <= table.q_max; q++) {
        std::ostringstream ex;
        ex << std::setprecision(17);
        if (table.alpha_exact.count(q)) ex << table.alpha_exact.at(q);
        csv.row(q, ex.str(), table.alpha_one_norm.at(q), table.bound_factorial.at(q), table.bound_one_norm.at(q));
    }
    json doc;
    doc["hamiltonian"] = spec_summary(spec);
    if (mpf_applicable(config)) {
        const auto mpf = resolve_mpf(config);
        const int p0 = truncation_order(double(spec.n_sites()), config.eps);
        const auto mu_table =
            commutator_table(spec, config.p + 1, std::max(config.p + 1, p0), exact, config.dense_cap);
        const auto mu = mu_truncated(mu_table, config.p, mpf.m, p0);
        doc["mu"] = {{"value", mu.value}, {"q", mu.q},        {"n", mu.n},  {"converged", mu.converged},
                     {"empty", mu.empty}, {"p0", p0},         {"m", mpf.m}, {"source", exact ? "exact" : "one-norm"}};
        log << "mu = " << mu.value << " (witness q=" << mu.q << ", n=" << mu.n << ")"
            << (mu.converged ? "" : ", not converged in n") << '\n';
    }
    write_json(config, "alpha.json", doc);
    return kPass;
}

}  // namespace mpfkit::cli
