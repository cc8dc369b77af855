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

#include "mpfkit/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "mpfkit/commutators.hpp"

namespace mpfkit {

namespace {

constexpr double kE = std::numbers::e;

int ceil_with_tolerance(double x) {
    const double nearest = std::round(x);
    if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x))) {
        return int(nearest);
    }
    return int(std::ceil(x));
}

void require_positive(double value, const char *name) {
    if (!(value > 0) || !std::isfinite(value)) {
        throw std::invalid_argument(std::string(name) + " must be positive and finite");
    }
}

void validate(const CostInputs &in) {
    require_positive(in.n, "N");
    require_positive(in.k, "k");
    require_positive(in.g, "g");
    require_positive(in.t, "t");
    require_positive(in.eps, "eps");
    require_positive(in.c_norm, "||c||_1");
    require_positive(in.k_norm, "||k||_1");
    if (in.p < 1 || in.c_p < 1 || in.m < 1) {
        throw std::invalid_argument("p, c_p and m must be at least 1");
    }
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

int truncation_order(double n, double eps) {
    require_positive(n, "N");
    if (!(eps > 0) || !(eps < 3 * n)) {
        throw std::invalid_argument("truncation order needs 0 < eps < 3N, got eps = " + fmt(eps));
    }
    return ceil_with_tolerance(std::log(3 * n / eps));
}

double bch_time_condition(double n, double eps, int c_p, double k, double g) {
    require_positive(g, "g");
    require_positive(k, "k");
    return 1.0 / (8 * std::pow(kE, 3) * c_p * truncation_order(n, eps) * k * g);
}

double mpf_time_condition(double n, double eps, int c_p, double k, double g, double mu) {
    const double bch = bch_time_condition(n, eps, c_p, k, g);
    if (mu <= 0) {
        return bch;
    }
    return std::min(bch, 1.0 / (2 * c_p * mu));
}

ErrorBound mpf_error_bound(
    double tau, double c_norm, double k_norm, int c_p, double mu, int m, double eps, double tau_max) {
    ErrorBound out;
    out.tau_max = tau_max;
    out.admissible = std::abs(tau) <= tau_max;
    out.value = 2 * std::sqrt(kE) * c_norm * std::pow(c_p * mu * std::abs(tau), m + 1) + c_norm * k_norm * eps;
    return out;
}

double mu_closed_form_bound(double n, double eps, int p, double k, double g) {
    const double a = (p + 1) * std::pow(n, 1.0 / (p + 1));
    const double b = std::pow(kE, 3) * truncation_order(n, eps);
    return 4 * std::max(a, b) * k * g;
}

std::vector<SupCandidateRow> step_condition_candidates(
    const HamiltonianSpec &spec, int q_lo, int q_hi, bool with_exact, std::size_t dense_cap) {
    if (q_lo < 2 || q_hi < q_lo) {
        throw std::invalid_argument("candidate window needs 2 <= q_lo <= q_hi");
    }
    std::vector<SupCandidateRow> rows;
    for (int q = q_lo; q <= q_hi; q++) {
        SupCandidateRow row;
        row.q = q;
        // log space: (q-1)! overflows long before the window gets interesting
        const double kg2 = 2.0 * double(spec.locality()) * spec.extensiveness();
        const double n = double(spec.n_sites());
        const double g = spec.extensiveness();
        row.from_factorial_bound =
            g > 0 ? std::exp((std::lgamma(q) + (q - 1) * std::log(kg2) + std::log(n * g)) / q) : 0.0;
        row.from_one_norm_bound = 2 * spec.total_one_norm();
        if (with_exact) {
            row.from_exact = std::pow(alpha_com(spec, q, NormMode::exact_dense, dense_cap), 1.0 / q);
        }
        rows.push_back(row);
    }
    return rows;
}

int select_m(double n, double g, double t, double eps) {
    require_positive(n, "N");
    require_positive(g, "g");
    require_positive(t, "t");
    require_positive(eps, "eps");
    const double ratio = n * g * t / eps;
    if (!(ratio > 1)) {
        throw std::invalid_argument("select_m needs N g t > eps");
    }
    return std::max(1, ceil_with_tolerance(std::log(ratio)));
}

TrotterNumber trotter_number(const CostInputs &in) {
    validate(in);
    const double cp = in.c_p;
    const double m = in.m;
    const double np = std::pow(in.n, 1.0 / (in.p + 1));
    const double kgt = in.k * in.g * in.t;
    TrotterNumber out;
    out.r1 = 8 * cp * (in.p + 1) * np * kgt * std::pow(32 * cp * (in.p + 1) * in.c_norm * np * kgt / in.eps, 1 / m);
    const double e3 = std::pow(kE, 3);
    const double log_arg = (8 * e3 * cp * kgt) * (12 * in.c_norm * in.k_norm * in.n) / in.eps;
    out.r2 = 40 * std::pow(kE, 4) * cp * kgt * (m + 1) * std::pow(160 * e3 * in.c_norm * cp * kgt / in.eps, 1 / m) *
             std::pow(std::log(log_arg), 1 + 1 / m);
    out.r = std::uint64_t(std::ceil(std::max(out.r1, out.r2)));
    return out;
}

StepConditionCheck check_trotter_number(const CostInputs &in, std::uint64_t r) {
    validate(in);
    if (r == 0) {
        throw std::invalid_argument("Trotter number must be positive");
    }
    StepConditionCheck out;
    const double rr = double(r);
    const double cp = in.c_p;
    const double np = std::pow(in.n, 1.0 / (in.p + 1));
    const double kg = in.k * in.g;
    out.eps_step = in.eps / (4 * in.c_norm * in.k_norm * rr);
    out.p0_step = truncation_order(in.n, out.eps_step);
    out.tau = in.t / rr;
    const double prefactor = 2 * std::pow(2.0, in.m) * in.c_norm;
    const double additive = in.c_norm * in.k_norm * out.eps_step;
    out.rhs = in.eps / (2 * rr);
    out.lhs_first = prefactor * std::pow(4 * cp * (in.p + 1) * np * kg * out.tau, in.m + 1) + additive;
    out.lhs_second =
        prefactor * std::pow(4 * std::pow(kE, 3) * cp * out.p0_step * kg * out.tau, in.m + 1) + additive;
    const double slack = 1 + 1e-12;
    out.first_holds = out.lhs_first <= out.rhs * slack;
    out.second_holds = out.lhs_second <= out.rhs * slack;

    const double mu = mu_closed_form_bound(in.n, out.eps_step, in.p, in.k, in.g);
    out.tau_max = mpf_time_condition(in.n, out.eps_step, in.c_p, in.k, in.g, mu);
    out.time_condition_holds = out.tau <= out.tau_max * slack;
    const int m_sel = select_m(in.n, in.g, in.t, in.eps);
    out.exponential_factor = std::exp(-std::log(4 * in.c_norm * rr / in.eps) / (m_sel + 1));
    return out;
}

double log_ratio_threshold(double a, int m) {
    if (!(a > 0) || a > 0.2 || m < 1) {
        throw std::invalid_argument("threshold needs a in (0, 1/5] and m >= 1");
    }
    const double inv_m = 1.0 / m;
    return std::exp((1 + inv_m) * std::log(5.0) - inv_m * std::log(a) + (1 + inv_m) * std::log(std::log(1 / a)));
}

double log_ratio_log_value(double x, int m) {
    return (m + 1) * std::log(std::log(x) + 1) - m * std::log(x);
}

bool log_ratio_inequality_holds(double a, int m) {
    const double x = log_ratio_threshold(a, m);
    return log_ratio_log_value(x, m) <= std::log(a) + 1e-12;
}

QueryComplexity query_complexity(const CostInputs &in, std::uint64_t r) {
    validate(in);
    QueryComplexity out;
    out.queries = in.c_norm * in.k_norm * double(r);
    const std::string exponent = "1/" + std::to_string(in.p + 1);
    out.scaling = "O({N^(" + exponent + ") + log^2(Ngt/eps)} g t polylog(Ngt/eps))";
    out.prior_scaling = "O(N^(" + exponent + ") g t polylog(Ngt/eps))";
    return out;
}

RangeClass parse_range_class(const std::string &text) {
    if (text == "finite" || text == "finite-range") {
        return RangeClass::finite;
    }
    if (text == "long" || text == "long-range") {
        return RangeClass::long_range;
    }
    throw std::invalid_argument("range class must be \"finite\" or \"long-range\", got \"" + text + "\"");
}

std::vector<Table1Row> table1_costs(const Table1Inputs &in) {
    require_positive(in.n, "N");
    require_positive(in.g, "g");
    require_positive(in.t, "t");
    require_positive(in.eps, "eps");
    if (in.p < 1) {
        throw std::invalid_argument("p must be at least 1");
    }
    const bool finite = in.range == RangeClass::finite;
    const double ngt = in.n * in.g * in.t;
    const double big_l = std::log(ngt / in.eps);
    const double oracle = finite ? in.n : std::pow(in.n, in.k);
    const std::string oracle_text = finite ? "N" : "N^k";
    std::vector<Table1Row> rows;

    rows.push_back(
        {"Trotter", oracle * in.g * in.t * std::pow(ngt / in.eps, 1.0 / in.p),
         oracle_text + " g t (Ngt/eps)^(1/p)", ""});
    rows.push_back(
        {"LCU", oracle * in.n * in.g * in.t * big_l / std::log(big_l),
         (finite ? std::string("N^2") : std::string("N^(k+1)")) + " g t L/log L, L = log(Ngt/eps)", ""});
    const double inv_eps_log = std::log(1 / in.eps);
    rows.push_back(
        {"QSVT", oracle * (ngt + inv_eps_log / std::log(inv_eps_log)),
         oracle_text + " (Ngt + log(1/eps)/log log(1/eps))", ""});
    rows.push_back(
        {"MPF", oracle * (std::pow(in.n, 1.0 / (in.p + 1)) + big_l * big_l) * in.g * in.t,
         oracle_text + " {N^(1/(p+1)) + log^2(Ngt/eps)} g t", "polylog(Ngt/eps)"});
    if (finite) {
        rows.push_back({"HHKL", ngt, "N g t", "polylog(Ngt/eps)"});
    } else if (in.nu > 2 * in.d) {
        rows.push_back(
            {"HHKL", ngt * std::pow(ngt / in.eps, 2 * in.d / (in.nu - in.d)), "N g t (Ngt/eps)^(2d/(nu-d))", ""});
    }
    return rows;
}

nlohmann::json to_json(const Table1Row &row) {
    return {{"algorithm", row.algorithm},
            {"value", row.value},
            {"expression", row.expression},
            {"symbolic_factor", row.symbolic_factor}};
}

std::string table1_csv(const std::vector<Table1Row> &rows) {
    std::ostringstream os;
    os.precision(12);
    os << "algorithm,value,expression,symbolic_factor\n";
    for (const auto &row : rows) {
        os << row.algorithm << ',' << row.value << ",\"" << row.expression << "\",\"" << row.symbolic_factor
           << "\"\n";
    }
    return os.str();
}

BoundReport bound_report(const CostInputs &in, std::size_t gamma_count, std::size_t J) {
    validate(in);
    BoundReport report;
    report.inputs = in;
    report.gamma_count = gamma_count;
    report.J = J;
    report.r = trotter_number(in);
    report.m_selected = select_m(in.n, in.g, in.t, in.eps);
    report.step_check = check_trotter_number(in, report.r.r);
    const double eps_step = report.step_check.eps_step;
    report.p0 = truncation_order(in.n, eps_step);
    report.tau_max_bch = bch_time_condition(in.n, eps_step, in.c_p, in.k, in.g);
    report.mu_closed_form = mu_closed_form_bound(in.n, eps_step, in.p, in.k, in.g);
    report.mu_value = report.mu_closed_form;
    report.mu_source = "closed-form";
    report.tau_max_mpf = mpf_time_condition(in.n, eps_step, in.c_p, in.k, in.g, report.mu_value);
    report.queries = query_complexity(in, report.r.r);
    Table1Inputs t1;
    t1.n = in.n;
    t1.g = in.g;
    t1.t = in.t;
    t1.eps = in.eps;
    t1.k = in.k;
    t1.p = in.p;
    report.table1 = table1_costs(t1);
    return report;
}

nlohmann::json BoundReport::to_json() const {
    nlohmann::json doc;
    doc["inputs"] = {{"N", inputs.n},     {"k", inputs.k},           {"g", inputs.g},          {"t", inputs.t},
                     {"eps", inputs.eps}, {"p", inputs.p},           {"c_p", inputs.c_p},      {"m", inputs.m},
                     {"J", J},            {"gamma", gamma_count},    {"c_norm", inputs.c_norm}, {"k_norm", inputs.k_norm}};
    doc["p0"] = p0;
    doc["tau_max_bch"] = tau_max_bch;
    doc["tau_max_mpf"] = tau_max_mpf;
    doc["mu_value"] = mu_value;
    doc["mu_source"] = mu_source;
    doc["mu_closed_form_bound"] = mu_closed_form;
    doc["r1"] = r.r1;
    doc["r2"] = r.r2;
    doc["r"] = r.r;
    doc["m_selected"] = m_selected;
    doc["eps_step"] = step_check.eps_step;
    doc["step_conditions"] = {
        {"p0_step", step_check.p0_step},
        {"lhs_first", step_check.lhs_first},
        {"lhs_second", step_check.lhs_second},
        {"rhs", step_check.rhs},
        {"first_holds", step_check.first_holds},
        {"second_holds", step_check.second_holds},
        {"tau", step_check.tau},
        {"tau_max", step_check.tau_max},
        {"time_condition_holds", step_check.time_condition_holds},
        {"exponential_factor", step_check.exponential_factor}};
    doc["query_count"] = queries.queries;
    doc["scaling"] = queries.scaling;
    doc["prior_scaling"] = queries.prior_scaling;
    doc["table1"] = nlohmann::json::array();
    for (const auto &row : table1) {
        doc["table1"].push_back(mpfkit::to_json(row));
    }
    return doc;
}

}  // namespace mpfkit
