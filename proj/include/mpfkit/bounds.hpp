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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mpfkit/hamiltonian.hpp"

namespace mpfkit {

/// ceil(ln(3N/eps)); values within 1e-9 of an integer are not rounded up.
/// Requires 0 < eps < 3N.
int truncation_order(double n, double eps);

/// 1 / (8 e^3 c_p p0(N,eps) k g)
double bch_time_condition(double n, double eps, int c_p, double k, double g);

/// min(bch_time_condition, 1/(2 c_p mu)); mu = 0 drops the second term.
double mpf_time_condition(double n, double eps, int c_p, double k, double g, double mu);

struct ErrorBound {
    double value = 0;
    double tau_max = 0;
    bool admissible = false;
};

/// 2 e^{1/2} ||c||_1 (c_p mu tau)^{m+1} + ||c||_1 ||k||_1 eps, with the time
/// condition tau <= tau_max reported in `admissible`.
ErrorBound mpf_error_bound(
    double tau, double c_norm, double k_norm, int c_p, double mu, int m, double eps, double tau_max);

/// 4 max((p+1) N^{1/(p+1)}, e^3 p0(N,eps)) k g
double mu_closed_form_bound(double n, double eps, int p, double k, double g);

struct SupCandidateRow {
    int q = 0;
    double from_factorial_bound = 0;
    double from_one_norm_bound = 0;
    /// From exact alpha_com,q when it was computed.
    std::optional<double> from_exact;
};

/// (alpha_com,q)^{1/q} over q_lo..q_hi for the q-wise step condition
/// alpha_com,q tau^q < 1, using each alpha source.
std::vector<SupCandidateRow> step_condition_candidates(
    const HamiltonianSpec &spec, int q_lo, int q_hi, bool with_exact, std::size_t dense_cap = 12);

/// ceil(ln(N g t / eps)); requires N g t > eps.
int select_m(double n, double g, double t, double eps);

struct CostInputs {
    double n = 4;
    double k = 2;
    double g = 1;
    double t = 1;
    double eps = 1e-3;
    int p = 2;
    int c_p = 2;
    int m = 4;
    double c_norm = 1;
    double k_norm = 1;
};

struct TrotterNumber {
    double r1 = 0;
    double r2 = 0;
    std::uint64_t r = 0;
};

TrotterNumber trotter_number(const CostInputs &in);

struct StepConditionCheck {
    double eps_step = 0;
    int p0_step = 0;
    double lhs_first = 0;
    double lhs_second = 0;
    double rhs = 0;
    bool first_holds = false;
    bool second_holds = false;
    /// t/r against min(bch time condition, 1/(2 c_p mu)) with mu from the closed form.
    double tau = 0;
    double tau_max = 0;
    bool time_condition_holds = false;
    double exponential_factor = 0;
};

/// Substitutes r back into both per-step inequalities and the time condition.
StepConditionCheck check_trotter_number(const CostInputs &in, std::uint64_t r);

/// x_a = 5^{1+1/m} a^{-1/m} ln^{1+1/m}(1/a) for a in (0, 1/5].
double log_ratio_threshold(double a, int m);
/// ln of (ln x + 1)^{m+1} / x^m.
double log_ratio_log_value(double x, int m);
/// (ln x_a + 1)^{m+1} / x_a^m <= a, compared in log space.
bool log_ratio_inequality_holds(double a, int m);

struct QueryComplexity {
    double queries = 0;
    std::string scaling;
    std::string prior_scaling;
};

QueryComplexity query_complexity(const CostInputs &in, std::uint64_t r);

enum class RangeClass { finite, long_range };
RangeClass parse_range_class(const std::string &text);

struct Table1Row {
    std::string algorithm;
    /// Evaluated dominant term, constants dropped.
    double value = 0;
    std::string expression;
    /// Factor kept symbolic; it carries no known constants.
    std::string symbolic_factor;
};

struct Table1Inputs {
    double n = 4;
    double g = 1;
    double t = 1;
    double eps = 1e-3;
    double k = 2;
    int p = 2;
    double nu = 0;
    double d = 1;
    RangeClass range = RangeClass::finite;
};

std::vector<Table1Row> table1_costs(const Table1Inputs &in);

struct BoundReport {
    CostInputs inputs;
    std::size_t gamma_count = 0;
    std::size_t J = 0;
    int p0 = 0;
    double tau_max_bch = 0;
    double tau_max_mpf = 0;
    double mu_value = 0;
    std::string mu_source;
    double mu_closed_form = 0;
    TrotterNumber r;
    int m_selected = 0;
    StepConditionCheck step_check;
    QueryComplexity queries;
    std::vector<Table1Row> table1;

    nlohmann::json to_json() const;
};

/// Formula-only report; mu comes from the closed-form bound.  p0 and the
/// time conditions use eps_step = eps / (4 ||c||_1 ||k||_1 r).
BoundReport bound_report(const CostInputs &in, std::size_t gamma_count = 0, std::size_t J = 0);

nlohmann::json to_json(const Table1Row &row);
std::string table1_csv(const std::vector<Table1Row> &rows);

}  // namespace mpfkit
