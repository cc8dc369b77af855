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

// Acceptance gate: runs every criterion at its stated tolerance and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mpfkit/bch.hpp"
#include "mpfkit/bounds.hpp"
#include "mpfkit/commutators.hpp"
#include "mpfkit/dense.hpp"
#include "mpfkit/fit.hpp"
#include "mpfkit/hamiltonian.hpp"
#include "mpfkit/mpf.hpp"
#include "mpfkit/trotter.hpp"
#include "oracle/oracle.hpp"

using namespace mpfkit;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            if (pass) {
                detail << "first violation: " << what << "; ";
            }
            pass = false;
        }
    }
};

HamiltonianSpec heisenberg4() {
    return heisenberg_chain(4, 1.0, 0.0);
}

// 1. Pauli products and commutators against Kronecker matrices.
void pauli_oracle(Outcome &out) {
    double worst = 0;
    std::size_t pairs = 0;
    for (std::size_t n = 1; n <= 3; n++) {
        auto strings = oracle::all_strings(n);
        std::vector<DenseOperator> dense;
        for (const auto &s : strings) {
            dense.push_back(oracle::kron_matrix(s));
        }
        for (std::size_t a = 0; a < strings.size(); a++) {
            auto pa = PauliSum::from_string(PauliString::parse(strings[a]));
            for (std::size_t b = 0; b < strings.size(); b++) {
                auto pb = PauliSum::from_string(PauliString::parse(strings[b]));
                const DenseOperator ab = dense[a] * dense[b];
                worst = std::max(worst, oracle::max_abs_diff(oracle::kron_matrix(pa * pb), ab));
                worst = std::max(
                    worst, oracle::max_abs_diff(oracle::kron_matrix(commutator(pa, pb)), ab - dense[b] * dense[a]));
                pairs++;
            }
        }
    }
    out.detail << pairs << " pairs, max deviation " << worst;
    out.require(worst <= 1e-12, "deviation above 1e-12");
}

// 2. Product-formula order condition and commutator-scaled error.
void trotter_order(Outcome &out) {
    auto spec = heisenberg4();
    DenseModel model(spec);
    const auto grid = geometric_grid(1e-3, 1e-1, 12);
    for (int p : {1, 2, 4}) {
        auto plan = build_plan(spec, p);
        std::vector<double> errors;
        for (double tau : grid) {
            errors.push_back(trotter_error(plan, model, tau));
        }
        auto fit = fit_loglog(grid, errors);
        const double alpha = alpha_com(spec, p + 1, NormMode::exact_dense);
        // C fitted on the small-tau half, then checked over the whole grid
        double c = 0;
        for (std::size_t i = 0; i < grid.size() / 2; i++) {
            c = std::max(c, errors[i] / (alpha * std::pow(grid[i], p + 1)));
        }
        std::size_t over = 0;
        for (std::size_t i = 0; i < grid.size(); i++) {
            if (errors[i] > c * alpha * std::pow(grid[i], p + 1) * (1 + 1e-9)) {
                over++;
            }
        }
        out.detail << "p=" << p << " slope " << fit.slope << " C " << c << "; ";
        out.require(!fit.exact && fit.slope >= p + 0.8, "slope below p+0.8 at p=" + std::to_string(p));
        out.require(over == 0, "error above C alpha tau^(p+1) at p=" + std::to_string(p));
    }
}

// 3. Nested-commutator norms against both bounds, and the inserted-operator inequality.
void commutator_bounds(Outcome &out) {
    std::size_t checks = 0;
    std::mt19937_64 rng(3);
    for (std::size_t n = 3; n <= 6; n++) {
        auto spec = heisenberg_chain(n, 1.0, 0.5);
        for (int q = 2; q <= 5; q++) {
            const double exact = alpha_com(spec, q, NormMode::exact_dense);
            out.require(exact <= alpha_bound_factorial(spec, q) * (1 + 1e-12), "factorial bound");
            out.require(exact <= alpha_bound_one_norm(spec, q) * (1 + 1e-12), "one-norm bound");
            checks += 2;
        }
        auto op = oracle::random_sum(rng, n, 4, true);
        for (int q = 1; q <= 4; q++) {
            for (int pos = 1; pos <= q; pos++) {
                auto report = inserted_commutator_check(spec, op, q, pos);
                out.require(report.holds, "inserted operator at q=" + std::to_string(q));
                checks++;
            }
        }
    }
    out.detail << checks << " inequalities";
}

std::vector<LogSample> trotter_samples(const ProductFormulaPlan &plan, const DenseModel &model, double h, int count) {
    std::vector<LogSample> samples;
    for (int s = 0; s < count; s++) {
        const double tau = h * std::cos(std::numbers::pi * (s + 0.5) / count);
        samples.push_back({tau, model.evaluate(plan, tau)});
    }
    return samples;
}

// 4. BCH coefficients.
void bch_coefficients(Outcome &out) {
    auto spec = heisenberg_chain(4, 1.0, 0.3);
    double worst_vanish = 0;
    double worst_herm = 0;
    for (int p : {1, 2, 4}) {
        auto plan = build_plan(spec, p);
        auto table = commutator_table(spec, 2, 5, true);
        for (int q = 2; q <= 5; q++) {
            auto c = compute_phi(plan, spec, q);
            if (q <= p) {
                worst_vanish = std::max(worst_vanish, *c.norm_exact);
            }
            worst_herm = std::max(worst_herm, max_coefficient_distance(c.op, c.op.adjoint()));
            const double bound = std::pow(plan.c_p, q) * table.alpha_exact.at(q) / (q * q);
            out.require(*c.norm_exact <= bound * (1 + 1e-12), "norm above c_p^q alpha/q^2");
            out.require(c.locality <= std::size_t(q) * spec.locality(), "locality above qk");
            out.require(c.extensiveness <= phi_extensiveness_bound(plan, spec, q), "extensiveness bound");
        }
    }
    out.require(worst_vanish <= 1e-10, "Phi_q nonzero for q <= p");
    out.require(worst_herm <= 1e-10, "Phi_q not Hermitian");

    double worst_log = 0;
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 4; trial++) {
        auto random = oracle::random_spec(rng, 2, 3);
        DenseModel model(random);
        for (int p : {1, 2}) {
            auto plan = build_plan(random, p);
            auto samples = trotter_samples(plan, model, 0.3 / std::max(1.0, random.total_one_norm()), 24);
            auto fit = log_series_fit(samples, 4, 12);
            for (int q = 2; q <= 4; q++) {
                worst_log = std::max(
                    worst_log,
                    max_coefficient_distance(fit.coefficients[std::size_t(q - 1)], phi_operator(plan, random, q)));
            }
        }
    }
    out.require(worst_log <= 1e-6, "matrix-log disagreement");
    out.detail << "vanishing " << worst_vanish << ", hermiticity " << worst_herm << ", matrix-log " << worst_log;
}

// 5. Truncated BCH at desk scale.
void truncated_bch(Outcome &out) {
    auto spec = heisenberg4();
    DenseModel model(spec);
    const double eps = 0.3;
    const auto grid = geometric_grid(5e-3, 5e-2, 12);
    for (int p : {1, 2}) {
        auto plan = build_plan(spec, p);
        auto report = verify_truncation(plan, spec, eps);
        out.require(report.testable && report.p0 == 4, "p0 != 4");
        out.require(report.holds, "truncation error above eps at p=" + std::to_string(p));
        TruncatedBch truncated(plan, spec, report.p0);
        std::vector<double> errors;
        for (double tau : grid) {
            errors.push_back(spectral_norm(model.evaluate(plan, tau) - truncated.unitary(tau)));
        }
        auto fit = fit_loglog(grid, errors);
        out.require(fit.slope >= report.p0 + 0.8, "truncation slope");
        out.detail << "p=" << p << " margin " << report.margin << " slope " << fit.slope << "; ";
    }
}

// 6. Multi-product order condition and coefficients.
void mpf_order(Outcome &out) {
    auto spec = heisenberg4();
    DenseModel model(spec);
    auto plan = build_plan(spec, 2);
    const auto grid = geometric_grid(1e-2, 3e-1, 12);
    for (std::size_t J = 1; J <= 3; J++) {
        auto mpf = make_mpf_linear_scheme(2, J);
        std::vector<double> errors;
        for (double tau : grid) {
            errors.push_back(mpf_error(mpf, plan, model, tau));
        }
        auto fit = fit_loglog(grid, errors);
        out.require(fit.slope >= 2.0 * J + 0.8, "MPF slope at J=" + std::to_string(J));
        out.detail << "J=" << J << " slope " << fit.slope << "; ";
    }
    double worst_residual = 0;
    for (std::size_t J = 1; J <= 12; J++) {
        auto mpf = make_mpf_linear_scheme(2, J);
        worst_residual = std::max(worst_residual, richardson_residual(mpf.k, mpf.c));
    }
    out.require(worst_residual <= 1e-10, "Richardson residual");
    auto pair = richardson_coefficients({1, 2});
    out.require(
        std::abs(pair[0] + 1.0 / 3) <= 1e-12 && std::abs(pair[1] - 4.0 / 3) <= 1e-12, "k=(1,2) coefficients");
    out.detail << "residual " << worst_residual;
}

// 7. MPF error bound at admissible steps with enumerated mu.
void mpf_bound(Outcome &out) {
    auto spec = heisenberg4();
    DenseModel model(spec);
    auto plan = build_plan(spec, 2);
    const double eps = 0.3;
    const int p0 = truncation_order(4, eps);
    auto table = commutator_table(spec, 3, p0, true);
    const double k = double(spec.locality());
    const double g = spec.extensiveness();
    for (std::size_t J : {1u, 2u}) {
        auto mpf = make_mpf_linear_scheme(2, J);
        auto mu = mu_truncated(table, 2, mpf.m, p0);
        const double tau_max = mpf_time_condition(4, eps, plan.c_p, k, g, mu.value);
        double worst = 0;
        for (double tau : {tau_max, tau_max / 2, tau_max / 4, tau_max / 10}) {
            auto bound = mpf_error_bound(tau, mpf.c_norm, mpf.k_norm, plan.c_p, mu.value, mpf.m, eps, tau_max);
            const double err = mpf_error(mpf, plan, model, tau);
            out.require(bound.admissible && err <= bound.value, "MPF error above bound at J=" + std::to_string(J));
            worst = std::max(worst, err / bound.value);
        }
        const double closed_form = mu_closed_form_bound(4, eps, 2, k, g);
        out.require(mu.value <= closed_form, "mu above closed form");
        out.detail << "J=" << J << " mu " << mu.value << " (closed form " << closed_form << ") worst error/bound " << worst
                   << "; ";
    }
}

CostInputs sweep_inputs(double n, double t, double eps, std::size_t J) {
    auto mpf = make_mpf_linear_scheme(2, J);
    CostInputs in;
    in.n = n;
    in.k = 2;
    in.g = 6;
    in.t = t;
    in.eps = eps;
    in.p = 2;
    in.c_p = 2;
    in.m = mpf.m;
    in.c_norm = mpf.c_norm;
    in.k_norm = mpf.k_norm;
    return in;
}

// 8. Trotter-number self-consistency.
void trotter_number_sweep(Outcome &out) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> log_n(std::log(4.0), std::log(4096.0));
    std::uniform_real_distribution<double> log_t(std::log(0.1), std::log(100.0));
    std::uniform_real_distribution<double> log_eps(std::log(1e-8), std::log(1e-2));
    std::uniform_int_distribution<int> jdist(1, 6);
    for (int point = 0; point < 100; point++) {
        auto in = sweep_inputs(
            std::round(std::exp(log_n(rng))), std::exp(log_t(rng)), std::exp(log_eps(rng)), std::size_t(jdist(rng)));
        auto r = trotter_number(in);
        auto check = check_trotter_number(in, r.r);
        out.require(check.first_holds, "first step inequality");
        out.require(check.second_holds, "second step inequality");
        out.require(check.time_condition_holds, "time condition");
    }
    std::uniform_real_distribution<double> log_a(std::log(1e-30), std::log(0.2));
    std::size_t log_checks = 0;
    for (int m = 1; m <= 12; m++) {
        for (int s = 0; s < 50; s++) {
            const double a = s == 0 ? 0.2 : std::exp(log_a(rng));
            out.require(log_ratio_inequality_holds(a, m), "log-ratio inequality");
            log_checks++;
        }
    }
    out.detail << "100 sweep points, " << log_checks << " log-ratio samples";
}

// 9. Long-time simulation with the reported Trotter number.
void long_time(Outcome &out) {
    auto spec = heisenberg4();
    DenseModel model(spec);
    auto plan = build_plan(spec, 2);
    auto mpf = make_mpf_linear_scheme(2, 2);
    CostInputs in = sweep_inputs(4, 1.0, 1e-3, 2);
    in.g = spec.extensiveness();
    in.k = double(spec.locality());
    auto report = bound_report(in, spec.gamma_count(), 2);
    const double err = mpf_long_time_error(mpf, plan, model, 1.0, report.r.r);
    out.require(err <= 1e-3, "long-time error above eps");
    out.detail << "r " << report.r.r << ", error " << err;
}

// 10. Scaling exponents.
void scaling(Outcome &out) {
    const std::vector<std::size_t> sizes{64, 128, 256, 512};
    auto family = [](double nu) { return [nu](std::size_t n) { return long_range_chain(n, nu); }; };
    auto slow = g_scaling_report(family(0.5), sizes);
    out.require(std::abs(slow.loglog_slope - 0.5) <= 0.1 && slow.regime == "power", "g slope for nu < d");
    auto critical = g_scaling_report(family(1.0), sizes);
    out.require(critical.regime == "logarithmic", "g regime for nu = d");
    auto fast = g_scaling_report(family(2.0), sizes);
    out.require(std::abs(fast.loglog_slope) <= 0.1 && fast.regime == "constant", "g slope for nu > d");
    out.detail << "g slopes " << slow.loglog_slope << "/" << critical.loglog_slope << "/" << fast.loglog_slope << "; ";

    // first term dominates at large formulaic N
    std::vector<double> ns, rs;
    for (double n : {1e18, 1e19, 1e20, 1e21, 1e22}) {
        auto r = trotter_number(sweep_inputs(n, 1.0, 1e-3, 8));
        out.require(r.r1 > r.r2, "r1 not dominant");
        ns.push_back(n);
        rs.push_back(double(r.r));
    }
    auto n_fit = fit_loglog(ns, rs);
    out.require(std::abs(n_fit.slope - 1.0 / 3) <= 0.05, "r-vs-N slope");
    out.detail << "r-vs-N slope " << n_fit.slope << "; ";

    // m follows the accuracy, so the power exponent of r in 1/eps must keep falling
    std::vector<double> inv_eps, r_eps;
    for (double eps : {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
        const int m = select_m(64, 6, 1, eps);
        auto r = trotter_number(sweep_inputs(64, 1.0, eps, std::size_t((m + 1) / 2)));
        inv_eps.push_back(1 / eps);
        r_eps.push_back(double(r.r));
    }
    std::vector<double> local;
    for (std::size_t i = 0; i + 1 < inv_eps.size(); i++) {
        local.push_back(std::log(r_eps[i + 1] / r_eps[i]) / std::log(inv_eps[i + 1] / inv_eps[i]));
    }
    for (std::size_t i = 0; i + 1 < local.size(); i++) {
        out.require(local[i + 1] < local[i], "r-vs-1/eps exponent not decreasing");
    }
    std::vector<double> loglog_inv;
    for (double v : inv_eps) {
        loglog_inv.push_back(std::log(v));
    }
    auto poly = fit_loglog(loglog_inv, r_eps);
    out.detail << "local 1/eps exponents " << local.front() << " -> " << local.back() << ", polylog exponent "
               << poly.slope;
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<void(Outcome &)> run;
    };
    const std::vector<Criterion> criteria{
        {"pauli oracle equivalence", pauli_oracle},
        {"product-formula order condition", trotter_order},
        {"nested commutator bounds", commutator_bounds},
        {"BCH coefficients", bch_coefficients},
        {"truncated BCH accuracy", truncated_bch},
        {"multi-product order condition", mpf_order},
        {"multi-product error bound", mpf_bound},
        {"Trotter number self-consistency", trotter_number_sweep},
        {"long-time simulation", long_time},
        {"scaling exponents", scaling},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); i++) {
        Outcome out;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].run(out);
        } catch (const std::exception &e) {
            out.pass = false;
            out.detail << "exception: " << e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf(
            "%s %2zu %s (%.2fs): %s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, seconds,
            out.detail.str().c_str());
        failures += out.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
