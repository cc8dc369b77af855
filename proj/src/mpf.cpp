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

#include "mpfkit/mpf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mpfkit {

namespace {

void validate_k(const std::vector<int> &k) {
    if (k.empty()) {
        throw std::invalid_argument("k-list must not be empty");
    }
    std::set<int> seen;
    for (int v : k) {
        if (v < 1) {
            throw std::invalid_argument("k-list entries must be positive integers");
        }
        if (!seen.insert(v).second) {
            throw std::invalid_argument("duplicate k value " + std::to_string(v));
        }
    }
}

}  // namespace

std::vector<double> richardson_coefficients(const std::vector<int> &k) {
    validate_k(k);
    std::vector<double> c(k.size(), 1.0);
    for (std::size_t j = 0; j < k.size(); j++) {
        const double kj2 = double(k[j]) * k[j];
        for (std::size_t i = 0; i < k.size(); i++) {
            if (i != j) {
                c[j] *= kj2 / (kj2 - double(k[i]) * k[i]);
            }
        }
    }
    return c;
}

std::vector<double> richardson_coefficients_linear(const std::vector<int> &k) {
    validate_k(k);
    if (k.size() > kMaxLinearSolveJ) {
        throw std::invalid_argument("linear Richardson solve is limited to J <= 12");
    }
    // Bjorck-Pereyra solve of sum_j c_j x_j^i = delta_i0 with x_j = k_j^-2,
    // nodes taken in increasing order
    const std::size_t J = k.size();
    std::vector<std::size_t> order(J);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return k[a] > k[b]; });
    std::vector<long double> x(J), z(J, 0.0L);
    for (std::size_t j = 0; j < J; j++) {
        const long double kj = k[order[j]];
        x[j] = 1.0L / (kj * kj);
    }
    if (std::adjacent_find(x.begin(), x.end()) != x.end()) {
        throw std::invalid_argument("Richardson system is singular");
    }
    z[0] = 1.0L;
    const std::size_t n = J - 1;
    for (std::size_t s = 0; s < n; s++) {
        for (std::size_t i = n; i > s; i--) {
            z[i] -= x[s] * z[i - 1];
        }
    }
    for (std::size_t s = n; s-- > 0;) {
        for (std::size_t i = s + 1; i <= n; i++) {
            z[i] /= x[i] - x[i - s - 1];
        }
        for (std::size_t i = s; i < n; i++) {
            z[i] -= z[i + 1];
        }
    }
    std::vector<double> c(J);
    for (std::size_t j = 0; j < J; j++) {
        c[order[j]] = double(z[j]);
    }
    return c;
}

double richardson_residual(const std::vector<int> &k, const std::vector<double> &c) {
    if (k.size() != c.size()) {
        throw std::invalid_argument("k and c lengths differ");
    }
    double worst = 0;
    for (std::size_t i = 0; i < k.size(); i++) {
        double row = i == 0 ? -1.0 : 0.0;
        for (std::size_t j = 0; j < k.size(); j++) {
            row += c[j] * std::pow(double(k[j]), -2.0 * double(i));
        }
        worst = std::max(worst, std::abs(row));
    }
    return worst;
}

MpfSpec make_mpf(int p, std::vector<int> k) {
    if (p < 2 || p % 2 != 0) {
        throw std::invalid_argument("Richardson extrapolation needs an even base order");
    }
    validate_k(k);
    std::sort(k.begin(), k.end());
    MpfSpec spec;
    spec.p = p;
    spec.c = richardson_coefficients(k);
    spec.k = std::move(k);
    spec.m = int(2 * spec.J());
    spec.k_norm = std::accumulate(spec.k.begin(), spec.k.end(), 0.0);
    spec.c_norm = 0;
    for (double v : spec.c) {
        spec.c_norm += std::abs(v);
    }
    return spec;
}

MpfSpec make_mpf_linear_scheme(int p, std::size_t J) {
    std::vector<int> k(J);
    std::iota(k.begin(), k.end(), 1);
    return make_mpf(p, std::move(k));
}

ConditionRow condition_row(const MpfSpec &spec) {
    return {spec.J(), spec.k_norm, spec.c_norm, richardson_residual(spec.k, spec.c)};
}

ConditionReport condition_report(
    const std::function<std::vector<int>(std::size_t)> &scheme, const std::vector<std::size_t> &js) {
    ConditionReport report;
    std::vector<double> log_j, loglog_j, log_c, log_k;
    for (auto J : js) {
        auto spec = make_mpf(2, scheme(J));
        report.rows.push_back(condition_row(spec));
        if (J >= 2) {
            log_j.push_back(std::log(double(J)));
            loglog_j.push_back(std::log(std::log(double(J))));
            log_c.push_back(std::log(spec.c_norm));
            log_k.push_back(std::log(spec.k_norm));
        }
    }
    if (log_j.size() >= 2) {
        auto power = fit_linear(log_j, log_c);
        report.c_growth_exponent = power.slope;
        report.k_growth_exponent = fit_linear(log_j, log_k).slope;
        auto polylog = fit_linear(loglog_j, log_c);
        report.c_polylog_consistent = polylog.rms_residual <= power.rms_residual;
    }
    return report;
}

DenseOperator evaluate_mpf(const MpfSpec &spec, const ProductFormulaPlan &plan, const DenseModel &model, double tau) {
    if (!plan.symmetric || plan.order % 2 != 0) {
        throw std::invalid_argument("MPF evaluation needs a symmetric plan of even order");
    }
    if (plan.order != spec.p) {
        throw std::invalid_argument("MPF base order does not match the plan order");
    }
    DenseOperator out = DenseOperator::Zero(model.dim(), model.dim());
    for (std::size_t j = 0; j < spec.J(); j++) {
        const auto step = model.evaluate(plan, tau / spec.k[j]);
        out += spec.c[j] * matrix_power(step, std::uint64_t(spec.k[j]));
    }
    return out;
}

double mpf_error(const MpfSpec &spec, const ProductFormulaPlan &plan, const DenseModel &model, double tau) {
    return spectral_norm(model.exact(tau) - evaluate_mpf(spec, plan, model, tau));
}

double mpf_long_time_error(
    const MpfSpec &spec, const ProductFormulaPlan &plan, const DenseModel &model, double t, std::uint64_t r) {
    if (r == 0) {
        throw std::invalid_argument("step count must be positive");
    }
    const auto step = evaluate_mpf(spec, plan, model, t / double(r));
    return spectral_norm(model.exact(t) - matrix_power(step, r));
}

}  // namespace mpfkit
