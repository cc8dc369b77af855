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
#include <functional>
#include <vector>

#include "mpfkit/fit.hpp"
#include "mpfkit/trotter.hpp"

namespace mpfkit {

inline constexpr std::size_t kMaxLinearSolveJ = 12;

/// M(tau) = sum_j c_j T_p(tau / k_j)^{k_j}.
struct MpfSpec {
    int p = 2;
    std::vector<int> k;
    std::vector<double> c;
    int m = 2;
    double k_norm = 0;
    double c_norm = 0;

    std::size_t J() const noexcept {
        return k.size();
    }
};

/// c_j = prod_{i != j} k_j^2 / (k_j^2 - k_i^2).  Rejects empty, nonpositive or
/// duplicate k.
std::vector<double> richardson_coefficients(const std::vector<int> &k);
/// Same coefficients by solving the Vandermonde system
/// sum_j c_j k_j^{-2i} = delta_{i0} directly (Bjorck-Pereyra, long double).
/// Limited to J <= 12.
std::vector<double> richardson_coefficients_linear(const std::vector<int> &k);
/// Largest |row residual| of that system.
double richardson_residual(const std::vector<int> &k, const std::vector<double> &c);

/// Richardson construction with m = 2J; k is sorted ascending.
MpfSpec make_mpf(int p, std::vector<int> k);
/// k_j = j for j = 1..J.
MpfSpec make_mpf_linear_scheme(int p, std::size_t J);

struct ConditionRow {
    std::size_t J = 0;
    double k_norm = 0;
    double c_norm = 0;
    double residual = 0;
};

struct ConditionReport {
    std::vector<ConditionRow> rows;
    /// Slopes of log ||c||_1 and log ||k||_1 against log J.
    double c_growth_exponent = 0;
    double k_growth_exponent = 0;
    /// log ||c||_1 fits a*log log J + b at least as well as a power law.
    bool c_polylog_consistent = false;
};

ConditionRow condition_row(const MpfSpec &spec);
/// Sweeps J over `js` with the k-list produced by `scheme(J)`.
ConditionReport condition_report(const std::function<std::vector<int>(std::size_t)> &scheme, const std::vector<std::size_t> &js);

DenseOperator evaluate_mpf(const MpfSpec &spec, const ProductFormulaPlan &plan, const DenseModel &model, double tau);

/// ||e^{-i H tau} - M(tau)||
double mpf_error(const MpfSpec &spec, const ProductFormulaPlan &plan, const DenseModel &model, double tau);

/// ||e^{-i H t} - M(t/r)^r||, with the power taken by repeated squaring.
double mpf_long_time_error(
    const MpfSpec &spec, const ProductFormulaPlan &plan, const DenseModel &model, double t, std::uint64_t r);

}  // namespace mpfkit
