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

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "mpfkit/hamiltonian.hpp"
#include "mpfkit/pauli.hpp"

namespace mpfkit {

inline constexpr std::uint64_t kDefaultCommutatorBudget = 1'000'000;

/// alpha_com,q = sum over (gamma_1..gamma_q) of
/// ||[H_{gamma_q}, ..., [H_{gamma_2}, H_{gamma_1}]]||.
///
/// exact_dense nests dense matrices and takes spectral norms; one_norm_bound
/// nests symbolically and takes the coefficient one-norm.  Inner commutators
/// are shared across tuples with a common prefix.  Throws BudgetExceeded when
/// Gamma^q exceeds `budget`.
double alpha_com(
    const HamiltonianSpec &spec, int q, NormMode mode, std::size_t dense_cap = kDefaultDenseCap,
    std::uint64_t budget = kDefaultCommutatorBudget);

/// (q-1)! (2kg)^{q-1} N g
double alpha_bound_factorial(const HamiltonianSpec &spec, int q);
/// (2 sum_X ||h_X||)^q
double alpha_bound_one_norm(const HamiltonianSpec &spec, int q);

struct CommutatorTable {
    int q_min = 2;
    int q_max = 2;
    /// Filled only when exact norms were requested.
    std::map<int, double> alpha_exact;
    std::map<int, double> alpha_one_norm;
    std::map<int, double> bound_factorial;
    std::map<int, double> bound_one_norm;

    /// alpha_exact when present, else alpha_one_norm.
    double alpha(int q) const;
};

CommutatorTable commutator_table(
    const HamiltonianSpec &spec, int q_min, int q_max, bool with_exact, std::size_t dense_cap = kDefaultDenseCap,
    std::uint64_t budget = kDefaultCommutatorBudget);

struct InsertionReport {
    int q = 0;
    int position = 0;
    double lhs = 0;
    double bound = 0;
    bool holds = false;
};

/// Sum over gamma tuples of
/// ||[H_{gamma_q}, ..., [H_{gamma_{q'+1}}, [O, [H_{gamma_q'}, ..., [H_{gamma_2}, H_{gamma_1}]]]]]||
/// against q! (2kg)^q ||O||.  `position` is q' in 1..q.
InsertionReport inserted_commutator_check(
    const HamiltonianSpec &spec, const PauliSum &op, int q, int position, NormMode mode = NormMode::exact_dense,
    std::size_t dense_cap = kDefaultDenseCap, std::uint64_t budget = kDefaultCommutatorBudget);

struct MuResult {
    double value = 0;
    /// Maximizing (q, n); zero when the feasible set is empty.
    int q = 0;
    int n = 0;
    bool converged = false;
    bool empty = false;
};

/// sup over q >= m+1, n <= floor((q-1)/p), n <= n_max of
/// (sum over compositions q_1+..+q_n = q+n-1 with p+1 <= q_i <= p0 of prod alpha_{q_i})^{1/(q+n-1)}.
///
/// `alpha(q)` must be available for q in [p+1, p0].  Ties go to the smallest
/// (q, n).  converged means the witness has n < n_max and a search with n_max+2
/// does not raise the value by more than 1e-9 relative.
MuResult mu_truncated(const CommutatorTable &alpha, int p, int m, int p0, int n_max = 8);

/// The same search with an explicit alpha lookup indexed by q.
MuResult mu_truncated(const std::map<int, double> &alpha, int p, int m, int p0, int n_max = 8);

}  // namespace mpfkit
