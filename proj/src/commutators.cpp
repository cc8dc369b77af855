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

#include "mpfkit/commutators.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "mpfkit/dense.hpp"
#include "mpfkit/errors.hpp"

namespace mpfkit {

namespace {

void check_budget(std::size_t gamma_count, int q, std::uint64_t budget) {
    double leaves = std::pow(double(gamma_count), q);
    if (leaves > double(budget)) {
        throw BudgetExceeded(
            "nested commutator sum needs " + std::to_string(gamma_count) + "^" + std::to_string(q) +
            " evaluations, budget is " + std::to_string(budget) + "; use one-norm mode or a smaller q");
    }
}

// Sums norm(leaf) over every right-nested commutator of depth q built from
// `ops`, optionally with `insert` applied right after level `position`.
template <class Op, class Comm, class Norm, class IsZero>
double nested_sum(
    const std::vector<Op> &ops, int q, const Op *insert, int position, Comm comm, Norm norm, IsZero is_zero) {
    double total = 0;
    std::function<void(const Op &, int)> descend = [&](const Op &inner, int level) {
        if (is_zero(inner)) {
            return;
        }
        if (level == q) {
            total += norm(inner);
            return;
        }
        for (const auto &h : ops) {
            Op next = comm(h, inner);
            if (insert != nullptr && position == level + 1) {
                next = comm(*insert, next);
            }
            descend(next, level + 1);
        }
    };
    for (const auto &h : ops) {
        if (insert != nullptr && position == 1) {
            descend(comm(*insert, h), 1);
        } else {
            descend(h, 1);
        }
    }
    return total;
}

double dense_sum(
    const std::vector<PauliSum> &groups, int q, const PauliSum *insert, int position, std::size_t dense_cap) {
    std::vector<DenseOperator> ops;
    for (const auto &g : groups) {
        ops.push_back(from_pauli_sum(g, dense_cap));
    }
    DenseOperator inserted;
    if (insert != nullptr) {
        inserted = from_pauli_sum(*insert, dense_cap);
    }
    double scale = 1.0;
    for (const auto &op : ops) {
        scale = std::max(scale, op.cwiseAbs().maxCoeff());
    }
    const double zero_tol = 1e-13 * std::pow(scale, q);
    return nested_sum<DenseOperator>(
        ops, q, insert != nullptr ? &inserted : nullptr, position,
        [](const DenseOperator &a, const DenseOperator &b) -> DenseOperator { return a * b - b * a; },
        [](const DenseOperator &a) { return spectral_norm(a); },
        [&](const DenseOperator &a) { return a.size() == 0 || a.cwiseAbs().maxCoeff() <= zero_tol; });
}

double symbolic_sum(const std::vector<PauliSum> &groups, int q, const PauliSum *insert, int position) {
    return nested_sum<PauliSum>(
        groups, q, insert, position, [](const PauliSum &a, const PauliSum &b) { return commutator(a, b); },
        [](const PauliSum &a) { return a.one_norm(); }, [](const PauliSum &a) { return a.empty(); });
}

}  // namespace

double alpha_com(const HamiltonianSpec &spec, int q, NormMode mode, std::size_t dense_cap, std::uint64_t budget) {
    if (q < 2) {
        throw std::invalid_argument("alpha_com needs q >= 2");
    }
    check_budget(spec.gamma_count(), q, budget);
    const auto groups = spec.group_sums();
    if (mode == NormMode::exact_dense) {
        return dense_sum(groups, q, nullptr, 0, dense_cap);
    }
    return symbolic_sum(groups, q, nullptr, 0);
}

double alpha_bound_factorial(const HamiltonianSpec &spec, int q) {
    const double kg2 = 2.0 * double(spec.locality()) * spec.extensiveness();
    return std::tgamma(double(q)) * std::pow(kg2, q - 1) * double(spec.n_sites()) * spec.extensiveness();
}

double alpha_bound_one_norm(const HamiltonianSpec &spec, int q) {
    return std::pow(2.0 * spec.total_one_norm(), q);
}

double CommutatorTable::alpha(int q) const {
    if (auto it = alpha_exact.find(q); it != alpha_exact.end()) {
        return it->second;
    }
    if (auto it = alpha_one_norm.find(q); it != alpha_one_norm.end()) {
        return it->second;
    }
    throw std::out_of_range("commutator table has no entry for q = " + std::to_string(q));
}

CommutatorTable commutator_table(
    const HamiltonianSpec &spec, int q_min, int q_max, bool with_exact, std::size_t dense_cap, std::uint64_t budget) {
    if (q_min < 2 || q_max < q_min) {
        throw std::invalid_argument("commutator table needs 2 <= q_min <= q_max");
    }
    CommutatorTable table;
    table.q_min = q_min;
    table.q_max = q_max;
    for (int q = q_min; q <= q_max; q++) {
        if (with_exact) {
            table.alpha_exact[q] = alpha_com(spec, q, NormMode::exact_dense, dense_cap, budget);
        }
        table.alpha_one_norm[q] = alpha_com(spec, q, NormMode::one_norm_bound, dense_cap, budget);
        table.bound_factorial[q] = alpha_bound_factorial(spec, q);
        table.bound_one_norm[q] = alpha_bound_one_norm(spec, q);
    }
    return table;
}

InsertionReport inserted_commutator_check(
    const HamiltonianSpec &spec, const PauliSum &op, int q, int position, NormMode mode, std::size_t dense_cap,
    std::uint64_t budget) {
    if (q < 1) {
        throw std::invalid_argument("inserted commutator check needs q >= 1");
    }
    if (position < 1 || position > q) {
        throw std::invalid_argument(
            "insertion position " + std::to_string(position) + " outside 1.." + std::to_string(q));
    }
    if (op.n_sites() != spec.n_sites()) {
        throw std::invalid_argument("inserted operator has the wrong number of sites");
    }
    check_budget(spec.gamma_count(), q, budget);
    const auto groups = spec.group_sums();
    InsertionReport report;
    report.q = q;
    report.position = position;
    report.lhs = mode == NormMode::exact_dense ? dense_sum(groups, q, &op, position, dense_cap)
                                               : symbolic_sum(groups, q, &op, position);
    const double kg2 = 2.0 * double(spec.locality()) * spec.extensiveness();
    report.bound = std::tgamma(double(q) + 1.0) * std::pow(kg2, q) * operator_norm(op, mode, dense_cap);
    report.holds = report.lhs <= report.bound * (1 + 1e-12);
    return report;
}

namespace {

MuResult mu_search(const std::map<int, double> &alpha, int p, int m, int p0, int n_max) {
    MuResult best;
    best.empty = true;
    // compositions[n][S]: sum over n parts in [p+1, p0] summing to S of prod alpha
    const int s_max = n_max * p0;
    std::vector<long double> prev(std::size_t(s_max) + 1, 0.0L);
    prev[0] = 1.0L;
    struct Candidate {
        int q, n;
        double value;
    };
    std::vector<Candidate> candidates;
    for (int n = 1; n <= n_max; n++) {
        std::vector<long double> cur(std::size_t(s_max) + 1, 0.0L);
        for (int s = 0; s <= (n - 1) * p0; s++) {
            if (prev[std::size_t(s)] == 0.0L) {
                continue;
            }
            for (int a = p + 1; a <= p0; a++) {
                cur[std::size_t(s + a)] += prev[std::size_t(s)] * (long double)alpha.at(a);
            }
        }
        for (int q = std::max(m + 1, n * p + 1); q <= n * (p0 - 1) + 1; q++) {
            const int s = q + n - 1;
            const long double sum = cur[std::size_t(s)];
            const double value = sum > 0 ? double(std::pow(sum, 1.0L / (long double)s)) : 0.0;
            candidates.push_back({q, n, value});
        }
        prev = std::move(cur);
    }
    for (const auto &c : candidates) {
        const bool better = best.empty || c.value > best.value * (1 + 1e-12) ||
                            (c.value >= best.value * (1 - 1e-12) && std::pair(c.q, c.n) < std::pair(best.q, best.n));
        if (better) {
            best.value = c.value;
            best.q = c.q;
            best.n = c.n;
            best.empty = false;
        }
    }
    if (best.empty) {
        best.value = 0;
        best.q = best.n = 0;
    }
    return best;
}

}  // namespace

MuResult mu_truncated(const std::map<int, double> &alpha, int p, int m, int p0, int n_max) {
    if (p < 1 || m < 1 || n_max < 1) {
        throw std::invalid_argument("mu search needs p >= 1, m >= 1 and n_max >= 1");
    }
    for (int q = p + 1; q <= p0; q++) {
        if (!alpha.contains(q)) {
            throw std::invalid_argument("alpha_com," + std::to_string(q) + " is missing from the mu search input");
        }
    }
    auto result = mu_search(alpha, p, m, p0, n_max);
    if (result.empty) {
        return result;
    }
    const auto wider = mu_search(alpha, p, m, p0, n_max + 2);
    result.converged = result.n < n_max && wider.value <= result.value * (1 + 1e-9);
    return result;
}

MuResult mu_truncated(const CommutatorTable &table, int p, int m, int p0, int n_max) {
    std::map<int, double> alpha;
    for (int q = p + 1; q <= p0; q++) {
        alpha[q] = table.alpha(q);
    }
    return mu_truncated(alpha, p, m, p0, n_max);
}

}  // namespace mpfkit
