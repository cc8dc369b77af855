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

#include "mpfkit/bch.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "mpfkit/bounds.hpp"
#include "mpfkit/commutators.hpp"

namespace mpfkit {

namespace {

using Word = std::vector<std::uint16_t>;

struct WeightedPermutation {
    std::vector<int> sigma;
    double weight;  // (-1)^{d} / binom(q-1, d)
};

std::vector<WeightedPermutation> descent_weights(int q) {
    std::vector<WeightedPermutation> out;
    std::vector<int> sigma(static_cast<std::size_t>(q));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        int descents = 0;
        for (std::size_t i = 0; i + 1 < sigma.size(); i++) {
            descents += sigma[i] > sigma[i + 1];
        }
        double binom = std::round(std::tgamma(q) / (std::tgamma(descents + 1) * std::tgamma(q - descents)));
        out.push_back({sigma, (descents % 2 ? -1.0 : 1.0) / binom});
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

// Right-nested [H_{w0}, [H_{w1}, ..., H_{w_{q-1}}]] with suffixes memoized.
class NestedCache {
   public:
    explicit NestedCache(const std::vector<PauliSum> &groups) : groups_(groups) {
    }

    const PauliSum &get(const Word &word, std::size_t from) {
        Word key(word.begin() + std::ptrdiff_t(from), word.end());
        if (auto it = cache_.find(key); it != cache_.end()) {
            return it->second;
        }
        PauliSum value = from + 1 == word.size() ? groups_[word[from]]
                                                 : commutator(groups_[word[from]], get(word, from + 1));
        return cache_.emplace(std::move(key), std::move(value)).first->second;
    }

   private:
    const std::vector<PauliSum> &groups_;
    std::map<Word, PauliSum> cache_;
};

}  // namespace

PauliSum phi_operator(const ProductFormulaPlan &plan, const HamiltonianSpec &spec, int q, int q_max) {
    if (q < 2) {
        throw std::invalid_argument("BCH coefficient order must be at least 2");
    }
    if (q > q_max) {
        throw std::invalid_argument(
            "BCH order " + std::to_string(q) + " exceeds q_max = " + std::to_string(q_max) +
            " (cost grows as q! times the number of compositions)");
    }
    if (plan.gamma_count != spec.gamma_count()) {
        throw std::invalid_argument("plan and Hamiltonian disagree on the number of groups");
    }
    auto stages = plan.merged_stages();
    std::reverse(stages.begin(), stages.end());

    // Distribute q factors over the stages: pattern -> sum of prod alpha^c / c!.
    std::map<Word, double> patterns{{Word{}, 1.0}};
    for (const auto &stage : stages) {
        std::map<Word, double> next;
        for (const auto &[pattern, weight] : patterns) {
            double w = weight;
            Word extended = pattern;
            for (std::size_t c = 0; pattern.size() + c <= std::size_t(q); c++) {
                if (c > 0) {
                    w *= stage.alpha / double(c);
                    extended.push_back(std::uint16_t(stage.group));
                }
                next[extended] += w;
            }
        }
        patterns = std::move(next);
    }

    const auto perms = descent_weights(q);
    std::map<Word, double> words;
    for (const auto &[pattern, weight] : patterns) {
        if (pattern.size() != std::size_t(q) || weight == 0.0) {
            continue;
        }
        Word word(static_cast<std::size_t>(q));
        for (const auto &perm : perms) {
            for (std::size_t i = 0; i < word.size(); i++) {
                word[i] = pattern[std::size_t(perm.sigma[i])];
            }
            words[word] += weight * perm.weight;
        }
    }

    double largest = 0;
    for (const auto &[word, coef] : words) {
        largest = std::max(largest, std::abs(coef));
    }
    const auto groups = spec.group_sums();
    NestedCache cache(groups);
    PauliSum out(spec.n_sites());
    for (const auto &[word, coef] : words) {
        if (std::abs(coef) <= 1e-15 * largest) {
            continue;
        }
        PauliSum term = cache.get(word, 0);
        term *= coef;
        out += term;
    }
    Complex prefactor = std::pow(Complex(0, -1), q - 1) / double(q * q);
    out *= prefactor;
    out.prune();
    return out;
}

double phi_extensiveness_bound(const ProductFormulaPlan &plan, const HamiltonianSpec &spec, int q) {
    const double cp = plan.c_p;
    const double g = spec.extensiveness();
    return std::tgamma(q) / q * std::pow(2.0 * cp * double(spec.locality()) * g, q - 1) * cp * g;
}

BchCoefficient compute_phi(
    const ProductFormulaPlan &plan, const HamiltonianSpec &spec, int q, const BchOptions &options) {
    BchCoefficient out;
    out.q = q;
    out.op = phi_operator(plan, spec, q, options.q_max);
    const bool dense = options.exact_norms && spec.n_sites() <= options.dense_cap;
    if (dense) {
        out.norm_exact = operator_norm(out.op, NormMode::exact_dense, options.dense_cap);
    }
    const double alpha =
        alpha_com(spec, q, dense ? NormMode::exact_dense : NormMode::one_norm_bound, options.dense_cap);
    out.norm_bound = std::pow(double(plan.c_p), q) * alpha / double(q * q);
    out.extensiveness = extensiveness(out.op);
    out.locality = locality(out.op);
    return out;
}

TruncatedBch::TruncatedBch(
    const ProductFormulaPlan &plan, const HamiltonianSpec &spec, int p0, int q_max, std::size_t dense_cap)
    : p0_(p0), h_(from_pauli_sum(spec.full_sum(), dense_cap)) {
    if (p0 > q_max) {
        throw std::invalid_argument(
            "truncation order " + std::to_string(p0) + " exceeds q_max = " + std::to_string(q_max));
    }
    for (int q = 2; q <= p0; q++) {
        phi_.push_back(from_pauli_sum(phi_operator(plan, spec, q, q_max), dense_cap));
    }
}

DenseOperator TruncatedBch::unitary(double tau) const {
    DenseOperator generator = h_;
    double power = 1.0;
    for (const auto &phi : phi_) {
        power *= tau;
        generator += power * phi;
    }
    DenseOperator hermitian = 0.5 * (generator + generator.adjoint());
    return expm_hermitian_times_minus_i(hermitian, tau);
}

DenseOperator truncated_bch_unitary(
    const ProductFormulaPlan &plan, const HamiltonianSpec &spec, double tau, int p0, int q_max,
    std::size_t dense_cap) {
    return TruncatedBch(plan, spec, p0, q_max, dense_cap).unitary(tau);
}

TruncationReport verify_truncation(
    const ProductFormulaPlan &plan, const HamiltonianSpec &spec, double eps, int q_max, std::size_t dense_cap,
    int levels) {
    TruncationReport report;
    report.eps = eps;
    report.p0 = truncation_order(double(spec.n_sites()), eps);
    report.tau_max = bch_time_condition(
        double(spec.n_sites()), eps, plan.c_p, double(spec.locality()), spec.extensiveness());
    if (report.p0 > q_max) {
        report.reason = "not testable at this (N, eps): p0 = " + std::to_string(report.p0) +
                        " exceeds q_max = " + std::to_string(q_max);
        return report;
    }
    report.testable = true;
    const DenseModel model(spec, dense_cap);
    const TruncatedBch truncated(plan, spec, report.p0, q_max, dense_cap);
    report.holds = true;
    report.margin = eps;
    double tau = report.tau_max;
    for (int j = 0; j < levels; j++, tau /= 2) {
        TruncationSample s;
        s.tau = tau;
        s.error = spectral_norm(model.evaluate(plan, tau) - truncated.unitary(tau));
        s.holds = s.error <= eps;
        report.holds = report.holds && s.holds;
        report.margin = std::min(report.margin, eps - s.error);
        report.samples.push_back(s);
    }
    return report;
}

}  // namespace mpfkit
