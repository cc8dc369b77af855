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

#include "mpfkit/trotter.hpp"

#include <cmath>
#include <stdexcept>

namespace mpfkit {

namespace {

std::vector<Stage> suzuki_stages(std::size_t gamma_count, int p) {
    if (p == 1) {
        std::vector<Stage> out;
        for (std::size_t g = 0; g < gamma_count; g++) {
            out.push_back({g, 1.0});
        }
        return out;
    }
    if (p == 2) {
        std::vector<Stage> out;
        for (std::size_t g = 0; g < gamma_count; g++) {
            out.push_back({g, 0.5});
        }
        for (std::size_t g = gamma_count; g-- > 0;) {
            out.push_back({g, 0.5});
        }
        return out;
    }
    const auto inner = suzuki_stages(gamma_count, p - 2);
    const double u = 1.0 / (4.0 - std::pow(4.0, 1.0 / double(p - 1)));
    std::vector<Stage> out;
    for (double scale : {u, u, 1.0 - 4.0 * u, u, u}) {
        for (const auto &s : inner) {
            out.push_back({s.group, s.alpha * scale});
        }
    }
    return out;
}

bool palindromic(const std::vector<Stage> &stages) {
    for (std::size_t a = 0, b = stages.size(); a < b--; a++) {
        if (stages[a].group != stages[b].group || std::abs(stages[a].alpha - stages[b].alpha) > 1e-14) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<Stage> ProductFormulaPlan::merged_stages() const {
    std::vector<Stage> out;
    for (const auto &s : stages) {
        if (!out.empty() && out.back().group == s.group) {
            out.back().alpha += s.alpha;
        } else {
            out.push_back(s);
        }
    }
    return out;
}

ProductFormulaPlan build_plan(std::size_t gamma_count, int p) {
    if (p != 1 && p != 2 && p != 4 && p != 6) {
        throw std::invalid_argument("product formula order must be 1, 2, 4 or 6, got " + std::to_string(p));
    }
    if (gamma_count == 0) {
        throw std::invalid_argument("product formula needs at least one group");
    }
    ProductFormulaPlan plan;
    plan.order = p;
    plan.gamma_count = gamma_count;
    plan.stages = suzuki_stages(gamma_count, p);
    plan.c_p = int(plan.stages.size() / gamma_count);
    plan.symmetric = p % 2 == 0 && palindromic(plan.stages);
    return plan;
}

ProductFormulaPlan build_plan(const HamiltonianSpec &spec, int p) {
    return build_plan(spec.gamma_count(), p);
}

DenseModel::DenseModel(const HamiltonianSpec &spec, std::size_t dense_cap)
    : spec_(spec),
      full_(from_pauli_sum(spec.full_sum(), dense_cap)),
      full_exp_(full_) {
    for (const auto &h : spec.group_sums()) {
        groups_.push_back(from_pauli_sum(h, dense_cap));
        group_exp_.emplace_back(groups_.back());
    }
}

DenseOperator DenseModel::exact(double tau) const {
    return full_exp_(tau);
}

DenseOperator DenseModel::evaluate(const ProductFormulaPlan &plan, double tau) const {
    if (plan.gamma_count != groups_.size()) {
        throw std::invalid_argument("plan and Hamiltonian disagree on the number of groups");
    }
    DenseOperator u = DenseOperator::Identity(dim(), dim());
    for (const auto &s : plan.merged_stages()) {
        u = (group_exp_[s.group](s.alpha * tau) * u).eval();
    }
    return u;
}

DenseOperator DenseModel::evaluate_uncached(const ProductFormulaPlan &plan, double tau) const {
    if (plan.gamma_count != groups_.size()) {
        throw std::invalid_argument("plan and Hamiltonian disagree on the number of groups");
    }
    DenseOperator u = DenseOperator::Identity(dim(), dim());
    for (const auto &s : plan.stages) {
        u = (expm_hermitian_times_minus_i(groups_[s.group], s.alpha * tau) * u).eval();
    }
    return u;
}

double trotter_error(const ProductFormulaPlan &plan, const DenseModel &model, double tau) {
    return spectral_norm(model.exact(tau) - model.evaluate(plan, tau));
}

}  // namespace mpfkit
