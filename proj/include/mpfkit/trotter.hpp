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
#include <vector>

#include "mpfkit/dense.hpp"
#include "mpfkit/hamiltonian.hpp"

namespace mpfkit {

/// One exponential e^{-i H_group alpha tau} of a product formula.
struct Stage {
    std::size_t group;
    double alpha;
};

/// Stages are listed in application order: stages.front() acts first on the
/// state, so T_p(tau) = E_L ... E_2 E_1.
struct ProductFormulaPlan {
    int order = 1;
    std::size_t gamma_count = 0;
    std::vector<Stage> stages;
    /// stages.size() / gamma_count
    int c_p = 1;
    bool symmetric = false;

    /// Adjacent stages on the same group fused into one.
    std::vector<Stage> merged_stages() const;
};

/// p in {1, 2, 4, 6}.  p >= 4 uses the Suzuki recursion
/// T_p(tau) = T_{p-2}(u tau)^2 T_{p-2}((1-4u) tau) T_{p-2}(u tau)^2.
ProductFormulaPlan build_plan(std::size_t gamma_count, int p);
ProductFormulaPlan build_plan(const HamiltonianSpec &spec, int p);

/// Dense matrices of a Hamiltonian with per-group eigendecompositions cached,
/// so e^{-i H_gamma t} at any t costs one diagonal rescaling.
class DenseModel {
   public:
    explicit DenseModel(const HamiltonianSpec &spec, std::size_t dense_cap = kDefaultDenseCap);

    const HamiltonianSpec &spec() const noexcept {
        return spec_;
    }
    Eigen::Index dim() const noexcept {
        return full_.rows();
    }
    const DenseOperator &hamiltonian() const noexcept {
        return full_;
    }
    const DenseOperator &group(std::size_t gamma) const {
        return groups_.at(gamma);
    }

    /// e^{-i H tau}
    DenseOperator exact(double tau) const;
    /// T_p(tau) from the cached group factorizations.
    DenseOperator evaluate(const ProductFormulaPlan &plan, double tau) const;
    /// T_p(tau) with a fresh eigendecomposition per stage.
    DenseOperator evaluate_uncached(const ProductFormulaPlan &plan, double tau) const;

   private:
    HamiltonianSpec spec_;
    DenseOperator full_;
    std::vector<DenseOperator> groups_;
    HermitianExponential full_exp_;
    std::vector<HermitianExponential> group_exp_;
};

/// ||e^{-i H tau} - T_p(tau)||
double trotter_error(const ProductFormulaPlan &plan, const DenseModel &model, double tau);

}  // namespace mpfkit
