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
#include <optional>
#include <string>
#include <vector>

#include "mpfkit/hamiltonian.hpp"
#include "mpfkit/trotter.hpp"

namespace mpfkit {

inline constexpr int kDefaultQMax = 6;

/// Order-q coefficient Phi_q of T_p(tau) = exp(-i H tau - i sum_q Phi_q tau^q).
struct BchCoefficient {
    int q = 0;
    PauliSum op{1};
    /// Spectral norm; empty when the spec is above the dense cap.
    std::optional<double> norm_exact;
    /// c_p^q alpha_com,q / q^2
    double norm_bound = 0;
    double extensiveness = 0;
    std::size_t locality = 0;
};

struct BchOptions {
    int q_max = kDefaultQMax;
    std::size_t dense_cap = kDefaultDenseCap;
    /// Compute norm_exact and the alpha_com,q used in norm_bound with dense norms.
    bool exact_norms = true;
};

/// Phi_q from the composition/permutation sum over the stages of `plan`.
///
/// The exponentials of T_p are fed to the log-of-product series leftmost
/// first, i.e. in reverse application order; the 1/q^2, descent weights and
/// (-i)^{q-1} are folded in so `op` is Hermitian.
PauliSum phi_operator(const ProductFormulaPlan &plan, const HamiltonianSpec &spec, int q, int q_max = kDefaultQMax);

BchCoefficient compute_phi(
    const ProductFormulaPlan &plan, const HamiltonianSpec &spec, int q, const BchOptions &options = {});

/// ((q-1)!/q) (2 c_p k g)^{q-1} c_p g
double phi_extensiveness_bound(const ProductFormulaPlan &plan, const HamiltonianSpec &spec, int q);

/// Phi_2..Phi_{p0}, computed once and reused across tau.
class TruncatedBch {
   public:
    TruncatedBch(
        const ProductFormulaPlan &plan, const HamiltonianSpec &spec, int p0, int q_max = kDefaultQMax,
        std::size_t dense_cap = kDefaultDenseCap);

    int p0() const noexcept {
        return p0_;
    }
    /// exp(-i tau (H + sum_{q=2}^{p0} Phi_q tau^{q-1}))
    DenseOperator unitary(double tau) const;
    const std::vector<DenseOperator> &phi_dense() const noexcept {
        return phi_;
    }

   private:
    int p0_;
    DenseOperator h_;
    std::vector<DenseOperator> phi_;  // phi_[j] = Phi_{j+2}
};

DenseOperator truncated_bch_unitary(
    const ProductFormulaPlan &plan, const HamiltonianSpec &spec, double tau, int p0, int q_max = kDefaultQMax,
    std::size_t dense_cap = kDefaultDenseCap);

struct TruncationSample {
    double tau = 0;
    double error = 0;
    bool holds = false;
};

struct TruncationReport {
    bool testable = false;
    std::string reason;
    double eps = 0;
    int p0 = 0;
    double tau_max = 0;
    std::vector<TruncationSample> samples;
    /// Smallest eps - error over the samples.
    double margin = 0;
    bool holds = false;
};

/// Checks ||T_p(tau) - truncated BCH|| <= eps with p0 = ceil(ln(3N/eps)) at the
/// time-condition boundary and at boundary/2^j for j < `levels`.
TruncationReport verify_truncation(
    const ProductFormulaPlan &plan, const HamiltonianSpec &spec, double eps, int q_max = kDefaultQMax,
    std::size_t dense_cap = kDefaultDenseCap, int levels = 4);

}  // namespace mpfkit
