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

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "mpfkit/pauli.hpp"

namespace mpfkit {

/// Basis state |b_0 b_1 ... b_{n-1}> has site 0 as the most significant bit, so
/// the matrix of "XZ" is kron(X, Z).
using DenseOperator = Eigen::MatrixXcd;

void check_dense_cap(std::size_t n_sites, std::size_t dense_cap);

DenseOperator identity_operator(std::size_t n_sites);
DenseOperator from_pauli_sum(const PauliSum &s, std::size_t dense_cap = kDefaultDenseCap);
/// Coefficients Tr(P^dagger A) / 2^n for every Pauli string P.
PauliSum pauli_decompose(const DenseOperator &a, double prune_tolerance = kDefaultPruneTolerance);

bool is_hermitian(const DenseOperator &a, double tol = 1e-10);
bool is_anti_hermitian(const DenseOperator &a, double tol = 1e-10);

/// Eigendecomposition of a Hermitian generator, reusable for e^{-i h t} at any t.
class HermitianExponential {
   public:
    explicit HermitianExponential(const DenseOperator &h, double hermitian_tol = 1e-10);

    /// e^{-i h t}
    DenseOperator operator()(double t) const;

    const Eigen::VectorXd &eigenvalues() const noexcept {
        return values_;
    }
    Eigen::Index dim() const noexcept {
        return values_.size();
    }

   private:
    Eigen::MatrixXcd vectors_;
    Eigen::VectorXd values_;
};

/// e^{-i h tau} for Hermitian h; throws std::invalid_argument otherwise.
DenseOperator expm_hermitian_times_minus_i(const DenseOperator &h, double tau);

/// Largest singular value.  Hermitian and anti-Hermitian inputs go through
/// the eigenvalue of largest magnitude.
double spectral_norm(const DenseOperator &a);

/// a^r by binary powering.
DenseOperator matrix_power(const DenseOperator &a, std::uint64_t r);

struct LogSample {
    double tau;
    DenseOperator value;
};

/// Result of fitting i*log U(tau) = sum_{q=1}^{max_order} G_q tau^q.
struct LogSeriesFit {
    /// coefficients[q-1] is G_q, Pauli-decomposed.
    std::vector<PauliSum> coefficients;
    std::size_t samples_used = 0;
    std::size_t samples_rejected = 0;
};

/// Principal matrix logarithm.  Returns false (and leaves `out` untouched) when
/// an eigenvalue lies within `branch_margin` radians of the branch cut at -1.
bool principal_log(const DenseOperator &u, double branch_margin, DenseOperator &out);

/// Least-squares fit of the tau-polynomial of i*log U(tau) from samples.
///
/// Samples whose spectrum comes within `branch_margin` of the branch cut are
/// rejected.  Throws std::invalid_argument if fewer than `fit_degree` samples
/// survive or the dimension exceeds 16.  `fit_degree >= max_order` sets the
/// polynomial degree actually fitted (higher degree absorbs truncation).
LogSeriesFit log_series_fit(
    std::span<const LogSample> samples, int max_order, int fit_degree = 0, double branch_margin = 0.3141592653589793);

}  // namespace mpfkit
