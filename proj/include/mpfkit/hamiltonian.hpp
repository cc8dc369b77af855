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
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "mpfkit/pauli.hpp"

namespace mpfkit {

/// One Pauli term h_X of the Hamiltonian, tagged with its partition group.
/// Groups are 0-based here; the document format uses 1-based labels.
struct HamiltonianTerm {
    PauliString string;
    double coeff;
    std::size_t group;
};

/// A k-local Hamiltonian H = sum_gamma H_gamma with its derived constants.
///
/// Construction validates the term list (consistent site counts, no duplicate
/// strings, every group in 0..Gamma-1 nonempty) and computes k, g, Gamma and
/// the total one-norm once.  Immutable afterwards.
class HamiltonianSpec {
   public:
    HamiltonianSpec(std::size_t n_sites, std::vector<HamiltonianTerm> terms, std::string name = "custom");

    std::size_t n_sites() const noexcept {
        return n_sites_;
    }
    const std::vector<HamiltonianTerm> &terms() const noexcept {
        return terms_;
    }
    const std::string &name() const noexcept {
        return name_;
    }
    std::size_t gamma_count() const noexcept {
        return gamma_count_;
    }
    /// k: largest support of any term.
    std::size_t locality() const noexcept {
        return k_;
    }
    /// g: max over sites of the summed |coeff| of terms touching the site.
    double extensiveness() const noexcept {
        return g_;
    }
    /// sum over all terms of |coeff|.
    double total_one_norm() const noexcept {
        return total_one_norm_;
    }
    /// Some group contains a pair of non-commuting terms.
    bool non_commuting_groups() const noexcept {
        return non_commuting_groups_;
    }
    /// Every pair of groups commutes, so any product formula is exact.
    bool groups_mutually_commute() const;

    PauliSum group_sum(std::size_t gamma) const;
    std::vector<PauliSum> group_sums() const;
    PauliSum full_sum() const;

    /// The document form accepted by load_spec().
    nlohmann::json to_json() const;

   private:
    std::size_t n_sites_;
    std::vector<HamiltonianTerm> terms_;
    std::string name_;
    std::size_t gamma_count_ = 0;
    std::size_t k_ = 0;
    double g_ = 0;
    double total_one_norm_ = 0;
    bool non_commuting_groups_ = false;
};

/// Parses {"n_sites": int, "terms": [{"pauli": str, "coeff": float, "group": int}]}.
/// Throws std::invalid_argument with a diagnostic on any schema violation.
HamiltonianSpec load_spec(const nlohmann::json &doc);
HamiltonianSpec load_spec_file(const std::filesystem::path &path);

/// Sum_i J (X_i X_{i+1} + Y_i Y_{i+1} + Z_i Z_{i+1}) + sum_i h Z_i.
///
/// Groups, in order and only when nonempty: even bonds, odd bonds, the
/// wrap-around bond of an odd periodic ring, and the field.
HamiltonianSpec heisenberg_chain(std::size_t n, double coupling, double field, bool open_boundary = true);

/// Z_i Z_j couplings with coefficient base / |i-j|^exponent for every pair on a
/// 1D chain; group d-1 holds all pairs at distance d.
HamiltonianSpec long_range_chain(std::size_t n, double exponent, double base = 1.0);

struct GScalingRow {
    std::size_t n;
    double g;
};

struct GScalingReport {
    std::vector<GScalingRow> rows;
    /// Slope of log g against log N.
    double loglog_slope = 0;
    /// Slope of g against log N, and the rms residual of that fit relative to mean g.
    double log_fit_slope = 0;
    double log_fit_relative_residual = 0;
    /// Relative rms residual of the power-law fit, measured on g itself.
    double power_fit_relative_residual = 0;
    /// "constant", "logarithmic" or "power".
    std::string regime;
};

using FamilyGenerator = std::function<HamiltonianSpec(std::size_t)>;

/// Evaluates g at each size and classifies the growth.  Needs >= 3 sizes.
GScalingReport g_scaling_report(const FamilyGenerator &family, std::span<const std::size_t> sizes);

}  // namespace mpfkit
