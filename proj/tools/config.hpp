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

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "mpfkit/hamiltonian.hpp"
#include "mpfkit/mpf.hpp"
#include "mpfkit/pauli.hpp"
#include "mpfkit/trotter.hpp"

namespace mpfkit::cli {

/// Raised for anything wrong with the experiment configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct TauGrid {
    double lo = 1e-2;
    double hi = 2e-1;
    std::size_t count = 12;
};

struct GSweep {
    double exponent = 0.5;
    std::vector<std::size_t> sizes{64, 128, 256, 512};
};

struct ExperimentConfig {
    // Either a path, a family selector object, or an inline Hamiltonian document.
    nlohmann::json hamiltonian = {{"family", "heisenberg"}, {"n", 4}, {"coupling", 1.0}, {"field", 0.0}};
    int p = 2;
    std::size_t J = 2;
    std::vector<int> k_list;
    TauGrid tau_grid;
    double eps = 1e-3;
    double t = 1.0;
    /// Formulaic system size for cost reports; the Hamiltonian's site count when absent.
    std::optional<double> n_formula;
    double nu = 0;
    double d = 1;
    std::string range = "finite";
    std::vector<double> eps_sweep{1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    std::vector<double> n_sweep{1e18, 1e19, 1e20, 1e21, 1e22};
    std::optional<GSweep> g_sweep;
    NormMode norm_mode = NormMode::exact_dense;
    std::size_t dense_cap = kDefaultDenseCap;
    int q_max = 6;
    std::uint64_t seed = 1;
    std::filesystem::path out = "out";

    nlohmann::json to_json() const;
};

ExperimentConfig parse_config(const nlohmann::json &doc);
ExperimentConfig load_config(const std::filesystem::path &path);

HamiltonianSpec resolve_hamiltonian(const ExperimentConfig &config);
MpfSpec resolve_mpf(const ExperimentConfig &config);

}  // namespace mpfkit::cli
