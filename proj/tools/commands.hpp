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

#include <iosfwd>

#include "config.hpp"
#include "mpfkit/bounds.hpp"

namespace mpfkit::cli {

/// Stable exit-code contract.
enum ExitCode : int { kPass = 0, kViolation = 1, kConfigError = 2 };

int cmd_verify_order(const ExperimentConfig &config, std::ostream &log);
int cmd_verify_bounds(const ExperimentConfig &config, std::ostream &log);
int cmd_cost(const ExperimentConfig &config, std::ostream &log);
int cmd_table1(const ExperimentConfig &config, std::ostream &log);
int cmd_phi(const ExperimentConfig &config, std::ostream &log);
int cmd_alpha(const ExperimentConfig &config, std::ostream &log);

/// Writes the resolved config to <out>/config.json.
void echo_config(const ExperimentConfig &config);

}  // namespace mpfkit::cli
