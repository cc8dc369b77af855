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
#include <span>
#include <vector>

namespace mpfkit {

inline constexpr double kNoiseFloor = 1e-12;

/// `count` points spaced geometrically from lo to hi inclusive.
std::vector<double> geometric_grid(double lo, double hi, std::size_t count);

struct LinearFit {
    double slope = 0;
    double intercept = 0;
    double rms_residual = 0;
    std::size_t points = 0;
};

/// Ordinary least squares y = slope * x + intercept.
LinearFit fit_linear(std::span<const double> x, std::span<const double> y);

struct SlopeFit {
    double slope = 0;
    double intercept = 0;
    std::size_t points_used = 0;
    /// Fewer than two points survived the noise floor: the quantity is exact
    /// to rounding and no slope is meaningful.
    bool exact = false;
};

/// Least-squares slope of log(y) against log(x), dropping points with
/// y < noise_floor.
SlopeFit fit_loglog(std::span<const double> x, std::span<const double> y, double noise_floor = kNoiseFloor);

}  // namespace mpfkit
