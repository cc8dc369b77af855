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

#include "mpfkit/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace mpfkit {

std::vector<double> geometric_grid(double lo, double hi, std::size_t count) {
    if (!(lo > 0) || !(hi >= lo) || count == 0) {
        throw std::invalid_argument("geometric_grid needs 0 < lo <= hi and count >= 1");
    }
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = lo;
        return out;
    }
    const double ratio = std::log(hi / lo) / double(count - 1);
    for (std::size_t k = 0; k < count; k++) {
        out[k] = lo * std::exp(ratio * double(k));
    }
    out.back() = hi;
    return out;
}

LinearFit fit_linear(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("fit_linear: x and y differ in length");
    }
    LinearFit fit;
    fit.points = x.size();
    if (x.size() < 2) {
        throw std::invalid_argument("fit_linear needs at least two points");
    }
    const double n = double(x.size());
    double mx = 0, my = 0;
    for (std::size_t k = 0; k < x.size(); k++) {
        mx += x[k];
        my += y[k];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < x.size(); k++) {
        sxx += (x[k] - mx) * (x[k] - mx);
        sxy += (x[k] - mx) * (y[k] - my);
    }
    if (sxx == 0) {
        throw std::invalid_argument("fit_linear: degenerate abscissae");
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0;
    for (std::size_t k = 0; k < x.size(); k++) {
        double r = y[k] - (fit.slope * x[k] + fit.intercept);
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / n);
    return fit;
}

SlopeFit fit_loglog(std::span<const double> x, std::span<const double> y, double noise_floor) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("fit_loglog: x and y differ in length");
    }
    std::vector<double> lx, ly;
    for (std::size_t k = 0; k < x.size(); k++) {
        if (y[k] >= noise_floor && x[k] > 0) {
            lx.push_back(std::log(x[k]));
            ly.push_back(std::log(y[k]));
        }
    }
    SlopeFit fit;
    fit.points_used = lx.size();
    if (lx.size() < 2) {
        fit.exact = true;
        return fit;
    }
    auto lin = fit_linear(lx, ly);
    fit.slope = lin.slope;
    fit.intercept = lin.intercept;
    return fit;
}

}  // namespace mpfkit
