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

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include <unsupported/Eigen/MatrixFunctions>

#include "mpfkit/commutators.hpp"
#include "mpfkit/errors.hpp"
#include "mpfkit/fit.hpp"
#include "mpfkit/trotter.hpp"
#include "oracle/oracle.hpp"

using namespace mpfkit;

TEST(BuildPlan, FirstOrderSweep) {
    auto plan = build_plan(2, 1);
    ASSERT_EQ(plan.stages.size(), 2u);
    EXPECT_EQ(plan.stages[0].group, 0u);
    EXPECT_EQ(plan.stages[0].alpha, 1.0);
    EXPECT_EQ(plan.stages[1].group, 1u);
    EXPECT_EQ(plan.c_p, 1);
    EXPECT_FALSE(plan.symmetric);
}

TEST(BuildPlan, SecondOrderIsSymmetric) {
    auto plan = build_plan(2, 2);
    ASSERT_EQ(plan.stages.size(), 4u);
    const std::size_t groups[] = {0, 1, 1, 0};
    for (std::size_t v = 0; v < 4; v++) {
        EXPECT_EQ(plan.stages[v].group, groups[v]);
        EXPECT_EQ(plan.stages[v].alpha, 0.5);
    }
    EXPECT_EQ(plan.c_p, 2);
    EXPECT_TRUE(plan.symmetric);
    EXPECT_EQ(plan.merged_stages().size(), 3u);
}

TEST(BuildPlan, HigherOrderStageCounts) {
    EXPECT_EQ(build_plan(2, 4).c_p, 10);
    EXPECT_EQ(build_plan(3, 4).stages.size(), 30u);
    EXPECT_EQ(build_plan(2, 6).c_p, 50);
    EXPECT_TRUE(build_plan(3, 6).symmetric);
    EXPECT_THROW(build_plan(2, 3), std::invalid_argument);
    EXPECT_THROW(build_plan(2, 8), std::invalid_argument);
}

TEST(BuildPlan, CoefficientsSumToOnePerGroup) {
    for (int p : {1, 2, 4, 6}) {
        for (std::size_t gamma : {1u, 2u, 3u}) {
            auto plan = build_plan(gamma, p);
            std::map<std::size_t, double> sums;
            for (const auto &s : plan.stages) {
                sums[s.group] += s.alpha;
            }
            ASSERT_EQ(sums.size(), gamma);
            for (const auto &[g, total] : sums) {
                EXPECT_NEAR(total, 1.0, 1e-14) << "p=" << p << " group " << g;
            }
        }
    }
}

TEST(Evaluate, CommutingGroupsAreExact) {
    auto spec = load_spec(nlohmann::json::parse(R"({"n_sites": 3, "terms": [
        {"pauli": "ZZI", "coeff": 0.8, "group": 1},
        {"pauli": "IZZ", "coeff": -0.3, "group": 2},
        {"pauli": "ZIZ", "coeff": 1.1, "group": 3}]})"));
    DenseModel model(spec);
    for (int p : {1, 2, 4}) {
        for (double tau : {0.01, 0.5, 3.0}) {
            EXPECT_LE(oracle::max_abs_diff(model.evaluate(build_plan(spec, p), tau), model.exact(tau)), 1e-12);
        }
    }
}

TEST(Evaluate, ZeroTimeIsIdentity) {
    auto spec = heisenberg_chain(4, 1.0, 0.3);
    DenseModel model(spec);
    auto u = model.evaluate(build_plan(spec, 4), 0.0);
    EXPECT_LE(oracle::max_abs_diff(u, DenseOperator::Identity(16, 16)), 1e-13);
}

TEST(Evaluate, SymmetricPlansSatisfyTimeReversal) {
    auto spec = heisenberg_chain(4, 1.0, 0.0);
    DenseModel model(spec);
    for (int p : {2, 4, 6}) {
        auto plan = build_plan(spec, p);
        for (double tau : {0.1, 0.37}) {
            auto forward = model.evaluate(plan, tau);
            auto backward = model.evaluate(plan, -tau);
            EXPECT_LE(spectral_norm(backward.adjoint() - forward), 1e-12) << p;
        }
    }
}

TEST(Evaluate, IsUnitary) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; trial++) {
        auto spec = oracle::random_spec(rng, 3, 4);
        DenseModel model(spec);
        for (int p : {1, 2, 4}) {
            auto u = model.evaluate(build_plan(spec, p), 0.3 + 0.1 * trial);
            EXPECT_LE(spectral_norm(u * u.adjoint() - DenseOperator::Identity(8, 8)), 1e-12);
        }
    }
}

TEST(Evaluate, CachingDoesNotChangeResults) {
    auto spec = heisenberg_chain(4, 1.0, 0.4);
    DenseModel model(spec);
    for (int p : {1, 2, 4}) {
        auto plan = build_plan(spec, p);
        EXPECT_LE(oracle::max_abs_diff(model.evaluate(plan, 0.2), model.evaluate_uncached(plan, 0.2)), 1e-13);
    }
}

TEST(Evaluate, MatchesKroneckerStageProduct) {
    auto spec = heisenberg_chain(3, 0.9, 0.4);
    DenseModel model(spec);
    auto plan = build_plan(spec, 2);
    const double tau = 0.23;
    DenseOperator expected = DenseOperator::Identity(8, 8);
    auto groups = spec.group_sums();
    for (const auto &s : plan.stages) {
        auto h = oracle::kron_matrix(groups[s.group]);
        DenseOperator generator = Complex(0, -s.alpha * tau) * h;
        expected = generator.exp() * expected;
    }
    EXPECT_LE(oracle::max_abs_diff(model.evaluate(plan, tau), expected), 1e-12);
}

TEST(Evaluate, DenseCapIsEnforced) {
    EXPECT_THROW(DenseModel(heisenberg_chain(6, 1, 0), 5), DenseCapExceeded);
}

TEST(TrotterError, OrderConditionSlopes) {
    auto spec = heisenberg_chain(4, 1.0, 0.0);
    DenseModel model(spec);
    const auto grid = geometric_grid(1e-3, 1e-1, 12);
    for (int p : {1, 2, 4}) {
        auto plan = build_plan(spec, p);
        std::vector<double> errors;
        for (double tau : grid) {
            errors.push_back(trotter_error(plan, model, tau));
        }
        auto fit = fit_loglog(grid, errors);
        EXPECT_FALSE(fit.exact);
        EXPECT_GE(fit.slope, p + 0.8) << "p=" << p;
    }
}

TEST(TrotterError, CommutingSpecIsZero) {
    auto spec = heisenberg_chain(4, 0.0, 1.0);
    DenseModel model(spec);
    EXPECT_LE(trotter_error(build_plan(spec, 1), model, 0.5), 1e-12);
}

TEST(TrotterError, BoundedByCommutatorScaling) {
    auto spec = heisenberg_chain(4, 1.0, 0.0);
    DenseModel model(spec);
    const auto grid = geometric_grid(1e-3, 1e-1, 12);
    for (int p : {1, 2}) {
        auto plan = build_plan(spec, p);
        const double alpha = alpha_com(spec, p + 1, NormMode::exact_dense);
        double worst_ratio = 0;
        for (double tau : grid) {
            worst_ratio = std::max(worst_ratio, trotter_error(plan, model, tau) / (alpha * std::pow(tau, p + 1)));
        }
        EXPECT_LT(worst_ratio, 1.0) << p;
    }
}
