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

#include <numbers>
#include <random>

#include "mpfkit/dense.hpp"
#include "mpfkit/errors.hpp"
#include "oracle/oracle.hpp"

using namespace mpfkit;

namespace {

DenseOperator random_hermitian(std::mt19937_64 &rng, Eigen::Index dim) {
    std::normal_distribution<double> gauss;
    DenseOperator a(dim, dim);
    for (Eigen::Index r = 0; r < dim; r++) {
        for (Eigen::Index c = 0; c < dim; c++) {
            a(r, c) = Complex(gauss(rng), gauss(rng));
        }
    }
    return 0.5 * (a + a.adjoint());
}

DenseOperator random_matrix(std::mt19937_64 &rng, Eigen::Index dim) {
    std::normal_distribution<double> gauss;
    DenseOperator a(dim, dim);
    for (Eigen::Index r = 0; r < dim; r++) {
        for (Eigen::Index c = 0; c < dim; c++) {
            a(r, c) = Complex(gauss(rng), gauss(rng));
        }
    }
    return a;
}

}  // namespace

TEST(FromPauliSum, TextbookMatrices) {
    auto z = from_pauli_sum(PauliSum::from_terms(1, {{"Z", 1.0}}));
    EXPECT_EQ(z(0, 0), Complex(1));
    EXPECT_EQ(z(1, 1), Complex(-1));
    EXPECT_EQ(z(0, 1), Complex(0));

    auto xx = from_pauli_sum(PauliSum::from_terms(2, {{"XX", 1.0}}));
    DenseOperator expected = DenseOperator::Zero(4, 4);
    expected(0, 3) = expected(1, 2) = expected(2, 1) = expected(3, 0) = 1;
    EXPECT_EQ(oracle::max_abs_diff(xx, expected), 0.0);
}

TEST(FromPauliSum, MatchesKroneckerOnEveryString) {
    for (std::size_t n = 1; n <= 3; n++) {
        for (const auto &s : oracle::all_strings(n)) {
            auto sum = PauliSum::from_terms(n, {{s, 1.0}});
            EXPECT_LE(oracle::max_abs_diff(from_pauli_sum(sum), oracle::kron_matrix(s)), 1e-15) << s;
        }
    }
}

TEST(FromPauliSum, IsAnAlgebraHomomorphism) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; trial++) {
        auto a = oracle::random_sum(rng, 3, 6, false);
        auto b = oracle::random_sum(rng, 3, 6, false);
        EXPECT_LE(oracle::max_abs_diff(from_pauli_sum(a * b), from_pauli_sum(a) * from_pauli_sum(b)), 1e-12);
        EXPECT_LE(oracle::max_abs_diff(from_pauli_sum(a + b), from_pauli_sum(a) + from_pauli_sum(b)), 1e-12);
    }
}

TEST(FromPauliSum, HermitianIffSumHermitian) {
    std::mt19937_64 rng(22);
    auto h = oracle::random_sum(rng, 3, 5, true);
    EXPECT_TRUE(is_hermitian(from_pauli_sum(h)));
    auto a = h * Complex(0, 1);
    EXPECT_FALSE(is_hermitian(from_pauli_sum(a)));
}

TEST(FromPauliSum, CapIsEnforced) {
    auto s = PauliSum::from_terms(3, {{"ZZZ", 1.0}});
    EXPECT_THROW(from_pauli_sum(s, 2), DenseCapExceeded);
}

TEST(PauliDecompose, RoundTrips) {
    std::mt19937_64 rng(23);
    auto s = oracle::random_sum(rng, 3, 10, false);
    EXPECT_LE(max_coefficient_distance(pauli_decompose(from_pauli_sum(s)), s), 1e-12);
}

TEST(Expm, ZeroGeneratorIsIdentity) {
    auto u = expm_hermitian_times_minus_i(DenseOperator::Zero(4, 4), 0.7);
    EXPECT_LE(oracle::max_abs_diff(u, DenseOperator::Identity(4, 4)), 1e-15);
}

TEST(Expm, ZAtPiIsMinusIdentity) {
    auto z = from_pauli_sum(PauliSum::from_terms(1, {{"Z", 1.0}}));
    auto u = expm_hermitian_times_minus_i(z, std::numbers::pi);
    EXPECT_LE(oracle::max_abs_diff(u, -DenseOperator::Identity(2, 2)), 1e-12);
}

TEST(Expm, RejectsNonHermitian) {
    DenseOperator a = DenseOperator::Zero(2, 2);
    a(0, 1) = 1;
    EXPECT_THROW(expm_hermitian_times_minus_i(a, 1.0), std::invalid_argument);
}

TEST(Expm, UnitaryAndInverse) {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 20; trial++) {
        auto h = random_hermitian(rng, 8);
        auto u = expm_hermitian_times_minus_i(h, 0.37);
        auto v = expm_hermitian_times_minus_i(h, -0.37);
        EXPECT_LE(oracle::max_abs_diff(u * u.adjoint(), DenseOperator::Identity(8, 8)), 1e-12);
        EXPECT_LE(oracle::max_abs_diff(u * v, DenseOperator::Identity(8, 8)), 1e-12);
    }
}

TEST(SpectralNorm, Examples) {
    EXPECT_NEAR(spectral_norm(DenseOperator::Identity(4, 4)), 1.0, 1e-15);
    DenseOperator d = DenseOperator::Zero(2, 2);
    d(0, 0) = 3;
    d(1, 1) = -4;
    EXPECT_NEAR(spectral_norm(d), 4.0, 1e-14);
}

TEST(SpectralNorm, BoundedByFrobeniusAndSubmultiplicative) {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 50; trial++) {
        auto a = random_matrix(rng, 6);
        auto b = random_matrix(rng, 6);
        EXPECT_LE(spectral_norm(a), a.norm() * (1 + 1e-12));
        EXPECT_LE(spectral_norm(a * b), spectral_norm(a) * spectral_norm(b) * (1 + 1e-12));
    }
}

TEST(SpectralNorm, AntiHermitianPathAgreesWithSvd) {
    std::mt19937_64 rng(26);
    auto h = random_hermitian(rng, 8);
    DenseOperator a = Complex(0, 1) * h;
    Eigen::JacobiSVD<DenseOperator> svd(a);
    EXPECT_NEAR(spectral_norm(a), svd.singularValues()(0), 1e-12);
}

TEST(MatrixPower, MatchesRepeatedProduct) {
    std::mt19937_64 rng(27);
    auto a = random_matrix(rng, 4) * 0.5;
    DenseOperator expected = DenseOperator::Identity(4, 4);
    for (int i = 0; i < 13; i++) {
        expected = expected * a;
    }
    EXPECT_LE(oracle::max_abs_diff(matrix_power(a, 13), expected), 1e-10 * expected.cwiseAbs().maxCoeff());
    EXPECT_LE(oracle::max_abs_diff(matrix_power(a, 0), DenseOperator::Identity(4, 4)), 0.0);
}

TEST(LogSeriesFit, RecoversGeneratorOfExponential) {
    auto h = PauliSum::from_terms(2, {{"XY", 0.7}, {"ZI", -0.4}, {"IZ", 0.2}});
    auto dense = from_pauli_sum(h);
    std::vector<LogSample> samples;
    for (int s = -12; s <= 12; s++) {
        if (s == 0) {
            continue;
        }
        const double tau = 0.3 * std::cos(std::numbers::pi * (s + 12.5) / 25.0);
        samples.push_back({tau, expm_hermitian_times_minus_i(dense, tau)});
    }
    auto fit = log_series_fit(samples, 4, 8);
    EXPECT_LE(max_coefficient_distance(fit.coefficients[0], h), 1e-9);
    for (int q = 1; q < 4; q++) {
        EXPECT_LE(fit.coefficients[std::size_t(q)].one_norm(), 1e-8);
    }
}

TEST(LogSeriesFit, RejectsSamplesNearBranchCut) {
    auto z = from_pauli_sum(PauliSum::from_terms(1, {{"Z", 1.0}}));
    std::vector<LogSample> samples{
        {3.1, expm_hermitian_times_minus_i(z, 3.1)},
        {0.1, expm_hermitian_times_minus_i(z, 0.1)},
        {0.2, expm_hermitian_times_minus_i(z, 0.2)}};
    auto fit = log_series_fit(samples, 1, 2);
    EXPECT_EQ(fit.samples_rejected, 1u);
    EXPECT_EQ(fit.samples_used, 2u);
    EXPECT_THROW(log_series_fit(std::span(samples).first(1), 1, 2), std::invalid_argument);
}
