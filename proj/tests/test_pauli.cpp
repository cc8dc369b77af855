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

#include <random>

#include "mpfkit/dense.hpp"
#include "mpfkit/errors.hpp"
#include "mpfkit/pauli.hpp"
#include "oracle/oracle.hpp"

using namespace mpfkit;

namespace {

PauliSum sum(std::size_t n, std::vector<std::pair<std::string, Complex>> terms) {
    return PauliSum::from_terms(n, terms);
}

const Complex I(0, 1);

}  // namespace

TEST(PauliString, ParseAndPrint) {
    auto s = PauliString::parse("XIYZ");
    EXPECT_EQ(s.n_sites(), 4u);
    EXPECT_EQ(s.str(), "XIYZ");
    EXPECT_EQ(s.weight(), 3u);
    EXPECT_EQ(s.support(), (std::vector<std::size_t>{0, 2, 3}));
    EXPECT_THROW(PauliString::parse("XQ"), std::invalid_argument);
    EXPECT_THROW(PauliString::parse(""), std::invalid_argument);
}

TEST(PauliString, WideStringsSpanWords) {
    std::string text(130, 'I');
    text[0] = 'X';
    text[64] = 'Y';
    text[129] = 'Z';
    auto s = PauliString::parse(text);
    EXPECT_EQ(s.str(), text);
    EXPECT_EQ(s.weight(), 3u);
    auto t = PauliString::single(130, 64, 'Z');
    EXPECT_FALSE(s.commutes_with(t));
    EXPECT_TRUE(s.commutes_with(PauliString::single(130, 63, 'Z')));
}

TEST(PauliAlgebra, XTimesZIsMinusIY) {
    auto p = sum(2, {{"XI", 1.0}}) * sum(2, {{"ZI", 1.0}});
    EXPECT_LE(max_coefficient_distance(p, sum(2, {{"YI", -I}})), 1e-15);
}

TEST(PauliAlgebra, IdentityIsNeutral) {
    std::mt19937_64 rng(11);
    auto s = oracle::random_sum(rng, 3, 6, false);
    EXPECT_LE(max_coefficient_distance(PauliSum::identity(3) * s, s), 1e-15);
    EXPECT_LE(max_coefficient_distance(s * PauliSum::identity(3), s), 1e-15);
}

TEST(PauliAlgebra, InvolutionGivesIdentity) {
    auto p = sum(2, {{"XX", 1.0}}) * sum(2, {{"XX", 1.0}});
    EXPECT_LE(max_coefficient_distance(p, PauliSum::identity(2)), 1e-15);
}

TEST(PauliAlgebra, CommutatorExamples) {
    auto c1 = commutator(sum(1, {{"X", 1.0}}), sum(1, {{"Z", 1.0}}));
    EXPECT_LE(max_coefficient_distance(c1, sum(1, {{"Y", -2.0 * I}})), 1e-15);

    auto c2 = commutator(sum(2, {{"ZI", 1.0}}), sum(2, {{"IZ", 1.0}}));
    EXPECT_TRUE(c2.empty());

    auto c3 = commutator(sum(2, {{"XX", 1.0}}), sum(2, {{"ZI", 1.0}, {"IZ", 1.0}}));
    EXPECT_LE(max_coefficient_distance(c3, sum(2, {{"YX", -2.0 * I}, {"XY", -2.0 * I}})), 1e-15);
}

TEST(PauliAlgebra, SiteCountMismatchThrows) {
    EXPECT_THROW(sum(1, {{"X", 1.0}}) * sum(2, {{"XX", 1.0}}), std::invalid_argument);
    EXPECT_THROW(commutator(sum(1, {{"X", 1.0}}), sum(2, {{"XX", 1.0}})), std::invalid_argument);
}

TEST(PauliAlgebra, ExhaustivePairsMatchKronecker) {
    double worst = 0;
    for (std::size_t n = 1; n <= 3; n++) {
        const auto strings = oracle::all_strings(n);
        std::vector<DenseOperator> mats;
        for (const auto &s : strings) {
            mats.push_back(oracle::kron_matrix(s));
        }
        for (std::size_t a = 0; a < strings.size(); a++) {
            for (std::size_t b = 0; b < strings.size(); b++) {
                auto pa = sum(n, {{strings[a], 1.0}});
                auto pb = sum(n, {{strings[b], 1.0}});
                worst = std::max(worst, oracle::max_abs_diff(oracle::kron_matrix(pa * pb), mats[a] * mats[b]));
                worst = std::max(
                    worst, oracle::max_abs_diff(
                               oracle::kron_matrix(commutator(pa, pb)), mats[a] * mats[b] - mats[b] * mats[a]));
            }
        }
    }
    EXPECT_LE(worst, 1e-12);
}

TEST(PauliAlgebra, CommutatorWithSelfVanishes) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; trial++) {
        auto a = oracle::random_sum(rng, 4, 8, trial % 2 == 0);
        EXPECT_TRUE(commutator(a, a).empty());
    }
}

TEST(PauliAlgebra, PruneDropsCancelledTerms) {
    auto a = sum(2, {{"XI", 1.0}, {"IZ", 1.0}});
    auto b = sum(2, {{"XI", -1.0}});
    auto c = a + b;
    EXPECT_EQ(c.size(), 1u);
    EXPECT_EQ(c.coefficient(PauliString::parse("XI")), Complex(0));
}

TEST(PauliAlgebra, AdjointAndHermiticity) {
    auto h = sum(2, {{"XY", 2.0}, {"ZI", -1.0}});
    EXPECT_TRUE(h.is_hermitian());
    auto a = sum(2, {{"XY", I}});
    EXPECT_FALSE(a.is_hermitian());
    EXPECT_LE(max_coefficient_distance(a.adjoint(), sum(2, {{"XY", -I}})), 1e-15);
}

TEST(OperatorNorm, Examples) {
    EXPECT_NEAR(operator_norm(sum(2, {{"ZI", 1.0}, {"IZ", 1.0}}), NormMode::exact_dense), 2.0, 1e-12);
    EXPECT_EQ(operator_norm(PauliSum(3), NormMode::exact_dense), 0.0);
    EXPECT_EQ(operator_norm(PauliSum(3), NormMode::one_norm_bound), 0.0);
    auto s = sum(2, {{"YX", -2.0 * I}, {"XY", -2.0 * I}});
    EXPECT_NEAR(operator_norm(s, NormMode::exact_dense), 4.0, 1e-12);
    EXPECT_NEAR(operator_norm(s, NormMode::one_norm_bound), 4.0, 1e-12);
}

TEST(OperatorNorm, DenseCapIsEnforced) {
    auto s = sum(5, {{"ZZZZZ", 1.0}});
    EXPECT_THROW(operator_norm(s, NormMode::exact_dense, 4), DenseCapExceeded);
    EXPECT_EQ(operator_norm(s, NormMode::one_norm_bound, 4), 1.0);
}

TEST(OperatorNorm, ExactNeverExceedsOneNorm) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::size_t> sites(1, 6);
    std::uniform_int_distribution<std::size_t> count(1, 10);
    for (int trial = 0; trial < 1000; trial++) {
        const auto n = sites(rng);
        auto s = oracle::random_sum(rng, n, std::min<std::size_t>(count(rng), (std::size_t{1} << (2 * n)) - 1), trial % 3 == 0);
        EXPECT_LE(operator_norm(s, NormMode::exact_dense), operator_norm(s, NormMode::one_norm_bound) * (1 + 1e-12));
    }
}

TEST(NormMode, ParsesBothSpellings) {
    EXPECT_EQ(parse_norm_mode("exact"), NormMode::exact_dense);
    EXPECT_EQ(parse_norm_mode("one-norm"), NormMode::one_norm_bound);
    EXPECT_THROW(parse_norm_mode("frobenius"), std::invalid_argument);
}

TEST(Extensiveness, Examples) {
    EXPECT_EQ(extensiveness(sum(2, {{"ZI", 1.0}, {"IZ", 1.0}})), 1.0);
    EXPECT_EQ(extensiveness(sum(2, {{"XX", 1.0}, {"ZI", 1.0}, {"IZ", 1.0}})), 2.0);
    EXPECT_EQ(extensiveness(PauliSum(2)), 0.0);
}

TEST(Locality, Examples) {
    EXPECT_EQ(locality(sum(3, {{"XXI", 1.0}, {"IIZ", 1.0}})), 2u);
    EXPECT_EQ(locality(PauliSum::identity(3)), 0u);
    auto h1 = sum(4, {{"XXII", 1.0}, {"IIXX", 1.0}});
    auto h2 = sum(4, {{"IZZI", 1.0}});
    auto nested = commutator(h1, commutator(h2, commutator(h1, h2)));
    EXPECT_LE(locality(nested), 4u);
}

TEST(Extensiveness, InvariantUnderReorderingAndSignFlips) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; trial++) {
        auto s = oracle::random_sum(rng, 5, 8, false);
        PauliSum flipped(5);
        std::bernoulli_distribution coin(0.5);
        // rebuild in reverse order with random sign/phase flips of unit modulus
        for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
            flipped.add(it->first, coin(rng) ? -it->second : it->second * I);
        }
        EXPECT_NEAR(extensiveness(flipped), extensiveness(s), 1e-12);
        EXPECT_EQ(locality(flipped), locality(s));
    }
}
