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

#include <boost/container/small_vector.hpp>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mpfkit {

using Complex = std::complex<double>;

inline constexpr double kDefaultPruneTolerance = 1e-14;
inline constexpr std::size_t kDefaultDenseCap = 12;

struct PauliProduct;

/// A Pauli string on `n_sites` qubits stored as paired X/Z bit masks.
///
/// Site j carries X^{x_j} Z^{z_j} up to the phase that makes it Hermitian:
/// (x,z) = (1,0) is X, (0,1) is Z and (1,1) is Y = i X Z.  Character j of the
/// textual form ("XIZY") is site j.
class PauliString {
   public:
    using Words = boost::container::small_vector<std::uint64_t, 1>;

    PauliString() = default;
    explicit PauliString(std::size_t n_sites);

    /// Parses a string over {I, X, Y, Z}; throws std::invalid_argument otherwise.
    static PauliString parse(std::string_view text);
    /// Single-site Pauli `pauli` in {I,X,Y,Z} at `site`.
    static PauliString single(std::size_t n_sites, std::size_t site, char pauli);

    std::size_t n_sites() const noexcept {
        return n_sites_;
    }
    bool x(std::size_t site) const noexcept;
    bool z(std::size_t site) const noexcept;
    char at(std::size_t site) const noexcept;
    void set(std::size_t site, char pauli);

    const Words &x_words() const noexcept {
        return x_;
    }
    const Words &z_words() const noexcept {
        return z_;
    }

    bool is_identity() const noexcept;
    /// Number of sites acted on nontrivially.
    std::size_t weight() const noexcept;
    std::vector<std::size_t> support() const;
    bool commutes_with(const PauliString &other) const;

    std::string str() const;

    friend bool operator==(const PauliString &a, const PauliString &b) noexcept;
    friend bool operator<(const PauliString &a, const PauliString &b) noexcept;

   private:
    friend PauliProduct multiply(const PauliString &a, const PauliString &b);

    std::size_t n_sites_ = 0;
    Words x_;
    Words z_;
};

/// Product of two Pauli strings: i^phase * string.
struct PauliProduct {
    int phase;  // exponent of i, in {0,1,2,3}
    PauliString string;
};

PauliProduct multiply(const PauliString &a, const PauliString &b);

/// Returns i^phase.
Complex phase_factor(int phase) noexcept;

/// A canonical sum of Pauli strings with complex coefficients.
///
/// At most one entry per string; entries with magnitude at or below the prune
/// tolerance are dropped after every arithmetic operation.
class PauliSum {
   public:
    using TermMap = std::map<PauliString, Complex>;

    explicit PauliSum(std::size_t n_sites, double prune_tolerance = kDefaultPruneTolerance);

    static PauliSum identity(std::size_t n_sites, Complex coeff = 1.0);
    static PauliSum from_string(const PauliString &s, Complex coeff = 1.0);
    /// Convenience constructor: {{"XX", 1.0}, {"ZI", -0.5}}.
    static PauliSum from_terms(std::size_t n_sites, const std::vector<std::pair<std::string, Complex>> &terms);

    std::size_t n_sites() const noexcept {
        return n_sites_;
    }
    double prune_tolerance() const noexcept {
        return prune_tolerance_;
    }
    std::size_t size() const noexcept {
        return terms_.size();
    }
    bool empty() const noexcept {
        return terms_.empty();
    }
    const TermMap &terms() const noexcept {
        return terms_;
    }
    /// Coefficient of `s`, zero when absent.
    Complex coefficient(const PauliString &s) const;

    /// Accumulates coeff * s without pruning; call prune() when done.
    void accumulate(const PauliString &s, Complex coeff);
    void add(const PauliString &s, Complex coeff);
    void prune();

    PauliSum adjoint() const;
    bool is_hermitian(double tol = 1e-10) const;
    /// Sum of |coeff|: a certified upper bound on the operator norm.
    double one_norm() const;

    PauliSum &operator+=(const PauliSum &other);
    PauliSum &operator-=(const PauliSum &other);
    PauliSum &operator*=(Complex scalar);

    friend PauliSum operator+(PauliSum a, const PauliSum &b) {
        a += b;
        return a;
    }
    friend PauliSum operator-(PauliSum a, const PauliSum &b) {
        a -= b;
        return a;
    }
    friend PauliSum operator*(PauliSum a, Complex s) {
        a *= s;
        return a;
    }
    friend PauliSum operator*(Complex s, PauliSum a) {
        a *= s;
        return a;
    }

    std::string str() const;

   private:
    std::size_t n_sites_;
    double prune_tolerance_;
    TermMap terms_;
};

PauliSum multiply(const PauliSum &a, const PauliSum &b);
PauliSum operator*(const PauliSum &a, const PauliSum &b);
/// ab - ba.  Only anticommuting string pairs contribute (2ab each).
PauliSum commutator(const PauliSum &a, const PauliSum &b);

/// Largest coefficient-wise deviation |a_P - b_P| over all strings.
double max_coefficient_distance(const PauliSum &a, const PauliSum &b);

enum class NormMode { exact_dense, one_norm_bound };

NormMode parse_norm_mode(std::string_view text);
std::string to_string(NormMode mode);

/// Operator norm.  exact_dense builds the matrix (requires n_sites <= dense_cap);
/// one_norm_bound returns the sum of coefficient magnitudes.
double operator_norm(const PauliSum &s, NormMode mode, std::size_t dense_cap = kDefaultDenseCap);

/// Max over sites of the summed |coeff| of the terms touching that site.
double extensiveness(const PauliSum &s);
/// Max support size over terms (0 for an empty or identity-only sum).
std::size_t locality(const PauliSum &s);

}  // namespace mpfkit
