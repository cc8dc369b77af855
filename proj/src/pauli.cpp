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

#include "mpfkit/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mpfkit/dense.hpp"

namespace mpfkit {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t n_sites) {
    return (n_sites + kWordBits - 1) / kWordBits;
}

void require_same_sites(std::size_t a, std::size_t b) {
    if (a != b) {
        throw std::invalid_argument(
            "site-count mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

PauliString::PauliString(std::size_t n_sites) : n_sites_(n_sites), x_(word_count(n_sites), 0), z_(word_count(n_sites), 0) {
}

PauliString PauliString::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("Pauli string must have at least one site");
    }
    PauliString result(text.size());
    for (std::size_t k = 0; k < text.size(); k++) {
        result.set(k, text[k]);
    }
    return result;
}

PauliString PauliString::single(std::size_t n_sites, std::size_t site, char pauli) {
    if (site >= n_sites) {
        throw std::invalid_argument("site index out of range");
    }
    PauliString result(n_sites);
    result.set(site, pauli);
    return result;
}

bool PauliString::x(std::size_t site) const noexcept {
    return (x_[site / kWordBits] >> (site % kWordBits)) & 1u;
}

bool PauliString::z(std::size_t site) const noexcept {
    return (z_[site / kWordBits] >> (site % kWordBits)) & 1u;
}

char PauliString::at(std::size_t site) const noexcept {
    static constexpr char kChars[4] = {'I', 'X', 'Z', 'Y'};
    return kChars[int(x(site)) | (int(z(site)) << 1)];
}

void PauliString::set(std::size_t site, char pauli) {
    if (site >= n_sites_) {
        throw std::invalid_argument("site index out of range");
    }
    bool xb, zb;
    switch (pauli) {
        case 'I':
        case '_':
            xb = false;
            zb = false;
            break;
        case 'X':
            xb = true;
            zb = false;
            break;
        case 'Y':
            xb = true;
            zb = true;
            break;
        case 'Z':
            xb = false;
            zb = true;
            break;
        default:
            throw std::invalid_argument(std::string("not a Pauli character: '") + pauli + "'");
    }
    std::uint64_t mask = std::uint64_t{1} << (site % kWordBits);
    auto &xw = x_[site / kWordBits];
    auto &zw = z_[site / kWordBits];
    xw = xb ? (xw | mask) : (xw & ~mask);
    zw = zb ? (zw | mask) : (zw & ~mask);
}

bool PauliString::is_identity() const noexcept {
    for (std::size_t w = 0; w < x_.size(); w++) {
        if (x_[w] | z_[w]) {
            return false;
        }
    }
    return true;
}

std::size_t PauliString::weight() const noexcept {
    std::size_t total = 0;
    for (std::size_t w = 0; w < x_.size(); w++) {
        total += std::popcount(x_[w] | z_[w]);
    }
    return total;
}

std::vector<std::size_t> PauliString::support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < x_.size(); w++) {
        std::uint64_t bits = x_[w] | z_[w];
        while (bits) {
            out.push_back(w * kWordBits + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

bool PauliString::commutes_with(const PauliString &other) const {
    require_same_sites(n_sites_, other.n_sites_);
    unsigned parity = 0;
    for (std::size_t w = 0; w < x_.size(); w++) {
        parity ^= std::popcount((x_[w] & other.z_[w]) ^ (z_[w] & other.x_[w])) & 1u;
    }
    return parity == 0;
}

std::string PauliString::str() const {
    std::string out(n_sites_, 'I');
    for (std::size_t k = 0; k < n_sites_; k++) {
        out[k] = at(k);
    }
    return out;
}

bool operator==(const PauliString &a, const PauliString &b) noexcept {
    return a.n_sites_ == b.n_sites_ && a.x_ == b.x_ && a.z_ == b.z_;
}

bool operator<(const PauliString &a, const PauliString &b) noexcept {
    if (a.n_sites_ != b.n_sites_) {
        return a.n_sites_ < b.n_sites_;
    }
    for (std::size_t w = 0; w < a.x_.size(); w++) {
        if (a.x_[w] != b.x_[w]) {
            return a.x_[w] < b.x_[w];
        }
        if (a.z_[w] != b.z_[w]) {
            return a.z_[w] < b.z_[w];
        }
    }
    return false;
}

PauliProduct multiply(const PauliString &a, const PauliString &b) {
    require_same_sites(a.n_sites_, b.n_sites_);
    // P = i^{|x&z|} X^x Z^z, and Z^z1 X^x2 = (-1)^{|z1&x2|} X^x2 Z^z1.
    PauliProduct out{0, PauliString(a.n_sites_)};
    int exponent = 0;
    for (std::size_t w = 0; w < a.x_.size(); w++) {
        std::uint64_t x3 = a.x_[w] ^ b.x_[w];
        std::uint64_t z3 = a.z_[w] ^ b.z_[w];
        exponent += std::popcount(a.x_[w] & a.z_[w]);
        exponent += std::popcount(b.x_[w] & b.z_[w]);
        exponent += 2 * std::popcount(a.z_[w] & b.x_[w]);
        exponent -= std::popcount(x3 & z3);
        out.string.x_[w] = x3;
        out.string.z_[w] = z3;
    }
    out.phase = ((exponent % 4) + 4) % 4;
    return out;
}

Complex phase_factor(int phase) noexcept {
    switch (((phase % 4) + 4) % 4) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

PauliSum::PauliSum(std::size_t n_sites, double prune_tolerance) : n_sites_(n_sites), prune_tolerance_(prune_tolerance) {
    if (n_sites == 0) {
        throw std::invalid_argument("PauliSum needs at least one site");
    }
}

PauliSum PauliSum::identity(std::size_t n_sites, Complex coeff) {
    PauliSum out(n_sites);
    out.add(PauliString(n_sites), coeff);
    return out;
}

PauliSum PauliSum::from_string(const PauliString &s, Complex coeff) {
    PauliSum out(s.n_sites());
    out.add(s, coeff);
    return out;
}

PauliSum PauliSum::from_terms(std::size_t n_sites, const std::vector<std::pair<std::string, Complex>> &terms) {
    PauliSum out(n_sites);
    for (const auto &[text, coeff] : terms) {
        auto s = PauliString::parse(text);
        require_same_sites(n_sites, s.n_sites());
        out.accumulate(s, coeff);
    }
    out.prune();
    return out;
}

Complex PauliSum::coefficient(const PauliString &s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Complex{} : it->second;
}

void PauliSum::accumulate(const PauliString &s, Complex coeff) {
    require_same_sites(n_sites_, s.n_sites());
    auto [it, inserted] = terms_.try_emplace(s, coeff);
    if (!inserted) {
        it->second += coeff;
    }
}

void PauliSum::add(const PauliString &s, Complex coeff) {
    require_same_sites(n_sites_, s.n_sites());
    auto [it, inserted] = terms_.try_emplace(s, coeff);
    if (!inserted) {
        it->second += coeff;
    }
    if (std::abs(it->second) <= prune_tolerance_) {
        terms_.erase(it);
    }
}

void PauliSum::prune() {
    std::erase_if(terms_, [&](const auto &kv) { return std::abs(kv.second) <= prune_tolerance_; });
}

PauliSum PauliSum::adjoint() const {
    PauliSum out(n_sites_, prune_tolerance_);
    for (const auto &[s, c] : terms_) {
        out.terms_.emplace_hint(out.terms_.end(), s, std::conj(c));
    }
    return out;
}

bool PauliSum::is_hermitian(double tol) const {
    for (const auto &[s, c] : terms_) {
        if (std::abs(c.imag()) > tol) {
            return false;
        }
    }
    return true;
}

double PauliSum::one_norm() const {
    double total = 0;
    for (const auto &[s, c] : terms_) {
        total += std::abs(c);
    }
    return total;
}

PauliSum &PauliSum::operator+=(const PauliSum &other) {
    require_same_sites(n_sites_, other.n_sites_);
    for (const auto &[s, c] : other.terms_) {
        accumulate(s, c);
    }
    prune();
    return *this;
}

PauliSum &PauliSum::operator-=(const PauliSum &other) {
    require_same_sites(n_sites_, other.n_sites_);
    for (const auto &[s, c] : other.terms_) {
        accumulate(s, -c);
    }
    prune();
    return *this;
}

PauliSum &PauliSum::operator*=(Complex scalar) {
    for (auto &[s, c] : terms_) {
        c *= scalar;
    }
    prune();
    return *this;
}

std::string PauliSum::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    out.precision(12);
    bool first = true;
    for (const auto &[s, c] : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        out << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)*" << s.str();
    }
    return out.str();
}

PauliSum multiply(const PauliSum &a, const PauliSum &b) {
    require_same_sites(a.n_sites(), b.n_sites());
    PauliSum out(a.n_sites(), a.prune_tolerance());
    for (const auto &[sa, ca] : a.terms()) {
        for (const auto &[sb, cb] : b.terms()) {
            auto prod = multiply(sa, sb);
            out.accumulate(prod.string, phase_factor(prod.phase) * ca * cb);
        }
    }
    out.prune();
    return out;
}

PauliSum operator*(const PauliSum &a, const PauliSum &b) {
    return multiply(a, b);
}

PauliSum commutator(const PauliSum &a, const PauliSum &b) {
    require_same_sites(a.n_sites(), b.n_sites());
    PauliSum out(a.n_sites(), a.prune_tolerance());
    for (const auto &[sa, ca] : a.terms()) {
        for (const auto &[sb, cb] : b.terms()) {
            if (sa.commutes_with(sb)) {
                continue;
            }
            auto prod = multiply(sa, sb);
            out.accumulate(prod.string, 2.0 * phase_factor(prod.phase) * ca * cb);
        }
    }
    out.prune();
    return out;
}

double max_coefficient_distance(const PauliSum &a, const PauliSum &b) {
    require_same_sites(a.n_sites(), b.n_sites());
    double worst = 0;
    for (const auto &[s, c] : a.terms()) {
        worst = std::max(worst, std::abs(c - b.coefficient(s)));
    }
    for (const auto &[s, c] : b.terms()) {
        if (a.terms().find(s) == a.terms().end()) {
            worst = std::max(worst, std::abs(c));
        }
    }
    return worst;
}

NormMode parse_norm_mode(std::string_view text) {
    if (text == "exact" || text == "exact_dense" || text == "exact-dense") {
        return NormMode::exact_dense;
    }
    if (text == "one-norm" || text == "one_norm" || text == "one_norm_bound") {
        return NormMode::one_norm_bound;
    }
    throw std::invalid_argument("unknown norm mode '" + std::string(text) + "' (expected exact or one-norm)");
}

std::string to_string(NormMode mode) {
    return mode == NormMode::exact_dense ? "exact" : "one-norm";
}

double operator_norm(const PauliSum &s, NormMode mode, std::size_t dense_cap) {
    if (s.empty()) {
        return 0.0;
    }
    if (mode == NormMode::one_norm_bound) {
        return s.one_norm();
    }
    return spectral_norm(from_pauli_sum(s, dense_cap));
}

double extensiveness(const PauliSum &s) {
    std::vector<double> per_site(s.n_sites(), 0.0);
    for (const auto &[str, c] : s.terms()) {
        double mag = std::abs(c);
        for (auto site : str.support()) {
            per_site[site] += mag;
        }
    }
    return per_site.empty() ? 0.0 : *std::max_element(per_site.begin(), per_site.end());
}

std::size_t locality(const PauliSum &s) {
    std::size_t k = 0;
    for (const auto &[str, c] : s.terms()) {
        k = std::max(k, str.weight());
    }
    return k;
}

}  // namespace mpfkit
