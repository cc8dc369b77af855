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

#include "mpfkit/dense.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

#include "mpfkit/errors.hpp"

namespace mpfkit {

namespace {

// Bit masks in the basis-index convention: site j <-> bit (n-1-j).
struct BasisMasks {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
};

BasisMasks basis_masks(const PauliString &s) {
    BasisMasks m;
    const std::size_t n = s.n_sites();
    for (std::size_t j = 0; j < n; j++) {
        std::uint64_t bit = std::uint64_t{1} << (n - 1 - j);
        if (s.x(j)) {
            m.x |= bit;
        }
        if (s.z(j)) {
            m.z |= bit;
        }
    }
    return m;
}

}  // namespace

void check_dense_cap(std::size_t n_sites, std::size_t dense_cap) {
    if (n_sites > dense_cap || n_sites > 30) {
        throw DenseCapExceeded(n_sites, dense_cap);
    }
}

DenseOperator identity_operator(std::size_t n_sites) {
    const Eigen::Index dim = Eigen::Index{1} << n_sites;
    return DenseOperator::Identity(dim, dim);
}

DenseOperator from_pauli_sum(const PauliSum &s, std::size_t dense_cap) {
    check_dense_cap(s.n_sites(), dense_cap);
    const std::uint64_t dim = std::uint64_t{1} << s.n_sites();
    DenseOperator out = DenseOperator::Zero(Eigen::Index(dim), Eigen::Index(dim));
    for (const auto &[str, coeff] : s.terms()) {
        auto m = basis_masks(str);
        // P|c> = i^{|x&z|} (-1)^{|z&c|} |c ^ x>
        Complex base = coeff * phase_factor(std::popcount(m.x & m.z));
        for (std::uint64_t c = 0; c < dim; c++) {
            double sign = (std::popcount(m.z & c) & 1) ? -1.0 : 1.0;
            out(Eigen::Index(c ^ m.x), Eigen::Index(c)) += sign * base;
        }
    }
    return out;
}

PauliSum pauli_decompose(const DenseOperator &a, double prune_tolerance) {
    const auto dim = std::uint64_t(a.rows());
    if (a.rows() != a.cols() || dim == 0 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("pauli_decompose needs a square matrix of power-of-two dimension");
    }
    const std::size_t n = std::size_t(std::countr_zero(dim));
    if (n == 0) {
        throw std::invalid_argument("pauli_decompose needs at least one qubit");
    }
    PauliSum out(n, prune_tolerance);
    const double scale = 1.0 / double(dim);
    for (std::uint64_t xm = 0; xm < dim; xm++) {
        for (std::uint64_t zm = 0; zm < dim; zm++) {
            // Tr(P^dagger A) = sum_c conj(P_{c^x, c}) A_{c^x, c}
            Complex acc = 0;
            for (std::uint64_t c = 0; c < dim; c++) {
                double sign = (std::popcount(zm & c) & 1) ? -1.0 : 1.0;
                acc += sign * a(Eigen::Index(c ^ xm), Eigen::Index(c));
            }
            acc *= std::conj(phase_factor(std::popcount(xm & zm))) * scale;
            if (std::abs(acc) <= prune_tolerance) {
                continue;
            }
            PauliString s(n);
            for (std::size_t j = 0; j < n; j++) {
                std::uint64_t bit = std::uint64_t{1} << (n - 1 - j);
                bool xb = xm & bit;
                bool zb = zm & bit;
                s.set(j, xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I'));
            }
            out.accumulate(s, acc);
        }
    }
    out.prune();
    return out;
}

bool is_hermitian(const DenseOperator &a, double tol) {
    return a.rows() == a.cols() && (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_anti_hermitian(const DenseOperator &a, double tol) {
    return a.rows() == a.cols() && (a + a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

HermitianExponential::HermitianExponential(const DenseOperator &h, double hermitian_tol) {
    if (h.rows() != h.cols()) {
        throw std::invalid_argument("generator must be square");
    }
    if (h.size() > 0 && !is_hermitian(h, hermitian_tol * std::max(1.0, h.cwiseAbs().maxCoeff()))) {
        throw std::invalid_argument("generator is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigendecomposition failed");
    }
    vectors_ = solver.eigenvectors();
    values_ = solver.eigenvalues();
}

DenseOperator HermitianExponential::operator()(double t) const {
    Eigen::VectorXcd phases(values_.size());
    for (Eigen::Index k = 0; k < values_.size(); k++) {
        phases(k) = std::polar(1.0, -values_(k) * t);
    }
    return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

DenseOperator expm_hermitian_times_minus_i(const DenseOperator &h, double tau) {
    return HermitianExponential(h)(tau);
}

double spectral_norm(const DenseOperator &a) {
    if (a.size() == 0) {
        return 0.0;
    }
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    if (a.rows() == a.cols()) {
        if (is_hermitian(a, 1e-13 * scale)) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
            return solver.eigenvalues().cwiseAbs().maxCoeff();
        }
        if (is_anti_hermitian(a, 1e-13 * scale)) {
            Eigen::MatrixXcd h = Complex(0, 1) * a;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
            return solver.eigenvalues().cwiseAbs().maxCoeff();
        }
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
    return svd.singularValues()(0);
}

DenseOperator matrix_power(const DenseOperator &a, std::uint64_t r) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("matrix_power needs a square matrix");
    }
    DenseOperator result = DenseOperator::Identity(a.rows(), a.cols());
    DenseOperator base = a;
    while (r > 0) {
        if (r & 1u) {
            result = (result * base).eval();
        }
        r >>= 1;
        if (r > 0) {
            base = (base * base).eval();
        }
    }
    return result;
}

bool principal_log(const DenseOperator &u, double branch_margin, DenseOperator &out) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(u, false);
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); k++) {
        auto lambda = solver.eigenvalues()(k);
        if (std::abs(lambda) < 1e-300 || std::abs(std::arg(lambda)) > std::numbers::pi - branch_margin) {
            return false;
        }
    }
    out = u.log();
    return true;
}

LogSeriesFit log_series_fit(std::span<const LogSample> samples, int max_order, int fit_degree, double branch_margin) {
    if (max_order < 1) {
        throw std::invalid_argument("max_order must be at least 1");
    }
    const int degree = std::max(max_order, fit_degree);
    if (samples.empty()) {
        throw std::invalid_argument("log_series_fit needs samples");
    }
    const Eigen::Index dim = samples.front().value.rows();
    if (dim > 16) {
        throw std::invalid_argument("log_series_fit is limited to dimension 16");
    }

    std::vector<double> taus;
    std::vector<DenseOperator> logs;
    LogSeriesFit fit;
    double tau_scale = 0;
    for (const auto &sample : samples) {
        if (sample.value.rows() != dim || sample.value.cols() != dim) {
            throw std::invalid_argument("log_series_fit samples have inconsistent dimensions");
        }
        DenseOperator log_u;
        if (sample.tau == 0.0 || !principal_log(sample.value, branch_margin, log_u)) {
            fit.samples_rejected++;
            continue;
        }
        taus.push_back(sample.tau);
        logs.push_back(Complex(0, 1) * log_u);
        tau_scale = std::max(tau_scale, std::abs(sample.tau));
    }
    if (int(taus.size()) < degree) {
        throw std::invalid_argument(
            "log_series_fit: only " + std::to_string(taus.size()) + " usable samples for degree " +
            std::to_string(degree));
    }
    fit.samples_used = taus.size();

    // Vandermonde in the scaled variable u = tau / tau_scale, columns u^1..u^degree.
    const Eigen::Index rows = Eigen::Index(taus.size());
    Eigen::MatrixXd vander(rows, degree);
    for (Eigen::Index s = 0; s < rows; s++) {
        double u = taus[std::size_t(s)] / tau_scale;
        double power = 1.0;
        for (int q = 0; q < degree; q++) {
            power *= u;
            vander(s, q) = power;
        }
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(vander);

    std::vector<DenseOperator> coeffs(std::size_t(degree), DenseOperator::Zero(dim, dim));
    Eigen::VectorXcd rhs(rows);
    for (Eigen::Index r = 0; r < dim; r++) {
        for (Eigen::Index c = 0; c < dim; c++) {
            for (Eigen::Index s = 0; s < rows; s++) {
                rhs(s) = logs[std::size_t(s)](r, c);
            }
            Eigen::VectorXd re = qr.solve(rhs.real());
            Eigen::VectorXd im = qr.solve(rhs.imag());
            for (int q = 0; q < degree; q++) {
                coeffs[std::size_t(q)](r, c) = Complex(re(q), im(q)) / std::pow(tau_scale, q + 1);
            }
        }
    }
    for (int q = 0; q < max_order; q++) {
        fit.coefficients.push_back(pauli_decompose(coeffs[std::size_t(q)], 1e-13));
    }
    return fit;
}

}  // namespace mpfkit
