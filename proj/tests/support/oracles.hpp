// Copyright 2026 The gaugeqc Authors
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

// Reference computations used only by tests. They deliberately avoid the
// library's eigensolver, embedding and exponential code paths.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "gaugeqc/linalg.hpp"

namespace gqc::testing {

/// sum_{k=0}^{terms-1} (i t H)^k / k!
inline ComplexMatrix expm_series(const ComplexMatrix& h, double t, int terms = 20) {
    const Complex it(0.0, t);
    ComplexMatrix term = ComplexMatrix::Identity(h.rows(), h.cols());
    ComplexMatrix sum = term;
    for (int k = 1; k < terms; ++k) {
        term = (it * h * term) / static_cast<double>(k);
        sum += term;
    }
    return sum;
}

/// exp(i t H) by scaling and squaring around the truncated series.
inline ComplexMatrix expm_scaled(const ComplexMatrix& h, double t) {
    const double norm = std::abs(t) * h.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    while (std::ldexp(norm, -squarings) > 0.25) ++squarings;
    ComplexMatrix e = expm_series(h, std::ldexp(t, -squarings), 24);
    for (int k = 0; k < squarings; ++k) e = e * e;
    return e;
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

inline std::vector<double> jacobi_eigenvalues(const ComplexMatrix& m) {
    std::vector<std::vector<double>> a(static_cast<std::size_t>(m.rows()),
                                       std::vector<double>(static_cast<std::size_t>(m.cols())));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).real();
    return jacobi_eigenvalues(std::move(a));
}

/// Column j of the result is the gate applied to basis vector |j>, built by
/// decoding j into bits, acting on the target bits and re-encoding.
inline ComplexMatrix brute_force_embed(const ComplexMatrix& gate, const std::vector<std::size_t>& targets,
                                       std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t k = targets.size();
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::vector<int> bits(n);
        for (std::size_t q = 0; q < n; ++q) bits[q] = static_cast<int>((col >> (n - 1 - q)) & 1U);
        std::size_t sub_in = 0;
        for (std::size_t j = 0; j < k; ++j) sub_in = (sub_in << 1) | static_cast<std::size_t>(bits[targets[j]]);
        for (std::size_t sub_out = 0; sub_out < (std::size_t{1} << k); ++sub_out) {
            std::vector<int> out_bits = bits;
            for (std::size_t j = 0; j < k; ++j) out_bits[targets[j]] = static_cast<int>((sub_out >> (k - 1 - j)) & 1U);
            std::size_t row = 0;
            for (std::size_t q = 0; q < n; ++q) row = (row << 1) | static_cast<std::size_t>(out_bits[q]);
            out(row, col) += gate(sub_out, sub_in);
        }
    }
    return out;
}

inline ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace gqc::testing
