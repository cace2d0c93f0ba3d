// Copyright 2026 The qdiscord Authors
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

#ifndef QDISCORD_TESTS_TEST_SUPPORT_H
#define QDISCORD_TESTS_TEST_SUPPORT_H

// Reference implementations used as oracles in the tests. Everything here is
// written directly against Eigen and nested loops and shares no code with the
// library beyond its value types.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qdiscord/density_matrix.h"
#include "qdiscord/tensor.h"

namespace qdiscord::testing {

using Cd = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

inline CMat pauli(char p) {
    CMat m(2, 2);
    const Cd i(0, 1);
    switch (p) {
        case 'I': m << 1, 0, 0, 1; break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, -i, i, 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: throw std::invalid_argument("bad Pauli letter");
    }
    return m;
}

inline CMat kron_ref(const CMat &a, const CMat &b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

/// Pauli string with the first letter acting on qubit 1 (most significant).
inline CMat pauli_string(const std::string &label) {
    CMat m = CMat::Identity(1, 1);
    for (char c : label) m = kron_ref(m, pauli(c));
    return m;
}

inline double expectation(const CMat &rho, const std::string &label) {
    return (pauli_string(label) * rho).trace().real();
}

inline CVec basis_ket(int dim, int index) {
    CVec v = CVec::Zero(dim);
    v(index) = 1;
    return v;
}

inline CMat outer(const CVec &v) { return v * v.adjoint(); }

inline CVec ghz_ket(int n) {
    const int d = 1 << n;
    return (basis_ket(d, 0) + basis_ket(d, d - 1)) / std::sqrt(2.0);
}

inline CVec w_ket(int n) {
    CVec v = CVec::Zero(1 << n);
    for (int q = 0; q < n; ++q) v(1 << q) = 1.0 / std::sqrt(static_cast<double>(n));
    return v;
}

/// Entrywise partial trace by index arithmetic; `keep` lists 1-based parties.
inline CMat partial_trace_ref(const CMat &rho, const std::vector<int> &dims, const std::vector<int> &keep) {
    const int n = static_cast<int>(dims.size());
    std::vector<bool> kept(n, false);
    for (int k : keep) kept[k - 1] = true;
    int dk = 1;
    for (int m = 0; m < n; ++m)
        if (kept[m]) dk *= dims[m];
    CMat out = CMat::Zero(dk, dk);
    const int d = static_cast<int>(rho.rows());
    auto digits = [&](int flat) {
        std::vector<int> idx(n);
        for (int m = n - 1; m >= 0; --m) {
            idx[m] = flat % dims[m];
            flat /= dims[m];
        }
        return idx;
    };
    for (int r = 0; r < d; ++r) {
        const auto ri = digits(r);
        for (int c = 0; c < d; ++c) {
            const auto ci = digits(c);
            bool diagonal_in_traced = true;
            int rk = 0, ck = 0;
            for (int m = 0; m < n; ++m) {
                if (kept[m]) {
                    rk = rk * dims[m] + ri[m];
                    ck = ck * dims[m] + ci[m];
                } else if (ri[m] != ci[m]) {
                    diagonal_in_traced = false;
                }
            }
            if (diagonal_in_traced) out(rk, ck) += rho(r, c);
        }
    }
    return out;
}

/// (t x_n A)_{i1..j..iN} = sum_{i_n} t_{i1..i_n..iN} a_{j i_n}, by brute force
/// over every output and summation index.
inline RealTensor n_mode_product_ref(const RealTensor &t, const Eigen::MatrixXd &a, int mode) {
    std::vector<std::size_t> out_dims = t.dims();
    out_dims[mode - 1] = static_cast<std::size_t>(a.rows());
    RealTensor out(out_dims);
    for (std::size_t f = 0; f < out.size(); ++f) {
        std::vector<std::size_t> idx = out.multi_index(f);
        const std::size_t j = idx[mode - 1];
        double sum = 0;
        for (std::size_t i = 0; i < t.dims()[mode - 1]; ++i) {
            idx[mode - 1] = i;
            sum += t(idx) * a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i));
        }
        idx[mode - 1] = j;
        out(idx) = sum;
    }
    return out;
}

inline RealTensor random_tensor(std::mt19937_64 &rng, std::vector<std::size_t> dims) {
    std::normal_distribution<double> g;
    RealTensor t(std::move(dims));
    for (std::size_t f = 0; f < t.size(); ++f) t.data()[f] = g(rng);
    return t;
}

inline Eigen::MatrixXd random_matrix(std::mt19937_64 &rng, int rows, int cols) {
    std::normal_distribution<double> g;
    Eigen::MatrixXd m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = g(rng);
    return m;
}

/// rows x cols matrix with orthonormal rows (rows <= cols).
inline Eigen::MatrixXd random_row_isometry(std::mt19937_64 &rng, int rows, int cols) {
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(random_matrix(rng, cols, cols)).householderQ();
    return q.topRows(rows);
}

/// Squared Hilbert-Schmidt distance between rho and its measurement in the
/// kets on 1-based party k, computed with explicit full-size projectors.
inline double measured_distance_ref(const CMat &rho, const std::vector<int> &dims, int k, const std::vector<CVec> &kets) {
    int left = 1, right = 1;
    for (int m = 0; m < k - 1; ++m) left *= dims[m];
    for (int m = k; m < static_cast<int>(dims.size()); ++m) right *= dims[m];
    CMat measured = CMat::Zero(rho.rows(), rho.cols());
    for (const CVec &ket : kets) {
        const CMat p = kron_ref(kron_ref(CMat::Identity(left, left), outer(ket)), CMat::Identity(right, right));
        measured += p * rho * p;
    }
    return (rho - measured).squaredNorm();
}

inline bool near_matrix(const CMat &a, const CMat &b, double tol) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace qdiscord::testing

#endif
