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

#include "qdiscord/density_matrix.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qdiscord/error.h"

namespace qdiscord {

namespace {

int total_dim(const std::vector<int> &dims) {
    long long d = 1;
    for (int x : dims) {
        if (x <= 0) throw DimensionError("party dimensions must be positive");
        d *= x;
        if (d > (1 << 20)) throw DimensionError("total dimension too large");
    }
    return static_cast<int>(d);
}

std::vector<int> digits(int flat, const std::vector<int> &dims) {
    std::vector<int> out(dims.size());
    for (std::size_t m = dims.size(); m-- > 0;) {
        out[m] = flat % dims[m];
        flat /= dims[m];
    }
    return out;
}

}  // namespace

DensityMatrix::DensityMatrix(std::vector<int> dims, ComplexMatrix m)
    : dims_(std::move(dims)), matrix_(std::move(m)) {}

DensityMatrix DensityMatrix::unchecked(std::vector<int> party_dims, ComplexMatrix matrix) {
    if (party_dims.empty()) throw DimensionError("a state needs at least one party");
    const int d = total_dim(party_dims);
    if (matrix.rows() != d || matrix.cols() != d) {
        std::ostringstream msg;
        msg << "matrix is " << matrix.rows() << "x" << matrix.cols() << " but party dims give " << d;
        throw DimensionError(msg.str());
    }
    return DensityMatrix(std::move(party_dims), std::move(matrix));
}

DensityMatrix DensityMatrix::from_matrix(std::vector<int> party_dims, ComplexMatrix matrix) {
    DensityMatrix rho = unchecked(std::move(party_dims), std::move(matrix));
    rho.validate();
    return rho;
}

bool DensityMatrix::all_qubits() const {
    return std::all_of(dims_.begin(), dims_.end(), [](int d) { return d == 2; });
}

std::optional<ValidationFailure> DensityMatrix::check() const {
    const auto n = matrix_.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const double err = std::abs(matrix_(i, j) - std::conj(matrix_(j, i)));
            if (!(err <= kHermiticityTol)) {
                std::ostringstream msg;
                msg << "entry (" << i << "," << j << ") differs from conj of (" << j << "," << i
                    << ") by " << err;
                return ValidationFailure{"hermiticity", msg.str()};
            }
        }
    }
    const Complex tr = matrix_.trace();
    if (!(std::abs(tr - Complex(1.0, 0.0)) <= kTraceTol)) {
        std::ostringstream msg;
        msg.precision(15);
        msg << "trace is " << tr.real();
        if (tr.imag() != 0.0) msg << (tr.imag() < 0 ? "-" : "+") << std::abs(tr.imag()) << "i";
        msg << ", expected 1";
        return ValidationFailure{"trace", msg.str()};
    }
    const ComplexMatrix herm = 0.5 * (matrix_ + matrix_.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (!(min_eig >= -kPositivityTol)) {
        std::ostringstream msg;
        msg << "minimum eigenvalue is " << min_eig;
        return ValidationFailure{"positivity", msg.str()};
    }
    return std::nullopt;
}

void DensityMatrix::validate() const {
    if (auto failure = check()) {
        throw ValidationError(failure->check, failure->detail);
    }
}

double DensityMatrix::purity() const {
    // tr(rho^2) = sum_ij rho_ij rho_ji
    return (matrix_.cwiseProduct(matrix_.transpose())).sum().real();
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const int> keep) {
    const auto &dims = rho.party_dims();
    const int n = rho.parties();
    if (keep.empty()) throw DimensionError("partial trace needs a non-empty set of kept parties");
    std::vector<bool> kept(n, false);
    for (int p : keep) {
        if (p < 1 || p > n) {
            throw DimensionError("party " + std::to_string(p) + " out of range 1.." + std::to_string(n));
        }
        if (kept[p - 1]) throw DimensionError("party " + std::to_string(p) + " listed twice");
        kept[p - 1] = true;
    }
    std::vector<int> kept_dims;
    for (int m = 0; m < n; ++m)
        if (kept[m]) kept_dims.push_back(dims[m]);
    const int dk = total_dim(kept_dims);

    ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
    const int d = rho.dim();
    std::vector<std::vector<int>> dig(d);
    std::vector<int> kept_flat(d);
    for (int i = 0; i < d; ++i) {
        dig[i] = digits(i, dims);
        int f = 0;
        for (int m = 0; m < n; ++m)
            if (kept[m]) f = f * dims[m] + dig[i][m];
        kept_flat[i] = f;
    }
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            bool match = true;
            for (int m = 0; m < n && match; ++m) {
                if (!kept[m] && dig[r][m] != dig[c][m]) match = false;
            }
            if (match) out(kept_flat[r], kept_flat[c]) += rho.matrix()(r, c);
        }
    }
    return DensityMatrix::unchecked(std::move(kept_dims), std::move(out));
}

DensityMatrix permute_parties(const DensityMatrix &rho, std::span<const int> order) {
    const auto &dims = rho.party_dims();
    const int n = rho.parties();
    if (static_cast<int>(order.size()) != n) throw DimensionError("permutation has wrong length");
    std::vector<int> sorted(order.begin(), order.end());
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i) {
        if (sorted[i] != i + 1) throw DimensionError("not a permutation of 1..N");
    }
    std::vector<int> new_dims(n);
    for (int j = 0; j < n; ++j) new_dims[j] = dims[order[j] - 1];

    const int d = rho.dim();
    std::vector<int> remap(d);
    for (int i = 0; i < d; ++i) {
        const auto dig = digits(i, dims);
        int f = 0;
        for (int j = 0; j < n; ++j) f = f * new_dims[j] + dig[order[j] - 1];
        remap[i] = f;
    }
    ComplexMatrix out(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) out(remap[r], remap[c]) = rho.matrix()(r, c);
    return DensityMatrix::unchecked(std::move(new_dims), std::move(out));
}

DensityMatrix apply_local_unitary(const DensityMatrix &rho, const ComplexMatrix &u, int party) {
    const auto &dims = rho.party_dims();
    if (party < 1 || party > rho.parties()) throw DimensionError("party out of range");
    if (u.rows() != dims[party - 1] || u.cols() != dims[party - 1]) {
        throw DimensionError("unitary does not match party dimension");
    }
    int left = 1, right = 1;
    for (int m = 0; m < party - 1; ++m) left *= dims[m];
    for (int m = party; m < rho.parties(); ++m) right *= dims[m];
    const ComplexMatrix full =
        kron(kron(ComplexMatrix::Identity(left, left), u), ComplexMatrix::Identity(right, right));
    return DensityMatrix::unchecked(dims, full * rho.matrix() * full.adjoint());
}

ComplexMatrix projector(const ComplexVector &ket) { return ket * ket.adjoint(); }

}  // namespace qdiscord
