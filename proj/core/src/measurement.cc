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

#include "qdiscord/measurement.h"

#include <cmath>
#include <numeric>
#include <string>

#include "qdiscord/error.h"

namespace qdiscord {

ProjectiveBasis::ProjectiveBasis(int party, std::vector<ComplexVector> kets)
    : party_(party), kets_(std::move(kets)) {
    if (party_ < 1) throw DimensionError("party labels start at 1");
    const auto d = static_cast<Eigen::Index>(kets_.size());
    if (d < 1) throw DimensionError("basis needs at least one ket");
    for (Eigen::Index i = 0; i < d; ++i) {
        if (kets_[i].size() != d) throw DimensionError("ket length must equal the number of kets");
        for (Eigen::Index j = 0; j <= i; ++j) {
            const Complex overlap = kets_[j].dot(kets_[i]);
            const double expected = i == j ? 1.0 : 0.0;
            if (!(std::abs(overlap - expected) <= 1e-12)) {
                throw ValidationError("orthonormality", "<" + std::to_string(j + 1) + "|" +
                                                            std::to_string(i + 1) + "> = " +
                                                            std::to_string(std::abs(overlap)));
            }
        }
    }
}

ProjectiveBasis ProjectiveBasis::qubit_axis(int party, const Vec3 &axis) {
    const double len = std::sqrt(norm_sq(axis));
    if (!(len > 0)) throw ValidationError("orthonormality", "measurement axis must be non-zero");
    const double x = axis[0] / len, y = axis[1] / len, z = axis[2] / len;
    const double theta = std::acos(std::clamp(z, -1.0, 1.0));
    const double phi = std::atan2(y, x);
    ComplexVector up(2), down(2);
    up << std::cos(theta / 2), std::polar(std::sin(theta / 2), phi);
    down << std::sin(theta / 2), -std::polar(std::cos(theta / 2), phi);
    return ProjectiveBasis(party, {up, down});
}

ProjectiveBasis ProjectiveBasis::computational(int party, int dim) {
    return from_unitary(party, ComplexMatrix::Identity(dim, dim));
}

ProjectiveBasis ProjectiveBasis::from_unitary(int party, const ComplexMatrix &u) {
    std::vector<ComplexVector> kets;
    for (Eigen::Index c = 0; c < u.cols(); ++c) kets.push_back(u.col(c));
    return ProjectiveBasis(party, std::move(kets));
}

DensityMatrix apply_projective_measurement(const DensityMatrix &rho, const ProjectiveBasis &basis) {
    const auto &dims = rho.party_dims();
    const int k = basis.party();
    if (k > rho.parties()) throw DimensionError("measured party out of range");
    if (dims[k - 1] != basis.dim()) {
        throw DimensionError("basis dimension " + std::to_string(basis.dim()) + " does not match party " +
                             std::to_string(k) + " of dimension " + std::to_string(dims[k - 1]));
    }
    int left = 1, right = 1;
    for (int m = 0; m < k - 1; ++m) left *= dims[m];
    for (int m = k; m < rho.parties(); ++m) right *= dims[m];
    const ComplexMatrix id_left = ComplexMatrix::Identity(left, left);
    const ComplexMatrix id_right = ComplexMatrix::Identity(right, right);

    ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
    for (const auto &ket : basis.kets()) {
        const ComplexMatrix p = kron(kron(id_left, projector(ket)), id_right);
        out += p * rho.matrix() * p;
    }
    return DensityMatrix::unchecked(dims, std::move(out));
}

CoefficientTensor optimal_post_measurement_state(const CoefficientTensor &c, const Isometry &a_tilde, int k) {
    if (k < 1 || k > c.parties()) throw DimensionError("party out of range");
    if (a_tilde.d() != c.party_dims[k - 1]) throw DimensionError("isometry does not match party dimension");
    Isometry::validate(a_tilde.matrix());
    return {c.party_dims, n_mode_product(c.tensor, a_tilde.projector(), static_cast<std::size_t>(k))};
}

ProjectiveBasis basis_from_isometry(const Isometry &a, int party) {
    const int d = a.d();
    const HermitianBasis basis = HermitianBasis::standard(d);
    std::vector<ComplexVector> kets;
    for (int l = 0; l < d; ++l) {
        ComplexMatrix p = ComplexMatrix::Zero(d, d);
        for (int i = 0; i < d * d; ++i) p += a.matrix()(l, i) * basis.elements[i];
        Eigen::Index col = 0;
        p.diagonal().real().maxCoeff(&col);
        // For P = |v><v|, column j is v conj(v_j); dividing by sqrt(P_jj)
        // gives v with v_j real positive.
        ComplexVector ket = p.col(col) / std::sqrt(p(col, col).real());
        // Fix the phase on the first nonzero amplitude.
        for (Eigen::Index i = 0; i < d; ++i) {
            if (std::abs(ket(i)) > 1e-12) {
                ket *= std::conj(ket(i)) / std::abs(ket(i));
                break;
            }
        }
        kets.push_back(ket.normalized());
    }
    // Rows of a valid isometry give orthonormal kets only up to rounding;
    // re-orthonormalize with Gram-Schmidt in row order.
    for (std::size_t i = 0; i < kets.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) kets[i] -= kets[j].dot(kets[i]) * kets[j];
        kets[i].normalize();
    }
    return ProjectiveBasis(party, std::move(kets));
}

DensityMatrix build_classical_quantum_state(int k, std::span<const double> probs, const ProjectiveBasis &basis,
                                            std::span<const DensityMatrix> conditionals) {
    if (probs.size() != static_cast<std::size_t>(basis.dim()) || conditionals.size() != probs.size()) {
        throw DimensionError("need one probability and one conditional state per basis ket");
    }
    double total = 0;
    for (double p : probs) {
        if (!(p >= 0)) throw ValidationError("distribution", "probabilities must be non-negative");
        total += p;
    }
    if (!(std::abs(total - 1) <= 1e-12)) {
        throw ValidationError("distribution", "probabilities sum to " + std::to_string(total));
    }
    const auto &rest_dims = conditionals.front().party_dims();
    for (const auto &cond : conditionals) {
        if (cond.party_dims() != rest_dims) throw DimensionError("conditionals must share party dims");
        cond.validate();
    }
    const int n = static_cast<int>(rest_dims.size()) + 1;
    if (k < 1 || k > n) throw DimensionError("measured party out of range");

    // Build with the classical party first, then move it to slot k.
    ComplexMatrix sum = ComplexMatrix::Zero(basis.dim() * conditionals.front().dim(),
                                            basis.dim() * conditionals.front().dim());
    for (std::size_t l = 0; l < probs.size(); ++l) {
        sum += probs[l] * kron(projector(basis.kets()[l]), conditionals[l].matrix());
    }
    std::vector<int> dims{basis.dim()};
    dims.insert(dims.end(), rest_dims.begin(), rest_dims.end());
    const DensityMatrix front = DensityMatrix::unchecked(dims, std::move(sum));

    // New party j comes from old party order[j-1]: slot k takes old party 1.
    std::vector<int> order;
    for (int j = 1; j <= n; ++j) {
        if (j < k) order.push_back(j + 1);
        else if (j == k) order.push_back(1);
        else order.push_back(j);
    }
    DensityMatrix out = permute_parties(front, order);
    out.validate();
    return out;
}

}  // namespace qdiscord
