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

#ifndef QDISCORD_BLOCH_H
#define QDISCORD_BLOCH_H

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "qdiscord/density_matrix.h"
#include "qdiscord/sym3.h"
#include "qdiscord/tensor.h"

namespace qdiscord {

/// Orthonormal Hermitian basis X_1..X_{d^2} of operators on C^d with
/// tr(X_i X_j) = delta_ij and X_1 = I/sqrt(d).
///
/// The standard basis is the normalized generalized Gell-Mann set: identity,
/// then for each pair j<k the symmetric and antisymmetric off-diagonal
/// elements, then the d-1 diagonal ones. For d = 2 this is
/// (I, sigma_x, sigma_y, sigma_z) / sqrt(2).
struct HermitianBasis {
    int d = 0;
    std::vector<ComplexMatrix> elements;

    static HermitianBasis standard(int d);
};

/// Expansion coefficients c_{i_1..i_N} = tr(rho X_{i_1} (x) ... (x) X_{i_N})
/// of a state in per-party orthonormal Hermitian bases. Tensor dims are
/// (d_1^2, ..., d_N^2). Index 0 in every mode is the identity element.
struct CoefficientTensor {
    std::vector<int> party_dims;
    RealTensor tensor;

    int parties() const noexcept { return static_cast<int>(party_dims.size()); }
    double norm_sq() const { return frobenius_norm_sq(tensor); }
};

/// Coefficients in the standard bases.
CoefficientTensor coefficient_tensor(const DensityMatrix &rho);
/// Throws DimensionError when a basis dimension differs from its party.
CoefficientTensor coefficient_tensor(const DensityMatrix &rho, std::span<const HermitianBasis> bases);

/// Inverse of coefficient_tensor. Positivity is not enforced.
DensityMatrix state_from_coefficients(const CoefficientTensor &c);
DensityMatrix state_from_coefficients(const CoefficientTensor &c, std::span<const HermitianBasis> bases);

/// Subset of parties (1-based, at most 31) stored as a bit mask. Ordered by
/// size first, then lexicographically by members.
class PartySet {
   public:
    PartySet() = default;
    explicit PartySet(std::uint32_t mask) : mask_(mask) {}
    PartySet(std::initializer_list<int> parties);
    static PartySet of(std::span<const int> parties);

    std::uint32_t mask() const noexcept { return mask_; }
    int size() const noexcept;
    bool contains(int party) const noexcept { return (mask_ >> (party - 1)) & 1u; }
    std::vector<int> members() const;

    bool operator==(const PartySet &) const = default;
    bool operator<(const PartySet &other) const;

   private:
    std::uint32_t mask_ = 0;
};

/// All subsets of {1..n} with at least `min_size` members that contain
/// `party` (or all of them when party == 0), in PartySet order.
std::vector<PartySet> party_subsets(int n, int min_size, int party = 0);

/// Bloch form of an N-qubit operator:
///   rho = 2^-N ( I + sum_k s^(k).sigma^(k) + sum_{|S|>=2} T^S . sigma^S ).
/// s(k) = <sigma^(k)>, and T^S holds the Pauli expectations on subset S with
/// one mode per member (ascending), each of size 3 in the order x, y, z.
class BlochDecomposition {
   public:
    /// All-zero decomposition, i.e. the maximally mixed state.
    explicit BlochDecomposition(int qubits);

    int qubits() const noexcept { return n_; }

    const Vec3 &s(int party) const;
    Vec3 &s(int party);
    const RealTensor &t(PartySet subset) const;
    RealTensor &t(PartySet subset);
    const std::map<PartySet, RealTensor> &correlations() const noexcept { return t_; }

    /// Full tensor of Pauli expectations, dims 4^N, index 0 = identity; the
    /// all-identity entry is 1.
    RealTensor expectation_tensor() const;
    /// Reads s and T from a 4^N expectation tensor (the identity entry is
    /// ignored).
    static BlochDecomposition from_expectations(const RealTensor &expectations);

   private:
    int n_;
    std::vector<Vec3> s_;
    std::map<PartySet, RealTensor> t_;
};

/// Throws DimensionError when a party is not a qubit.
BlochDecomposition bloch_decompose(const DensityMatrix &rho);
BlochDecomposition bloch_from_coefficients(const CoefficientTensor &c);
/// Standard-basis coefficients of the operator described by dec.
CoefficientTensor to_coefficient_tensor(const BlochDecomposition &dec);
/// Hermitian, unit trace; may be non-positive.
DensityMatrix reconstruct_state(const BlochDecomposition &dec);

/// 1 + sum ||s||^2 + sum ||T||^2.
double bloch_norm_sum(const BlochDecomposition &dec);

/// | ||C||^2 - 2^-N (1 + sum ||s||^2 + sum ||T||^2) |.
double check_norm_identity(const CoefficientTensor &c, const BlochDecomposition &dec);

}  // namespace qdiscord

#endif
