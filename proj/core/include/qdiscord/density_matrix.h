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

#ifndef QDISCORD_DENSITY_MATRIX_H
#define QDISCORD_DENSITY_MATRIX_H

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qdiscord {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Entrywise tolerances of the density-matrix validator.
inline constexpr double kHermiticityTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPositivityTol = 1e-10;

struct ValidationFailure {
    std::string check;  // "hermiticity", "trace" or "positivity"
    std::string detail;
};

/// Operator on a tensor product of parties with dimensions party_dims.
///
/// `from_matrix` enforces the full state invariants (Hermitian, unit trace,
/// positive semidefinite). `unchecked` only enforces the shape; it exists for
/// reconstructions from measured or noisy data that have to be inspected
/// before anyone decides to reject them.
class DensityMatrix {
   public:
    static DensityMatrix from_matrix(std::vector<int> party_dims, ComplexMatrix matrix);
    static DensityMatrix unchecked(std::vector<int> party_dims, ComplexMatrix matrix);

    const std::vector<int> &party_dims() const noexcept { return dims_; }
    int parties() const noexcept { return static_cast<int>(dims_.size()); }
    int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
    const ComplexMatrix &matrix() const noexcept { return matrix_; }
    bool all_qubits() const;

    /// First failed invariant, if any.
    std::optional<ValidationFailure> check() const;
    /// Throws ValidationError naming the failed check.
    void validate() const;

    /// tr(rho^2).
    double purity() const;

   private:
    DensityMatrix(std::vector<int> dims, ComplexMatrix m);
    std::vector<int> dims_;
    ComplexMatrix matrix_;
};

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Reduced state on `keep` (1-based party labels, any order, no repeats);
/// the result lists the kept parties in ascending order.
DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const int> keep);

/// Reorders tensor factors: party j of the result is party order[j-1] of rho
/// (1-based labels).
DensityMatrix permute_parties(const DensityMatrix &rho, std::span<const int> order);

/// Applies U to party `party` (1-based): (I..U..I) rho (I..U..I)^dagger.
DensityMatrix apply_local_unitary(const DensityMatrix &rho, const ComplexMatrix &u, int party);

/// |psi><psi| for a normalized ket.
ComplexMatrix projector(const ComplexVector &ket);

}  // namespace qdiscord

#endif
