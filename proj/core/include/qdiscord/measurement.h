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

#ifndef QDISCORD_MEASUREMENT_H
#define QDISCORD_MEASUREMENT_H

#include <span>
#include <vector>

#include "qdiscord/bloch.h"
#include "qdiscord/density_matrix.h"
#include "qdiscord/discord.h"

namespace qdiscord {

/// Orthonormal basis {|l>} of party `party` (1-based) defining a von Neumann
/// measurement with projectors |l><l|.
class ProjectiveBasis {
   public:
    /// Throws ValidationError("orthonormality", ...) unless the kets are
    /// pairwise orthonormal within 1e-12 and there are exactly dim of them.
    ProjectiveBasis(int party, std::vector<ComplexVector> kets);

    /// Qubit basis {|+n>, |-n>} along the Bloch axis n (normalized here).
    static ProjectiveBasis qubit_axis(int party, const Vec3 &axis);
    static ProjectiveBasis computational(int party, int dim);
    /// Columns of a unitary.
    static ProjectiveBasis from_unitary(int party, const ComplexMatrix &u);

    int party() const noexcept { return party_; }
    int dim() const noexcept { return static_cast<int>(kets_.size()); }
    const std::vector<ComplexVector> &kets() const noexcept { return kets_; }

   private:
    int party_;
    std::vector<ComplexVector> kets_;
};

/// Non-selective measurement sum_l (I..P_l..I) rho (I..P_l..I).
DensityMatrix apply_projective_measurement(const DensityMatrix &rho, const ProjectiveBasis &basis);

/// Coefficients of the measured state, C x_k (A^t A).
CoefficientTensor optimal_post_measurement_state(const CoefficientTensor &c, const Isometry &a_tilde, int k);

/// Basis whose projectors have the isometry rows as standard-basis
/// coefficients. Each ket is the normalized column of its projector with the
/// largest diagonal entry, so the first nonzero amplitude is real positive.
ProjectiveBasis basis_from_isometry(const Isometry &a, int party);

/// sum_l p_l |l><l| (x) rho_l with |l> in slot k and rho_l given on the
/// remaining parties in ascending order.
DensityMatrix build_classical_quantum_state(int k, std::span<const double> probs, const ProjectiveBasis &basis,
                                            std::span<const DensityMatrix> conditionals);

}  // namespace qdiscord

#endif
