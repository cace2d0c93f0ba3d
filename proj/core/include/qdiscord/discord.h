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

#ifndef QDISCORD_DISCORD_H
#define QDISCORD_DISCORD_H

#include <cstdint>
#include <vector>

#include "qdiscord/bloch.h"
#include "qdiscord/density_matrix.h"
#include "qdiscord/sym3.h"
#include "qdiscord/tensor.h"

namespace qdiscord {

/// d x d^2 real matrix whose row l holds the standard-basis coefficients of a
/// rank-1 projector |l><l|, a_{li} = <l|X_i|l>, for an orthonormal basis
/// {|l>} of the measured party.
class Isometry {
   public:
    Isometry() = default;
    /// Checks the invariants below; throws ValidationError("isometry", ...).
    explicit Isometry(RealMatrix rows);

    int d() const noexcept { return static_cast<int>(rows_.rows()); }
    const RealMatrix &matrix() const noexcept { return rows_; }
    /// A^t A, the orthogonal projector used for the post-measurement state.
    RealMatrix projector() const { return rows_.transpose() * rows_; }

    /// A A^t = I within 1e-10, a_{l1} = 1/sqrt(d), column sums equal tr X_i.
    static void validate(const RealMatrix &rows);

   private:
    RealMatrix rows_;
};

/// Rows (1, e)/sqrt(2) and (1, -e)/sqrt(2): the z-ordered projectors
/// (I +- e.sigma)/2. Throws ValidationError when |e| != 1 within 1e-10.
Isometry optimal_isometry(const Vec3 &e_max);

/// Isometry rows for an orthonormal set of kets in the standard basis.
Isometry isometry_from_kets(const std::vector<ComplexVector> &kets);

struct DiscordReport {
    int k = 0;
    double value = 0;
    Sym3 g;
    double eta_max = 0;
    Vec3 e_max{};
    Isometry a_tilde;
    double norm_c_sq = 0;
};

/// G^(k) = s s^t + sum over subsets S containing k of T^S_(k) T^S_(k)^t, where
/// T^S_(k) is the mode-k unfolding (3 x 3^{|S|-1}).
Sym3 build_g_matrix(const BlochDecomposition &dec, int k);

/// Closed-form D_k of an N-qubit operator:
///   2^-N ( ||s^(k)||^2 + sum_{S containing k} ||T^S||^2 - eta_max(G^(k)) ).
DiscordReport discord_qubit_closed_form(const BlochDecomposition &dec, int k);

/// ||C||^2 - ||C x_k A||^2: the squared distance between the state and its
/// image under the measurement encoded by A. Upper-bounds D_k.
double discord_from_isometry(const CoefficientTensor &c, const Isometry &a, int k);

/// Two-qubit formula 1/4 (||x||^2 + ||T||^2 - lambda_max(x x^t + T T^t)) for
/// k = 1 and the transposed version for k = 2.
double discord_two_qubit_dakic(const DensityMatrix &rho, int k);

struct GenericDiscordBound {
    double value = 0;
    Isometry a;
    int restarts = 0;
};

/// Multi-start coordinate ascent of ||C x_k A(U)||^2 over bases U|j> of
/// party k, with U a product of d(d-1)/2 phased plane rotations. Returns the
/// best value found, an upper bound on D_k that is not certified for d > 2.
/// Restart 0 starts from the computational basis; restart r > 0 draws its
/// angles from an mt19937_64 seeded with (seed, r).
GenericDiscordBound discord_generic_upper_bound(const CoefficientTensor &c, int k, int restarts,
                                                std::uint64_t seed);

}  // namespace qdiscord

#endif
