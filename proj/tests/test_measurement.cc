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

#include <random>

#include <gtest/gtest.h>

#include "qdiscord/bloch.h"
#include "qdiscord/discord.h"
#include "qdiscord/error.h"
#include "qdiscord/measurement.h"
#include "qdiscord/state_factory.h"
#include "test_support.h"

namespace qdiscord {
namespace {

using testing::basis_ket;
using testing::near_matrix;

ComplexMatrix diag_projector(int d, std::vector<int> indices, double weight) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (int i : indices) m(i, i) = weight;
    return m;
}

double closed_form(const DensityMatrix &rho, int k) { return discord_qubit_closed_form(bloch_decompose(rho), k).value; }

TEST(ProjectiveMeasurement, Examples) {
    const DensityMatrix m = apply_projective_measurement(bell_state(), ProjectiveBasis::computational(1, 2));
    EXPECT_TRUE(near_matrix(m.matrix(), diag_projector(4, {0, 3}, 0.5), 1e-15));

    const DensityMatrix zero = pure_state({2}, basis_ket(2, 0));
    const DensityMatrix x = apply_projective_measurement(zero, ProjectiveBasis::qubit_axis(1, {1, 0, 0}));
    EXPECT_TRUE(near_matrix(x.matrix(), ComplexMatrix::Identity(2, 2) / 2.0, 1e-15));
}

TEST(ProjectiveMeasurement, ClassicalQuantumStateIsFixedPoint) {
    Rng rng(3);
    const ProjectiveBasis basis = ProjectiveBasis::from_unitary(2, random_unitary(2, rng));
    const std::vector<double> probs{0.3, 0.7};
    const std::vector<DensityMatrix> cond{random_density({2, 2}, 2, 1), random_density({2, 2}, 3, 2)};
    const DensityMatrix chi = build_classical_quantum_state(2, probs, basis, cond);
    EXPECT_TRUE(near_matrix(apply_projective_measurement(chi, basis).matrix(), chi.matrix(), 1e-14));
}

TEST(ProjectiveMeasurement, TraceIdempotencePurity) {
    Rng rng(5);
    for (int i = 0; i < 30; ++i) {
        const std::vector<int> dims = i % 2 ? std::vector<int>{2, 3} : std::vector<int>{2, 2, 2};
        const DensityMatrix rho = random_density(dims, 2, 40 + i);
        const int k = 1 + i % static_cast<int>(dims.size());
        const ProjectiveBasis basis = ProjectiveBasis::from_unitary(k, random_unitary(dims[k - 1], rng));
        const DensityMatrix once = apply_projective_measurement(rho, basis);
        EXPECT_FALSE(once.check().has_value());
        EXPECT_NEAR(once.matrix().trace().real(), 1, 1e-12);
        EXPECT_TRUE(near_matrix(apply_projective_measurement(once, basis).matrix(), once.matrix(), 1e-12));
        EXPECT_LE(once.purity(), rho.purity() + 1e-12);
    }
}

TEST(ProjectiveBasis, RejectsNonOrthonormalKets) {
    ComplexVector a = basis_ket(2, 0), b = (basis_ket(2, 0) + basis_ket(2, 1)) / std::sqrt(2.0);
    EXPECT_THROW(ProjectiveBasis(1, {a, b}), ValidationError);
    EXPECT_THROW(ProjectiveBasis(1, {a}), DimensionError);
}

TEST(OptimalPostMeasurement, Examples) {
    const Isometry z = optimal_isometry({0, 0, 1});
    const DensityMatrix ghz_post = state_from_coefficients(optimal_post_measurement_state(coefficient_tensor(ghz_state(3)), z, 1));
    EXPECT_TRUE(near_matrix(ghz_post.matrix(), diag_projector(8, {0, 7}, 0.5), 1e-14));
    const DensityMatrix bell_post = state_from_coefficients(optimal_post_measurement_state(coefficient_tensor(bell_state()), z, 1));
    EXPECT_TRUE(near_matrix(bell_post.matrix(), diag_projector(4, {0, 3}, 0.5), 1e-14));
    const DensityMatrix mixed = max_mixed_state({2, 2});
    const DensityMatrix mixed_post =
        state_from_coefficients(optimal_post_measurement_state(coefficient_tensor(mixed), optimal_isometry({0.6, 0, 0.8}), 2));
    EXPECT_TRUE(near_matrix(mixed_post.matrix(), mixed.matrix(), 1e-15));
}

TEST(OptimalPostMeasurement, MatchesProjectorsAndHasNoDiscord) {
    for (int i = 0; i < 30; ++i) {
        const int n = 2 + i % 3;
        const DensityMatrix rho = random_density(std::vector<int>(n, 2), 2, 100 + i);
        const int k = 1 + i % n;
        const DiscordReport r = discord_qubit_closed_form(bloch_decompose(rho), k);
        const CoefficientTensor c = coefficient_tensor(rho);
        const CoefficientTensor post = optimal_post_measurement_state(c, r.a_tilde, k);
        const DensityMatrix via_c = state_from_coefficients(post);
        const DensityMatrix direct = apply_projective_measurement(rho, basis_from_isometry(r.a_tilde, k));
        EXPECT_TRUE(near_matrix(via_c.matrix(), direct.matrix(), 1e-12));
        EXPECT_LT(closed_form(DensityMatrix::from_matrix(rho.party_dims(), via_c.matrix()), k), 1e-12);
        // Distance to the measured state is the closed-form discord.
        EXPECT_NEAR((rho.matrix() - direct.matrix()).squaredNorm(), r.value, 1e-12);
        // ||C x_k A~^t A~|| = ||C x_k A~||.
        EXPECT_NEAR(post.norm_sq(), frobenius_norm_sq(n_mode_product(c.tensor, r.a_tilde.matrix(), k)), 1e-12);
    }
}

TEST(OptimalPostMeasurement, CoefficientsAreContractedIsometryEntries) {
    // b_{..l..} = sum_{i_k} c_{..i_k..} a~_{l i_k}, then expanded back with A~.
    const DensityMatrix rho = random_density({2, 2, 2}, 2, 7);
    const DiscordReport r = discord_qubit_closed_form(bloch_decompose(rho), 2);
    const CoefficientTensor c = coefficient_tensor(rho);
    const RealTensor b = testing::n_mode_product_ref(c.tensor, r.a_tilde.matrix(), 2);
    const RealTensor expanded = testing::n_mode_product_ref(b, r.a_tilde.matrix().transpose(), 2);
    EXPECT_LT(max_abs_diff(optimal_post_measurement_state(c, r.a_tilde, 2).tensor, expanded), 1e-14);
}

TEST(BasisFromIsometry, PhaseConventionAndRoundTrip) {
    Rng rng(19);
    for (int d : {2, 3}) {
        for (int t = 0; t < 10; ++t) {
            const ComplexMatrix u = random_unitary(d, rng);
            std::vector<ComplexVector> kets;
            for (int l = 0; l < d; ++l) kets.push_back(u.col(l));
            const Isometry a = isometry_from_kets(kets);
            const ProjectiveBasis basis = basis_from_isometry(a, 1);
            for (int l = 0; l < d; ++l) {
                EXPECT_TRUE(near_matrix(projector(basis.kets()[l]), projector(kets[l]), 1e-12));
                int first = 0;
                while (std::abs(basis.kets()[l](first)) < 1e-12) ++first;
                EXPECT_NEAR(basis.kets()[l](first).imag(), 0, 1e-14);
                EXPECT_GT(basis.kets()[l](first).real(), 0);
            }
        }
    }
}

TEST(ClassicalQuantum, TwoQubitExample) {
    const std::vector<double> probs{0.5, 0.5};
    const std::vector<DensityMatrix> cond{pure_state({2}, basis_ket(2, 0)), pure_state({2}, basis_ket(2, 1))};
    const DensityMatrix chi = build_classical_quantum_state(1, probs, ProjectiveBasis::computational(1, 2), cond);
    EXPECT_TRUE(near_matrix(chi.matrix(), diag_projector(4, {0, 3}, 0.5), 1e-15));
    EXPECT_LT(closed_form(chi, 1), 1e-15);
}

TEST(ClassicalQuantum, SingleTermIsProduct) {
    Rng rng(2);
    const ProjectiveBasis basis = ProjectiveBasis::from_unitary(1, random_unitary(2, rng));
    const std::vector<double> probs{1, 0};
    const DensityMatrix r = DensityMatrix::from_matrix(
        {2, 2}, kron(random_density({2}, 1, 3).matrix(), random_density({2}, 2, 4).matrix()));
    const std::vector<DensityMatrix> cond{r, max_mixed_state({2, 2})};
    const DensityMatrix chi = build_classical_quantum_state(1, probs, basis, cond);
    for (int k = 1; k <= 3; ++k) EXPECT_LT(closed_form(chi, k), 1e-12) << k;
}

TEST(ClassicalQuantum, BellConditionalsOnMiddleParty) {
    const std::vector<double> probs{0.5, 0.5};
    const ComplexVector bell_minus = (basis_ket(4, 0) - basis_ket(4, 3)) / std::sqrt(2.0);
    const std::vector<DensityMatrix> cond{bell_state(), pure_state({2, 2}, bell_minus)};
    const DensityMatrix chi = build_classical_quantum_state(2, probs, ProjectiveBasis::qubit_axis(2, {1, 0, 0}), cond);
    EXPECT_LT(closed_form(chi, 2), 1e-12);
    EXPECT_GT(closed_form(chi, 1), 1e-3);
}

TEST(ClassicalQuantum, RandomStatesHaveNoDiscordOnClassicalParty) {
    Rng rng(23);
    std::uniform_real_distribution<double> uni(0.05, 1);
    for (int i = 0; i < 50; ++i) {
        const int n = 2 + i % 3;
        const int k = 1 + i % n;
        const ProjectiveBasis basis = ProjectiveBasis::from_unitary(k, random_unitary(2, rng));
        std::vector<double> probs{uni(rng), uni(rng)};
        const double sum = probs[0] + probs[1];
        for (double &p : probs) p /= sum;
        std::vector<DensityMatrix> cond;
        for (int l = 0; l < 2; ++l) cond.push_back(random_density(std::vector<int>(n - 1, 2), 2, 1000 + 2 * i + l));
        const DensityMatrix chi = build_classical_quantum_state(k, probs, basis, cond);
        EXPECT_LT(closed_form(chi, k), 1e-10);
    }
}

TEST(ClassicalQuantum, RejectsBadDistribution) {
    const ProjectiveBasis basis = ProjectiveBasis::computational(1, 2);
    const std::vector<DensityMatrix> cond{max_mixed_state({2}), max_mixed_state({2})};
    const std::vector<double> bad{0.6, 0.6}, negative{1.2, -0.2};
    EXPECT_THROW(build_classical_quantum_state(1, bad, basis, cond), ValidationError);
    EXPECT_THROW(build_classical_quantum_state(1, negative, basis, cond), ValidationError);
}

}  // namespace
}  // namespace qdiscord
