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

#include "qdiscord/error.h"
#include "qdiscord/sym3.h"
#include "qdiscord/tensor.h"
#include "test_support.h"

namespace qdiscord {
namespace {

using testing::n_mode_product_ref;
using testing::random_matrix;
using testing::random_row_isometry;
using testing::random_tensor;

RealTensor two_by_two() { return RealTensor({2, 2}, {1, 2, 3, 4}); }

TEST(RealTensor, RowMajorLastIndexFastest) {
    const RealTensor t({2, 3}, {0, 1, 2, 3, 4, 5});
    EXPECT_EQ(t.at({0, 2}), 2);
    EXPECT_EQ(t.at({1, 0}), 3);
    const std::vector<std::size_t> idx{1, 2};
    EXPECT_EQ(t.flat_index(idx), 5u);
    EXPECT_EQ(t.multi_index(4), (std::vector<std::size_t>{1, 1}));
}

TEST(RealTensor, RejectsBadShapes) {
    EXPECT_THROW(RealTensor(std::vector<std::size_t>{}), DimensionError);
    EXPECT_THROW(RealTensor({2, 0}), DimensionError);
    EXPECT_THROW(RealTensor({2, 2}, {1, 2, 3}), DimensionError);
}

TEST(NModeProduct, RowSumOnModeOne) {
    RealMatrix a(1, 2);
    a << 1, 1;
    const RealTensor r = n_mode_product(two_by_two(), a, 1);
    EXPECT_EQ(r, RealTensor({1, 2}, {4, 6}));
}

TEST(NModeProduct, RowSumOnModeTwo) {
    RealMatrix a(1, 2);
    a << 1, 1;
    const RealTensor r = n_mode_product(two_by_two(), a, 2);
    EXPECT_EQ(r, RealTensor({2, 1}, {3, 7}));
}

TEST(NModeProduct, IdentityLeavesTensorUnchanged) {
    std::mt19937_64 rng(7);
    const RealTensor t = random_tensor(rng, {2, 3, 4});
    for (std::size_t mode = 1; mode <= 3; ++mode) {
        const RealMatrix id = RealMatrix::Identity(t.dims()[mode - 1], t.dims()[mode - 1]);
        EXPECT_EQ(n_mode_product(t, id, mode), t);
    }
}

TEST(NModeProduct, MismatchedShapesThrow) {
    EXPECT_THROW(n_mode_product(two_by_two(), RealMatrix::Ones(1, 3), 1), DimensionError);
    EXPECT_THROW(n_mode_product(two_by_two(), RealMatrix::Ones(1, 2), 3), DimensionError);
    EXPECT_THROW(n_mode_product(two_by_two(), RealMatrix::Ones(1, 2), 0), DimensionError);
}

TEST(NModeProduct, MatchesBruteForceSum) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> dim(1, 4), order(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::size_t> dims(order(rng));
        for (auto &d : dims) d = dim(rng);
        const RealTensor t = random_tensor(rng, dims);
        const int mode = std::uniform_int_distribution<int>(1, static_cast<int>(dims.size()))(rng);
        const RealMatrix a = random_matrix(rng, dim(rng), static_cast<int>(dims[mode - 1]));
        EXPECT_LT(max_abs_diff(n_mode_product(t, a, mode), n_mode_product_ref(t, a, mode)), 1e-12);
    }
}

TEST(FrobeniusNorm, SmallCases) {
    EXPECT_EQ(frobenius_norm_sq(RealTensor({3, 2})), 0);
    EXPECT_EQ(frobenius_norm_sq(two_by_two()), 30);
}

// Property suite over random tensors: commutation on distinct modes,
// collapse on the same mode, contraction by row-orthonormal matrices.
class NModeProperties : public ::testing::TestWithParam<int> {};

TEST_P(NModeProperties, Hold) {
    std::mt19937_64 rng(1000 + GetParam());
    std::uniform_int_distribution<int> dim(1, 4);
    std::vector<std::size_t> dims(std::uniform_int_distribution<int>(2, 4)(rng));
    for (auto &d : dims) d = dim(rng);
    const RealTensor t = random_tensor(rng, dims);
    const int n = static_cast<int>(dims.size());
    const int m1 = std::uniform_int_distribution<int>(1, n)(rng);
    int m2 = std::uniform_int_distribution<int>(1, n - 1)(rng);
    if (m2 >= m1) ++m2;

    const RealMatrix a = random_matrix(rng, dim(rng), static_cast<int>(dims[m1 - 1]));
    const RealMatrix b = random_matrix(rng, dim(rng), static_cast<int>(dims[m2 - 1]));
    const RealTensor ab = n_mode_product(n_mode_product(t, a, m1), b, m2);
    const RealTensor ba = n_mode_product(n_mode_product(t, b, m2), a, m1);
    EXPECT_LT(max_abs_diff(ab, ba), 1e-10 * (1 + std::sqrt(frobenius_norm_sq(ab))));

    const RealMatrix c = random_matrix(rng, dim(rng), static_cast<int>(a.rows()));
    const RealTensor seq = n_mode_product(n_mode_product(t, a, m1), c, m1);
    const RealTensor once = n_mode_product(t, c * a, m1);
    EXPECT_LT(max_abs_diff(seq, once), 1e-10 * (1 + std::sqrt(frobenius_norm_sq(once))));

    const int rows = std::uniform_int_distribution<int>(1, static_cast<int>(dims[m1 - 1]))(rng);
    const RealMatrix iso = random_row_isometry(rng, rows, static_cast<int>(dims[m1 - 1]));
    EXPECT_LE(frobenius_norm_sq(n_mode_product(t, iso, m1)), frobenius_norm_sq(t) * (1 + 1e-12));
}

INSTANTIATE_TEST_SUITE_P(RandomTensors, NModeProperties, ::testing::Range(0, 1000));

TEST(Sym3TopEigen, DiagonalCase) {
    const TopEigen top = sym3_top_eigen(Sym3::diagonal(2, 2, 3));
    EXPECT_NEAR(top.eta_max, 3, 1e-14);
    EXPECT_NEAR(top.e_max[0], 0, 1e-14);
    EXPECT_NEAR(top.e_max[1], 0, 1e-14);
    EXPECT_NEAR(top.e_max[2], 1, 1e-14);
}

TEST(Sym3TopEigen, IdentityPrefersZAxis) {
    const TopEigen top = sym3_top_eigen(Sym3::identity());
    EXPECT_NEAR(top.eta_max, 1, 1e-14);
    EXPECT_NEAR(top.e_max[2], 1, 1e-14);
}

TEST(Sym3TopEigen, OffDiagonalPair) {
    const TopEigen top = sym3_top_eigen(Sym3{0, 1, 0, 0, 0, 0});
    EXPECT_NEAR(top.eta_max, 1, 1e-14);
    EXPECT_NEAR(top.e_max[0], 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(top.e_max[1], 1 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(top.e_max[2], 0, 1e-12);
}

TEST(Sym3TopEigen, XyPlaneTieResolvesToX) {
    const TopEigen top = sym3_top_eigen(Sym3::diagonal(2, 2, 1));
    EXPECT_NEAR(top.e_max[0], 1, 1e-12);
}

Sym3 random_sym3(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    return Sym3{g(rng), g(rng), g(rng), g(rng), g(rng), g(rng)};
}

TEST(Sym3Spectrum, AgreesWithEigenSolver) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const Sym3 g = random_sym3(rng);
        Eigen::Matrix3d m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = g(i, j);
        const Eigen::Vector3d ref = Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(m).eigenvalues();
        const Sym3Spectrum spec = sym3_spectrum(g);
        for (int i = 0; i < 3; ++i) EXPECT_NEAR(spec.values[i], ref(2 - i), 1e-12);
        for (int i = 0; i < 3; ++i) {
            const Vec3 gv = apply(g, spec.vectors[i]);
            for (int c = 0; c < 3; ++c) EXPECT_NEAR(gv[c], spec.values[i] * spec.vectors[i][c], 1e-12);
            EXPECT_NEAR(norm_sq(spec.vectors[i]), 1, 1e-12);
        }
    }
}

TEST(Sym3TopEigen, RayleighBound) {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 20; ++trial) {
        const Sym3 g = random_sym3(rng);
        const TopEigen top = sym3_top_eigen(g);
        for (int i = 0; i < 1000; ++i) {
            Vec3 e{gauss(rng), gauss(rng), gauss(rng)};
            const double len = std::sqrt(norm_sq(e));
            for (double &x : e) x /= len;
            EXPECT_LE(quadratic_form(g, e), top.eta_max + 1e-12);
        }
    }
}

}  // namespace
}  // namespace qdiscord
