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

#ifndef QDISCORD_TOTAL_CORRELATIONS_H
#define QDISCORD_TOTAL_CORRELATIONS_H

#include <span>
#include <vector>

#include "qdiscord/bloch.h"
#include "qdiscord/discord.h"

namespace qdiscord {

struct CorrelationStep {
    int party = 0;
    /// D of the chain state for this party before it is measured.
    double discord = 0;
    Isometry a_tilde;
    /// Chain state after the optimal measurement on `party`.
    CoefficientTensor post;
};

struct TotalCorrelationReport {
    double q_value = 0;
    std::vector<int> order;
    std::vector<CorrelationStep> steps;
    /// ||C||^2 - ||C x_1 A~1 ... x_N A~N||^2 with the chain's isometries.
    double telescoped = 0;
};

/// Greedy measurement chain: for each party in `order`, measure the current
/// state with the closed-form optimal isometry and add its discord. Every
/// step recomputes G from the current chain state. An empty order means
/// (1, ..., N).
TotalCorrelationReport total_quantum_correlations(const BlochDecomposition &dec, std::span<const int> order = {});

/// D_1(rho) + D_2(post-measurement state), using the two-qubit formulas and
/// the matrix form A~^t A~ C of the measured state.
double two_qubit_total(const DensityMatrix &rho);

}  // namespace qdiscord

#endif
