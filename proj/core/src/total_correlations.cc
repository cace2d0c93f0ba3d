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

#include "qdiscord/total_correlations.h"

#include <algorithm>
#include <cmath>

#include "qdiscord/error.h"
#include "qdiscord/measurement.h"

namespace qdiscord {

TotalCorrelationReport total_quantum_correlations(const BlochDecomposition &dec, std::span<const int> order) {
    const int n = dec.qubits();
    TotalCorrelationReport report;
    if (order.empty()) {
        for (int k = 1; k <= n; ++k) report.order.push_back(k);
    } else {
        report.order.assign(order.begin(), order.end());
        std::vector<int> sorted = report.order;
        std::sort(sorted.begin(), sorted.end());
        bool ok = static_cast<int>(sorted.size()) == n;
        for (int i = 0; ok && i < n; ++i) ok = sorted[i] == i + 1;
        if (!ok) throw DimensionError("measurement order must be a permutation of 1..N");
    }

    const CoefficientTensor original = to_coefficient_tensor(dec);
    CoefficientTensor current = original;
    RealTensor chained = original.tensor;
    for (int party : report.order) {
        const BlochDecomposition step_dec = bloch_from_coefficients(current);
        const DiscordReport d = discord_qubit_closed_form(step_dec, party);
        CorrelationStep step;
        step.party = party;
        step.discord = d.value;
        step.a_tilde = d.a_tilde;
        step.post = optimal_post_measurement_state(current, d.a_tilde, party);
        chained = n_mode_product(chained, d.a_tilde.matrix(), static_cast<std::size_t>(party));
        current = step.post;
        report.q_value += step.discord;
        report.steps.push_back(std::move(step));
    }
    report.telescoped = original.norm_sq() - frobenius_norm_sq(chained);
    return report;
}

double two_qubit_total(const DensityMatrix &rho) {
    if (rho.party_dims() != std::vector<int>{2, 2}) throw DimensionError("two-qubit total needs dims [2, 2]");
    const double d1 = discord_two_qubit_dakic(rho, 1);

    // Optimal axis for party 1 from G1 = x x^t + T T^t.
    const CoefficientTensor c = coefficient_tensor(rho);
    RealMatrix cm(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) cm(i, j) = c.tensor.at({static_cast<std::size_t>(i), static_cast<std::size_t>(j)});
    // Pauli expectations are 2 c_ij.
    Sym3 g1;
    for (int j = 0; j < 4; ++j) g1.add_outer({2 * cm(1, j), 2 * cm(2, j), 2 * cm(3, j)});
    const Isometry a = optimal_isometry(sym3_top_eigen(g1).e_max);

    // Measured state: C' = A^t A C, then D_2 from y and the new T.
    const RealMatrix post = a.projector() * cm;
    std::vector<double> flat(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) flat[i * 4 + j] = post(i, j);
    const DensityMatrix measured = state_from_coefficients({{2, 2}, RealTensor({4, 4}, flat)});
    return d1 + discord_two_qubit_dakic(measured, 2);
}

}  // namespace qdiscord
