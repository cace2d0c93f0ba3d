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

#ifndef QDISCORD_STATE_FACTORY_H
#define QDISCORD_STATE_FACTORY_H

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qdiscord/density_matrix.h"

namespace qdiscord {

/// Three-qubit families:
///   ghz-noise     p |GHZ><GHZ| + (1-p) I/8
///   w-ghz         p |W><W| + (1-p) |GHZ><GHZ|
///   ghz-ghzminus  p |GHZ-><GHZ-| + (1-p) |GHZ><GHZ|
enum class Family { kGhzNoise, kWGhz, kGhzGhzMinus };

struct FamilySpec {
    Family family = Family::kGhzNoise;
    double p = 0;
};

/// "ghz-noise", "w-ghz" or "ghz-ghzminus"; throws ParseError otherwise.
Family parse_family(std::string_view name);
std::string family_name(Family family);

/// Pure state |psi><psi| of a normalized ket on the given parties.
DensityMatrix pure_state(std::vector<int> party_dims, const ComplexVector &ket);

DensityMatrix ghz_state(int qubits);
DensityMatrix ghz_minus_state(int qubits);
DensityMatrix w_state(int qubits);
DensityMatrix bell_state();
DensityMatrix max_mixed_state(std::vector<int> party_dims);

/// Named states: "ghz(N)", "ghz-minus(N)", "w(N)" (plain "ghz", "ghz-minus"
/// and "w" mean N = 3), "bell", "max-mixed(d1,d2,...)", and family members
/// "<family>(p)". Throws ParseError for unknown names.
DensityMatrix named_state(std::string_view name);

/// Throws ValidationError("parameter", ...) when p is outside [0, 1].
DensityMatrix family_state(const FamilySpec &spec);

/// All randomness in the library and its tests flows through this engine.
using Rng = std::mt19937_64;

/// rho = M M^dagger / tr(M M^dagger), M a D x rank matrix of independent
/// standard complex Gaussians drawn from Rng(seed).
DensityMatrix random_density(const std::vector<int> &party_dims, int rank, std::uint64_t seed);

/// Haar-random d x d unitary (QR of a complex Ginibre matrix with the phases
/// of R's diagonal removed).
ComplexMatrix random_unitary(int d, Rng &rng);

/// Random pure state of dimension d.
ComplexVector random_ket(int d, Rng &rng);

}  // namespace qdiscord

#endif
