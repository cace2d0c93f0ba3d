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

#ifndef QDISCORD_IO_H
#define QDISCORD_IO_H

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qdiscord/bloch.h"
#include "qdiscord/density_matrix.h"
#include "qdiscord/state_factory.h"
#include "qdiscord/sym3.h"

namespace qdiscord {

// State files are JSON documents
//
//   {
//     "dims": [2, 2],
//     "matrix": [
//       [[re, im], [re, im], ...],
//       ...
//     ]
//   }
//
// written with one matrix row per line and shortest round-trip decimals, so
// saving a loaded canonical file reproduces it byte for byte.

/// Throws ParseError for malformed text and ValidationError (naming the
/// failed check) for a matrix that is not a valid state.
DensityMatrix parse_state(std::string_view text);
DensityMatrix load_state(const std::filesystem::path &path);
std::string format_state(const DensityMatrix &rho);
void save_state(const std::filesystem::path &path, const DensityMatrix &rho);

/// Pauli expectation values keyed by upper-case labels over {I, X, Y, Z},
/// one letter per qubit (qubit 1 first). Absent labels were not measured.
struct PauliTable {
    int qubits = 0;
    std::map<std::string, double> values;
};

/// Two delimiter-separated columns (comma or tab) with a required
/// `label,value` header. Labels are case-insensitive. Throws ParseError.
PauliTable parse_pauli_table(std::string_view text);
PauliTable load_pauli_table(const std::filesystem::path &path);
std::string format_pauli_table(const PauliTable &table);

/// Every non-identity label of the decomposition.
PauliTable pauli_table_from_decomposition(const BlochDecomposition &dec);

/// Non-identity labels absent from the table, sorted.
std::vector<std::string> missing_labels(const PauliTable &table);

struct IngestResult {
    BlochDecomposition decomposition;
    /// Non-fatal findings, e.g. a reconstructed matrix that is not positive.
    std::vector<std::string> warnings;
};

/// Builds s and T from measured expectations. Requires every non-identity
/// label (ValidationError "missing labels" lists the absent ones) and values
/// in [-1, 1] up to 1e-9 (ValidationError "range"). With `strict`, the
/// reconstructed matrix must also pass the density-matrix validator.
IngestResult ingest_pauli_table(const PauliTable &table, bool strict);

struct SweepRow {
    double p = 0;
    /// One value per reported party, in the order given to sweep_family.
    std::vector<double> discord;
    double q = 0;
};

struct SweepTable {
    Family family = Family::kGhzNoise;
    std::vector<int> parties;
    std::vector<SweepRow> rows;
};

/// Closed-form D_k (for each listed party; empty means all three) and Q on a
/// uniform p grid of `steps` points from p_from to p_to inclusive.
/// Throws ValidationError("range") unless 0 <= p_from <= p_to <= 1 and
/// steps >= 2.
SweepTable sweep_family(Family family, double p_from, double p_to, int steps, std::vector<int> parties = {});

/// Header `p,d1,...,q` and one row per p, 12 significant digits.
std::string sweep_csv(const SweepTable &table);

struct BranchCrossing {
    /// Parameter where the two eigenvalue branches meet.
    double p = 0;
    /// Top eigenspace on the grid point before and after the crossing,
    /// represented by the tie-broken top eigenvector.
    Vec3 before{};
    Vec3 after{};
};

/// Points where the top eigenvector of G^(party) jumps to an orthogonal
/// eigenspace between grid points, located by bisection on the difference of
/// the two branch eigenvalues. Grid points where the top eigenvalue is
/// degenerate across both branches are treated as part of the crossing.
std::vector<BranchCrossing> find_branch_crossings(Family family, double p_from, double p_to, int steps,
                                                  int party = 1);

}  // namespace qdiscord

#endif
