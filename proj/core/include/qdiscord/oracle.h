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

#ifndef QDISCORD_ORACLE_H
#define QDISCORD_ORACLE_H

#include <vector>

#include "qdiscord/density_matrix.h"
#include "qdiscord/sym3.h"

namespace qdiscord {

/// Sphere search settings. The coarse grid is uniform in cos(theta) on
/// [-1, 1] (theta_steps points) and in phi on [0, 2pi) (phi_steps points).
/// Each refinement round searches a local grid in the tangent plane of the
/// current best direction and then shrinks the window by zoom_factor.
struct GridSpec {
    int theta_steps = 181;
    int phi_steps = 360;
    int refinement_rounds = 3;
    double zoom_factor = 10.0;

    /// Throws ValidationError("grid", ...) unless steps >= 8, rounds >= 0
    /// and zoom_factor > 1.
    void validate() const;
};

/// Value accuracy the search guarantees for a quadratic objective on the
/// sphere with curvature at most 1.
double oracle_tolerance(const GridSpec &grid);

struct OracleResult {
    double value = 0;
    double theta = 0;
    double phi = 0;
    /// Best value after the coarse grid, then after each refinement round.
    std::vector<double> round_values;
};

/// min over qubit measurement axes n(theta, phi) of ||rho - Pi_n(rho)||^2,
/// with Pi_n the measurement in the basis {|+n>, |-n>} on party k.
/// Works from the density matrix alone.
OracleResult oracle_discord_qubit(const DensityMatrix &rho, int k, const GridSpec &grid = {});

/// max over unit vectors of e^t G e by the same sphere search.
OracleResult oracle_quadratic_max(const Sym3 &g, const GridSpec &grid = {});

struct EqualityReport {
    int k = 0;
    double closed_form = 0;
    double oracle = 0;
    double gap = 0;
    double tolerance = 0;
    bool agrees = false;
};

/// Compares the closed-form D_k with the measurement-minimization value.
EqualityReport verify_equality_dbar(const DensityMatrix &rho, int k, const GridSpec &grid = {});

}  // namespace qdiscord

#endif
