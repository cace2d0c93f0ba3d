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

#include "qdiscord/oracle.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "qdiscord/bloch.h"
#include "qdiscord/discord.h"
#include "qdiscord/error.h"

namespace qdiscord {

namespace {

using std::numbers::pi;

Vec3 direction(double u, double phi) {
    const double s = std::sqrt(std::max(0.0, 1 - u * u));
    return {s * std::cos(phi), s * std::sin(phi), u};
}

Vec3 normalized(Vec3 v) {
    const double len = std::sqrt(norm_sq(v));
    for (double &x : v) x /= len;
    return v;
}

Vec3 cross(const Vec3 &a, const Vec3 &b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Minimizes `f` over the unit sphere: coarse (cos theta, phi) grid, then
// tangent-plane zoom rounds around the incumbent.
OracleResult sphere_search(const std::function<double(const Vec3 &)> &f, const GridSpec &grid) {
    grid.validate();
    const int nt = grid.theta_steps, np = grid.phi_steps;
    double best = INFINITY;
    int best_i = 0;
    Vec3 best_n{0, 0, 1};
    for (int i = 0; i < nt; ++i) {
        const double u = -1 + 2.0 * i / (nt - 1);
        for (int j = 0; j < np; ++j) {
            const Vec3 n = direction(u, 2 * pi * j / np);
            const double v = f(n);
            if (v < best) {
                best = v;
                best_i = i;
                best_n = n;
            }
        }
    }
    OracleResult out;
    out.round_values.push_back(best);

    // Coarse cell size around the incumbent, as an angle.
    const double theta0 = std::acos(std::clamp(best_n[2], -1.0, 1.0));
    double h = 0;
    for (int di : {-1, 1}) {
        const int i = std::clamp(best_i + di, 0, nt - 1);
        const double u = -1 + 2.0 * i / (nt - 1);
        h = std::max(h, std::abs(std::acos(u) - theta0));
    }
    h = std::max(h, std::sin(theta0) * 2 * pi / np);
    h = std::max(h, 1e-12);

    const int m = static_cast<int>(std::ceil(grid.zoom_factor));
    for (int round = 0; round < grid.refinement_rounds; ++round) {
        for (int moves = 0; moves < 50; ++moves) {
            const Vec3 helper = std::abs(best_n[2]) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
            const Vec3 t1 = normalized(cross(best_n, helper));
            const Vec3 t2 = cross(best_n, t1);
            const Vec3 center = best_n;
            int bi = 0, bj = 0;
            for (int i = -m; i <= m; ++i) {
                for (int j = -m; j <= m; ++j) {
                    if (i == 0 && j == 0) continue;
                    const double a = h * i / m, b = h * j / m;
                    const Vec3 n = normalized({center[0] + a * t1[0] + b * t2[0], center[1] + a * t1[1] + b * t2[1],
                                               center[2] + a * t1[2] + b * t2[2]});
                    const double v = f(n);
                    if (v < best) {
                        best = v;
                        best_n = n;
                        bi = i;
                        bj = j;
                    }
                }
            }
            // Stay at this zoom level while the optimum sits on the window edge.
            if (std::abs(bi) < m && std::abs(bj) < m) break;
        }
        out.round_values.push_back(best);
        h /= grid.zoom_factor;
    }
    out.value = best;
    out.theta = std::acos(std::clamp(best_n[2], -1.0, 1.0));
    out.phi = std::atan2(best_n[1], best_n[0]);
    if (out.phi < 0) out.phi += 2 * pi;
    return out;
}

}  // namespace

void GridSpec::validate() const {
    if (theta_steps < 8 || phi_steps < 8) throw ValidationError("grid", "steps must be at least 8");
    if (refinement_rounds < 0) throw ValidationError("grid", "refinement rounds must be non-negative");
    if (!(zoom_factor > 1)) throw ValidationError("grid", "zoom factor must exceed 1");
}

double oracle_tolerance(const GridSpec &grid) {
    grid.validate();
    const double pole_cell = std::acos(1 - 2.0 / (grid.theta_steps - 1));
    const double cell = std::max(pole_cell, 2 * pi / grid.phi_steps);
    const double final_cell = cell / std::pow(grid.zoom_factor, grid.refinement_rounds);
    return final_cell * final_cell + 1e-9;
}

OracleResult oracle_discord_qubit(const DensityMatrix &rho, int k, const GridSpec &grid) {
    const auto &dims = rho.party_dims();
    if (k < 1 || k > rho.parties()) throw DimensionError("party out of range");
    if (dims[k - 1] != 2) throw DimensionError("oracle party must be a qubit");

    // Split rho into 2x2 blocks over the measured qubit: block (a, b) holds
    // <a|_k rho |b>_k on the remaining parties.
    int left = 1, right = 1;
    for (int m = 0; m < k - 1; ++m) left *= dims[m];
    for (int m = k; m < rho.parties(); ++m) right *= dims[m];
    const int rest = left * right;
    std::array<std::array<ComplexMatrix, 2>, 2> block;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            block[a][b].resize(rest, rest);
            for (int l1 = 0; l1 < left; ++l1)
                for (int r1 = 0; r1 < right; ++r1)
                    for (int l2 = 0; l2 < left; ++l2)
                        for (int r2 = 0; r2 < right; ++r2) {
                            const int row = (l1 * 2 + a) * right + r1;
                            const int col = (l2 * 2 + b) * right + r2;
                            block[a][b](l1 * right + r1, l2 * right + r2) = rho.matrix()(row, col);
                        }
        }
    }

    auto distance = [&](const Vec3 &n) {
        const double theta = std::acos(std::clamp(n[2], -1.0, 1.0));
        const double phi = std::atan2(n[1], n[0]);
        const Complex e = std::polar(1.0, phi);
        const std::array<std::array<Complex, 2>, 2> kets = {
            std::array<Complex, 2>{std::cos(theta / 2), e * std::sin(theta / 2)},
            std::array<Complex, 2>{std::sin(theta / 2), -e * std::cos(theta / 2)}};
        // Pi(rho) = sum_l |l><l| (x) M_l with M_l = <l| rho |l>.
        std::array<ComplexMatrix, 2> reduced;
        for (int l = 0; l < 2; ++l) {
            reduced[l] = ComplexMatrix::Zero(rest, rest);
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) reduced[l] += std::conj(kets[l][a]) * kets[l][b] * block[a][b];
        }
        double dist = 0;
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                ComplexMatrix diff = block[a][b];
                for (int l = 0; l < 2; ++l) diff -= kets[l][a] * std::conj(kets[l][b]) * reduced[l];
                dist += diff.squaredNorm();
            }
        }
        return dist;
    };
    return sphere_search(distance, grid);
}

OracleResult oracle_quadratic_max(const Sym3 &g, const GridSpec &grid) {
    OracleResult out = sphere_search([&g](const Vec3 &n) { return -quadratic_form(g, n); }, grid);
    out.value = -out.value;
    for (double &v : out.round_values) v = -v;
    return out;
}

EqualityReport verify_equality_dbar(const DensityMatrix &rho, int k, const GridSpec &grid) {
    EqualityReport report;
    report.k = k;
    report.closed_form = discord_qubit_closed_form(bloch_decompose(rho), k).value;
    report.oracle = oracle_discord_qubit(rho, k, grid).value;
    report.gap = std::abs(report.oracle - report.closed_form);
    report.tolerance = oracle_tolerance(grid);
    report.agrees = report.gap <= report.tolerance;
    return report;
}

}  // namespace qdiscord
