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

#include "qdiscord/sym3.h"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qdiscord {

double Sym3::operator()(int row, int col) const {
    if (row > col) std::swap(row, col);
    switch (row * 3 + col) {
        case 0: return xx;
        case 1: return xy;
        case 2: return xz;
        case 4: return yy;
        case 5: return yz;
        default: return zz;
    }
}

void Sym3::add_outer(const Vec3 &v) {
    xx += v[0] * v[0];
    xy += v[0] * v[1];
    xz += v[0] * v[2];
    yy += v[1] * v[1];
    yz += v[1] * v[2];
    zz += v[2] * v[2];
}

Sym3 &Sym3::operator+=(const Sym3 &o) {
    xx += o.xx;
    xy += o.xy;
    xz += o.xz;
    yy += o.yy;
    yz += o.yz;
    zz += o.zz;
    return *this;
}

Sym3 &Sym3::operator*=(double s) {
    xx *= s;
    xy *= s;
    xz *= s;
    yy *= s;
    yz *= s;
    zz *= s;
    return *this;
}

double dot(const Vec3 &a, const Vec3 &b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double norm_sq(const Vec3 &v) { return dot(v, v); }

Vec3 apply(const Sym3 &g, const Vec3 &v) {
    return {g.xx * v[0] + g.xy * v[1] + g.xz * v[2], g.xy * v[0] + g.yy * v[1] + g.yz * v[2],
            g.xz * v[0] + g.yz * v[1] + g.zz * v[2]};
}

double quadratic_form(const Sym3 &g, const Vec3 &v) { return dot(v, apply(g, v)); }

Sym3Spectrum sym3_spectrum(const Sym3 &g) {
    double a[3][3];
    double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a[i][j] = g(i, j);

    double scale = 0;
    for (auto &row : a)
        for (double x : row) scale += x * x;
    scale = std::sqrt(scale);
    const double target = 1e-14 * std::max(scale, 1e-300);

    auto off_norm = [&a] {
        return std::sqrt(2 * (a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2]));
    };

    for (int sweep = 0; sweep < 100 && off_norm() > target; ++sweep) {
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                const double apq = a[p][q];
                if (apq == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                // A <- J^t A J with J the (p,q) plane rotation.
                for (int k = 0; k < 3; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < 3; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < 3; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::array<int, 3> order = {0, 1, 2};
    std::sort(order.begin(), order.end(), [&a](int i, int j) { return a[i][i] > a[j][j]; });
    Sym3Spectrum out;
    for (int r = 0; r < 3; ++r) {
        const int col = order[r];
        out.values[r] = a[col][col];
        out.vectors[r] = {v[0][col], v[1][col], v[2][col]};
    }
    return out;
}

TopEigen sym3_top_eigen(const Sym3 &g) {
    const Sym3Spectrum spec = sym3_spectrum(g);
    const double top = spec.values[0];
    const double tie = 1e-12 * std::max(1.0, std::abs(top));
    int multiplicity = 1;
    while (multiplicity < 3 && top - spec.values[multiplicity] <= tie) ++multiplicity;

    for (int axis : {2, 0, 1}) {
        Vec3 proj{0, 0, 0};
        for (int i = 0; i < multiplicity; ++i) {
            const Vec3 &q = spec.vectors[i];
            for (int c = 0; c < 3; ++c) proj[c] += q[axis] * q[c];
        }
        const double len = std::sqrt(norm_sq(proj));
        if (len > 1e-8) {
            for (double &x : proj) x /= len;
            return {top, proj};
        }
    }
    // Unreachable for a non-empty eigenspace; keep the raw vector.
    return {top, spec.vectors[0]};
}

}  // namespace qdiscord
