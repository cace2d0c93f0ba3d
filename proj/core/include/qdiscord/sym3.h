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

#ifndef QDISCORD_SYM3_H
#define QDISCORD_SYM3_H

#include <array>

namespace qdiscord {

using Vec3 = std::array<double, 3>;

/// Real symmetric 3x3 matrix; only the upper triangle is stored.
struct Sym3 {
    double xx = 0, xy = 0, xz = 0;
    double yy = 0, yz = 0;
    double zz = 0;

    double operator()(int row, int col) const;
    /// Adds v v^t.
    void add_outer(const Vec3 &v);
    Sym3 &operator+=(const Sym3 &other);
    Sym3 &operator*=(double scale);

    double trace() const { return xx + yy + zz; }
    bool operator==(const Sym3 &) const = default;

    static Sym3 diagonal(double x, double y, double z) { return {x, 0, 0, y, 0, z}; }
    static Sym3 identity() { return diagonal(1, 1, 1); }
};

/// v^t g v.
double quadratic_form(const Sym3 &g, const Vec3 &v);
Vec3 apply(const Sym3 &g, const Vec3 &v);
double norm_sq(const Vec3 &v);
double dot(const Vec3 &a, const Vec3 &b);

/// Full spectrum, eigenvalues in descending order and matching unit
/// eigenvectors as rows. Cyclic Jacobi to an off-diagonal norm of 1e-14
/// relative to the matrix scale.
struct Sym3Spectrum {
    Vec3 values;
    std::array<Vec3, 3> vectors;
};
Sym3Spectrum sym3_spectrum(const Sym3 &g);

struct TopEigen {
    double eta_max = 0;
    Vec3 e_max{};
};

/// Largest eigenvalue and a unit eigenvector for it.
///
/// When the top eigenvalue is degenerate (within 1e-12) the returned vector
/// is the unit vector of the top eigenspace closest to the z axis; if the
/// eigenspace is orthogonal to z, closest to x, then y. The selected axis
/// component is made positive. A non-degenerate eigenvector gets the same
/// sign convention.
TopEigen sym3_top_eigen(const Sym3 &g);

}  // namespace qdiscord

#endif
