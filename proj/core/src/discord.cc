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

#include "qdiscord/discord.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qdiscord/error.h"

namespace qdiscord {

namespace {

constexpr double kIsometryTol = 1e-10;

void check_party(int k, int n) {
    if (k < 1 || k > n) {
        throw DimensionError("party " + std::to_string(k) + " out of range 1.." + std::to_string(n));
    }
}

double clamp_discord(double v) { return v < 0 ? 0.0 : v; }

// Mode-k Gram matrix C_(k) C_(k)^t, so that ||C x_k A||^2 = tr(A M A^t).
RealMatrix mode_gram(const RealTensor &t, std::size_t mode) {
    const auto &dims = t.dims();
    const std::size_t m = mode - 1;
    std::size_t left = 1, right = 1;
    for (std::size_t i = 0; i < m; ++i) left *= dims[i];
    for (std::size_t i = m + 1; i < dims.size(); ++i) right *= dims[i];
    const std::size_t inner = dims[m];
    RealMatrix gram = RealMatrix::Zero(inner, inner);
    auto data = t.data();
    for (std::size_t l = 0; l < left; ++l) {
        const double *block = data.data() + l * inner * right;
        for (std::size_t a = 0; a < inner; ++a) {
            for (std::size_t b = a; b < inner; ++b) {
                double sum = 0;
                for (std::size_t r = 0; r < right; ++r) sum += block[a * right + r] * block[b * right + r];
                gram(a, b) += sum;
            }
        }
    }
    for (std::size_t a = 0; a < inner; ++a)
        for (std::size_t b = 0; b < a; ++b) gram(a, b) = gram(b, a);
    return gram;
}

// Unitary built from phased plane rotations, one (theta, phi) pair per j<k.
ComplexMatrix rotation_product(int d, const std::vector<double> &params) {
    ComplexMatrix u = ComplexMatrix::Identity(d, d);
    std::size_t p = 0;
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            const double c = std::cos(params[p]);
            const double s = std::sin(params[p]);
            const Complex phase = std::polar(1.0, params[p + 1]);
            p += 2;
            // Columns j, k of u times [[c, -conj(phase) s], [phase s, c]].
            for (int r = 0; r < d; ++r) {
                const Complex uj = u(r, j), uk = u(r, k);
                u(r, j) = c * uj + phase * s * uk;
                u(r, k) = -std::conj(phase) * s * uj + c * uk;
            }
        }
    }
    return u;
}

RealMatrix isometry_rows(const ComplexMatrix &u, const HermitianBasis &basis) {
    const int d = basis.d;
    RealMatrix a(d, d * d);
    for (int l = 0; l < d; ++l) {
        const ComplexVector ket = u.col(l);
        for (int i = 0; i < d * d; ++i) {
            a(l, i) = (ket.adjoint() * basis.elements[i] * ket)(0, 0).real();
        }
    }
    return a;
}

}  // namespace

Isometry::Isometry(RealMatrix rows) : rows_(std::move(rows)) { validate(rows_); }

void Isometry::validate(const RealMatrix &a) {
    const auto d = a.rows();
    if (d < 1 || a.cols() != d * d) {
        throw ValidationError("isometry", "expected a d x d^2 matrix, got " + std::to_string(a.rows()) +
                                              "x" + std::to_string(a.cols()));
    }
    const double gram_err = (a * a.transpose() - RealMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (!(gram_err <= kIsometryTol)) {
        throw ValidationError("isometry", "A A^t differs from I by " + std::to_string(gram_err));
    }
    const double lead = 1 / std::sqrt(static_cast<double>(d));
    for (Eigen::Index l = 0; l < d; ++l) {
        if (!(std::abs(a(l, 0) - lead) <= kIsometryTol)) {
            throw ValidationError("isometry", "row " + std::to_string(l + 1) +
                                                  " does not start with 1/sqrt(d)");
        }
    }
    for (Eigen::Index i = 1; i < a.cols(); ++i) {
        if (!(std::abs(a.col(i).sum()) <= kIsometryTol)) {
            throw ValidationError("isometry", "column " + std::to_string(i + 1) +
                                                  " does not sum to the trace of its basis element");
        }
    }
}

Isometry optimal_isometry(const Vec3 &e) {
    const double len = std::sqrt(norm_sq(e));
    if (!(std::abs(len - 1) <= kIsometryTol)) {
        throw ValidationError("isometry", "axis must be a unit vector, has norm " + std::to_string(len));
    }
    RealMatrix a(2, 4);
    const double r = 1 / std::sqrt(2.0);
    a << r, r * e[0], r * e[1], r * e[2],  //
        r, -r * e[0], -r * e[1], -r * e[2];
    return Isometry(std::move(a));
}

Isometry isometry_from_kets(const std::vector<ComplexVector> &kets) {
    const int d = static_cast<int>(kets.size());
    if (d < 1) throw DimensionError("need at least one ket");
    ComplexMatrix u(d, d);
    for (int l = 0; l < d; ++l) {
        if (kets[l].size() != d) throw DimensionError("ket length differs from the number of kets");
        u.col(l) = kets[l];
    }
    return Isometry(isometry_rows(u, HermitianBasis::standard(d)));
}

Sym3 build_g_matrix(const BlochDecomposition &dec, int k) {
    const int n = dec.qubits();
    check_party(k, n);
    Sym3 g;
    g.add_outer(dec.s(k));
    for (PartySet set : party_subsets(n, 2, k)) {
        const RealTensor &t = dec.t(set);
        const auto members = set.members();
        const auto pos = static_cast<std::size_t>(std::find(members.begin(), members.end(), k) - members.begin());
        std::size_t left = 1, right = 1;
        for (std::size_t i = 0; i < pos; ++i) left *= 3;
        for (std::size_t i = pos + 1; i < members.size(); ++i) right *= 3;
        double acc[3][3] = {};
        auto data = t.data();
        for (std::size_t l = 0; l < left; ++l) {
            const double *block = data.data() + l * 3 * right;
            for (std::size_t r = 0; r < right; ++r) {
                const double v[3] = {block[r], block[right + r], block[2 * right + r]};
                for (int a = 0; a < 3; ++a)
                    for (int b = a; b < 3; ++b) acc[a][b] += v[a] * v[b];
            }
        }
        g += Sym3{acc[0][0], acc[0][1], acc[0][2], acc[1][1], acc[1][2], acc[2][2]};
    }
    return g;
}

DiscordReport discord_qubit_closed_form(const BlochDecomposition &dec, int k) {
    const int n = dec.qubits();
    check_party(k, n);
    DiscordReport report;
    report.k = k;
    report.g = build_g_matrix(dec, k);
    const TopEigen top = sym3_top_eigen(report.g);
    report.eta_max = top.eta_max;
    report.e_max = top.e_max;
    report.a_tilde = optimal_isometry(top.e_max);

    double kept = norm_sq(dec.s(k));
    for (PartySet set : party_subsets(n, 2, k)) kept += frobenius_norm_sq(dec.t(set));
    const double scale = std::pow(2.0, -n);
    report.value = clamp_discord(scale * (kept - top.eta_max));
    report.norm_c_sq = scale * bloch_norm_sum(dec);
    return report;
}

double discord_from_isometry(const CoefficientTensor &c, const Isometry &a, int k) {
    check_party(k, c.parties());
    const int dk = c.party_dims[k - 1];
    if (a.d() != dk) {
        throw DimensionError("isometry is for dimension " + std::to_string(a.d()) + " but party " +
                             std::to_string(k) + " has dimension " + std::to_string(dk));
    }
    Isometry::validate(a.matrix());
    const double projected = frobenius_norm_sq(n_mode_product(c.tensor, a.matrix(), k));
    return clamp_discord(c.norm_sq() - projected);
}

double discord_two_qubit_dakic(const DensityMatrix &rho, int k) {
    if (rho.party_dims() != std::vector<int>{2, 2}) {
        throw DimensionError("two-qubit formula needs party dims [2, 2]");
    }
    if (k != 1 && k != 2) throw DimensionError("party must be 1 or 2");
    ComplexMatrix pauli[4];
    pauli[0] = ComplexMatrix::Identity(2, 2);
    pauli[1] = ComplexMatrix::Zero(2, 2);
    pauli[1] << 0, 1, 1, 0;
    pauli[2] = ComplexMatrix::Zero(2, 2);
    pauli[2] << 0, Complex(0, -1), Complex(0, 1), 0;
    pauli[3] = ComplexMatrix::Zero(2, 2);
    pauli[3] << 1, 0, 0, -1;
    auto expect = [&](int a, int b) { return (rho.matrix() * kron(pauli[a], pauli[b])).trace().real(); };

    Vec3 x{}, y{};
    double t[3][3];
    for (int a = 0; a < 3; ++a) {
        x[a] = expect(a + 1, 0);
        y[a] = expect(0, a + 1);
        for (int b = 0; b < 3; ++b) t[a][b] = expect(a + 1, b + 1);
    }
    const Vec3 &coherent = k == 1 ? x : y;
    Sym3 g;
    g.add_outer(coherent);
    double t_norm = 0;
    for (int i = 0; i < 3; ++i) {
        // k = 1: rows of T; k = 2: columns of T.
        Vec3 v = k == 1 ? Vec3{t[0][i], t[1][i], t[2][i]} : Vec3{t[i][0], t[i][1], t[i][2]};
        g.add_outer(v);
        t_norm += norm_sq(v);
    }
    const double lambda = sym3_top_eigen(g).eta_max;
    return clamp_discord(0.25 * (norm_sq(coherent) + t_norm - lambda));
}

GenericDiscordBound discord_generic_upper_bound(const CoefficientTensor &c, int k, int restarts,
                                                std::uint64_t seed) {
    check_party(k, c.parties());
    if (restarts < 1) throw DimensionError("need at least one restart");
    const int d = c.party_dims[k - 1];
    const HermitianBasis basis = HermitianBasis::standard(d);
    const RealMatrix gram = mode_gram(c.tensor, static_cast<std::size_t>(k));
    const double total = c.norm_sq();

    const std::size_t n_params = static_cast<std::size_t>(d) * (d - 1);
    auto objective = [&](const std::vector<double> &params) {
        const RealMatrix a = isometry_rows(rotation_product(d, params), basis);
        return (a * gram * a.transpose()).trace();
    };
    auto period = [](std::size_t i) { return i % 2 == 0 ? std::numbers::pi : 2 * std::numbers::pi; };

    constexpr int kScan = 24;
    constexpr double kObjectiveTol = 1e-9;
    constexpr int kMaxSweeps = 500;
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;

    double best_value = -1;
    std::vector<double> best_params(n_params, 0.0);
    for (int r = 0; r < restarts; ++r) {
        std::vector<double> params(n_params, 0.0);
        if (r > 0) {
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(r)};
            std::mt19937_64 rng(seq);
            for (std::size_t i = 0; i < n_params; ++i) {
                params[i] = std::uniform_real_distribution<double>(0, period(i))(rng);
            }
        }
        double value = objective(params);
        for (int sweep = 0; sweep < kMaxSweeps && n_params > 0; ++sweep) {
            const double start = value;
            for (std::size_t i = 0; i < n_params; ++i) {
                const double span = period(i);
                const double step = span / kScan;
                auto at = [&](double x) {
                    std::vector<double> trial = params;
                    trial[i] = x;
                    return objective(trial);
                };
                double center = params[i];
                double center_value = value;
                for (int s = 1; s < kScan; ++s) {
                    const double x = params[i] + s * step;
                    const double fx = at(x);
                    if (fx > center_value) {
                        center_value = fx;
                        center = x;
                    }
                }
                // Golden-section search in the bracket around the best sample.
                double lo = center - step, hi = center + step;
                double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
                double f1 = at(x1), f2 = at(x2);
                while (hi - lo > 1e-10) {
                    if (f1 < f2) {
                        lo = x1;
                        x1 = x2;
                        f1 = f2;
                        x2 = lo + inv_phi * (hi - lo);
                        f2 = at(x2);
                    } else {
                        hi = x2;
                        x2 = x1;
                        f2 = f1;
                        x1 = hi - inv_phi * (hi - lo);
                        f1 = at(x1);
                    }
                }
                const double xm = 0.5 * (lo + hi);
                const double fm = at(xm);
                if (fm > center_value) {
                    center_value = fm;
                    center = xm;
                }
                params[i] = std::fmod(center, span);
                if (params[i] < 0) params[i] += span;
                value = center_value;
            }
            if (value - start < kObjectiveTol) break;
        }
        if (value > best_value) {
            best_value = value;
            best_params = params;
        }
    }
    GenericDiscordBound out;
    out.a = Isometry(isometry_rows(rotation_product(d, best_params), basis));
    out.value = clamp_discord(total - best_value);
    out.restarts = restarts;
    return out;
}

}  // namespace qdiscord
