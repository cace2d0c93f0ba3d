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

#include "qdiscord/bloch.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qdiscord/error.h"

namespace qdiscord {

namespace {

using ComplexTensor = std::vector<Complex>;

// t x_m b for a complex tensor stored row-major with per-mode sizes `dims`.
ComplexTensor mode_product(const ComplexTensor &t, std::vector<std::size_t> &dims,
                           const ComplexMatrix &b, std::size_t m) {
    std::size_t left = 1, right = 1;
    for (std::size_t i = 0; i < m; ++i) left *= dims[i];
    for (std::size_t i = m + 1; i < dims.size(); ++i) right *= dims[i];
    const std::size_t inner = dims[m];
    const auto rows = static_cast<std::size_t>(b.rows());
    ComplexTensor out(left * rows * right, Complex(0, 0));
    for (std::size_t l = 0; l < left; ++l) {
        for (std::size_t i = 0; i < rows; ++i) {
            Complex *dst = out.data() + (l * rows + i) * right;
            for (std::size_t j = 0; j < inner; ++j) {
                const Complex bij = b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
                if (bij == Complex(0, 0)) continue;
                const Complex *src = t.data() + (l * inner + j) * right;
                for (std::size_t r = 0; r < right; ++r) dst[r] += bij * src[r];
            }
        }
    }
    dims[m] = rows;
    return out;
}

std::vector<HermitianBasis> standard_bases(const std::vector<int> &dims) {
    std::vector<HermitianBasis> bases;
    bases.reserve(dims.size());
    for (int d : dims) bases.push_back(HermitianBasis::standard(d));
    return bases;
}

void check_bases(const std::vector<int> &dims, std::span<const HermitianBasis> bases) {
    if (bases.size() != dims.size()) throw DimensionError("need one basis per party");
    for (std::size_t m = 0; m < dims.size(); ++m) {
        if (bases[m].d != dims[m] || static_cast<int>(bases[m].elements.size()) != dims[m] * dims[m]) {
            throw DimensionError("basis for party " + std::to_string(m + 1) +
                                 " does not match its dimension " + std::to_string(dims[m]));
        }
    }
}

std::vector<int> digits(std::size_t flat, const std::vector<int> &dims) {
    std::vector<int> out(dims.size());
    for (std::size_t m = dims.size(); m-- > 0;) {
        out[m] = static_cast<int>(flat % dims[m]);
        flat /= dims[m];
    }
    return out;
}

}  // namespace

HermitianBasis HermitianBasis::standard(int d) {
    if (d < 1) throw DimensionError("basis dimension must be positive");
    HermitianBasis basis;
    basis.d = d;
    basis.elements.push_back(ComplexMatrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
    const double r2 = 1 / std::sqrt(2.0);
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            ComplexMatrix sym = ComplexMatrix::Zero(d, d);
            sym(j, k) = r2;
            sym(k, j) = r2;
            basis.elements.push_back(sym);
            ComplexMatrix anti = ComplexMatrix::Zero(d, d);
            anti(j, k) = Complex(0, -r2);
            anti(k, j) = Complex(0, r2);
            basis.elements.push_back(anti);
        }
    }
    for (int l = 1; l < d; ++l) {
        ComplexMatrix diag = ComplexMatrix::Zero(d, d);
        const double norm = 1 / std::sqrt(static_cast<double>(l) * (l + 1));
        for (int j = 0; j < l; ++j) diag(j, j) = norm;
        diag(l, l) = -l * norm;
        basis.elements.push_back(diag);
    }
    return basis;
}

CoefficientTensor coefficient_tensor(const DensityMatrix &rho) {
    return coefficient_tensor(rho, standard_bases(rho.party_dims()));
}

CoefficientTensor coefficient_tensor(const DensityMatrix &rho, std::span<const HermitianBasis> bases) {
    const auto &dims = rho.party_dims();
    check_bases(dims, bases);
    const std::size_t n = dims.size();
    std::vector<std::size_t> tdims(n);
    for (std::size_t m = 0; m < n; ++m) tdims[m] = static_cast<std::size_t>(dims[m]) * dims[m];

    // Regroup rho_{(r_1..r_N),(c_1..c_N)} into a tensor with one combined
    // (r_m, c_m) index per party.
    const int d = rho.dim();
    ComplexTensor t(static_cast<std::size_t>(d) * d);
    std::vector<std::vector<int>> dig(d);
    for (int i = 0; i < d; ++i) dig[i] = digits(i, dims);
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            std::size_t f = 0;
            for (std::size_t m = 0; m < n; ++m) f = f * tdims[m] + dig[r][m] * dims[m] + dig[c][m];
            t[f] = rho.matrix()(r, c);
        }
    }
    // c_i = sum_{r,c} rho_{rc} (X_i)_{cr}
    for (std::size_t m = 0; m < n; ++m) {
        const int dm = dims[m];
        ComplexMatrix b(dm * dm, dm * dm);
        for (int i = 0; i < dm * dm; ++i)
            for (int r = 0; r < dm; ++r)
                for (int c = 0; c < dm; ++c) b(i, r * dm + c) = bases[m].elements[i](c, r);
        t = mode_product(t, tdims, b, m);
    }
    std::vector<double> re(t.size());
    std::transform(t.begin(), t.end(), re.begin(), [](const Complex &z) { return z.real(); });
    return {dims, RealTensor(tdims, std::move(re))};
}

DensityMatrix state_from_coefficients(const CoefficientTensor &c) {
    return state_from_coefficients(c, standard_bases(c.party_dims));
}

DensityMatrix state_from_coefficients(const CoefficientTensor &c, std::span<const HermitianBasis> bases) {
    const auto &dims = c.party_dims;
    check_bases(dims, bases);
    const std::size_t n = dims.size();
    std::vector<std::size_t> tdims(n);
    for (std::size_t m = 0; m < n; ++m) tdims[m] = static_cast<std::size_t>(dims[m]) * dims[m];
    if (c.tensor.dims() != tdims) throw DimensionError("coefficient tensor dims do not match party dims");

    ComplexTensor t(c.tensor.data().begin(), c.tensor.data().end());
    for (std::size_t m = 0; m < n; ++m) {
        const int dm = dims[m];
        ComplexMatrix b(dm * dm, dm * dm);
        for (int r = 0; r < dm; ++r)
            for (int col = 0; col < dm; ++col)
                for (int i = 0; i < dm * dm; ++i) b(r * dm + col, i) = bases[m].elements[i](r, col);
        t = mode_product(t, tdims, b, m);
    }
    int d = 1;
    for (int x : dims) d *= x;
    ComplexMatrix rho(d, d);
    std::vector<std::vector<int>> dig(d);
    for (int i = 0; i < d; ++i) dig[i] = digits(i, dims);
    for (int r = 0; r < d; ++r) {
        for (int col = 0; col < d; ++col) {
            std::size_t f = 0;
            for (std::size_t m = 0; m < n; ++m) f = f * tdims[m] + dig[r][m] * dims[m] + dig[col][m];
            rho(r, col) = t[f];
        }
    }
    return DensityMatrix::unchecked(dims, std::move(rho));
}

PartySet::PartySet(std::initializer_list<int> parties)
    : PartySet(of(std::span<const int>(parties.begin(), parties.size()))) {}

PartySet PartySet::of(std::span<const int> parties) {
    std::uint32_t mask = 0;
    for (int p : parties) {
        if (p < 1 || p > 31) throw DimensionError("party label out of range");
        mask |= 1u << (p - 1);
    }
    return PartySet(mask);
}

int PartySet::size() const noexcept { return std::popcount(mask_); }

std::vector<int> PartySet::members() const {
    std::vector<int> out;
    for (int p = 1; p <= 32; ++p)
        if ((mask_ >> (p - 1)) & 1u) out.push_back(p);
    return out;
}

bool PartySet::operator<(const PartySet &other) const {
    if (size() != other.size()) return size() < other.size();
    return members() < other.members();
}

std::vector<PartySet> party_subsets(int n, int min_size, int party) {
    if (n < 1 || n > 31) throw DimensionError("party count out of range");
    std::vector<PartySet> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        PartySet s(mask);
        if (s.size() < min_size) continue;
        if (party != 0 && !s.contains(party)) continue;
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

BlochDecomposition::BlochDecomposition(int qubits) : n_(qubits), s_(qubits, Vec3{0, 0, 0}) {
    if (qubits < 1 || qubits > 16) throw DimensionError("qubit count out of range 1..16");
    for (PartySet set : party_subsets(n_, 2)) {
        t_.emplace(set, RealTensor(std::vector<std::size_t>(set.size(), 3)));
    }
}

const Vec3 &BlochDecomposition::s(int party) const {
    if (party < 1 || party > n_) throw DimensionError("party out of range");
    return s_[party - 1];
}

Vec3 &BlochDecomposition::s(int party) {
    if (party < 1 || party > n_) throw DimensionError("party out of range");
    return s_[party - 1];
}

const RealTensor &BlochDecomposition::t(PartySet subset) const {
    auto it = t_.find(subset);
    if (it == t_.end()) throw DimensionError("no correlation tensor for this subset");
    return it->second;
}

RealTensor &BlochDecomposition::t(PartySet subset) {
    auto it = t_.find(subset);
    if (it == t_.end()) throw DimensionError("no correlation tensor for this subset");
    return it->second;
}

RealTensor BlochDecomposition::expectation_tensor() const {
    RealTensor full(std::vector<std::size_t>(n_, 4));
    std::vector<std::size_t> idx(n_, 0);
    full(idx) = 1.0;
    for (int k = 1; k <= n_; ++k) {
        for (int a = 0; a < 3; ++a) {
            std::fill(idx.begin(), idx.end(), 0);
            idx[k - 1] = a + 1;
            full(idx) = s_[k - 1][a];
        }
    }
    for (const auto &[set, tensor] : t_) {
        const auto members = set.members();
        for (std::size_t f = 0; f < tensor.size(); ++f) {
            const auto sub = tensor.multi_index(f);
            std::fill(idx.begin(), idx.end(), 0);
            for (std::size_t j = 0; j < members.size(); ++j) idx[members[j] - 1] = sub[j] + 1;
            full(idx) = tensor.data()[f];
        }
    }
    return full;
}

BlochDecomposition BlochDecomposition::from_expectations(const RealTensor &e) {
    const int n = static_cast<int>(e.order());
    for (std::size_t d : e.dims()) {
        if (d != 4) throw DimensionError("expectation tensor must have size 4 in every mode");
    }
    BlochDecomposition dec(n);
    for (std::size_t f = 0; f < e.size(); ++f) {
        const auto idx = e.multi_index(f);
        std::vector<int> members;
        for (int m = 0; m < n; ++m)
            if (idx[m] != 0) members.push_back(m + 1);
        if (members.empty()) continue;
        if (members.size() == 1) {
            dec.s_[members[0] - 1][idx[members[0] - 1] - 1] = e.data()[f];
            continue;
        }
        std::vector<std::size_t> sub;
        for (int p : members) sub.push_back(idx[p - 1] - 1);
        dec.t(PartySet::of(members))(sub) = e.data()[f];
    }
    return dec;
}

BlochDecomposition bloch_from_coefficients(const CoefficientTensor &c) {
    for (int d : c.party_dims) {
        if (d != 2) throw DimensionError("Bloch decomposition needs every party to be a qubit");
    }
    const int n = c.parties();
    RealTensor e = c.tensor;
    const double scale = std::pow(2.0, n / 2.0);
    for (double &x : e.data()) x *= scale;
    return BlochDecomposition::from_expectations(e);
}

BlochDecomposition bloch_decompose(const DensityMatrix &rho) {
    if (!rho.all_qubits()) throw DimensionError("Bloch decomposition needs every party to be a qubit");
    return bloch_from_coefficients(coefficient_tensor(rho));
}

CoefficientTensor to_coefficient_tensor(const BlochDecomposition &dec) {
    const int n = dec.qubits();
    RealTensor e = dec.expectation_tensor();
    const double scale = std::pow(2.0, -n / 2.0);
    for (double &x : e.data()) x *= scale;
    return {std::vector<int>(n, 2), std::move(e)};
}

DensityMatrix reconstruct_state(const BlochDecomposition &dec) {
    return state_from_coefficients(to_coefficient_tensor(dec));
}

double bloch_norm_sum(const BlochDecomposition &dec) {
    double sum = 1.0;
    for (int k = 1; k <= dec.qubits(); ++k) sum += norm_sq(dec.s(k));
    for (const auto &[set, tensor] : dec.correlations()) sum += frobenius_norm_sq(tensor);
    return sum;
}

double check_norm_identity(const CoefficientTensor &c, const BlochDecomposition &dec) {
    if (c.parties() != dec.qubits()) throw DimensionError("party counts differ");
    return std::abs(c.norm_sq() - std::pow(2.0, -dec.qubits()) * bloch_norm_sum(dec));
}

}  // namespace qdiscord
