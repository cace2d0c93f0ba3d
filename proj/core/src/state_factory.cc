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

#include "qdiscord/state_factory.h"

#include <charconv>
#include <cmath>
#include <sstream>

#include "qdiscord/error.h"

namespace qdiscord {

namespace {

ComplexVector basis_ket(int qubits, unsigned index) {
    ComplexVector v = ComplexVector::Zero(1 << qubits);
    v(index) = 1;
    return v;
}

void check_qubits(int n) {
    if (n < 1 || n > 12) throw ValidationError("parameter", "qubit count must be in 1..12");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_args(std::string_view s) {
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = s.find(',');
        out.push_back(trim(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

int parse_int(std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("expected an integer, got '" + std::string(s) + "'");
    return v;
}

double parse_double(std::string_view s) {
    std::string text(s);
    std::istringstream in(text);
    double v = 0;
    in >> v;
    if (!in || !in.eof()) throw ParseError("expected a number, got '" + text + "'");
    return v;
}

}  // namespace

Family parse_family(std::string_view name) {
    if (name == "ghz-noise") return Family::kGhzNoise;
    if (name == "w-ghz") return Family::kWGhz;
    if (name == "ghz-ghzminus") return Family::kGhzGhzMinus;
    throw ParseError("unknown family '" + std::string(name) + "' (expected ghz-noise, w-ghz or ghz-ghzminus)");
}

std::string family_name(Family family) {
    switch (family) {
        case Family::kGhzNoise: return "ghz-noise";
        case Family::kWGhz: return "w-ghz";
        case Family::kGhzGhzMinus: return "ghz-ghzminus";
    }
    return "";
}

DensityMatrix pure_state(std::vector<int> party_dims, const ComplexVector &ket) {
    return DensityMatrix::from_matrix(std::move(party_dims), projector(ket.normalized()));
}

DensityMatrix ghz_state(int qubits) {
    check_qubits(qubits);
    const ComplexVector ket = (basis_ket(qubits, 0) + basis_ket(qubits, (1u << qubits) - 1)) / std::sqrt(2.0);
    return pure_state(std::vector<int>(qubits, 2), ket);
}

DensityMatrix ghz_minus_state(int qubits) {
    check_qubits(qubits);
    const ComplexVector ket = (basis_ket(qubits, 0) - basis_ket(qubits, (1u << qubits) - 1)) / std::sqrt(2.0);
    return pure_state(std::vector<int>(qubits, 2), ket);
}

DensityMatrix w_state(int qubits) {
    check_qubits(qubits);
    ComplexVector ket = ComplexVector::Zero(1 << qubits);
    for (int q = 0; q < qubits; ++q) ket(1 << q) = 1;
    return pure_state(std::vector<int>(qubits, 2), ket / std::sqrt(static_cast<double>(qubits)));
}

DensityMatrix bell_state() { return ghz_state(2); }

DensityMatrix max_mixed_state(std::vector<int> party_dims) {
    int d = 1;
    for (int x : party_dims) {
        if (x < 1) throw ValidationError("parameter", "party dimensions must be positive");
        d *= x;
    }
    return DensityMatrix::from_matrix(std::move(party_dims), ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix family_state(const FamilySpec &spec) {
    if (!(spec.p >= 0 && spec.p <= 1)) {
        throw ValidationError("parameter", "family parameter p must lie in [0, 1]");
    }
    const double p = spec.p;
    const ComplexMatrix ghz = ghz_state(3).matrix();
    ComplexMatrix m;
    switch (spec.family) {
        case Family::kGhzNoise: m = p * ghz + (1 - p) / 8 * ComplexMatrix::Identity(8, 8); break;
        case Family::kWGhz: m = p * w_state(3).matrix() + (1 - p) * ghz; break;
        case Family::kGhzGhzMinus: m = p * ghz_minus_state(3).matrix() + (1 - p) * ghz; break;
    }
    return DensityMatrix::from_matrix({2, 2, 2}, std::move(m));
}

DensityMatrix named_state(std::string_view raw) {
    const std::string_view name = trim(raw);
    std::string_view head = name;
    std::vector<std::string_view> args;
    if (const auto open = name.find('('); open != std::string_view::npos) {
        if (name.back() != ')') throw ParseError("unbalanced parentheses in state name '" + std::string(name) + "'");
        head = name.substr(0, open);
        args = split_args(name.substr(open + 1, name.size() - open - 2));
    }
    auto qubit_arg = [&](int fallback) {
        if (args.empty()) return fallback;
        if (args.size() != 1) throw ParseError("expected one qubit count in '" + std::string(name) + "'");
        return parse_int(args[0]);
    };
    if (head == "ghz") return ghz_state(qubit_arg(3));
    if (head == "ghz-minus") return ghz_minus_state(qubit_arg(3));
    if (head == "w") return w_state(qubit_arg(3));
    if (head == "bell" && args.empty()) return bell_state();
    if (head == "max-mixed") {
        if (args.empty()) throw ParseError("max-mixed needs party dimensions, e.g. max-mixed(2,2)");
        std::vector<int> dims;
        for (auto a : args) dims.push_back(parse_int(a));
        return max_mixed_state(dims);
    }
    if (head == "ghz-noise" || head == "w-ghz" || head == "ghz-ghzminus") {
        if (args.size() != 1) throw ParseError("family '" + std::string(head) + "' needs one parameter p");
        return family_state({parse_family(head), parse_double(args[0])});
    }
    throw ParseError("unknown state name '" + std::string(name) + "'");
}

ComplexVector random_ket(int d, Rng &rng) {
    std::normal_distribution<double> gauss;
    ComplexVector v(d);
    for (int i = 0; i < d; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    return v.normalized();
}

ComplexMatrix random_unitary(int d, Rng &rng) {
    std::normal_distribution<double> gauss;
    ComplexMatrix z(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) z(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < d; ++j) {
        const Complex diag = r(j, j);
        if (std::abs(diag) > 0) q.col(j) *= diag / std::abs(diag);
    }
    return q;
}

DensityMatrix random_density(const std::vector<int> &party_dims, int rank, std::uint64_t seed) {
    int d = 1;
    for (int x : party_dims) {
        if (x < 1) throw ValidationError("parameter", "party dimensions must be positive");
        d *= x;
    }
    if (rank < 1 || rank > d) {
        throw ValidationError("rank", "rank must be in 1.." + std::to_string(d) + ", got " + std::to_string(rank));
    }
    Rng rng(seed);
    std::normal_distribution<double> gauss;
    ComplexMatrix m(d, rank);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < rank; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    ComplexMatrix rho = m * m.adjoint();
    rho /= rho.trace().real();
    // Exact Hermitian symmetry for the validator.
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix::from_matrix(party_dims, std::move(rho));
}

}  // namespace qdiscord
