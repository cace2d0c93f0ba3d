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

#include "qdiscord/io.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qdiscord/discord.h"
#include "qdiscord/error.h"
#include "qdiscord/total_correlations.h"

namespace qdiscord {

namespace {

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw Error("failed writing '" + path.string() + "'");
}

std::string shortest(double v) {
    if (v == 0) v = 0;  // drop the sign of -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string upper(std::string_view s) {
    std::string out(s);
    for (char &c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

std::vector<std::string> all_labels(int n) {
    std::vector<std::string> out;
    const std::size_t count = std::size_t{1} << (2 * n);
    for (std::size_t code = 1; code < count; ++code) {
        std::string label(n, 'I');
        std::size_t rest = code;
        for (int q = n - 1; q >= 0; --q) {
            label[q] = "IXYZ"[rest % 4];
            rest /= 4;
        }
        out.push_back(label);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Sym3 family_g(Family family, double p, int party) {
    return build_g_matrix(bloch_decompose(family_state({family, p})), party);
}

struct TopSpace {
    Eigen::Matrix3d projector;
    int rank = 0;
    Vec3 axis{};
};

TopSpace top_space(const Sym3 &g) {
    const Sym3Spectrum spec = sym3_spectrum(g);
    const double tie = 1e-9 * std::max(1.0, std::abs(spec.values[0]));
    TopSpace out;
    out.projector.setZero();
    while (out.rank < 3 && spec.values[0] - spec.values[out.rank] <= tie) {
        const Vec3 &v = spec.vectors[out.rank];
        const Eigen::Vector3d e(v[0], v[1], v[2]);
        out.projector += e * e.transpose();
        ++out.rank;
    }
    out.axis = sym3_top_eigen(g).e_max;
    return out;
}

double restricted_top(const Sym3 &g, const Eigen::Matrix3d &proj) {
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = g(i, j);
    const Eigen::Matrix3d r = proj * m * proj;
    return sym3_top_eigen(Sym3{r(0, 0), r(0, 1), r(0, 2), r(1, 1), r(1, 2), r(2, 2)}).eta_max;
}

}  // namespace

DensityMatrix parse_state(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dims") || !doc.contains("matrix")) {
        throw ParseError("state file needs 'dims' and 'matrix' fields");
    }
    std::vector<int> dims;
    const auto &jd = doc["dims"];
    if (!jd.is_array() || jd.empty()) throw ParseError("'dims' must be a non-empty list of integers");
    for (const auto &x : jd) {
        if (!x.is_number_integer() || x.get<long long>() < 1 || x.get<long long>() > 1024) {
            throw ParseError("'dims' entries must be positive integers");
        }
        dims.push_back(x.get<int>());
    }
    long long d = 1;
    for (int x : dims) {
        d *= x;
        if (d > 4096) throw ParseError("total dimension too large");
    }
    const auto &jm = doc["matrix"];
    if (!jm.is_array() || static_cast<long long>(jm.size()) != d) {
        throw ParseError("'matrix' must have " + std::to_string(d) + " rows");
    }
    ComplexMatrix m(d, d);
    for (long long r = 0; r < d; ++r) {
        const auto &row = jm[r];
        if (!row.is_array() || static_cast<long long>(row.size()) != d) {
            throw ParseError("matrix row " + std::to_string(r) + " must have " + std::to_string(d) + " entries");
        }
        for (long long c = 0; c < d; ++c) {
            const auto &z = row[c];
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                throw ParseError("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                                 ") must be a [re, im] pair");
            }
            m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
        }
    }
    return DensityMatrix::from_matrix(std::move(dims), std::move(m));
}

DensityMatrix load_state(const std::filesystem::path &path) { return parse_state(read_file(path)); }

std::string format_state(const DensityMatrix &rho) {
    std::string out = "{\n  \"dims\": [";
    const auto &dims = rho.party_dims();
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(dims[i]);
    }
    out += "],\n  \"matrix\": [\n";
    const int d = rho.dim();
    for (int r = 0; r < d; ++r) {
        out += "    [";
        for (int c = 0; c < d; ++c) {
            if (c) out += ", ";
            const Complex z = rho.matrix()(r, c);
            out += "[" + shortest(z.real()) + ", " + shortest(z.imag()) + "]";
        }
        out += r + 1 < d ? "],\n" : "]\n";
    }
    out += "  ]\n}\n";
    return out;
}

void save_state(const std::filesystem::path &path, const DensityMatrix &rho) { write_file(path, format_state(rho)); }

PauliTable parse_pauli_table(std::string_view text) {
    PauliTable table;
    bool header_seen = false;
    int line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        const auto delim = line.find_first_of(",\t");
        if (delim == std::string_view::npos) {
            throw ParseError("line " + std::to_string(line_no) + ": expected two columns");
        }
        const std::string_view first = trim(line.substr(0, delim));
        const std::string_view second = trim(line.substr(delim + 1));
        if (!header_seen) {
            if (upper(first) != "LABEL" || upper(second) != "VALUE") {
                throw ParseError("line " + std::to_string(line_no) + ": header 'label,value' required");
            }
            header_seen = true;
            continue;
        }
        const std::string label = upper(first);
        if (label.empty() || label.find_first_not_of("IXYZ") != std::string::npos) {
            throw ParseError("line " + std::to_string(line_no) + ": label '" + std::string(first) +
                             "' must use only I, X, Y, Z");
        }
        if (table.qubits == 0) table.qubits = static_cast<int>(label.size());
        if (static_cast<int>(label.size()) != table.qubits) {
            throw ParseError("line " + std::to_string(line_no) + ": label '" + label + "' has length " +
                             std::to_string(label.size()) + ", expected " + std::to_string(table.qubits));
        }
        double value = 0;
        const std::string num(second);
        char *end = nullptr;
        value = std::strtod(num.c_str(), &end);
        if (num.empty() || end != num.c_str() + num.size() || !std::isfinite(value)) {
            throw ParseError("line " + std::to_string(line_no) + ": value '" + num + "' is not a number");
        }
        if (!table.values.emplace(label, value).second) {
            throw ParseError("line " + std::to_string(line_no) + ": duplicate label '" + label + "'");
        }
    }
    if (!header_seen) throw ParseError("header 'label,value' required");
    if (table.qubits == 0) throw ParseError("table has no entries");
    if (table.qubits > 10) throw ParseError("at most 10 qubits are supported");
    return table;
}

PauliTable load_pauli_table(const std::filesystem::path &path) { return parse_pauli_table(read_file(path)); }

std::string format_pauli_table(const PauliTable &table) {
    std::string out = "label,value\n";
    for (const auto &[label, value] : table.values) out += label + "," + shortest(value) + "\n";
    return out;
}

PauliTable pauli_table_from_decomposition(const BlochDecomposition &dec) {
    PauliTable table;
    table.qubits = dec.qubits();
    const RealTensor e = dec.expectation_tensor();
    for (std::size_t f = 1; f < e.size(); ++f) {
        const auto idx = e.multi_index(f);
        std::string label;
        for (std::size_t i : idx) label += "IXYZ"[i];
        table.values[label] = e.data()[f];
    }
    return table;
}

std::vector<std::string> missing_labels(const PauliTable &table) {
    std::vector<std::string> out;
    for (const auto &label : all_labels(table.qubits)) {
        if (!table.values.contains(label)) out.push_back(label);
    }
    return out;
}

IngestResult ingest_pauli_table(const PauliTable &table, bool strict) {
    const int n = table.qubits;
    if (n < 1) throw ValidationError("missing labels", "table has no qubits");
    const auto missing = missing_labels(table);
    if (!missing.empty()) {
        std::string list = "[";
        for (std::size_t i = 0; i < missing.size(); ++i) list += (i ? ", \"" : "\"") + missing[i] + "\"";
        list += "]";
        throw ValidationError("missing labels", list);
    }
    RealTensor e(std::vector<std::size_t>(n, 4));
    for (const auto &[label, value] : table.values) {
        const bool identity = label.find_first_not_of('I') == std::string::npos;
        if (identity) {
            if (!(std::abs(value - 1) <= 1e-9)) {
                throw ValidationError("range", "identity label " + label + " must equal 1, got " + shortest(value));
            }
            continue;
        }
        if (!(std::abs(value) <= 1 + 1e-9)) {
            throw ValidationError("range", "expectation of " + label + " is " + shortest(value) + ", outside [-1, 1]");
        }
        std::vector<std::size_t> idx;
        for (char c : label) idx.push_back(std::string_view("IXYZ").find(c));
        e(idx) = value;
    }
    IngestResult result{BlochDecomposition::from_expectations(e), {}};
    const DensityMatrix rho = reconstruct_state(result.decomposition);
    if (auto failure = rho.check()) {
        if (strict) throw ValidationError(failure->check, "reconstructed state: " + failure->detail);
        result.warnings.push_back("reconstructed state fails " + failure->check + " check: " + failure->detail);
    }
    return result;
}

SweepTable sweep_family(Family family, double p_from, double p_to, int steps, std::vector<int> parties) {
    if (!(0 <= p_from && p_from <= p_to && p_to <= 1)) {
        throw ValidationError("range", "need 0 <= from <= to <= 1");
    }
    if (steps < 2) throw ValidationError("range", "need at least 2 steps");
    if (parties.empty()) parties = {1, 2, 3};
    for (int k : parties) {
        if (k < 1 || k > 3) throw ValidationError("range", "family states have parties 1..3");
    }
    SweepTable table{family, parties, {}};
    table.rows.resize(steps);
    for (int i = 0; i < steps; ++i) {
        const double p = i + 1 == steps ? p_to : p_from + (p_to - p_from) * i / (steps - 1);
        const BlochDecomposition dec = bloch_decompose(family_state({family, p}));
        SweepRow &row = table.rows[i];
        row.p = p;
        for (int k : parties) row.discord.push_back(discord_qubit_closed_form(dec, k).value);
        row.q = total_quantum_correlations(dec).q_value;
    }
    return table;
}

std::string sweep_csv(const SweepTable &table) {
    std::string out = "p";
    for (int k : table.parties) out += ",d" + std::to_string(k);
    out += ",q\n";
    char buf[64];
    auto num = [&buf](double v) {
        if (v == 0) v = 0;
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return std::string(buf);
    };
    for (const auto &row : table.rows) {
        out += num(row.p);
        for (double d : row.discord) out += "," + num(d);
        out += "," + num(row.q) + "\n";
    }
    return out;
}

std::vector<BranchCrossing> find_branch_crossings(Family family, double p_from, double p_to, int steps, int party) {
    if (!(0 <= p_from && p_from <= p_to && p_to <= 1) || steps < 2) {
        throw ValidationError("range", "need 0 <= from <= to <= 1 and at least 2 steps");
    }
    std::vector<BranchCrossing> out;
    bool have_branch = false;
    TopSpace branch;
    double branch_p = 0;
    for (int i = 0; i < steps; ++i) {
        const double p = i + 1 == steps ? p_to : p_from + (p_to - p_from) * i / (steps - 1);
        const TopSpace here = top_space(family_g(family, p, party));
        if (!have_branch) {
            if (here.rank < 3) {
                branch = here;
                branch_p = p;
                have_branch = true;
            }
            continue;
        }
        const double contained = (here.projector * branch.projector - branch.projector).norm();
        if (here.rank > branch.rank && contained < 1e-6) continue;  // degenerate point on the way
        const double overlap = (here.projector * branch.projector).norm();
        if (overlap < 0.5) {
            // Old branch value minus new branch value changes sign in between.
            double lo = branch_p, hi = p;
            for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
                const double mid = 0.5 * (lo + hi);
                const Sym3 g = family_g(family, mid, party);
                if (restricted_top(g, branch.projector) >= restricted_top(g, here.projector)) lo = mid;
                else hi = mid;
            }
            out.push_back({0.5 * (lo + hi), branch.axis, here.axis});
        }
        branch = here;
        branch_p = p;
    }
    return out;
}

}  // namespace qdiscord
