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

// Command-line front end: discord, total, sweep, ingest, gen.

#include <charconv>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qdiscord/bloch.h"
#include "qdiscord/discord.h"
#include "qdiscord/error.h"
#include "qdiscord/io.h"
#include "qdiscord/oracle.h"
#include "qdiscord/state_factory.h"
#include "qdiscord/total_correlations.h"

namespace {

using nlohmann::json;
using namespace qdiscord;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitValidation = 2;
constexpr int kExitParse = 3;

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

int to_int(const std::string &s, const std::string &what) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(what + ": expected an integer, got '" + s + "'");
    return v;
}

GridSpec parse_grid(const std::string &text) {
    const auto parts = split(text, ',');
    if (parts.size() != 3) throw ParseError("--grid expects T,P,R");
    GridSpec grid;
    grid.theta_steps = to_int(parts[0], "--grid");
    grid.phi_steps = to_int(parts[1], "--grid");
    grid.refinement_rounds = to_int(parts[2], "--grid");
    grid.validate();
    return grid;
}

json vec_json(const Vec3 &v) { return json::array({v[0], v[1], v[2]}); }

json sym_json(const Sym3 &g) {
    json rows = json::array();
    for (int r = 0; r < 3; ++r) rows.push_back(json::array({g(r, 0), g(r, 1), g(r, 2)}));
    return rows;
}

void check_party(const DensityMatrix &rho, int k) {
    if (k < 1 || k > rho.parties()) {
        throw ValidationError("party", "party " + std::to_string(k) + " out of range 1.." + std::to_string(rho.parties()));
    }
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0 ? 0.0 : v);
    return buf;
}

struct DiscordArgs {
    std::string state;
    int part = 1;
    bool oracle = false;
    std::string grid;
    int restarts = 16;
    std::uint64_t seed = 1;
};

json run_discord(const DiscordArgs &args) {
    const DensityMatrix rho = load_state(args.state);
    check_party(rho, args.part);
    json out{{"command", "discord"}, {"part", args.part}};
    if (rho.all_qubits()) {
        const DiscordReport report = discord_qubit_closed_form(bloch_decompose(rho), args.part);
        out["method"] = "closed-form";
        out["discord"] = report.value;
        out["eta_max"] = report.eta_max;
        out["e_max"] = vec_json(report.e_max);
        out["g"] = sym_json(report.g);
    } else {
        const GenericDiscordBound bound =
            discord_generic_upper_bound(coefficient_tensor(rho), args.part, args.restarts, args.seed);
        out["method"] = "numerical-upper-bound";
        out["discord"] = bound.value;
        out["restarts"] = bound.restarts;
    }
    if (args.oracle) {
        const GridSpec grid = args.grid.empty() ? GridSpec{} : parse_grid(args.grid);
        if (rho.party_dims()[args.part - 1] != 2) throw ValidationError("oracle", "the oracle needs a qubit party");
        const OracleResult res = oracle_discord_qubit(rho, args.part, grid);
        out["oracle"] = {{"value", res.value},
                         {"theta", res.theta},
                         {"phi", res.phi},
                         {"gap", std::abs(res.value - out["discord"].get<double>())},
                         {"tolerance", oracle_tolerance(grid)}};
    }
    return out;
}

std::string text_discord(const json &r) {
    std::string s = "D_" + std::to_string(r["part"].get<int>()) + " = " + fmt(r["discord"]) + "  (" +
                    r["method"].get<std::string>() + ")\n";
    if (r.contains("e_max")) {
        s += "eta_max = " + fmt(r["eta_max"]) + ", e_max = (" + fmt(r["e_max"][0]) + ", " + fmt(r["e_max"][1]) + ", " +
             fmt(r["e_max"][2]) + ")\n";
    }
    if (r.contains("oracle")) {
        s += "oracle = " + fmt(r["oracle"]["value"]) + ", gap = " + fmt(r["oracle"]["gap"]) +
             ", tolerance = " + fmt(r["oracle"]["tolerance"]) + "\n";
    }
    return s;
}

json run_total(const std::string &path, const std::string &order_text) {
    const DensityMatrix rho = load_state(path);
    if (!rho.all_qubits()) throw DimensionError("total correlations need an all-qubit state");
    std::vector<int> order;
    if (!order_text.empty()) {
        for (const auto &p : split(order_text, ',')) order.push_back(to_int(p, "--order"));
    }
    const TotalCorrelationReport report = total_quantum_correlations(bloch_decompose(rho), order);
    json steps = json::array();
    for (const auto &step : report.steps) steps.push_back({{"party", step.party}, {"discord", step.discord}});
    return {{"command", "total"},
            {"q", report.q_value},
            {"order", report.order},
            {"steps", steps},
            {"telescoped", report.telescoped}};
}

std::string text_total(const json &r) {
    std::string s = "Q = " + fmt(r["q"]) + "\n";
    for (const auto &step : r["steps"]) {
        s += "  measure party " + std::to_string(step["party"].get<int>()) + ": D = " + fmt(step["discord"]) + "\n";
    }
    s += "telescoped = " + fmt(r["telescoped"]) + "\n";
    return s;
}

struct SweepArgs {
    std::string family;
    double from = 0;
    double to = 1;
    int steps = 101;
    std::string out;
    bool kinks = false;
};

json run_sweep(const SweepArgs &args, std::string &csv) {
    const Family family = parse_family(args.family);
    const SweepTable table = sweep_family(family, args.from, args.to, args.steps);
    csv = sweep_csv(table);
    json out{{"command", "sweep"}, {"family", family_name(family)}, {"rows", table.rows.size()}};
    if (!args.out.empty()) out["out"] = args.out;
    if (args.kinks) {
        json kinks = json::array();
        for (const auto &c : find_branch_crossings(family, args.from, args.to, args.steps)) {
            kinks.push_back({{"p", c.p}, {"before", vec_json(c.before)}, {"after", vec_json(c.after)}});
        }
        out["kinks"] = kinks;
    }
    return out;
}

json run_ingest(const std::string &path, int part, bool strict) {
    const PauliTable table = load_pauli_table(path);
    const IngestResult ingested = ingest_pauli_table(table, strict);
    if (part < 1 || part > table.qubits) {
        throw ValidationError("party", "party " + std::to_string(part) + " out of range 1.." + std::to_string(table.qubits));
    }
    const DiscordReport report = discord_qubit_closed_form(ingested.decomposition, part);
    return {{"command", "ingest"},
            {"qubits", table.qubits},
            {"part", part},
            {"discord", report.value},
            {"eta_max", report.eta_max},
            {"e_max", vec_json(report.e_max)},
            {"warnings", ingested.warnings}};
}

std::string text_ingest(const json &r) {
    std::string s;
    for (const auto &w : r["warnings"]) s += "warning: " + w.get<std::string>() + "\n";
    s += "D_" + std::to_string(r["part"].get<int>()) + " = " + fmt(r["discord"]) + "\n";
    return s;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Geometric quantum discord and total quantum correlations"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Print reports as JSON");

    DiscordArgs discord_args;
    auto *discord = app.add_subcommand("discord", "Geometric discord D_k of a state file");
    discord->add_option("--state", discord_args.state, "State file")->required();
    discord->add_option("--part", discord_args.part, "Measured party (1-based)")->required();
    discord->add_flag("--oracle", discord_args.oracle, "Cross-check with the measurement-minimization oracle");
    discord->add_option("--grid", discord_args.grid, "Oracle grid T,P,R (default 181,360,3)");
    discord->add_option("--restarts", discord_args.restarts, "Restarts for non-qubit parties")->check(CLI::PositiveNumber);
    discord->add_option("--seed", discord_args.seed, "Seed for non-qubit parties");

    std::string total_state, total_order;
    auto *total = app.add_subcommand("total", "Total quantum correlations Q");
    total->add_option("--state", total_state, "State file")->required();
    total->add_option("--order", total_order, "Measurement order, e.g. 3,1,2");

    SweepArgs sweep_args;
    auto *sweep = app.add_subcommand("sweep", "Tabulate D_k and Q along a three-qubit family");
    sweep->add_option("--family", sweep_args.family, "ghz-noise, w-ghz or ghz-ghzminus")->required();
    sweep->add_option("--from", sweep_args.from, "First p");
    sweep->add_option("--to", sweep_args.to, "Last p");
    sweep->add_option("--steps", sweep_args.steps, "Number of grid points");
    sweep->add_option("--out", sweep_args.out, "CSV output file (stdout if omitted)");
    sweep->add_flag("--kinks", sweep_args.kinks, "Report eigen-branch crossings of G^(1)");

    std::string pauli_path;
    int ingest_part = 1;
    bool strict = false;
    auto *ingest = app.add_subcommand("ingest", "Discord from a table of Pauli expectations");
    ingest->add_option("--pauli", pauli_path, "label,value table")->required();
    ingest->add_option("--part", ingest_part, "Measured party (1-based)")->required();
    ingest->add_flag("--strict", strict, "Reject tables that do not describe a physical state");

    std::string gen_name, gen_out;
    auto *gen = app.add_subcommand("gen", "Write a named state to a state file");
    gen->add_option("--name", gen_name, "e.g. ghz(3), w(3), bell, max-mixed(2,2), w-ghz(0.5)")->required();
    gen->add_option("--out", gen_out, "Output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        json report;
        std::string text;
        if (*discord) {
            report = run_discord(discord_args);
            text = text_discord(report);
        } else if (*total) {
            report = run_total(total_state, total_order);
            text = text_total(report);
        } else if (*sweep) {
            std::string csv;
            report = run_sweep(sweep_args, csv);
            if (sweep_args.out.empty()) {
                if (!as_json) std::cout << csv;
                report["csv"] = csv;
            } else {
                std::FILE *f = std::fopen(sweep_args.out.c_str(), "wb");
                if (!f || std::fwrite(csv.data(), 1, csv.size(), f) != csv.size()) {
                    if (f) std::fclose(f);
                    throw Error("cannot write '" + sweep_args.out + "'");
                }
                std::fclose(f);
                text = "wrote " + std::to_string(report["rows"].get<std::size_t>()) + " rows to " + sweep_args.out + "\n";
            }
            if (report.contains("kinks")) {
                for (const auto &k : report["kinks"]) text += "kink at p = " + fmt(k["p"]) + "\n";
            }
        } else if (*ingest) {
            report = run_ingest(pauli_path, ingest_part, strict);
            text = text_ingest(report);
        } else if (*gen) {
            save_state(gen_out, named_state(gen_name));
            report = {{"command", "gen"}, {"name", gen_name}, {"out", gen_out}};
            text = "wrote " + gen_out + "\n";
        }
        if (as_json) std::cout << report.dump(2) << "\n";
        else std::cout << text;
        return kExitOk;
    } catch (const ValidationError &e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const DimensionError &e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
